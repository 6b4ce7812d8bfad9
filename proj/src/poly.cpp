#include "mmmcalc/poly.hpp"

#include <algorithm>

#include "mmmcalc/error.hpp"

namespace mmm {

GeneratorTable::GeneratorTable(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        require(gens_[i].degree >= 1, "generator '" + gens_[i].name + "' needs degree >= 1");
        require(!gens_[i].name.empty(), "generator with empty name");
        for (size_t j = 0; j < i; ++j)
            require(gens_[j].name != gens_[i].name,
                    "duplicate generator name '" + gens_[i].name + "'");
    }
}

std::optional<size_t> GeneratorTable::index_of(std::string_view name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

bool GeneratorTable::operator==(const GeneratorTable& o) const {
    if (gens_.size() != o.gens_.size())
        return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree)
            return false;
    return true;
}

TablePtr make_table(std::vector<Generator> gens) {
    return std::make_shared<const GeneratorTable>(std::move(gens));
}

bool same_table(const TablePtr& a, const TablePtr& b) {
    if (a.get() == b.get())
        return true;
    return a && b && *a == *b;
}

int monomial_degree(const GeneratorTable& t, const Monomial& m) {
    int d = 0;
    for (size_t i = 0; i < m.size(); ++i)
        d += t[i].degree * m[i];
    return d;
}

bool monomial_less(const GeneratorTable& t, const Monomial& a, const Monomial& b) {
    int da = monomial_degree(t, a), db = monomial_degree(t, b);
    if (da != db)
        return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

Poly::Poly(TablePtr table) : table_(std::move(table)) {
    require(table_ != nullptr, "polynomial needs a generator table");
}

Poly Poly::constant(TablePtr table, const Rational& c) {
    Poly p(std::move(table));
    p.add_term(Monomial(p.table_->size(), 0), c);
    return p;
}

Poly Poly::generator(TablePtr table, size_t index, int power) {
    Poly p(std::move(table));
    require(index < p.table_->size(), "generator index out of range");
    require(power >= 0, "negative power");
    require(!(p.table_->odd(index) && power > 1), "odd generator squared");
    Monomial m(p.table_->size(), 0);
    m[index] = power;
    p.add_term(m, 1);
    return p;
}

Poly Poly::term(TablePtr table, Monomial m, const Rational& c) {
    Poly p(std::move(table));
    require(m.size() == p.table_->size(), "monomial size does not match table");
    for (size_t i = 0; i < m.size(); ++i) {
        require(m[i] >= 0, "negative exponent");
        require(!(p.table_->odd(i) && m[i] > 1), "odd generator squared");
    }
    p.add_term(m, c);
    return p;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_coeff() const {
    return coeff(Monomial(table_->size(), 0));
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, monomial_degree(*table_, m));
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = monomial_degree(*table_, m);
        if (!d)
            d = dm;
        else if (*d != dm)
            return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

bool Poly::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (monomial_degree(*table_, m) != d)
            return false;
    return true;
}

Poly Poly::graded_component(int d) const {
    Poly r(table_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(*table_, m) == d)
            r.add_term(m, c);
    return r;
}

Poly Poly::truncate_above(int d) const {
    Poly r(table_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(*table_, m) <= d)
            r.add_term(m, c);
    return r;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    require(same_table(table_, o.table_), "mismatched generator tables");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require(same_table(table_, o.table_), "mismatched generator tables");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(table_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

bool Poly::operator==(const Poly& o) const {
    return same_table(table_, o.table_) && terms_ == o.terms_;
}

Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
}

Poly operator*(const Poly& a, const Rational& c) {
    Poly r = a;
    r *= c;
    return r;
}

Poly operator*(const Rational& c, const Poly& a) {
    return a * c;
}

int koszul_sign(const GeneratorTable& t, const Monomial& a, const Monomial& b) {
    // Concatenating a|b and sorting back to table order moves each odd
    // generator of b past every odd generator of a sitting at a later
    // position; each such pair contributes one transposition of odd elements.
    long swaps = 0;
    long odd_tail = 0;  // odd exponents of a at positions > j
    for (size_t j = t.size(); j-- > 0;) {
        if (t.odd(j)) {
            if (b[j]) {
                if (a[j])
                    return 0;  // odd generator squared
                swaps += odd_tail;
            }
            odd_tail += a[j];
        }
    }
    return swaps % 2 == 0 ? 1 : -1;
}

Poly operator*(const Poly& a, const Poly& b) {
    require(same_table(a.table(), b.table()), "mismatched generator tables");
    const GeneratorTable& t = *a.table();
    Poly r(a.table());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            int sign = koszul_sign(t, ma, mb);
            if (sign == 0)
                continue;
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb * sign);
        }
    }
    return r;
}

Poly pow(const Poly& a, unsigned n) {
    Poly r = Poly::constant(a.table(), 1);
    for (unsigned i = 0; i < n; ++i)
        r = r * a;
    return r;
}

}  // namespace mmm
