#include "mmmcalc/ring.hpp"

#include <algorithm>

#include "mmmcalc/error.hpp"

namespace mmm {

RingPresentation::RingPresentation(TablePtr table, std::vector<RewriteRule> rules)
    : table_(std::move(table)), rules_(std::move(rules)) {
    const GeneratorTable& t = *table_;
    for (size_t i = 0; i < rules_.size(); ++i) {
        const RewriteRule& r = rules_[i];
        require(r.gen < t.size(), "rule head generator out of range");
        require(!t.odd(r.gen), "rule head must be an even generator");
        require(r.power >= 1, "rule head power must be >= 1");
        for (size_t j = 0; j < i; ++j)
            require(rules_[j].gen != r.gen, "two rules share the head generator '" +
                                                t[r.gen].name + "'");
        int head_deg = t[r.gen].degree * r.power;
        require(r.replacement.is_homogeneous(head_deg),
                "replacement for '" + t[r.gen].name + "' is not homogeneous of the head degree");
        Monomial head(t.size(), 0);
        head[r.gen] = r.power;
        for (const auto& [m, c] : r.replacement.terms())
            require(monomial_less(t, m, head),
                    "replacement not smaller than head for '" + t[r.gen].name + "'");
    }
}

RingPtr RingPresentation::free_ring(std::vector<Generator> gens) {
    return RingPtr(new RingPresentation(make_table(std::move(gens)), {}));
}

RingPtr RingPresentation::quotient_ring(TablePtr table, std::vector<Poly> relations) {
    const GeneratorTable& t = *table;
    std::vector<RewriteRule> rules;
    for (Poly& rel : relations) {
        require(same_table(rel.table(), table), "relation over a different table");
        require(!rel.is_zero(), "zero relation");
        // Leading monomial in the graded order.
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : rel.terms())
            if (!lead || monomial_less(t, *lead, m))
                lead = &m;
        size_t gen = 0;
        int power = 0, support = 0;
        for (size_t i = 0; i < lead->size(); ++i)
            if ((*lead)[i] > 0) {
                ++support;
                gen = i;
                power = (*lead)[i];
            }
        require(support == 1, "relation head is not a pure generator power");
        Rational lc = rel.coeff(*lead);
        Poly repl{table};
        for (const auto& [m, c] : rel.terms())
            if (m != *lead)
                repl.add_term(m, -c / lc);
        rules.push_back(RewriteRule{gen, power, repl});
    }
    return RingPtr(new RingPresentation(std::move(table), std::move(rules)));
}

RingPtr RingPresentation::quotient_ring(std::vector<Generator> gens, std::vector<Poly> relations) {
    return quotient_ring(make_table(std::move(gens)), std::move(relations));
}

RingPtr RingPresentation::from_rules(TablePtr table, std::vector<RewriteRule> rules) {
    return RingPtr(new RingPresentation(std::move(table), std::move(rules)));
}

std::optional<int> RingPresentation::head_power(size_t gen) const {
    for (const RewriteRule& r : rules_)
        if (r.gen == gen)
            return r.power;
    return std::nullopt;
}

bool RingPresentation::is_normal(const Monomial& m) const {
    for (const RewriteRule& r : rules_)
        if (m[r.gen] >= r.power)
            return false;
    return true;
}

Poly RingPresentation::gen(std::string_view name, int power) const {
    auto idx = table_->index_of(name);
    require(idx.has_value(), "unknown generator '" + std::string(name) + "'");
    return Poly::generator(table_, *idx, power);
}

Poly RingPresentation::reduce(Poly p) const {
    require(same_table(p.table(), table_), "mismatched generator tables");
    if (rules_.empty())
        return p;
    bool changed = true;
    while (changed) {
        changed = false;
        // Scan from the largest term so each pass strictly lowers the order.
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const Monomial m = it->first;
            const Rational c = it->second;
            const RewriteRule* hit = nullptr;
            for (const RewriteRule& r : rules_)
                if (m[r.gen] >= r.power) {
                    hit = &r;
                    break;
                }
            if (!hit)
                continue;
            // m = low * gen^power * high in table order; even head, so the
            // two-sided product keeps all Koszul signs intact.
            Monomial low(m.size(), 0), high(m.size(), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                if (i < hit->gen)
                    low[i] = m[i];
                else if (i > hit->gen)
                    high[i] = m[i];
            }
            low[hit->gen] = m[hit->gen] - hit->power;
            Poly rewritten = Poly::term(table_, low, c) * hit->replacement *
                             Poly::term(table_, high, 1);
            p.add_term(m, -c);
            p += rewritten;
            changed = true;
            break;
        }
    }
    return p;
}

std::vector<Monomial> RingPresentation::basis(int degree) const {
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    const GeneratorTable& t = *table_;
    Monomial cur(t.size(), 0);
    // Enumerate exponents position by position; caps: 1 for odd generators,
    // head power - 1 under a rule, remaining degree otherwise.
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (i == t.size()) {
            if (rem == 0)
                out.push_back(cur);
            return;
        }
        int d = t[i].degree;
        int cap = rem / d;
        if (t.odd(i))
            cap = std::min(cap, 1);
        if (auto hp = head_power(i))
            cap = std::min(cap, *hp - 1);
        for (int e = 0; e <= cap; ++e) {
            cur[i] = e;
            self(self, i + 1, rem - e * d);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return monomial_less(t, b, a); });
    return out;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPresentation& target) {
    require(images.size() == p.table()->size(), "one image per generator required");
    const GeneratorTable& src = *p.table();
    for (size_t i = 0; i < images.size(); ++i) {
        require(same_table(images[i].table(), target.table()),
                "image of '" + src[i].name + "' lives in the wrong ring");
        if (!images[i].is_zero())
            require(images[i].is_homogeneous(src[i].degree),
                    "image of '" + src[i].name + "' is not homogeneous of degree " +
                        std::to_string(src[i].degree));
    }
    Poly out = target.zero();
    for (const auto& [m, c] : p.terms()) {
        Poly term = target.constant(c);
        for (size_t i = 0; i < m.size() && !term.is_zero(); ++i)
            for (int e = 0; e < m[i] && !term.is_zero(); ++e)
                term = target.reduce(term * images[i]);
        out += term;
    }
    return target.reduce(out);
}

std::pair<int, int> TensorRing::bidegree(const Monomial& m) const {
    const GeneratorTable& t = *ring->table();
    int dl = 0, dr = 0;
    for (size_t i = 0; i < m.size(); ++i)
        (i < split ? dl : dr) += t[i].degree * m[i];
    return {dl, dr};
}

TensorRing tensor_product(const RingPresentation& left, const RingPresentation& right,
                          const std::string& left_suffix, const std::string& right_suffix) {
    std::vector<Generator> gens;
    for (size_t i = 0; i < left.gen_count(); ++i)
        gens.push_back({(*left.table())[i].name + left_suffix, (*left.table())[i].degree});
    for (size_t i = 0; i < right.gen_count(); ++i)
        gens.push_back({(*right.table())[i].name + right_suffix, (*right.table())[i].degree});
    TablePtr table = make_table(std::move(gens));
    size_t split = left.gen_count();

    auto shift_poly = [&](const Poly& p, size_t offset) {
        Poly out((TablePtr(table)));
        for (const auto& [m, c] : p.terms()) {
            Monomial big(table->size(), 0);
            for (size_t i = 0; i < m.size(); ++i)
                big[offset + i] = m[i];
            out.add_term(big, c);
        }
        return out;
    };

    std::vector<RewriteRule> rules;
    for (const RewriteRule& r : left.rules())
        rules.push_back({r.gen, r.power, shift_poly(r.replacement, 0)});
    for (const RewriteRule& r : right.rules())
        rules.push_back({r.gen + split, r.power, shift_poly(r.replacement, split)});

    return TensorRing{RingPresentation::from_rules(table, std::move(rules)), split};
}

static Poly embed_at(const TensorRing& t, const Poly& p, size_t offset, size_t count) {
    require(p.table()->size() == count, "factor polynomial has wrong generator count");
    Poly out(t.ring->table());
    for (const auto& [m, c] : p.terms()) {
        Monomial big(t.ring->table()->size(), 0);
        for (size_t i = 0; i < m.size(); ++i)
            big[offset + i] = m[i];
        out.add_term(big, c);
    }
    return out;
}

Poly embed_left(const TensorRing& t, const Poly& p) {
    return embed_at(t, p, 0, t.split);
}

Poly embed_right(const TensorRing& t, const Poly& p) {
    return embed_at(t, p, t.split, t.ring->table()->size() - t.split);
}

Poly kunneth_positive_part(const TensorRing& t, const Poly& p) {
    Poly out(t.ring->table());
    for (const auto& [m, c] : p.terms()) {
        auto [dl, dr] = t.bidegree(m);
        if (dl > 0 && dr > 0)
            out.add_term(m, c);
    }
    return out;
}

}  // namespace mmm
