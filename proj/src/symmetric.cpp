#include "mmmcalc/symmetric.hpp"

#include <algorithm>
#include <numeric>

#include "mmmcalc/error.hpp"
#include "mmmcalc/linalg.hpp"

namespace mmm {

namespace {

// Copy a polynomial over an m-variable ring into the first m slots of a
// larger ring with compatible generator degrees.
Poly widen(const Poly& p, const RingPtr& big) {
    Poly out{big->table()};
    for (const auto& [mono, c] : p.terms()) {
        Monomial m2(big->table()->size(), 0);
        std::copy(mono.begin(), mono.end(), m2.begin());
        out.add_term(m2, c);
    }
    return out;
}

}  // namespace

RingPtr var_ring(size_t m, int var_degree) {
    require(m >= 1, "var_ring: need at least one variable");
    require(var_degree >= 2 && var_degree % 2 == 0, "var_ring: variable degree must be even");
    std::vector<Generator> gens;
    for (size_t i = 1; i <= m; ++i)
        gens.push_back({"x" + std::to_string(i), var_degree});
    return RingPresentation::free_ring(std::move(gens));
}

std::string elementary_name(int var_degree, size_t k) {
    if (var_degree == 4) return "p" + std::to_string(4 * k);
    if (var_degree == 2) return "c" + std::to_string(2 * k);
    return "e" + std::to_string(k);
}

RingPtr elementary_ring(size_t m, int var_degree) {
    require(m >= 1, "elementary_ring: need at least one variable");
    std::vector<Generator> gens;
    for (size_t k = 1; k <= m; ++k)
        gens.push_back({elementary_name(var_degree, k), var_degree * static_cast<int>(k)});
    return RingPresentation::free_ring(std::move(gens));
}

Poly elementary_in_vars(const RingPtr& vars, size_t k) {
    const size_t m = vars->table()->size();
    if (k == 0) return vars->one();
    Poly out{vars->table()};
    if (k > m) return out;
    // Enumerate k-subsets of {0..m-1}.
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), size_t{0});
    while (true) {
        Monomial mono(m, 0);
        for (size_t i : idx) mono[i] = 1;
        out.add_term(mono, Rational(1));
        size_t j = k;
        while (j-- > 0) {
            if (idx[j] != m - k + j) {
                ++idx[j];
                for (size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
                break;
            }
            if (j == 0) return out;
        }
    }
}

Poly expand_in_vars(const Poly& p, const RingPtr& elem, const RingPtr& vars) {
    std::vector<Poly> images;
    for (size_t k = 1; k <= elem->table()->size(); ++k)
        images.push_back(elementary_in_vars(vars, k));
    return substitute(p, images, *vars);
}

Poly permute_vars(const Poly& p, const std::vector<size_t>& perm) {
    const auto& table = p.table();
    require(perm.size() == table->size(), "permute_vars: permutation size mismatch");
    for (size_t i = 0; i < table->size(); ++i)
        require((*table)[i].degree % 2 == 0, "permute_vars: odd generator");
    Poly out{table};
    for (const auto& [mono, c] : p.terms()) {
        Monomial m2(mono.size(), 0);
        for (size_t i = 0; i < mono.size(); ++i) m2[perm[i]] = mono[i];
        out.add_term(m2, c);
    }
    return out;
}

bool is_symmetric(const Poly& p) {
    const size_t m = p.table()->size();
    if (m <= 1) return true;
    std::vector<size_t> swap01(m), cycle(m);
    std::iota(swap01.begin(), swap01.end(), size_t{0});
    std::swap(swap01[0], swap01[1]);
    for (size_t i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
    return permute_vars(p, swap01) == p && permute_vars(p, cycle) == p;
}

Poly express_in_elementary(const Poly& p, const RingPtr& vars, const RingPtr& elem) {
    const size_t m = vars->table()->size();
    require(elem->table()->size() == m, "express_in_elementary: ring size mismatch");
    require(is_symmetric(p), "express_in_elementary: input is not symmetric");

    Poly rest = p;
    Poly out{elem->table()};
    while (!rest.is_zero()) {
        // Largest monomial in the graded order (later variables heavier);
        // the map's own key order is lexicographic from the front, which is
        // the wrong one, so scan for the maximum explicitly.
        auto lead = rest.terms().begin();
        for (auto it = std::next(rest.terms().begin()); it != rest.terms().end(); ++it)
            if (monomial_less(*vars->table(), lead->first, it->first)) lead = it;
        // For a symmetric polynomial this monomial has non-decreasing exponents.
        const Monomial mono = lead->first;
        const Rational coef = lead->second;
        if (monomial_degree(*vars->table(), mono) == 0) {
            out += Poly::constant(elem->table(), coef);
            rest -= Poly::constant(vars->table(), coef);
            continue;
        }
        for (size_t i = 0; i + 1 < m; ++i)
            require(mono[i] <= mono[i + 1], "express_in_elementary: input is not symmetric");
        // Leading term e_1^{c_1-c_2} e_2^{c_2-c_3} ... with c_k = mono[m-k].
        Monomial emono(m, 0);
        for (size_t k = 1; k <= m; ++k) {
            int ck = mono[m - k];
            int cn = (k == m) ? 0 : mono[m - k - 1];
            emono[k - 1] = ck - cn;
        }
        Poly eterm = Poly::term(elem->table(), emono, coef);
        out += eterm;
        rest -= expand_in_vars(eterm, elem, vars);
    }
    return out;
}

Poly power_sum(size_t d, size_t m, int var_degree) {
    require(d >= 1, "power_sum: d must be positive");
    RingPtr elem = elementary_ring(m, var_degree);
    auto e = [&](size_t k) { return k <= m ? elem->gen(elementary_name(var_degree, k)) : elem->zero(); };
    // Newton: s_d = sum_{i=1}^{d-1} (-1)^{i-1} e_i s_{d-i} + (-1)^{d-1} d e_d.
    std::vector<Poly> s{elem->zero()};  // s[0] unused
    for (size_t t = 1; t <= d; ++t) {
        Poly acc = Rational(t % 2 == 1 ? 1 : -1) * Rational(static_cast<long long>(t)) * e(t);
        for (size_t i = 1; i < t; ++i)
            acc += Rational(i % 2 == 1 ? 1 : -1) * (e(i) * s[t - i]);
        s.push_back(acc);
    }
    return s[d];
}

MultiplicativeSequence::MultiplicativeSequence(PowerSeries f, int var_degree)
    : f_(std::move(f)), var_degree_(var_degree) {
    require(!f_.coef.empty() && f_.coef[0] == 1, "multiplicative sequence: series must start with 1");
}

Poly MultiplicativeSequence::component(size_t d, size_t m) const {
    require(d <= f_.truncation(), "multiplicative sequence: degree exceeds series truncation");
    require(m >= 1, "multiplicative sequence: need at least one variable");
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find({d, m});
        if (it != cache_.end()) return it->second;
    }
    RingPtr elem = elementary_ring(m, var_degree_);
    Poly result{elem->table()};
    if (d == 0) {
        result = elem->one();
    } else {
        RingPtr vars = var_ring(m, var_degree_);
        const int top = static_cast<int>(d) * var_degree_;
        Poly prod = vars->one();
        for (size_t i = 0; i < m; ++i) {
            Poly g = vars->one();
            for (size_t k = 1; k <= d; ++k)
                g += f_[k] * pow(Poly::generator(vars->table(), i), static_cast<int>(k));
            prod = (prod * g).truncate_above(top);
        }
        result = express_in_elementary(prod.graded_component(top), vars, elem);
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(std::make_pair(d, m), result);
    return result;
}

PowerSeries l_series(size_t K) {
    std::vector<Rational> b = bernoulli_upto(2 * static_cast<unsigned>(K));
    PowerSeries f;
    for (size_t k = 0; k <= K; ++k) {
        Rational c = b[2 * k];
        c *= Rational(Int(1) << (2 * k));
        c /= Rational(factorial(2 * static_cast<unsigned>(k)));
        f.coef.push_back(c);
    }
    return f;
}

Poly l_class_component(size_t d, size_t m) {
    static const int kVarDegree = 4;
    MultiplicativeSequence seq(l_series(std::max<size_t>(d, 1)), kVarDegree);
    Poly out = seq.component(d, m);
    if (d >= 1) {
        Monomial pure(m, 0);
        pure[0] = static_cast<int>(d);
        require(out.coeff(pure) != 0, "l_class_component: vanishing p4-power coefficient");
    }
    return out;
}

Poly character_component(CharKind kind, size_t d, size_t m, bool normalized) {
    const int vd = (kind == CharKind::chern) ? 2 : 4;
    Poly s = power_sum(d, m, vd);
    if (!normalized) return s;
    if (kind == CharKind::chern) return Rational(1, factorial(static_cast<unsigned>(d))) * s;
    return Rational(2, factorial(2 * static_cast<unsigned>(d))) * s;
}

bool verify_powerseries_lemma(const MultiplicativeSequence& seq, size_t d, size_t m) {
    require(m >= 3, "powerseries lemma: needs at least three variables");
    for (size_t k = 0; k <= d; ++k)
        require(seq.series()[k] != 0, "powerseries lemma: series coefficient vanishes in range");

    const int vd = seq.var_degree();
    RingPtr vars = var_ring(m, vd);
    RingPtr small = var_ring(m - 1, vd);

    // P_i = x_m^i * F_{d-i}(x_1..x_{m-1}), i = 0..d.
    std::vector<Poly> P;
    for (size_t i = 0; i <= d; ++i) {
        Poly f = expand_in_vars(seq.component(d - i, m - 1), elementary_ring(m - 1, vd), small);
        P.push_back(pow(Poly::generator(vars->table(), m - 1), static_cast<int>(i)) * widen(f, vars));
    }

    // Symmetry of sum a_i P_i is equivalent to invariance under the
    // transposition of x_{m-1} and x_m (the rest is already symmetric).
    std::vector<size_t> tau(m);
    std::iota(tau.begin(), tau.end(), size_t{0});
    std::swap(tau[m - 2], tau[m - 1]);

    std::map<Monomial, size_t> rows;
    std::vector<Poly> Q;
    for (const auto& p : P) {
        Q.push_back(p - permute_vars(p, tau));
        for (const auto& [mono, c] : Q.back().terms()) rows.emplace(mono, rows.size());
    }
    Mat mat(rows.size(), Vec(d + 1, Rational(0)));
    for (size_t i = 0; i <= d; ++i)
        for (const auto& [mono, c] : Q[i].terms()) mat[rows.at(mono)][i] = c;

    std::vector<Vec> kernel = nullspace(mat, d + 1);
    if (kernel.size() != 1) return false;
    Vec expect(d + 1);
    for (size_t k = 0; k <= d; ++k) expect[k] = seq.series()[k];
    return kernel[0] == primitive_normalize(expect);
}

}  // namespace mmm
