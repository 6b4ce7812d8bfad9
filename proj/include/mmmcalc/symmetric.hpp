#pragma once

#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mmmcalc/ring.hpp"

namespace mmm {

// Free ring on root variables x1..xm, all of the same even degree.
RingPtr var_ring(size_t m, int var_degree);

// Degree-indexed name of the k-th elementary symmetric generator:
// p4,p8,... for root degree 4; c2,c4,... for root degree 2; e1,e2,... else.
std::string elementary_name(int var_degree, size_t k);

// Free ring on e_1..e_m with deg e_k = k*var_degree, named as above.
RingPtr elementary_ring(size_t m, int var_degree);

// e_k(x_1..x_m) as a sum of squarefree monomials in the variable ring.
Poly elementary_in_vars(const RingPtr& vars, size_t k);

// Map a polynomial over elementary_ring into var_ring (e_k -> e_k(x)).
Poly expand_in_vars(const Poly& p, const RingPtr& elem, const RingPtr& vars);

// Apply a permutation of the variables: exponent i moves to perm[i].
// Only valid when every variable has even degree (no Koszul signs).
Poly permute_vars(const Poly& p, const std::vector<size_t>& perm);

// Invariance under one transposition and the full cycle suffices.
bool is_symmetric(const Poly& p);

// Classical leading-term elimination; errors if p is not symmetric.
Poly express_in_elementary(const Poly& p, const RingPtr& vars, const RingPtr& elem);

// Newton power sum s_d = x_1^d + ... + x_m^d in the elementary basis.
Poly power_sum(size_t d, size_t m, int var_degree);

struct PowerSeries {
    std::vector<Rational> coef;  // f_0, f_1, ..., f_K

    size_t truncation() const { return coef.empty() ? 0 : coef.size() - 1; }
    const Rational& operator[](size_t k) const { return coef.at(k); }
};

// Components F_d of the multiplicative sequence generated by f, as
// polynomials in the elementary basis of m root variables.
class MultiplicativeSequence {
public:
    MultiplicativeSequence(PowerSeries f, int var_degree);

    const PowerSeries& series() const { return f_; }
    int var_degree() const { return var_degree_; }

    // F_d in m variables; F_0 = 1. Requires d <= truncation.
    Poly component(size_t d, size_t m) const;

private:
    PowerSeries f_;
    int var_degree_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<size_t, size_t>, Poly> cache_;
};

// Coefficients of sqrt(x)/tanh(sqrt(x)): f_k = 2^{2k} B_{2k} / (2k)!.
PowerSeries l_series(size_t K);

// Hirzebruch class component of degree 4d in m Pontrjagin-root variables.
// Asserts that the coefficient of p4^d is nonzero.
Poly l_class_component(size_t d, size_t m);

enum class CharKind { chern, pontrjagin };

// Power-sum character components. Normalized: ch_{2d} = s_d/d! on Chern
// roots, ph_{4d} = 2 s_d/(2d)! on Pontrjagin roots; bare: s_d itself.
Poly character_component(CharKind kind, size_t d, size_t m, bool normalized);

// Checks that the only symmetric polynomials of the shape
// sum_i a_i x_m^i F_{d-i}(x_1..x_{m-1}) are the multiples of F_d:
// the solution space is 1-dimensional and spanned by a_i = f_i.
bool verify_powerseries_lemma(const MultiplicativeSequence& seq, size_t d, size_t m);

}  // namespace mmm
