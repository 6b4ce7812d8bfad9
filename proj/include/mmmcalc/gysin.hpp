#pragma once

#include <string>
#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/linalg.hpp"
#include "mmmcalc/ring.hpp"

namespace mmm {

// A complex vector bundle presented by its base ring and Chern classes.
struct BundleSpec {
    RingPtr base;
    int rank = 1;             // complex rank of V
    std::vector<Poly> chern;  // chern[i] = c_{2(i+1)}(V); missing tail entries are zero
};

// H*(P(V)) = H*(X)[z] / (z^r + c_2 z^{r-1} + ... + c_{2r}), r = rank, with z
// the first Chern class of the dual tautological line bundle. The fibre is
// CP^m, m = rank - 1, and {1, z, ..., z^m} is a free module basis over the
// base, so the pushforward is extraction of the z^m coordinate.
class ProjectiveBundle {
public:
    explicit ProjectiveBundle(BundleSpec spec, const std::string& z_name = "z");

    const BundleSpec& spec() const { return spec_; }
    const RingPtr& base() const { return spec_.base; }
    const RingPtr& total() const { return total_; }
    int m() const { return spec_.rank - 1; }   // fibre complex dimension
    int fibre_dim() const { return 2 * m(); }  // fibre real dimension

    Poly z(int power = 1) const { return total_->gen(zidx_, power); }
    Poly pullback(const Poly& x) const;
    // Inverse of pullback on classes with no z coordinate after reduction.
    Poly to_base(const Poly& x) const;
    // Pushforward along the bundle projection: the z^m coordinate.
    Poly gysin(const Poly& x) const;
    // gysin(euler(T_v) * x).
    Poly transfer(const Poly& x) const;

    // Chern classes c_{2j}(T_v) for j = 1..m, from T_v + C = q*V (x) L^dual.
    const std::vector<Poly>& vertical_chern() const { return vchern_; }
    // Pontrjagin classes p_{4k}(T_v) for k = 1..m, and the Euler class.
    const std::vector<Poly>& vertical_pont() const { return vpont_; }
    const Poly& vertical_euler() const { return veuler_; }

    // Evaluate a class on the vertical tangent bundle. Generators of cls are
    // matched by name: chi and p4, p8, ... (p_{4k} with k > m maps to zero).
    Poly evaluate_vertical(const Poly& cls) const;
    // Same, for expressions over the elementary Chern basis e_1..e_m of the
    // fibre rank (tables produced by elementary_ring(m, 2)).
    Poly evaluate_vertical_chern(const Poly& cls) const;

    // kappa(cls) = gysin(cls(T_v)); zero when the degree drops below 0.
    Poly kappa(const Poly& cls) const { return gysin(evaluate_vertical(cls)); }

private:
    BundleSpec spec_;
    RingPtr total_;
    size_t zidx_ = 0;
    std::vector<Poly> vchern_;  // index j-1 holds c_{2j}(T_v)
    std::vector<Poly> vpont_;   // index k-1 holds p_{4k}(T_v)
    Poly veuler_;
};

enum class KappaDomain { pont, full };

// Matrix of kappa on a monomial basis of one graded piece of the domain
// ring (Pontrjagin subring or the full H*(BSO(n))), with rows indexed by a
// monomial basis of the target in degree `degree - n`.
struct KappaTable {
    int n = 0;       // fibre dimension of the domain grading
    int degree = 0;  // topological degree of the domain classes
    KappaDomain domain = KappaDomain::pont;
    RingPtr domain_ring;
    std::vector<Poly> domain_basis;  // monomials, descending monomial order
    RingPtr target_ring;
    std::vector<Poly> target_basis;  // monomials of degree `degree - n`
    Mat matrix;                      // matrix[r][c] = row r coordinate of column c's image

    // Matrix action on a class over the domain ring.
    Poly apply(const Poly& cls) const;
    // Nullspace, as domain-ring polynomials (primitive integer vectors).
    std::vector<Poly> kernel() const;
};

KappaTable kappa_table(const ProjectiveBundle& P, int degree, KappaDomain domain);

// Pushforward along the universal even sphere bundle BSO(2m) -> BSO(2m+1):
// writing x = x_1 chi + x_2 with x_i pulled back, the value is 2 x_1. Input
// over so_ring(2m), output over pont_ring(2m+1).
Poly sphere_bundle_gysin(int m, const Poly& x);

// The product of two projective bundles with the componentwise projection.
class ProductBundle {
public:
    ProductBundle(ProjectiveBundle a, ProjectiveBundle b);

    const ProjectiveBundle& first() const { return a_; }
    const ProjectiveBundle& second() const { return b_; }
    const TensorRing& total() const { return total_; }
    const TensorRing& base() const { return base_; }

    Poly embed_total(const Poly& xa, const Poly& xb) const;
    Poly embed_base(const Poly& ya, const Poly& yb) const;
    // Coordinate of z_1^{m_1} z_2^{m_2}; the pushforward of the product.
    Poly gysin(const Poly& x) const;
    // gysin of cls evaluated on T_v(E_1 x E_2) = T_v E_1 x T_v E_2.
    Poly kappa(const Poly& cls) const;
    // (kappa (x) kappa) composed with the truncated Whitney restriction;
    // cls over pont_ring(n_1 + n_2). Agrees with kappa on that domain.
    Poly kappa_via_restriction(const Poly& cls) const;

private:
    ProjectiveBundle a_, b_;
    TensorRing total_, base_;
};

// Exact coefficients a_p of the pushforward of the Chern character of the
// vertical tangent bundle of P(V + C^{m-1}) over the one-generator base
// Q[u], u = c_4(V), computed four ways: the bundle pipeline, the series
// product (2cos(sqrt u) + (m-1)) * sum (-u)^l/(m+2l)!, and the two closed
// forms that differ in reading (m+2k)! versus (m+2k)!!.
struct ChPushforwardReport {
    int m = 0;
    int trunc = 0;
    std::vector<Rational> pipeline;
    std::vector<Rational> series_product;
    std::vector<Rational> closed_single;
    std::vector<Rational> closed_double;
    bool matches_series = false;
    bool matches_single = false;
    bool matches_double = false;
    bool all_nonzero = false;
};

ChPushforwardReport ch_pushforward(int m, int trunc);

// The composite CP^m-over-CP^1 pushforward in Q[x, z]/(x^{r+1}, z^2): the
// bundle P(V + C^{m-1}) -> CP^1 x CP^r -> CP^r with c_4(V) = u = x^2 + z x.
// Checks the two-step identities and collects the coefficients of x^{2l-1}.
struct HoloReport {
    int m = 0;
    int r = 0;
    int trunc = 0;
    bool proj_gysin_ok = false;     // proj pushforward of u^l is l x^{2l-1}
    bool pullback_killed = false;   // q-pushforward of q-pullbacks vanishes
    bool transitivity_ok = false;   // one-shot extraction equals the two-step route
    std::vector<Rational> composite;  // coefficient of x^{2l-1}, l = 1..trunc
    std::vector<Rational> expected;   // l * a_l from ch_pushforward
    bool matches_expected = false;
    bool nonzero_through_5 = false;
};

HoloReport composite_pushforward_holomorphic(int r, int m, int trunc);

// Model bundles.
ProjectiveBundle cp2_over_bsu3();
ProjectiveBundle cpm_over_su2_plus_trivial(int m);  // base Q[u], rank m+1
ProjectiveBundle trivial_cpm(int m);                // base Q, total H*(CP^m)

}  // namespace mmm
