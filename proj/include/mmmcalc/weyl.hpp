#pragma once

#include <utility>
#include <vector>

#include "mmmcalc/char_rings.hpp"
#include "mmmcalc/gysin.hpp"
#include "mmmcalc/linalg.hpp"
#include "mmmcalc/poly.hpp"
#include "mmmcalc/rational.hpp"
#include "mmmcalc/ring.hpp"

namespace mmm {

// Polynomial functions on the diagonal maximal torus of SU(3), in the
// coordinates x1, x2 of degree 2 with the third weight x3 = -x1 - x2
// eliminated.  The symmetric group on the three weights acts by
// substitution; `action` lists the images of (x1, x2) under all six
// permutations, identity first.
struct TorusModel {
    RingPtr ring;
    std::vector<std::vector<Poly>> action;

    Poly x1() const { return Poly::generator(ring->table(), 0); }
    Poly x2() const { return Poly::generator(ring->table(), 1); }
    Poly x3() const { return -x1() - x2(); }
};

TorusModel torus_model();

// Averaging operator: the sum of sigma^* p over all six permutations.
// The result is checked to be invariant under the action.
Poly phi_average(const TorusModel& T, const Poly& p);

// Images of the three fixed-point components of the fibrewise Euler class
// of the flag bundle: z1 = (x2 - x1)(x3 - x1), z2 = (x1 - x2)(x3 - x2),
// z3 = (x1 - x3)(x2 - x3).  The permutation action permutes them.
std::vector<Poly> z_basis(const TorusModel& T);

// Power sum s_i = z1^i + z2^i + z3^i, an invariant polynomial.
Poly s_power(const TorusModel& T, int i);

// Torus restrictions of the Euler and degree-four Pontrjagin classes of
// the vertical tangent bundle of the sphere bundle associated with the
// adjoint representation: chi restricts to z1 and p4 to z1 + s1.  The pair
// is cross-checked against the weight expansions (x2 - x1)(x3 - x1) and
// (x2 - x1)^2 + (x3 - x1)^2.
std::pair<Poly, Poly> chi_p4_images(const TorusModel& T);

// Torus restrictions of the Chern classes of the standard representation:
// c4 maps to the second and c6 to the third elementary symmetric
// polynomial in the weights x1, x2, x3.
std::vector<Poly> su3_cw_images(const TorusModel& T);

// The (d+1) x (d+1) matrix with entry binomial(d - k, j) in row j,
// column k.  Anti-triangular with unit anti-diagonal, so its determinant
// is +1 or -1.
Mat binomial_matrix(int d);
Rational binomial_matrix_det(int d);

// Dimension of the image of the averaging operator on the span of
// v_k = z1^k (z1 + s1)^(d-k), k = 0..d.  On the torus the z's satisfy
// relations (already s2 = s1^2), so this equals the number of monomials
// s1^a s3^b with 2a + 3b = d, which is smaller than d once d >= 2.
int image_dimension(const TorusModel& T, int d);

// The same objects with z1, z2, z3 treated as free commuting variables of
// degree 4, permuted by the symmetric group.  Ranks computed here are the
// generic ones and differ from the torus model: the averaged v_k span a
// d-dimensional space for every d >= 1.
struct FormalZModel {
    RingPtr ring;
    std::vector<std::vector<Poly>> action;
};
FormalZModel formal_z_model();
Poly formal_average(const FormalZModel& F, const Poly& p);
Poly formal_s_power(const FormalZModel& F, int i);
int formal_image_dimension(int d);

// True when the power sum s_d lies outside span{s1^(d-j) s_j : 0 <= j < d}
// in the free model; holds for every d >= 2.
bool formal_power_sum_independent(int d);

// Write a homogeneous class x of degree 4d + 4 over H*(BSO(4)) uniquely as
// x = a * L + chi * F(p4, chi), where L is the degree-(4d+4) component of
// the multiplicative L-sequence in p4, p8 and F lives in the free ring
// Q[p4, chi] (the relation chi^2 = p8 is eliminated before dividing).
struct ChiDecomposition {
    Rational a;
    Poly F;
};
ChiDecomposition decompose_so4(const Poly& x);

// Matrix of the map sending a degree-(4d+4) class x over H*(BSO(4)) to the
// average Phi applied to the torus restriction of the F-part of x.
// Columns follow so_ring(4)->basis(4d+4), rows the torus monomial basis in
// degree 4d.
Mat weyl_matrix(int d);

// Kernel of that map inside H^{4d+4}(BSO(4)).
SubspaceSpec kernel_via_weyl(int d);

// Transport the value matrix of a kappa table with target H*(BSU(3)) into
// the torus model via c4 -> e2, c6 -> e3.  Rows become coordinates in the
// torus monomial basis of degree (table degree - fibre dimension).
Mat cw_transport(const KappaTable& T);

}  // namespace mmm
