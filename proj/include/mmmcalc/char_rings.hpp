#pragma once

#include <vector>

#include "mmmcalc/linalg.hpp"
#include "mmmcalc/ring.hpp"

namespace mmm {

// H*(BSO(n); Q): odd n = 2m+1 is free on p4..p_{4m}; even n = 2m adds the
// Euler class chi of degree 2m with the relation chi^2 = p_{4m}.
RingPtr so_ring(int n);

// H*(BSU(n); Q): free on the degree-indexed c4, c6, ..., c_{2n}.
RingPtr su_ring(int n);

// Pontrjagin subring generators p4..p_{4*floor(n/2)}.
RingPtr pont_ring(int n);

// Monomial basis of Pont^degree(n), descending monomial order.
std::vector<Poly> pont_basis(int n, int degree);

// Coordinates of p in a basis of single monomials; errors if p has
// support outside the basis.
Vec coordinates(const Poly& p, const std::vector<Poly>& monomial_basis);

// Rebuild p over the target presentation by generator name; every name
// p uses must exist in the target. The result is reduced.
Poly rename_into(const Poly& p, const RingPresentation& target);

// Span comparisons on raw polynomial lists (same ring assumed); the
// coordinate index is the union of all monomials that appear.
bool same_poly_span(const std::vector<Poly>& a, const std::vector<Poly>& b);
bool poly_in_span(const std::vector<Poly>& span, const Poly& p);

// Pont(n1) (x) Pont(n2); right-factor generators carry a prime suffix.
TensorRing whitney_target(int n1, int n2);

// p_{4k} -> sum_{i+j=k} p_{4i} (x) p_{4j}, no truncation.
Poly whitney_image(const TensorRing& t, int n1, int n2, const Poly& x);

// Drop tensor components whose factor degree falls below that factor's
// fibre dimension (the shift keeps degree >= n_i; degree n_i lands in 0).
Poly sigma_truncate(const TensorRing& t, int n1, int n2, const Poly& x);

// The truncated restriction map r_{n1,n2}.
Poly whitney_restriction(const TensorRing& t, int n1, int n2, const Poly& x);

// r followed by the right-factor quotient killing the Hirzebruch span;
// returns the canonical representative with the leading coordinate of
// each Hirzebruch component eliminated. n2 must be odd.
Poly tilde_restriction(const TensorRing& t, int n1, int n2, const Poly& x);

struct SubspaceSpec {
    int n = 0;       // ambient fibre dimension
    int degree = 0;  // topological degree
    std::vector<Poly> basis;
};

// Verifies linear independence of the basis.
SubspaceSpec make_subspace(int n, int degree, std::vector<Poly> basis);

bool same_subspace(const SubspaceSpec& a, const SubspaceSpec& b);

// Matrix rows of the truncated restriction (quotient_l: of the map into
// the right-factor Hirzebruch quotient) on the given domain polynomials;
// one column per domain element.
Mat restriction_rows(int n1, int n2, const std::vector<Poly>& domain, bool quotient_l);

// Intersection of the restriction kernels over all admissible splits
// inside Pont^degree(n): even splits for even n; for odd n >= 7, even
// first part and odd second part with the Hirzebruch quotient.
SubspaceSpec kernel_intersection(int n, int degree);

// Predicted kernel basis: {s_d} for even n, {s_d, L-component} for odd
// n >= 7; empty below degree n.
SubspaceSpec closed_form_kernel(int n, int degree);

}  // namespace mmm
