#pragma once

#include <string>
#include <string_view>

#include "mmmcalc/gysin.hpp"
#include "mmmcalc/poly.hpp"
#include "mmmcalc/ring.hpp"

namespace mmm {

// Deterministic text form: terms in descending monomial order joined with
// " + " and " - ", coefficients in lowest terms, unit coefficients dropped
// on nonconstant monomials, exponent 1 omitted, "0" for zero.  Example:
// "7/45*p8 - 1/45*p4^2".
std::string print_poly(const Poly& p);

// Parse an expression over the ring's generators: rational literals ("3",
// "5/7"), generator names, +, -, *, ^ with nonnegative integer exponents,
// and parentheses. The result is reduced in the ring.
Poly parse_poly(std::string_view text, const RingPresentation& ring);

// Ring presented as JSON: {"generators": [{"name": n, "degree": d}, ...],
// "relations": ["text-poly", ...]}; "relations" may be absent.
RingPtr parse_ring_json(const std::string& text);

// Bundle presented as JSON: {"base": <ring object>, "rank": r,
// "chern": ["text-poly", ...]} with chern[i] = c_{2(i+1)} over the base;
// "chern" may be absent or shorter than the rank.
BundleSpec parse_bundle_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace mmm
