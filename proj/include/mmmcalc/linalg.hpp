#pragma once

#include <vector>

#include "mmmcalc/rational.hpp"

namespace mmm {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row major; all rows the same length

// Right-nullspace basis of an (possibly empty) matrix with `ncols` columns,
// computed by fraction-free (Bareiss) elimination over the integers after
// clearing denominators. Each basis vector is primitive-integer normalized
// with positive first nonzero entry; the list is ordered by free column.
std::vector<Vec> nullspace(const Mat& rows, size_t ncols);

size_t rank(const Mat& rows, size_t ncols);

// Exact determinant of a square matrix (Bareiss; 0 when singular).
Rational det(const Mat& m);

// Is v in the row span?
bool in_span(const Mat& rows, const Vec& v);

// Do the two row sets span the same subspace?
bool same_span(const Mat& a, const Mat& b, size_t ncols);

// Scale to integer entries with content 1 and positive first nonzero entry.
Vec primitive_normalize(const Vec& v);

}  // namespace mmm
