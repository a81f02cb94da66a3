#pragma once

#include <optional>
#include <vector>

#include "sosgap/rational.hpp"

namespace sosgap {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major, rows may be empty collectively

// Reduced row echelon form in place. Returns the pivot column indices.
std::vector<int> rref(Mat& a);

int rank(Mat a);

// Canonical nullspace basis: one vector per free column in increasing column
// order, with a 1 in the free position.
std::vector<Vec> nullspace(const Mat& a, int ncols);

// Least structural solve: x with a x = b, if consistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// True iff v lies in the row span of `rows`.
bool in_row_span(const Mat& rows, const Vec& v);

// Coordinates of v in the given (not necessarily independent) spanning rows,
// if v lies in their span.
std::optional<Vec> coordinates_in_span(const Mat& rows, const Vec& v);

Rational dot(const Vec& a, const Vec& b);

Rational det(Mat a);

}  // namespace sosgap
