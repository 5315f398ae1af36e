#pragma once

// Exact Gaussian elimination over the rationals. The pivot rule is fixed for
// reproducibility: within the current column, take the nonzero entry of
// smallest bit length, breaking ties by lowest row index. The reduced row
// echelon form of a matrix is unique, so every object derived from it below
// (kernel basis, particular solution, pivot columns) is canonical.

#include "stp/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stp {

std::size_t rank(const RationalMatrix& m);

// Column indices that carry a pivot in echelon form, ascending. Their count
// equals the rank.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

// Canonical basis of {x : m x = 0}: one vector per free column of the
// reduced echelon form, ordered by free column index, each with a unit in
// its own free coordinate and zeros in the other free coordinates. Empty
// when the kernel is trivial. Requires at least one column.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

// One exact solution of m x = b with every free variable set to zero, or
// nullopt when the system is inconsistent. Throws std::invalid_argument on
// dimension mismatch.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

}  // namespace stp
