#pragma once

// Exact vertex enumeration by the double description method, plus
// exhaustive Latin-square enumeration (the integral vertices at each n).

#include "stp/matrix.hpp"
#include "stp/polytope.hpp"
#include "stp/tensor.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace stp {

class UnboundedPolyhedronError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// General polyhedron {y in Q^dim : coeffs y + offsets >= 0}.
struct InequalitySystem {
  std::size_t dim = 0;
  RationalMatrix coeffs;   // one row per constraint, dim columns
  RationalVector offsets;  // one entry per constraint
};

// All vertices of the polyhedron, sorted lexicographically. An empty result
// means the feasible set is empty. Throws UnboundedPolyhedronError when the
// feasible set is unbounded or contains a line. Fully deterministic: the
// homogenized constraints are processed in input order (the scaling
// constraint last) starting from a greedy leading independent subset.
std::vector<RationalVector> enumerate_polytope_vertices(const InequalitySystem& sys);

struct VertexSet {
  int n = 0;
  std::vector<StochasticTensor> vertices;  // sorted by lexicographic_less
  std::size_t integral_count = 0;
  std::size_t nonintegral_count = 0;
};

// Every vertex of the stochastic tensor polytope: the equalities are
// eliminated through the affine hull, the nonnegativity constraints are
// rewritten in hull coordinates, and the double description cone is read
// back into tensors. Throws EmptyPolytopeError when the system is
// infeasible (never the case for build_omega_h output).
VertexSet enumerate_vertices(const HRepresentation& h);

// Exhaustive Latin squares of order n, visited in lexicographic row-major
// order (symbols tried ascending in each cell).
void for_each_latin_square(int n, const std::function<void(const LatinSquare&)>& fn);
std::uint64_t count_latin_squares_backtracking(int n);

// Materialized variant; capped at n <= 5 because the collection itself
// becomes unreasonably large beyond that.
std::vector<LatinSquare> enumerate_latin_squares(int n);

}  // namespace stp
