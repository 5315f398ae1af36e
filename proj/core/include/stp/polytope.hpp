#pragma once

// The polytope of n x n x n line-stochastic tensors in halfspace form, its
// affine hull, vertex certificates, and exact decomposition of arbitrary
// members into convex combinations of vertices.

#include "stp/linalg.hpp"
#include "stp/matrix.hpp"
#include "stp/tensor.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stp {

class EmptyPolytopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Halfspace description. The equality block holds the 3 n^2 line-sum rows
// over the n^3 flat coordinates: first the sums over i, one row per (j, k)
// at row index j*n + k; then the sums over j, one row per (i, k); then the
// sums over k, one row per (i, j). The right-hand side is all ones. The
// inequalities are implicit: one nonnegativity constraint x_f >= 0 per flat
// coordinate.
struct HRepresentation {
  int n = 0;
  RationalMatrix equalities;  // 3 n^2 x n^3, 0/1 entries
  RationalVector rhs;         // 3 n^2 ones

  std::size_t ambient_dim() const { return equalities.cols(); }
  std::size_t inequality_count() const { return equalities.cols(); }
};

HRepresentation build_omega_h(int n);  // n >= 1

// Dimension of the polytope, ambient dimension minus the equality rank.
// The rank is computed from the matrix, never assumed; it comes out to
// 3 n^2 - 3 n + 1, so the dimension is (n - 1)^3.
std::size_t dimension(const HRepresentation& h);

// Number of facets: n^3, one per nonnegativity constraint. The count stays
// n^3 at n = 2 as well, where the eight constraints pair up on coincident
// geometry (fixing one entry of a 2 x 2 x 2 member pins the complementary
// entry to zero too).
std::size_t facet_count(const HRepresentation& h);

// Affine hull of the equality system: a particular solution (free variables
// zeroed) plus the canonical kernel basis as columns. Throws
// EmptyPolytopeError when the equalities are inconsistent.
struct AffineHull {
  RationalVector base_point;   // length n^3
  RationalMatrix directions;   // n^3 rows, one column per kernel basis vector
  std::size_t equality_rank = 0;
};

AffineHull affine_hull(const HRepresentation& h);

struct VertexCertificate {
  StochasticTensor point;
  std::vector<std::size_t> active;  // flat coordinates where the entry is zero
  std::size_t active_rank = 0;      // rank of the equalities stacked with unit rows for `active`
  std::size_t ambient_dim = 0;
  bool vertex() const { return active_rank == ambient_dim; }
};

// Certifies whether a valid member is a vertex: the stacked active system
// must reach full ambient rank n^3. The rank is evaluated through the exact
// identity rank[E; U] = rank E + rank(U N), with N a kernel basis of E and
// U the active unit rows, which only needs elimination on an
// |active| x (n-1)^3 block. Throws std::invalid_argument when the tensor is
// not a valid member. The hull-taking overload lets callers reuse one
// affine hull across many queries.
VertexCertificate is_vertex(const HRepresentation& h, const StochasticTensor& t);
VertexCertificate is_vertex(const HRepresentation& h, const AffineHull& hull, const StochasticTensor& t);

struct WeightedVertex {
  Rational weight;
  StochasticTensor vertex;
};

// Exact convex decomposition: t equals the weighted sum of the returned
// vertices, with positive weights summing to one and at most (n-1)^3 + 1
// pairwise distinct terms. Deterministic: the walk to a vertex of the
// minimal face always follows the first canonical kernel vector of the
// active rows (preferring the forward orientation) with exact minimum-ratio
// steps, ties resolved by lowest flat index. Throws std::invalid_argument
// when the tensor is not a valid member.
std::vector<WeightedVertex> caratheodory_decompose(const HRepresentation& h, const StochasticTensor& t);
std::vector<WeightedVertex> caratheodory_decompose(const HRepresentation& h, const AffineHull& hull,
                                                   const StochasticTensor& t);

}  // namespace stp
