#include "stp/enumeration.hpp"

#include "stp/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace stp {
namespace {

// One generator of the homogenized cone. The zero mask caches, per
// constraint row, whether the row annihilates the ray; adjacency tests read
// it instead of recomputing dot products.
struct Ray {
  RationalVector z;                 // length m + 1, the last coordinate scales
  std::vector<std::uint64_t> zero;  // bit r set when row r dots to zero
};

// Scales a rational vector to primitive integer form: multiply by the
// common denominator, divide by the gcd of the numerators. Orientation is
// preserved.
void scale_primitive(RationalVector& z) {
  Int common(1);
  for (const Rational& v : z) common = boost::multiprecision::lcm(common, denominator(v));
  std::vector<Int> nums(z.size());
  Int g(0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    nums[i] = numerator(z[i]) * (common / denominator(z[i]));
    g = boost::multiprecision::gcd(g, nums[i]);
  }
  if (g == 0) return;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = Rational(nums[i] / g);
}

Rational dot_row(const RationalMatrix& rows, std::size_t r, const RationalVector& z) {
  Rational acc(0);
  for (std::size_t c = 0; c < rows.cols(); ++c) {
    if (rows(r, c) != 0 && z[c] != 0) acc += rows(r, c) * z[c];
  }
  return acc;
}

std::vector<std::uint64_t> make_zero_mask(const RationalMatrix& rows, const RationalVector& z, std::size_t words) {
  std::vector<std::uint64_t> mask(words, 0);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (dot_row(rows, r, z) == 0) mask[r >> 6] |= std::uint64_t(1) << (r & 63);
  }
  return mask;
}

std::size_t popcount_and3(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                          const std::vector<std::uint64_t>& c) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += static_cast<std::size_t>(std::popcount(a[w] & b[w] & c[w]));
  return total;
}

RationalMatrix gather_rows(const RationalMatrix& m, const std::vector<std::size_t>& which) {
  RationalMatrix out(which.size(), m.cols());
  for (std::size_t r = 0; r < which.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(which[r], c);
  }
  return out;
}

}  // namespace

std::vector<RationalVector> enumerate_polytope_vertices(const InequalitySystem& sys) {
  if (sys.coeffs.rows() != sys.offsets.size())
    throw std::invalid_argument("enumerate_polytope_vertices: row count and offset count differ");
  if (sys.coeffs.rows() > 0 && sys.coeffs.cols() != sys.dim)
    throw std::invalid_argument("enumerate_polytope_vertices: coefficient width does not match dim");

  const std::size_t m = sys.dim;
  if (m == 0) {  // zero-dimensional: feasibility is sign inspection
    for (const Rational& b : sys.offsets) {
      if (b < 0) return {};
    }
    return {RationalVector{}};
  }

  // homogenize: rows [a_i | b_i] in input order, then the scale row [0 | 1]
  const std::size_t cone_dim = m + 1;
  RationalMatrix rows(sys.coeffs.rows() + 1, cone_dim);
  for (std::size_t r = 0; r < sys.coeffs.rows(); ++r) {
    for (std::size_t c = 0; c < m; ++c) rows(r, c) = sys.coeffs(r, c);
    rows(r, m) = sys.offsets[r];
  }
  rows(sys.coeffs.rows(), m) = 1;
  const std::size_t row_count = rows.rows();

  if (rank(rows) < cone_dim) {
    // The homogenized cone is not pointed, which forces a nontrivial kernel
    // of the coefficient block. Restricting to its pivot columns keeps
    // feasibility intact, so probe that quotient for emptiness.
    const auto pivots = pivot_columns(sys.coeffs);
    InequalitySystem quotient;
    quotient.dim = pivots.size();
    quotient.coeffs = RationalMatrix(sys.coeffs.rows(), pivots.size());
    for (std::size_t r = 0; r < sys.coeffs.rows(); ++r) {
      for (std::size_t c = 0; c < pivots.size(); ++c) quotient.coeffs(r, c) = sys.coeffs(r, pivots[c]);
    }
    quotient.offsets = sys.offsets;
    if (enumerate_polytope_vertices(quotient).empty()) return {};
    throw UnboundedPolyhedronError("feasible set contains a line; it has no vertices");
  }

  // initial simplicial cone from the greedy leading independent row subset
  std::vector<std::size_t> base;
  for (std::size_t r = 0; r < row_count && base.size() < cone_dim; ++r) {
    base.push_back(r);
    if (rank(gather_rows(rows, base)) < base.size()) base.pop_back();
  }

  const std::size_t words = (row_count + 63) / 64;
  std::vector<Ray> rays;
  rays.reserve(cone_dim);
  const RationalMatrix base_matrix = gather_rows(rows, base);
  for (std::size_t c = 0; c < cone_dim; ++c) {
    RationalVector unit(cone_dim, Rational(0));
    unit[c] = 1;
    RationalVector z = *solve(base_matrix, unit);  // base_matrix is square and regular
    scale_primitive(z);
    Ray ray{std::move(z), {}};
    ray.zero = make_zero_mask(rows, ray.z, words);
    rays.push_back(std::move(ray));
  }

  std::vector<std::uint64_t> processed(words, 0);
  const auto mark = [&processed](std::size_t r) { processed[r >> 6] |= std::uint64_t(1) << (r & 63); };
  const auto marked = [&processed](std::size_t r) {
    return (processed[r >> 6] >> (r & 63)) & 1;
  };
  for (std::size_t r : base) mark(r);

  // incremental insertion in input order
  for (std::size_t r = 0; r < row_count; ++r) {
    if (marked(r)) continue;
    std::vector<Rational> vals(rays.size());
    std::vector<std::size_t> positive, negative;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot_row(rows, r, rays[i].z);
      if (vals[i] > 0) positive.push_back(i);
      else if (vals[i] < 0) negative.push_back(i);
    }
    if (negative.empty()) {
      mark(r);
      continue;
    }

    std::vector<Ray> created;
    const std::size_t need = cone_dim - 2;  // common zero rank certifying adjacency
    std::vector<std::size_t> common;
    for (std::size_t p : positive) {
      for (std::size_t q : negative) {
        if (popcount_and3(rays[p].zero, rays[q].zero, processed) < need) continue;
        common.clear();
        for (std::size_t row_idx = 0; row_idx < row_count; ++row_idx) {
          if (marked(row_idx) && ((rays[p].zero[row_idx >> 6] >> (row_idx & 63)) & 1) &&
              ((rays[q].zero[row_idx >> 6] >> (row_idx & 63)) & 1))
            common.push_back(row_idx);
        }
        if (rank(gather_rows(rows, common)) != need) continue;
        // adjacent pair: the edge between them pierces the new hyperplane
        RationalVector z(cone_dim);
        for (std::size_t c = 0; c < cone_dim; ++c) z[c] = vals[p] * rays[q].z[c] - vals[q] * rays[p].z[c];
        scale_primitive(z);
        Ray ray{std::move(z), {}};
        ray.zero = make_zero_mask(rows, ray.z, words);
        created.push_back(std::move(ray));
      }
    }

    std::vector<Ray> next;
    next.reserve(rays.size() - negative.size() + created.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] >= 0) next.push_back(std::move(rays[i]));
    }
    for (Ray& ray : created) next.push_back(std::move(ray));
    rays = std::move(next);
    mark(r);
  }

  // classify: scalable rays are vertices, residual rays witness recession
  std::vector<RationalVector> vertices;
  bool recession = false;
  for (const Ray& ray : rays) {
    const Rational& t = ray.z[m];
    if (t > 0) {
      RationalVector y(m);
      for (std::size_t c = 0; c < m; ++c) y[c] = ray.z[c] / t;
      vertices.push_back(std::move(y));
    } else {
      recession = true;  // final rays satisfy the scale row, so t == 0 here
    }
  }
  if (vertices.empty()) return {};
  if (recession)
    throw UnboundedPolyhedronError("feasible set is unbounded; vertex enumeration covers polytopes only");
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

VertexSet enumerate_vertices(const HRepresentation& h) {
  const AffineHull hull = affine_hull(h);  // throws EmptyPolytopeError on inconsistent equalities
  InequalitySystem sys;
  sys.dim = hull.directions.cols();
  sys.coeffs = hull.directions;  // row f states x_f >= 0 in hull coordinates
  sys.offsets = hull.base_point;

  const auto reduced = enumerate_polytope_vertices(sys);
  if (reduced.empty()) throw EmptyPolytopeError("the polytope has no feasible point");

  VertexSet out;
  out.n = h.n;
  out.vertices.reserve(reduced.size());
  for (const RationalVector& y : reduced) {
    RationalVector x = hull.base_point;
    for (std::size_t c = 0; c < sys.dim; ++c) {
      if (y[c] == 0) continue;
      for (std::size_t f = 0; f < x.size(); ++f) {
        if (hull.directions(f, c) != 0) x[f] += hull.directions(f, c) * y[c];
      }
    }
    out.vertices.emplace_back(h.n, std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end(), lexicographic_less);
  for (const StochasticTensor& v : out.vertices) {
    if (is_integral(v)) ++out.integral_count;
    else ++out.nonintegral_count;
  }
  return out;
}

void for_each_latin_square(int n, const std::function<void(const LatinSquare&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_latin_square: n must be positive");
  if (n > 31) throw std::invalid_argument("for_each_latin_square: order too large for the symbol masks");
  LatinSquare square(n);
  std::vector<std::uint32_t> row_used(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> col_used(static_cast<std::size_t>(n), 0);
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;

  const std::function<void(int)> fill = [&](int pos) {
    if (pos == n * n) {
      fn(square);
      return;
    }
    const int i = pos / n;
    const int j = pos % n;
    std::uint32_t avail = full & ~(row_used[static_cast<std::size_t>(i)] | col_used[static_cast<std::size_t>(j)]);
    while (avail != 0) {  // ascending symbols give lexicographic output
      const int s = std::countr_zero(avail);
      const std::uint32_t bit = std::uint32_t(1) << s;
      row_used[static_cast<std::size_t>(i)] |= bit;
      col_used[static_cast<std::size_t>(j)] |= bit;
      square.cells[static_cast<std::size_t>(pos)] = s + 1;
      fill(pos + 1);
      row_used[static_cast<std::size_t>(i)] &= ~bit;
      col_used[static_cast<std::size_t>(j)] &= ~bit;
      avail &= avail - 1;
    }
  };
  fill(0);
}

std::uint64_t count_latin_squares_backtracking(int n) {
  std::uint64_t count = 0;
  for_each_latin_square(n, [&count](const LatinSquare&) { ++count; });
  return count;
}

std::vector<LatinSquare> enumerate_latin_squares(int n) {
  if (n > 5) throw std::invalid_argument("enumerate_latin_squares: materializing beyond n = 5 is not supported");
  std::vector<LatinSquare> all;
  for_each_latin_square(n, [&all](const LatinSquare& s) { all.push_back(s); });
  return all;
}

}  // namespace stp
