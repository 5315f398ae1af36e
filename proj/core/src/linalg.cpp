#include "stp/linalg.hpp"

#include <stdexcept>

namespace stp {
namespace {

// Forward elimination to row echelon form, in place. Only the first
// `pivot_col_limit` columns are eligible for pivots (solve() keeps its
// right-hand side out of the pivot search this way). Returns the pivot
// columns in ascending order.
std::vector<std::size_t> echelon(RationalMatrix& m, std::size_t pivot_col_limit) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < pivot_col_limit && pr < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t r = pr; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const std::size_t bits = bit_length(m(r, c));
      if (best == rows || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    m.swap_rows(pr, best);
    for (std::size_t r = pr + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(pr, c);
      m(r, c) = 0;
      for (std::size_t k = c + 1; k < m.cols(); ++k) {
        if (m(pr, k) != 0) m(r, k) -= factor * m(pr, k);
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

// Continues to reduced row echelon form: unit pivots, zeros above them.
void back_substitute(RationalMatrix& m, const std::vector<std::size_t>& pivots) {
  for (std::size_t p = pivots.size(); p-- > 0;) {
    const std::size_t pc = pivots[p];
    const Rational pivot = m(p, pc);
    if (pivot != 1) {
      for (std::size_t k = pc; k < m.cols(); ++k) {
        if (m(p, k) != 0) m(p, k) /= pivot;
      }
    }
    for (std::size_t r = 0; r < p; ++r) {
      if (m(r, pc) == 0) continue;
      const Rational factor = m(r, pc);
      m(r, pc) = 0;
      for (std::size_t k = pc + 1; k < m.cols(); ++k) {
        if (m(p, k) != 0) m(r, k) -= factor * m(p, k);
      }
    }
  }
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return echelon(work, work.cols()).size();
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  RationalMatrix work = m;
  return echelon(work, work.cols());
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  if (m.cols() == 0) throw std::invalid_argument("nullspace_basis: matrix must have at least one column");
  RationalMatrix work = m;
  const auto pivots = echelon(work, work.cols());
  back_substitute(work, pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : pivots) is_pivot[pc] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -work(p, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length does not match row count");
  RationalMatrix work(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) work(r, c) = m(r, c);
    work(r, m.cols()) = b[r];
  }
  const auto pivots = echelon(work, m.cols());
  for (std::size_t r = pivots.size(); r < work.rows(); ++r) {
    if (work(r, m.cols()) != 0) return std::nullopt;  // zero row with nonzero residual
  }
  back_substitute(work, pivots);
  RationalVector x(m.cols(), Rational(0));
  for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = work(p, m.cols());
  return x;
}

}  // namespace stp
