#pragma once

// Order-3 stochastic tensors and Latin squares: storage, validation with
// first-violation reporting, the classical bijection between Latin squares
// and 0/1 line-stochastic tensors, and seeded random polytope members.

#include "stp/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stp {

// n x n x n tensor with rational entries in flat row-major layout: entry
// (i, j, k) lives at index (i * n + j) * n + k. The constructors enforce the
// entry count only; membership in the polytope is checked by validate().
struct StochasticTensor {
  int n = 0;
  std::vector<Rational> entries;

  StochasticTensor() = default;
  explicit StochasticTensor(int n);  // zero-filled
  StochasticTensor(int n, std::vector<Rational> entries);

  std::size_t flat_index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(n) +
           static_cast<std::size_t>(k);
  }
  Rational& at(int i, int j, int k) { return entries[flat_index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return entries[flat_index(i, j, k)]; }

  bool operator==(const StochasticTensor&) const = default;
};

// Strict weak order by (n, entries), entries compared lexicographically.
bool lexicographic_less(const StochasticTensor& a, const StochasticTensor& b);

enum class ViolationKind {
  NegativeEntry,  // some entry < 0
  LineSumOverI,   // entries summed over i at fixed (j, k) differ from 1
  LineSumOverJ,   // entries summed over j at fixed (i, k) differ from 1
  LineSumOverK,   // entries summed over k at fixed (i, j) differ from 1
};

struct Violation {
  ViolationKind kind = ViolationKind::NegativeEntry;
  int i = -1;  // -1 marks the summed-over index for line-sum kinds
  int j = -1;
  int k = -1;
  Rational value;  // the offending entry or line sum
  std::string message() const;
};

// First violation in a deterministic scan order (entries in flat order,
// then the three line-sum families), or nullopt when the tensor lies in the
// polytope.
std::optional<Violation> validate(const StochasticTensor& t);

// True when every entry is 0 or 1.
bool is_integral(const StochasticTensor& t);

struct LatinSquare {
  int n = 0;
  std::vector<int> cells;  // row-major, symbols 1..n

  LatinSquare() = default;
  explicit LatinSquare(int n);  // zero-filled, invalid until populated

  int& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n + j]; }
  int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }

  bool operator==(const LatinSquare&) const = default;
};

// Every row and every column contains each symbol 1..n exactly once.
bool is_valid_latin(const LatinSquare& s);

// Bijection onto the integral polytope members: result(i, j, k) = 1 exactly
// when cell (i, j) holds symbol k + 1. Throws std::invalid_argument unless
// the square is valid.
StochasticTensor latin_to_tensor(const LatinSquare& s);

// Inverse direction; nullopt when the tensor is not an integral member.
std::optional<LatinSquare> tensor_to_latin(const StochasticTensor& t);

// Deterministic seeded member of the polytope: a convex combination of
// randomly permuted cyclic Latin-square tensors. The term count is 1 for
// n = 1 and otherwise uniform in [2, (n-1)^3 + 1] (capped at 1000); the
// positive weights have denominators dividing 1000 and sum to 1 exactly.
// Identical seeds give identical tensors on every platform: the generator
// consumes mt19937_64 output directly and avoids implementation-defined
// standard distributions.
StochasticTensor random_tensor(int n, std::uint64_t seed);

}  // namespace stp
