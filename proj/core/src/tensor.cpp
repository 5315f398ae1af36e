#include "stp/tensor.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stp {

StochasticTensor::StochasticTensor(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("StochasticTensor: n must be positive");
  entries.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
}

StochasticTensor::StochasticTensor(int n_, std::vector<Rational> entries_) : n(n_), entries(std::move(entries_)) {
  if (n < 1) throw std::invalid_argument("StochasticTensor: n must be positive");
  if (entries.size() != static_cast<std::size_t>(n) * n * n)
    throw std::invalid_argument("StochasticTensor: expected n^3 entries");
}

bool lexicographic_less(const StochasticTensor& a, const StochasticTensor& b) {
  if (a.n != b.n) return a.n < b.n;
  return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end());
}

std::string Violation::message() const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::NegativeEntry:
      out << "entry (" << i << "," << j << "," << k << ") < 0";
      break;
    case ViolationKind::LineSumOverI:
      out << "sum over i at (j=" << j << ",k=" << k << ") is " << to_string(value) << ", expected 1";
      break;
    case ViolationKind::LineSumOverJ:
      out << "sum over j at (i=" << i << ",k=" << k << ") is " << to_string(value) << ", expected 1";
      break;
    case ViolationKind::LineSumOverK:
      out << "sum over k at (i=" << i << ",j=" << j << ") is " << to_string(value) << ", expected 1";
      break;
  }
  return out.str();
}

std::optional<Violation> validate(const StochasticTensor& t) {
  const int n = t.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Rational& v = t.at(i, j, k);
        if (v < 0) return Violation{ViolationKind::NegativeEntry, i, j, k, v};
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Rational sum(0);
      for (int i = 0; i < n; ++i) sum += t.at(i, j, k);
      if (sum != 1) return Violation{ViolationKind::LineSumOverI, -1, j, k, sum};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Rational sum(0);
      for (int j = 0; j < n; ++j) sum += t.at(i, j, k);
      if (sum != 1) return Violation{ViolationKind::LineSumOverJ, i, -1, k, sum};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational sum(0);
      for (int k = 0; k < n; ++k) sum += t.at(i, j, k);
      if (sum != 1) return Violation{ViolationKind::LineSumOverK, i, j, -1, sum};
    }
  }
  return std::nullopt;
}

bool is_integral(const StochasticTensor& t) {
  for (const Rational& v : t.entries) {
    if (v != 0 && v != 1) return false;
  }
  return true;
}

LatinSquare::LatinSquare(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("LatinSquare: n must be positive");
  cells.assign(static_cast<std::size_t>(n) * n, 0);
}

bool is_valid_latin(const LatinSquare& s) {
  const int n = s.n;
  if (n < 1 || s.cells.size() != static_cast<std::size_t>(n) * n) return false;
  for (int symbol : s.cells) {
    if (symbol < 1 || symbol > n) return false;
  }
  std::vector<bool> row_seen(static_cast<std::size_t>(n) + 1);
  std::vector<bool> col_seen(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    std::fill(row_seen.begin(), row_seen.end(), false);
    std::fill(col_seen.begin(), col_seen.end(), false);
    for (int j = 0; j < n; ++j) {
      if (row_seen[static_cast<std::size_t>(s.at(i, j))]) return false;
      row_seen[static_cast<std::size_t>(s.at(i, j))] = true;
      if (col_seen[static_cast<std::size_t>(s.at(j, i))]) return false;
      col_seen[static_cast<std::size_t>(s.at(j, i))] = true;
    }
  }
  return true;
}

StochasticTensor latin_to_tensor(const LatinSquare& s) {
  if (!is_valid_latin(s)) throw std::invalid_argument("latin_to_tensor: not a valid Latin square");
  StochasticTensor t(s.n);
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) t.at(i, j, s.at(i, j) - 1) = 1;
  }
  return t;
}

std::optional<LatinSquare> tensor_to_latin(const StochasticTensor& t) {
  LatinSquare s(t.n);
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j) {
      int symbol = 0;
      for (int k = 0; k < t.n; ++k) {
        const Rational& v = t.at(i, j, k);
        if (v == 1) {
          if (symbol != 0) return std::nullopt;  // two unit entries on one line
          symbol = k + 1;
        } else if (v != 0) {
          return std::nullopt;  // fractional entry
        }
      }
      if (symbol == 0) return std::nullopt;
      s.at(i, j) = symbol;
    }
  }
  if (!is_valid_latin(s)) return std::nullopt;
  return s;
}

StochasticTensor random_tensor(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tensor: n must be positive");
  std::mt19937_64 engine(seed);
  // raw engine output reduced by modulus, so the draw sequence is fixed by
  // the mt19937_64 specification alone
  const auto draw = [&engine](std::uint64_t k) { return engine() % k; };

  const auto random_permutation = [&](int count) {
    std::vector<int> p(count);
    for (int i = 0; i < count; ++i) p[i] = i;
    for (int i = count - 1; i > 0; --i) {
      const int j = static_cast<int>(draw(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  };

  // a cyclic Latin square with rows, columns, and symbols independently
  // permuted, as a 0/1 tensor
  const auto random_square_tensor = [&]() {
    const auto row = random_permutation(n);
    const auto col = random_permutation(n);
    const auto sym = random_permutation(n);
    StochasticTensor t(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) t.at(i, j, sym[(row[i] + col[j]) % n]) = 1;
    }
    return t;
  };

  const long long d = static_cast<long long>(n - 1) * (n - 1) * (n - 1);
  const long long max_extra = std::min<long long>(d, 998);  // weights need distinct cuts below 1000
  const int terms = n == 1 ? 1 : static_cast<int>(2 + draw(static_cast<std::uint64_t>(max_extra)));
  if (terms == 1) return random_square_tensor();

  std::vector<int> cuts;
  cuts.reserve(static_cast<std::size_t>(terms));
  while (cuts.size() < static_cast<std::size_t>(terms) - 1) {
    const int c = 1 + static_cast<int>(draw(999));
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(1000);

  StochasticTensor result(n);
  int prev = 0;
  for (int term = 0; term < terms; ++term) {
    const Rational weight(cuts[static_cast<std::size_t>(term)] - prev, 1000);
    prev = cuts[static_cast<std::size_t>(term)];
    const StochasticTensor square = random_square_tensor();
    for (std::size_t f = 0; f < result.entries.size(); ++f) {
      if (square.entries[f] != 0) result.entries[f] += weight;
    }
  }
  return result;
}

}  // namespace stp
