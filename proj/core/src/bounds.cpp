#include "stp/bounds.hpp"

#include "stp/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace stp {

Int binomial(long long a, long long b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return Int(0);
  b = std::min(b, a - b);
  Int result(1);
  for (long long i = 1; i <= b; ++i) {
    result *= Int(a - b + i);
    result /= Int(i);  // exact: the partial product is always divisible
  }
  return result;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int result(1);
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Rational lower_latin_ratio(int n) {
  if (n < 1) throw std::invalid_argument("lower_latin_ratio: n must be positive");
  const Int num = boost::multiprecision::pow(factorial(n), static_cast<unsigned>(2 * n));
  const Int den = boost::multiprecision::pow(Int(n), static_cast<unsigned>(n * n));
  return Rational(num) / Rational(den);
}

Rational old_upper(int n) {
  if (n < 2) throw std::invalid_argument("old_upper: defined for n >= 2");
  const long long n3 = static_cast<long long>(n) * n * n;
  const Int c = binomial(n3 + 6LL * n * n - 6LL * n + 2, n3 - 1);
  return Rational(c) / Rational(Int(n3));
}

Int ubt_upper(long long d, long long f) {
  if (d < 1 || f < d + 1) throw std::invalid_argument("ubt_upper: need d >= 1 and f >= d + 1");
  return binomial(f - (d + 1) / 2, f - d) + binomial(f - (d + 2) / 2, f - d);
}

Int new_upper(int n) {
  if (n < 2) throw std::invalid_argument("new_upper: defined for n >= 2");
  const long long d = static_cast<long long>(n - 1) * (n - 1) * (n - 1);
  return ubt_upper(d, static_cast<long long>(n) * n * n);
}

Int linial_luria_upper(int n) {
  if (n < 2) throw std::invalid_argument("linial_luria_upper: defined for n >= 2");
  return boost::multiprecision::pow(Int(n), static_cast<unsigned>(3 * n * n));
}

Int u0(long long d, long long m) {
  if (d < 2 || m < d + 1) throw std::invalid_argument("u0: need d >= 2 and m >= d + 1");
  return binomial(m - d / 2 - 1, (d - 1) / 2) + binomial(m - (d - 1) / 2 - 1, d / 2);
}

long long l0(long long d, long long x) {
  if (d < 2) throw std::invalid_argument("l0: need d >= 2");
  if (x < 1) throw std::invalid_argument("l0: need x >= 1");
  const Int target(x);
  long long m = d + 1;
  while (u0(d, m) < target) ++m;
  if (m > d + 1 && !(u0(d, m - 1) < target && target <= u0(d, m)))
    throw std::logic_error("l0: bracketing invariant violated");
  return m;
}

long long lbt_lower(int n) {
  if (n < 3) throw std::domain_error("lbt_lower: defined for n >= 3 (the polytope dimension must exceed 1)");
  const long long d = static_cast<long long>(n - 1) * (n - 1) * (n - 1);
  return l0(d, static_cast<long long>(n) * n * n);
}

Int barnette_simplicial_max(long long d, long long f) {
  if (d < 2 || f < d + 1) throw std::invalid_argument("barnette_simplicial_max: need d >= 2 and f >= d + 1");
  return Int((f + (d + 1) * (d - 2)) / (d - 1));
}

Int permanent(const std::vector<std::vector<int>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return Int(1);
  if (n > 62) throw std::invalid_argument("permanent: matrix too large for subset masks");
  std::vector<std::uint64_t> row_bits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw std::invalid_argument("permanent: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const int v = matrix[i][j];
      if (v != 0 && v != 1) throw std::invalid_argument("permanent: entries must be 0 or 1");
      if (v == 1) row_bits[i] |= std::uint64_t(1) << j;
    }
  }
  // Ryser: per(A) = sum over nonempty column subsets S of
  // (-1)^(n - |S|) * prod_i |row_i with columns in S|
  Int total(0);
  const std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t s = 1; s < limit; ++s) {
    Int prod(1);
    for (std::size_t i = 0; i < n; ++i) {
      const int hits = std::popcount(row_bits[i] & s);
      if (hits == 0) {
        prod = 0;
        break;
      }
      prod *= hits;
    }
    if (prod == 0) continue;
    if ((n - static_cast<std::size_t>(std::popcount(s))) % 2 == 0) total += prod;
    else total -= prod;
  }
  return total;
}

namespace {

// Ryser permanent of an n x n 0/1 matrix given as row bitmasks; the value
// is at most n!, far inside int64 for the orders swept here.
long long ryser_bits(const std::uint32_t* rows, int n) {
  long long per = 0;
  const std::uint32_t limit = std::uint32_t(1) << n;
  for (std::uint32_t s = 1; s < limit; ++s) {
    long long prod = 1;
    for (int i = 0; i < n; ++i) {
      prod *= std::popcount(rows[i] & s);
      if (prod == 0) break;
    }
    if (prod == 0) continue;
    if ((n - std::popcount(s)) % 2 == 0) per += prod;
    else per -= prod;
  }
  return per;
}

// Signed inclusion-exclusion contribution of the matrix block [lo, hi):
// sum of (-1)^(zeros of A) * C(per A, n). The accumulator type is int64 for
// n <= 5 (the total magnitude is bounded by 2^25 * C(120, 5) < 2^63) and
// arbitrary precision beyond.
template <class Acc>
Acc sweep_block(int n, std::uint64_t lo, std::uint64_t hi, const std::vector<Acc>& choose) {
  const int cells = n * n;
  const std::uint32_t row_mask = (std::uint32_t(1) << n) - 1;
  Acc acc(0);
  std::uint32_t rows[8] = {};
  for (std::uint64_t a = lo; a < hi; ++a) {
    bool zero_row = false;
    for (int i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>((a >> (i * n)) & row_mask);
      if (rows[i] == 0) {
        zero_row = true;
        break;
      }
    }
    if (zero_row) continue;  // permanent 0, binomial term vanishes
    const long long per = ryser_bits(rows, n);
    if (per < n) continue;
    const Acc& term = choose[static_cast<std::size_t>(per)];
    if ((cells - std::popcount(a)) % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

template <class Acc>
Int latin_count_sweep(int n, unsigned threads, const std::vector<Acc>& choose) {
  const std::uint64_t total = std::uint64_t(1) << (n * n);
  unsigned tc = threads != 0 ? threads : std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  if (static_cast<std::uint64_t>(tc) > total) tc = static_cast<unsigned>(total);
  std::vector<std::future<Acc>> parts;
  parts.reserve(tc);
  const std::uint64_t chunk = total / tc;
  for (unsigned w = 0; w < tc; ++w) {
    const std::uint64_t lo = chunk * w;
    const std::uint64_t hi = w + 1 == tc ? total : chunk * (w + 1);
    parts.push_back(std::async(std::launch::async, [n, lo, hi, &choose] { return sweep_block<Acc>(n, lo, hi, choose); }));
  }
  Int sum(0);
  for (auto& part : parts) sum += Int(part.get());  // fixed summation order
  return factorial(n) * sum;
}

}  // namespace

Int latin_count_shao_wei(int n, int ceiling, unsigned threads) {
  if (n < 1) throw std::invalid_argument("latin_count_shao_wei: n must be positive");
  if (ceiling < 1) throw std::invalid_argument("latin_count_shao_wei: ceiling must be positive");
  if (n > ceiling) {
    std::ostringstream msg;
    msg << "latin_count_shao_wei: n = " << n << " exceeds the ceiling " << ceiling << " (the sweep visits 2^(n^2) matrices)";
    throw std::domain_error(msg.str());
  }
  if (n > 7) throw std::invalid_argument("latin_count_shao_wei: the matrix index must fit 64 bits, so n <= 7");
  const long long pmax_big = static_cast<long long>(factorial(n));
  if (n <= 5) {
    std::vector<long long> choose(static_cast<std::size_t>(pmax_big) + 1);
    for (long long p = 0; p <= pmax_big; ++p) choose[static_cast<std::size_t>(p)] = static_cast<long long>(binomial(p, n));
    return latin_count_sweep<long long>(n, threads, choose);
  }
  std::vector<Int> choose(static_cast<std::size_t>(pmax_big) + 1);
  for (long long p = 0; p <= pmax_big; ++p) choose[static_cast<std::size_t>(p)] = binomial(p, n);
  return latin_count_sweep<Int>(n, threads, choose);
}

bool PropositionVerdicts::all_pass() const {
  return new_upper_below_old && new_upper_below_linial_luria && lbt_matches_closed_form.value_or(true) &&
         lbt_vs_latin_ratio_as_expected.value_or(true) && lbt_below_new_upper.value_or(true);
}

BoundReport make_bound_report(int n, int latin_ceiling) {
  if (n < 2 || n > 30) throw std::invalid_argument("make_bound_report: supported range is 2 <= n <= 30");
  BoundReport r;
  r.n = n;
  r.lower_latin_ratio = stp::lower_latin_ratio(n);
  if (n <= latin_ceiling) r.latin_count = Int(count_latin_squares_backtracking(n));
  if (n >= 3) r.lbt_lower = stp::lbt_lower(n);
  r.new_upper = stp::new_upper(n);
  r.old_upper = stp::old_upper(n);
  r.linial_luria_upper = stp::linial_luria_upper(n);
  const long long d = static_cast<long long>(n - 1) * (n - 1) * (n - 1);
  if (n >= 3) r.barnette_simplicial_max = stp::barnette_simplicial_max(d, static_cast<long long>(n) * n * n);

  r.verdicts.new_upper_below_old = Rational(r.new_upper) < r.old_upper;
  r.verdicts.new_upper_below_linial_luria = r.new_upper < r.linial_luria_upper;
  if (n >= 3) {
    const long long closed_form = n == 3 ? 11 : d + 2;
    r.verdicts.lbt_matches_closed_form = (*r.lbt_lower == closed_form);
    const Rational lbt_value(*r.lbt_lower);
    r.verdicts.lbt_vs_latin_ratio_as_expected =
        n <= 4 ? lbt_value > r.lower_latin_ratio : lbt_value < r.lower_latin_ratio;
    r.verdicts.lbt_below_new_upper = Int(*r.lbt_lower) < r.new_upper;
  }
  return r;
}

std::vector<BoundReport> verify_propositions(int n_min, int n_max) {
  if (n_min < 2 || n_max > 30 || n_min > n_max)
    throw std::invalid_argument("verify_propositions: need 2 <= n_min <= n_max <= 30");
  std::vector<BoundReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) reports.push_back(make_bound_report(n));
  return reports;
}

std::string new_upper_factored(int n) {
  if (n < 2) throw std::invalid_argument("new_upper_factored: defined for n >= 2");
  const long long d = static_cast<long long>(n - 1) * (n - 1) * (n - 1);
  const long long f = static_cast<long long>(n) * n * n;
  const long long a1 = f - (d + 1) / 2;
  const long long a2 = f - (d + 2) / 2;
  const long long b = f - d;
  std::ostringstream out;
  if (a1 == a2) out << "2*C(" << a1 << "," << b << ")";
  else out << "C(" << a1 << "," << b << ") + C(" << a2 << "," << b << ")";
  return out.str();
}

std::string old_upper_factored(int n) {
  if (n < 2) throw std::invalid_argument("old_upper_factored: defined for n >= 2");
  const long long n3 = static_cast<long long>(n) * n * n;
  std::ostringstream out;
  out << "C(" << n3 + 6 * static_cast<long long>(n) * n - 6 * n + 2 << "," << n3 - 1 << ")/" << n3;
  return out.str();
}

}  // namespace stp
