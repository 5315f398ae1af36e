#include "stp/rational.hpp"

#include <stdexcept>

namespace stp {

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  const Int den = denominator(value);
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view token) {
  std::string_view num_part = token;
  std::string_view den_part;
  const auto slash = token.find('/');
  if (slash != std::string_view::npos) {
    num_part = token.substr(0, slash);
    den_part = token.substr(slash + 1);
    if (!all_digits(den_part)) return std::nullopt;
  }
  std::string_view digits = num_part;
  const bool negative = !digits.empty() && digits.front() == '-';
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
  if (!all_digits(digits)) return std::nullopt;

  Int num{std::string(digits)};
  if (negative) num = -num;
  if (den_part.empty()) return Rational(num);
  Int den{std::string(den_part)};
  if (den == 0) return std::nullopt;
  return Rational(num) / Rational(den);
}

std::size_t bit_length(const Rational& value) {
  const auto bits = [](const Int& x) -> std::size_t {
    if (x == 0) return 0;
    const Int a = boost::multiprecision::abs(x);
    return static_cast<std::size_t>(boost::multiprecision::msb(a)) + 1;
  };
  return bits(numerator(value)) + bits(denominator(value));
}

namespace {

Int pow10(long long e) { return boost::multiprecision::pow(Int(10), static_cast<unsigned>(e)); }

}  // namespace

std::string decimal_string(const Rational& value, int significant) {
  if (significant < 1) throw std::invalid_argument("decimal_string: need at least one significant digit");
  if (value == 0) return "0";
  const bool negative = value < 0;
  const Rational a = negative ? Rational(-value) : value;

  // decimal exponent e with 10^e <= a < 10^(e+1); for a >= 1 the digit
  // count of the integer part gives it exactly
  long long e = 0;
  const Int int_part = numerator(a) / denominator(a);
  if (int_part > 0) {
    e = static_cast<long long>(int_part.str().size()) - 1;
  } else {
    Rational t = a * 10;
    e = -1;
    while (t < 1) {
      t *= 10;
      --e;
    }
  }

  // mantissa of `significant` digits, rounded half to even
  const long long shift = significant - 1 - e;
  const Rational scaled = shift >= 0 ? Rational(a * Rational(pow10(shift))) : Rational(a / Rational(pow10(-shift)));
  Int mantissa = numerator(scaled) / denominator(scaled);
  const Rational frac = scaled - Rational(mantissa);
  const Rational half(1, 2);
  if (frac > half || (frac == half && mantissa % 2 != 0)) ++mantissa;
  if (mantissa == pow10(significant)) {  // rounding carried into a new digit
    mantissa = pow10(significant - 1);
    ++e;
  }

  const std::string digits = mantissa.str();
  const long long width = static_cast<long long>(digits.size());
  std::string out;
  if (e >= -4 && e <= 8) {
    if (e < 0) {
      out = "0.";
      out.append(static_cast<std::size_t>(-e - 1), '0');
      out += digits;
    } else if (e + 1 >= width) {
      out = digits;
      out.append(static_cast<std::size_t>(e + 1 - width), '0');
    } else {
      out = digits.substr(0, static_cast<std::size_t>(e + 1));
      out += '.';
      out += digits.substr(static_cast<std::size_t>(e + 1));
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) {
      out += '.';
      out += digits.substr(1);
    }
    out += 'e';
    out += (e >= 0 ? '+' : '-');
    out += std::to_string(e >= 0 ? e : -e);
  }
  if (negative) out.insert(out.begin(), '-');
  return out;
}

}  // namespace stp
