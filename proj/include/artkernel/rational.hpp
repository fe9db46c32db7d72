#ifndef ARTKERNEL_RATIONAL_HPP
#define ARTKERNEL_RATIONAL_HPP

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "artkernel/errors.hpp"

namespace artkernel {

// Exact rational with int64 components, reduced form, positive denominator.
// Only used at input boundaries; everything downstream works with primitive
// integral weight vectors.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw_input("zero_denominator", "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(std::llabs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Parses "p", "-p" or "p/q". Whitespace is not tolerated.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw_input("bad_rational", "empty rational literal");
  std::size_t slash = text.find('/');
  auto parse_int = [&](const std::string& part) -> long long {
    if (part.empty()) throw_input("bad_rational", "malformed rational '" + text + "'");
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw_input("bad_rational", "malformed rational '" + text + "'");
    }
    if (pos != part.size()) throw_input("bad_rational", "malformed rational '" + text + "'");
    return value;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  long long p = parse_int(text.substr(0, slash));
  long long q = parse_int(text.substr(slash + 1));
  if (q == 0) throw_input("zero_denominator", "rational '" + text + "' has zero denominator");
  return Rational(p, q);
}

inline long long checked_mul(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > INT64_MAX || r < INT64_MIN)
    throw_input("overflow", "character weights overflow 64-bit range");
  return static_cast<long long>(r);
}

inline long long lcm_checked(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  long long g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

}  // namespace artkernel

#endif  // ARTKERNEL_RATIONAL_HPP
