#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tpn {

// Exact arithmetic throughout the structural and stationary layers.
// mpq_class keeps values canonical (coprime, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// gcd over Q: the largest d with a/d and b/d integer.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Integer num, den;
  mpz_gcd(num.get_mpz_t(), mpz_class(a.get_num() * b.get_den()).get_mpz_t(),
          mpz_class(b.get_num() * a.get_den()).get_mpz_t());
  den = a.get_den() * b.get_den();
  Rational g(num, den);
  g.canonicalize();
  return abs(g);
}

// Accepts integers, fractions "p/q" and exact decimals ("0.01" -> 1/100).
// No float intermediary anywhere.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i >= s.size()) return std::nullopt;

  auto all_digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string body = s.substr(i);
  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d(den);
    if (d == 0) return std::nullopt;
    value = Rational(Integer(num), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    Integer scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    value = Rational(Integer(whole) * scale + Integer(frac), scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rational(Integer(body));
  }
  if (neg) value = -value;
  return value;
}

inline std::string to_fraction_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Decimal rendering with a fixed number of significant digits.
inline std::string to_decimal_string(const Rational& r, int significant = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, r.get_d());
  return buf;
}

// Scales a rational vector to coprime integers (gcd 1), preserving signs.
inline std::vector<Rational> normalize_to_coprime_integers(std::vector<Rational> v) {
  Integer den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Integer num_gcd = 0;
  std::vector<Integer> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled[i].get_mpz_t());
  }
  if (num_gcd == 0) return v;  // zero vector
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(scaled[i] / num_gcd);
  return v;
}

}  // namespace tpn
