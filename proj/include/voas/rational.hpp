#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace voas {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// a/b in lowest terms (mpq_class(a, b) alone does not canonicalise).
inline Rational frac(long a, long b) {
  if (b == 0) throw std::domain_error("zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/// Canonical "p/q" (or "p") text form.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p/q", "p", or a finite decimal such as "-0.125".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
  }
  bool neg = !s.empty() && s.front() == '-';
  std::string body = neg ? s.substr(1) : s;
  dot = body.find('.');
  std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed decimal literal: " + std::string(text));
  for (char c : ip + fp)
    if (c < '0' || c > '9') throw std::invalid_argument("malformed decimal literal: " + std::string(text));
  Integer num(ip.empty() ? std::string("0") : ip, 10);
  Integer den = 1;
  for (char c : fp) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

inline Rational power(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / power(base, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

/// Generalised binomial x(x-1)...(x-k+1)/k!, zero for k < 0.
inline Rational binomial(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (x - i);
  return r / factorial(k);
}

inline Rational binomial(long n, long k) { return binomial(Rational(n), k); }

/// Falling factorial n(n-1)...(n-k+1).
inline Rational falling(long n, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

template <class T>
T from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline double from_rational<double>(const Rational& q) { return q.get_d(); }
template <>
inline Complex from_rational<Complex>(const Rational& q) { return Complex(q.get_d(), 0.0); }

inline bool is_zero_value(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero_value(const Complex& c) { return c == Complex(0.0, 0.0); }
inline bool is_zero_value(double d) { return d == 0.0; }

inline Complex power(const Complex& base, long e) {
  Complex r(1.0, 0.0), b = base;
  bool inv = e < 0;
  unsigned long k = static_cast<unsigned long>(inv ? -e : e);
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1u;
  }
  return inv ? Complex(1.0, 0.0) / r : r;
}

}  // namespace voas
