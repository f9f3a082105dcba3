#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace g2tk {

using Integer = mpz_class;
using Rational = mpq_class;

// Valuation of 0 (stands in for +infinity in comparisons).
inline constexpr int kValInfinity = INT_MAX / 2;

inline Rational frac(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int val_p(const Integer& n, long p) {
  if (n == 0) return kValInfinity;
  int v = 0;
  Integer m = n, q, r;
  while (true) {
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

inline int val_p(const Rational& x, long p) {
  if (x == 0) return kValInfinity;
  return val_p(x.get_num(), p) - val_p(x.get_den(), p);
}

inline bool p_integral(const Rational& x, long p) { return val_p(x, p) >= 0; }

inline Integer pow_int(long base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), static_cast<unsigned long>(e));
  if (base < 0 && (e & 1)) r = -r;
  return r;
}

// p^e as a rational, e possibly negative.
inline Rational pow_p(long p, int e) {
  if (e >= 0) return Rational(pow_int(p, e));
  return frac(Integer(1), pow_int(p, -e));
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  r.canonicalize();
  return r;
}

// Q(i) with exact rational components.  Conjugation is an involution and
// arithmetic is closed, so Lie-algebra identities verify exactly.
struct GaussianRational {
  Rational re{}, im{};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

inline std::string to_string(const GaussianRational& x) {
  if (x.im == 0) return x.re.get_str();
  std::string s = x.re.get_str();
  s += (x.im < 0) ? "-" : "+";
  Rational a = abs(x.im);
  if (a != 1) s += a.get_str() + "*";
  s += "i";
  return s;
}

}  // namespace g2tk
