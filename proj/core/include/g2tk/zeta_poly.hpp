#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "g2tk/rational.hpp"

namespace g2tk {

// Laurent polynomial in z with exact rational coefficients.  The coefficient
// list starts at exponent `shift` (which may be negative: lattice translates
// produce negative z-valuations mid-computation even though every final
// identity is an honest polynomial).
class ZetaPoly {
 public:
  ZetaPoly() = default;
  ZetaPoly(std::vector<Rational> coeffs, int shift = 0) : c_(std::move(coeffs)), shift_(shift) {
    normalize();
  }
  static ZetaPoly zero() { return ZetaPoly(); }
  static ZetaPoly one() { return constant(Rational(1)); }
  static ZetaPoly constant(const Rational& a) { return ZetaPoly({a}, 0); }
  // a * z^e
  static ZetaPoly monomial(const Rational& a, int e) { return ZetaPoly({a}, e); }
  // 1 - z^k (k >= 1); k == 0 gives the zero polynomial.
  static ZetaPoly one_minus_zk(int k) {
    if (k == 0) return zero();
    if (k < 0) return (monomial(1, 0) - monomial(1, k));
    std::vector<Rational> c(k + 1, Rational(0));
    c[0] = 1;
    c[k] = -1;
    return ZetaPoly(std::move(c), 0);
  }

  bool is_zero() const { return c_.empty(); }
  int lowest_exp() const { return shift_; }
  int degree() const { return c_.empty() ? 0 : shift_ + static_cast<int>(c_.size()) - 1; }

  Rational coeff(int e) const {
    int i = e - shift_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
  }

  ZetaPoly operator-() const {
    ZetaPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.shift_, b.shift_);
    int hi = std::max(a.degree(), b.degree());
    std::vector<Rational> c(hi - lo + 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[a.shift_ - lo + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[b.shift_ - lo + i] += b.c_[i];
    return ZetaPoly(std::move(c), lo);
  }
  friend ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b) { return a + (-b); }

  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ZetaPoly(std::move(c), a.shift_ + b.shift_);
  }

  friend ZetaPoly operator*(const Rational& s, const ZetaPoly& a) {
    if (s == 0) return zero();
    ZetaPoly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) {
    return a.shift_ == b.shift_ && a.c_ == b.c_;
  }

  // Exact division; nullopt when the division has a remainder.
  std::optional<ZetaPoly> divide_exact(const ZetaPoly& d) const {
    if (d.is_zero()) throw std::domain_error("ZetaPoly: division by zero");
    if (is_zero()) return zero();
    std::vector<Rational> rem = c_;
    const std::vector<Rational>& dc = d.c_;
    if (rem.size() < dc.size()) return std::nullopt;
    std::vector<Rational> quot(rem.size() - dc.size() + 1, Rational(0));
    // dc.back() != 0 by normalization; divide from the top.
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      Rational q = rem[i + dc.size() - 1] / dc.back();
      quot[i] = q;
      if (q == 0) continue;
      for (size_t j = 0; j < dc.size(); ++j) rem[i + j] -= q * dc[j];
    }
    for (const Rational& r : rem)
      if (r != 0) return std::nullopt;
    return ZetaPoly(std::move(quot), shift_ - d.shift_);
  }

  Rational eval(const Rational& z) const {
    if (is_zero()) return Rational(0);
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    if (shift_ > 0) {
      for (int k = 0; k < shift_; ++k) acc *= z;
    } else if (shift_ < 0) {
      if (z == 0) throw std::domain_error("ZetaPoly: eval Laurent part at 0");
      for (int k = 0; k < -shift_; ++k) acc /= z;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      int e = shift_ + static_cast<int>(i);
      Rational a = c_[i];
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0)
        os << "-";
      first = false;
      Rational mag = abs(a);
      if (mag != 1 || e == 0) os << mag.get_str();
      if (e != 0) {
        if (mag != 1) os << "*";
        os << "z";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      shift_ = 0;
      return;
    }
    size_t tail = c_.size();
    while (tail > lead && c_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < c_.size()) {
      c_ = std::vector<Rational>(c_.begin() + lead, c_.begin() + tail);
      shift_ += static_cast<int>(lead);
    }
  }

  std::vector<Rational> c_;
  int shift_ = 0;
};

inline ZetaPoly poly_mul(const ZetaPoly& p, const ZetaPoly& q) { return p * q; }

}  // namespace g2tk
