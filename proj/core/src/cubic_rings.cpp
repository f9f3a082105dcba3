#include "g2tk/cubic_rings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2tk {

CubicRingTable::CubicRingTable(const BinaryCubic& f) : f_(f) {
  wt_ = {Rational(-f.a * f.d), Rational(0), Rational(0)};
  ww_ = {Rational(-f.a * f.c), Rational(-f.b), Rational(f.a)};
  tt_ = {Rational(-f.b * f.d), Rational(-f.d), Rational(f.c)};
}

CubicElem CubicRingTable::mul(const CubicElem& x, const CubicElem& y) const {
  CubicElem r{Rational(0), Rational(0), Rational(0)};
  // (x0 + x1 w + x2 t)(y0 + y1 w + y2 t)
  r[0] = x[0] * y[0];
  r[1] = x[0] * y[1] + x[1] * y[0];
  r[2] = x[0] * y[2] + x[2] * y[0];
  Rational ww = x[1] * y[1], tt = x[2] * y[2], wt = x[1] * y[2] + x[2] * y[1];
  for (int i = 0; i < 3; ++i) r[i] += ww * ww_[i] + tt * tt_[i] + wt * wt_[i];
  return r;
}

std::string LatticeClass::str() const {
  std::ostringstream os;
  os << "[[p^" << va << "," << b.get_str() << "],[0,p^" << vc << "]] (p=" << p << ")";
  return os.str();
}

LatticeClass canonical_class(long p, const MatQ& h_in) {
  if (h_in.rows() != 2 || h_in.cols() != 2) throw std::invalid_argument("canonical_class: need 2x2");
  MatQ h = h_in;
  Rational det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
  if (det == 0) throw std::invalid_argument("canonical_class: singular matrix");

  auto swap_cols = [&]() {
    std::swap(h(0, 0), h(0, 1));
    std::swap(h(1, 0), h(1, 1));
  };
  // Clear the lower-left entry by column operations over Z_(p).
  if (h(1, 1) == 0) swap_cols();
  if (h(1, 0) != 0) {
    if (val_p(h(1, 0), p) < val_p(h(1, 1), p)) swap_cols();
    Rational t = h(1, 0) / h(1, 1);  // p-integral by construction
    h(0, 0) -= t * h(0, 1);
    h(1, 0) = 0;
  }
  // Scale columns by p-units to p-powers.
  int va = val_p(h(0, 0), p);
  int vc = val_p(h(1, 1), p);
  Rational u1 = pow_p(p, va) / h(0, 0);
  Rational u2 = pow_p(p, vc) / h(1, 1);
  Rational b0 = h(0, 1) * u2;

  // Reduce b0 to the canonical representative of b0 + p^va Z_(p) inside
  // Z[1/p] intersect [0, p^va).
  LatticeClass out;
  out.p = p;
  out.va = va;
  out.vc = vc;
  int m = std::max(0, -val_p(b0, p));
  if (va + m <= 0 || b0 == 0) {
    out.b = Rational(0);
    return out;
  }
  Rational scaled = b0 * Rational(pow_int(p, m));  // in Z_(p)
  Integer num = scaled.get_num(), den = scaled.get_den();
  Integer mod = pow_int(p, va + m);
  Integer deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::logic_error("canonical_class: denominator not a p-unit");
  Integer n = (num * deninv) % mod;
  if (n < 0) n += mod;
  out.b = frac(n, pow_int(p, m));
  return out;
}

TLattice t_lattice(const MatQ& x, const BinaryCubic& fmax, long p) {
  if (x.rows() != 2 || x.cols() != 2) throw std::invalid_argument("t_lattice: need 2x2");
  Rational det = x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
  if (det == 0) throw std::invalid_argument("t_lattice: singular matrix");

  TLattice t;
  t.x = x;
  const Rational &alpha = x(0, 0), &beta = x(0, 1), &gamma = x(1, 0), &delta = x(1, 1);
  t.gen1 = {Rational(0), delta, -beta};
  t.gen2 = {Rational(0), -gamma, alpha};

  CubicRingTable table(fmax);
  // Membership of v in Z_(p) 1 + Z_(p) gen1 + Z_(p) gen2: solve the 2x2
  // block on (omega, theta) and check p-integrality, then the 1-component.
  Rational b00 = delta, b01 = -gamma, b10 = -beta, b11 = alpha;  // columns gen1, gen2
  auto member = [&](const CubicElem& v) {
    Rational t1 = (b11 * v[1] - b01 * v[2]) / det;
    Rational t2 = (-b10 * v[1] + b00 * v[2]) / det;
    return p_integral(t1, p) && p_integral(t2, p) && p_integral(v[0], p);
  };
  CubicElem g11 = table.mul(t.gen1, t.gen1);
  CubicElem g12 = table.mul(t.gen1, t.gen2);
  CubicElem g22 = table.mul(t.gen2, t.gen2);
  t.is_ring = member(g11) && member(g12) && member(g22);
  return t;
}

int mat_val(const MatQ& h, long p) {
  int v = kValInfinity;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) v = std::min(v, val_p(h(i, j), p));
  if (v >= kValInfinity) throw std::invalid_argument("mat_val: zero matrix");
  return v;
}

int mat_val(const LatticeClass& h) { return mat_val(h.rep(), h.p); }

int content(const MatQ& h, const BinaryCubic& fmax, long p) {
  int v = val_p(h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0), p);
  int mv = mat_val(h, p);
  // closure always holds once every membership valuation is forced
  // nonnegative: c <= min(3 mv - v, mv) suffices, so the search terminates.
  int lo = std::min(3 * mv - v, mv) - 1;
  int hi = v / 2 + 2;
  for (int c = hi; c >= lo; --c) {
    MatQ scaled(2, 2);
    Rational s = pow_p(p, -c);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) scaled(i, j) = h(i, j) * s;
    if (t_lattice(scaled, fmax, p).is_ring) return c;
  }
  throw std::logic_error("content: search window exhausted");
}

int content(const LatticeClass& h, const BinaryCubic& fmax) { return content(h.rep(), fmax, h.p); }

int epsilon_class(const LatticeClass& h) {
  MatQ rep = h.rep();
  int v = mat_val(rep, h.p);
  Rational det = rep(0, 0) * rep(1, 1) - rep(0, 1) * rep(1, 0);
  return (val_p(det, h.p) == 2 * v) ? 1 : 2;
}

std::vector<LatticeClass> sublattices_index_p(const LatticeClass& L) {
  std::vector<LatticeClass> out;
  MatQ h = L.rep();
  for (long j = 0; j <= L.p; ++j) {
    MatQ y(2, 2);
    if (j < L.p) {
      y(0, 0) = L.p;
      y(0, 1) = j;
      y(1, 1) = 1;
    } else {
      y(0, 0) = 1;
      y(1, 1) = L.p;
    }
    out.push_back(canonical_class(L.p, h * y));
  }
  return out;
}

const char* factor_type_name(FactorType t) {
  switch (t) {
    case FactorType::kIrreducible: return "irreducible";
    case FactorType::kLineQuadratic: return "line_quadratic";
    case FactorType::kThreeLines: return "three_lines";
    case FactorType::kDoubleLine: return "double_line";
    case FactorType::kTripleLine: return "triple_line";
  }
  return "?";
}

namespace {

long mod_p(const Integer& x, long p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r.get_si();
}

// Multiplicities of the rational roots of f over F_p as a degree-3
// homogeneous form.  [1:0] carries multiplicity 3 - deg(f(t, 1)).
std::vector<int> root_multiplicities(const BinaryCubic& f, long p) {
  long a = mod_p(f.a, p), b = mod_p(f.b, p), c = mod_p(f.c, p), d = mod_p(f.d, p);
  if (a == 0 && b == 0 && c == 0 && d == 0)
    throw std::invalid_argument("factor_type: form vanishes mod p");
  std::vector<int> mult;
  // multiplicity at infinity
  int at_inf = 0;
  if (a == 0) {
    at_inf = (b == 0) ? ((c == 0) ? 3 : 2) : 1;
  }
  if (at_inf > 0) mult.push_back(at_inf);
  // finite roots of g(t) = a t^3 + b t^2 + c t + d
  for (long r = 0; r < p; ++r) {
    long g = ((((a * r + b) % p) * r + c) % p * r + d) % p;
    if (g % p != 0) continue;
    // deflate to find the multiplicity
    long c3 = a, c2 = b, c1 = c, c0 = d;
    int m = 0;
    while (true) {
      // divide c3 t^3 + ... + c0 by (t - r)
      long q2 = c3 % p;
      long q1 = (c2 + q2 * r) % p;
      long q0 = (c1 + q1 * r) % p;
      long rem = (c0 + q0 * r) % p;
      if (rem % p != 0) break;
      ++m;
      c3 = 0;
      c2 = q2;
      c1 = q1;
      c0 = q0;
      if (c2 == 0 && c1 == 0 && c0 == 0) break;
    }
    if (m > 0) mult.push_back(m);
  }
  std::sort(mult.begin(), mult.end());
  return mult;
}

}  // namespace

FactorType factor_type(const BinaryCubic& f, long p) {
  std::vector<int> mult = root_multiplicities(f, p);
  if (mult.empty()) return FactorType::kIrreducible;
  if (mult == std::vector<int>{1}) return FactorType::kLineQuadratic;
  if (mult == std::vector<int>{1, 1, 1}) return FactorType::kThreeLines;
  if (mult == std::vector<int>{1, 2}) return FactorType::kDoubleLine;
  if (mult == std::vector<int>{3}) return FactorType::kTripleLine;
  throw std::logic_error("factor_type: impossible multiplicity pattern");
}

int count_p1_zeros(const BinaryCubic& f, long p) {
  long a = mod_p(f.a, p), b = mod_p(f.b, p), c = mod_p(f.c, p), d = mod_p(f.d, p);
  if (a == 0 && b == 0 && c == 0 && d == 0) return static_cast<int>(p) + 1;
  int n = (a == 0) ? 1 : 0;
  for (long r = 0; r < p; ++r) {
    long g = ((((a * r + b) % p) * r + c) % p * r + d) % p;
    if (g % p == 0) ++n;
  }
  return n;
}

std::array<Rational, 4> form_of_class(const LatticeClass& h, const BinaryCubic& fmax) {
  MatQ adj = adjugate2(h.rep());
  WVector f = cubic_act_right(adj, fmax.to_wvector());
  return {f.a, f.cb(), f.cc(), f.d};
}

int form_min_val(const std::array<Rational, 4>& f, long p) {
  int v = kValInfinity;
  for (const auto& x : f) v = std::min(v, val_p(x, p));
  return v;
}

std::vector<SubringClass> subring_enum(const BinaryCubic& fmax, long p, int max_val) {
  require_good_prime(fmax, p);
  std::vector<SubringClass> out;
  for (int v = 0; v <= max_val; ++v) {
    for (int a = 0; a <= v; ++a) {
      int c = v - a;
      Integer pa = pow_int(p, a);
      for (Integer b = 0; b < pa; ++b) {
        LatticeClass cls;
        cls.p = p;
        cls.va = a;
        cls.vc = c;
        cls.b = Rational(b);
        if (!t_lattice(cls.rep(), fmax, p).is_ring) continue;
        SubringClass s;
        s.cls = cls;
        s.det_val = v;
        s.content = content(cls, fmax);
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

void require_good_prime(const BinaryCubic& fmax, long p) {
  if (p == 2 || p == 3) throw std::invalid_argument("prime must be coprime to 6");
  if (fmax.disc() % p == 0) throw std::invalid_argument("form is degenerate mod p");
}

}  // namespace g2tk
