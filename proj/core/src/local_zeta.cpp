#include "g2tk/local_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace g2tk {

const char* splitting_type_name(SplittingType t) {
  switch (t) {
    case SplittingType::kSplit: return "split";
    case SplittingType::kPartial: return "partial";
    case SplittingType::kInert: return "inert";
  }
  return "?";
}

SplittingType parse_splitting_type(const std::string& s) {
  if (s == "split") return SplittingType::kSplit;
  if (s == "partial") return SplittingType::kPartial;
  if (s == "inert") return SplittingType::kInert;
  throw std::invalid_argument("unknown splitting type '" + s + "'");
}

SplittingType splitting_type(const BinaryCubic& fmax, long p) {
  switch (factor_type(fmax, p)) {
    case FactorType::kThreeLines: return SplittingType::kSplit;
    case FactorType::kLineQuadratic: return SplittingType::kPartial;
    case FactorType::kIrreducible: return SplittingType::kInert;
    default: throw std::invalid_argument("form has a repeated factor mod p");
  }
}

BinaryCubic sample_form(long p, SplittingType t) {
  for (long a = 0; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          BinaryCubic f{Integer(a), Integer(b), Integer(c), Integer(d)};
          if (f.disc() == 0 || f.disc() % p == 0) continue;
          if (f.a == 0 && f.b == 0 && f.c == 0 && f.d == 0) continue;
          FactorType ft;
          try {
            ft = factor_type(f, p);
          } catch (const std::invalid_argument&) {
            continue;
          }
          if ((t == SplittingType::kSplit && ft == FactorType::kThreeLines) ||
              (t == SplittingType::kPartial && ft == FactorType::kLineQuadratic) ||
              (t == SplittingType::kInert && ft == FactorType::kIrreducible))
            return f;
        }
  throw std::logic_error("sample_form: no form found");
}

ZetaPoly p_h_from(int det_val, int cont) {
  if (cont < 0) return ZetaPoly::zero();
  return ZetaPoly::monomial(1, det_val - cont) * ZetaPoly::one_minus_zk(cont + 1);
}

ZetaPoly p_h(const LatticeClass& h, const BinaryCubic& fmax) {
  int c = content(h, fmax);
  Rational det = h.rep()(0, 0) * h.rep()(1, 1);
  return p_h_from(val_p(det, h.p), c);
}

ZetaPoly b0(long q) {
  return ZetaPoly({Rational(1), Rational(q + 1), Rational(q), Rational(q * q + q), Rational(q * q)}, 0);
}

std::vector<LatticeClass> hecke_translate(const LatticeClass& h, HeckeOp which) {
  long p = h.p;
  MatQ rep = h.rep();
  std::vector<LatticeClass> out;
  switch (which) {
    case HeckeOp::kTp: return sublattices_index_p(h);
    case HeckeOp::kTpInv: {
      Rational pinv = frac(1, p);
      for (const LatticeClass& s : sublattices_index_p(h)) out.push_back(canonical_class(p, s.rep() * pinv));
      return out;
    }
    case HeckeOp::kCenterP: out.push_back(canonical_class(p, rep * Rational(p))); return out;
    case HeckeOp::kCenterPInv: out.push_back(canonical_class(p, rep * frac(1, p))); return out;
  }
  throw std::logic_error("hecke_translate: bad op");
}

namespace {

int det_val_of(const LatticeClass& h) { return h.det_val(); }

// N for the Hecke combination: the literal zero count of the integral form
// of the class, which is p+1 as soon as the content is >= 1.
int hecke_zero_count(const LatticeClass& h, const BinaryCubic& fmax) {
  std::array<Rational, 4> f = form_of_class(h, fmax);
  int minval = form_min_val(f, h.p);
  if (minval < 0) throw std::invalid_argument("hecke_zero_count: class is not a ring");
  if (minval >= 1) return static_cast<int>(h.p) + 1;
  BinaryCubic g;
  // entries are p-integral rationals; reduce numerator * den^{-1} mod p
  auto to_int_mod = [&](const Rational& x) {
    Integer num = x.get_num(), den = x.get_den(), mod(h.p);
    Integer deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw std::logic_error("hecke_zero_count: denominator not a p-unit");
    Integer r = (num * deninv) % mod;
    if (r < 0) r += mod;
    return r;
  };
  g.a = to_int_mod(f[0]);
  g.b = to_int_mod(f[1]);
  g.c = to_int_mod(f[2]);
  g.d = to_int_mod(f[3]);
  return count_p1_zeros(g, h.p);
}

}  // namespace

ZetaPoly m_h(const LatticeClass& h, const BinaryCubic& fmax) {
  long q = h.p;
  ZetaPoly acc;
  auto add_translates = [&](HeckeOp op, long weight) {
    for (const LatticeClass& t : hecke_translate(h, op))
      acc = acc + Rational(weight) * p_h(t, fmax);
  };
  add_translates(HeckeOp::kCenterP, q * q);
  add_translates(HeckeOp::kTp, q);
  add_translates(HeckeOp::kTpInv, 1);
  add_translates(HeckeOp::kCenterPInv, 1);
  int n = hecke_zero_count(h, fmax);
  acc = acc + Rational(n - 1) * p_h(h, fmax);
  return acc;
}

ZetaPoly local_l_inverse(SplittingType t) {
  switch (t) {
    case SplittingType::kSplit: return ZetaPoly::one_minus_zk(1) * ZetaPoly::one_minus_zk(1);
    case SplittingType::kPartial: return ZetaPoly::one_minus_zk(2);
    case SplittingType::kInert: return ZetaPoly({Rational(1), Rational(1), Rational(1)}, 0);
  }
  throw std::logic_error("local_l_inverse: bad type");
}

CridentResult verify_crident(const LatticeClass& h, SplittingType t, const BinaryCubic& fmax) {
  if (splitting_type(fmax, h.p) != t)
    throw std::invalid_argument("verify_crident: form does not have the stated splitting type");
  long q = h.p;
  CridentResult res;
  res.det_val = det_val_of(h);
  res.content = content(h, fmax);
  if (res.content < 0) throw std::invalid_argument("verify_crident: class is not a ring");

  ZetaPoly combo = b0(q) * p_h(h, fmax) - ZetaPoly::monomial(1, 2) * m_h(h, fmax);
  ZetaPoly one_plus_qz({Rational(1), Rational(q)}, 0);
  auto step1 = combo.divide_exact(one_plus_qz);
  if (!step1) throw std::logic_error("verify_crident: (1+qz) does not divide the combination");
  auto step2 = step1->divide_exact(local_l_inverse(t));
  if (!step2) throw std::logic_error("verify_crident: local factor does not divide");
  res.lhs = *step2;

  int v = res.det_val, c = res.content;
  int val = mat_val(h);
  if (val != c) {
    res.rhs = ZetaPoly::zero();
  } else {
    int nmax = count_p1_zeros(fmax, h.p);
    int eps = epsilon_class(h);
    res.rhs = ZetaPoly::monomial(1, v - c) *
              ZetaPoly({Rational(1), Rational(nmax - eps)}, 0);
  }
  res.equal = (res.lhs == res.rhs);
  return res;
}

ExpSumResult exp_sum_dchi(long p, int k, int r, const BinaryCubic& fmax) {
  require_good_prime(fmax, p);
  if (k < 0 || r < 0) throw std::invalid_argument("exp_sum_dchi: need k, r >= 0");
  double budget = std::pow(static_cast<double>(p), 4.0 * k);
  if (budget > 8.0e6) throw std::invalid_argument("exp_sum_dchi: p^{4k} too large");

  ExpSumResult res;
  // Nonvanishing requires p^r | d.
  if (r > 0 && val_p(fmax.d, p) < r) {
    res.criterion_zero = true;
    res.has_closed_form = true;
    res.closed_form = 0.0;
    return res;
  }
  long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  long pr = 1;
  for (int i = 0; i < std::min(r, k); ++i) pr *= p;  // p^r mod relevance capped at p^k

  long a0 = mpz_fdiv_ui(fmax.a.get_mpz_t(), pk);
  long b0c = mpz_fdiv_ui(fmax.b.get_mpz_t(), pk);
  long c0 = mpz_fdiv_ui(fmax.c.get_mpz_t(), pk);
  // d / p^r enters the pairing; exact integer by the criterion above.
  Integer dshift = fmax.d / pow_int(p, std::min(r, val_p(fmax.d, p)));
  long d0 = mpz_fdiv_ui(dshift.get_mpz_t(), pk);

  if (k == 0) {
    res.raw = {1.0, 0.0};
    res.normalized = res.raw;
    res.has_closed_form = true;
    res.closed_form = 1.0;
    return res;
  }

  const double two_pi = 2.0 * std::numbers::pi;
  std::complex<double> sum{0.0, 0.0};
  for (long al = 0; al < pk; ++al)
    for (long be = 0; be < pk; ++be)
      for (long ga = 0; ga < pk; ++ga) {
        // congruence not involving delta first
        long c1 = ((al * ga - (pr % pk) * be % pk * be) % pk + pk) % pk;
        if (c1 != 0) continue;
        for (long de = 0; de < pk; ++de) {
          long c2 = ((al * de - (pr % pk) * be % pk * ga) % pk + pk) % pk;
          if (c2 != 0) continue;
          long c3 = ((ga * ga - be * de) % pk + pk) % pk;
          if (c3 != 0) continue;
          // <omega, (p^-r alpha, beta, gamma, delta)> = a0 de - b0 ga + c0 be - (d/p^r) al
          long phase = ((a0 * de - b0c * ga + c0 * be - d0 * al) % pk + pk) % pk;
          double ang = two_pi * static_cast<double>(phase) / static_cast<double>(pk);
          sum += std::complex<double>(std::cos(ang), std::sin(ang));
        }
      }
  res.raw = sum;
  res.normalized = sum / static_cast<double>(pk);
  if (k == 1) {
    int n = count_p1_zeros(fmax, p);
    int eps = (r == 0) ? 1 : 2;
    res.has_closed_form = true;
    res.closed_form = n - eps;
  } else if (k >= 2) {
    res.has_closed_form = true;
    res.closed_form = 0.0;
  }
  return res;
}

std::vector<LocalRow> local_dirichlet(const BinaryCubic& fmax, long p, int max_height) {
  std::vector<LocalRow> rows;
  for (const SubringClass& s : subring_enum(fmax, p, max_height)) {
    for (int l = 0; s.det_val + l <= max_height; ++l) {
      LocalRow r;
      r.cls = s.cls;
      r.det_val = s.det_val;
      r.content = s.content;
      r.lambda_val = l;
      r.z_exp = s.det_val + l;
      rows.push_back(std::move(r));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const LocalRow& a, const LocalRow& b) {
    if (a.z_exp != b.z_exp) return a.z_exp < b.z_exp;
    if (a.lambda_val != b.lambda_val) return a.lambda_val < b.lambda_val;
    return a.cls < b.cls;
  });
  return rows;
}

std::vector<GlobalRow> dirichlet_global_rows(const std::vector<LocalData>& primes, const Integer& bound) {
  // local (index-val, n-val) -> count at each prime, then a multiplicative merge
  std::vector<GlobalRow> rows;
  rows.push_back({Integer(1), Integer(1), 1});
  for (const LocalData& loc : primes) {
    // enough local height so p^height exceeds the bound
    int h = 0;
    Integer pw = 1;
    while (pw <= bound) {
      pw *= loc.p;
      ++h;
    }
    std::map<std::pair<int, int>, long> local_counts;
    for (const LocalRow& r : local_dirichlet(loc.fmax, loc.p, h)) local_counts[{r.det_val, r.lambda_val}] += 1;
    std::vector<GlobalRow> next;
    for (const GlobalRow& g : rows)
      for (const auto& [key, cnt] : local_counts) {
        GlobalRow n;
        n.index = g.index * pow_int(loc.p, key.first);
        n.n = g.n * pow_int(loc.p, key.second);
        if (n.index * n.n > bound) continue;
        n.count = g.count * cnt;
        next.push_back(std::move(n));
      }
    rows = std::move(next);
  }
  std::sort(rows.begin(), rows.end(), [](const GlobalRow& a, const GlobalRow& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.n < b.n;
  });
  return rows;
}

}  // namespace g2tk
