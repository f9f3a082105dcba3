#pragma once

#include <complex>
#include <string>
#include <vector>

#include "g2tk/cubic_rings.hpp"
#include "g2tk/zeta_poly.hpp"

namespace g2tk {

// Local shape of the cubic etale algebra at a good prime: three split
// factors, one split factor times the unramified quadratic, or the
// unramified cubic.
enum class SplittingType { kSplit, kPartial, kInert };
const char* splitting_type_name(SplittingType t);
SplittingType parse_splitting_type(const std::string& s);

// Derived from the factorization of fmax mod p; rejects double/triple lines
// (those do not occur for a maximal order at a good prime).
SplittingType splitting_type(const BinaryCubic& fmax, long p);

// Deterministic small-coefficient form of the requested type at p, with
// nonzero discriminant mod p.
BinaryCubic sample_form(long p, SplittingType t);

// P_h(z) = z^{val(det h) - c(h)} (1 - z^{c(h)+1}) for ring classes.  A class
// with negative content contributes the zero polynomial: the underlying
// geometric series over the divisors of p^{c} is empty.
ZetaPoly p_h(const LatticeClass& h, const BinaryCubic& fmax);
ZetaPoly p_h_from(int det_val, int cont);

// B_0(z) = 1 + (q+1) z + q z^2 + (q^2+q) z^3 + q^2 z^4 at the concrete
// prime q.
ZetaPoly b0(long q);

enum class HeckeOp { kTp, kTpInv, kCenterP, kCenterPInv };
std::vector<LatticeClass> hecke_translate(const LatticeClass& h, HeckeOp which);

// M_h(z) = q^2 P_{hp} + q P_{h*T(p)} + P_{h*T(p^{-1})} + P_{hp^{-1}}
//          + (N(fmax . h) - 1) P_h,
// where N counts the P^1(F_q) zeros of the (possibly imprimitive) integral
// form of the class: p+1 whenever the content is positive.
ZetaPoly m_h(const LatticeClass& h, const BinaryCubic& fmax);

// L(E, s)^{-1} as a polynomial in z: (1-z)^2, 1-z^2, or 1+z+z^2.
ZetaPoly local_l_inverse(SplittingType t);

struct CridentResult {
  bool equal = false;
  ZetaPoly lhs, rhs;
  int det_val = 0;
  int content = 0;
};
// Both sides of the local identity
//   (1+qz)^{-1} L(E,s) (B_0 P_h - z^2 M_h)
//     == [val(h) = c(h)] z^{v-c} (1 + (N(fmax) - eps(x0)) z).
// All divisions are exact; a failed division throws (it signals a bug, not
// an input problem).
CridentResult verify_crident(const LatticeClass& h, SplittingType t, const BinaryCubic& fmax);

struct ExpSumResult {
  std::complex<double> raw{};
  std::complex<double> normalized{};  // raw / p^k
  bool criterion_zero = false;        // p^r | d fails: sum vanishes identically
  double closed_form = 0.0;           // 1, N - eps, or 0
  bool has_closed_form = false;
};
// Brute-force twisted character sum over (Z/p^k)^4 restricted by the rank
// congruences; matches the closed form for k <= 1 and vanishes for k >= 2.
ExpSumResult exp_sum_dchi(long p, int k, int r, const BinaryCubic& fmax);

struct LocalRow {
  LatticeClass cls;
  int det_val = 0;
  int content = 0;
  int lambda_val = 0;
  int z_exp = 0;  // lambda_val + det_val
};
// Rows (ring class, lambda-valuation) with combined z-exponent <= max_height.
std::vector<LocalRow> local_dirichlet(const BinaryCubic& fmax, long p, int max_height);

struct LocalData {
  long p;
  SplittingType type;
  BinaryCubic fmax;
};
struct GlobalRow {
  Integer index;  // [O_E : T]
  Integer n;
  long count = 0;
};
// Multiplicative assembly of the local rows over the given primes, bounded
// by index * n <= bound.
std::vector<GlobalRow> dirichlet_global_rows(const std::vector<LocalData>& primes, const Integer& bound);

}  // namespace g2tk
