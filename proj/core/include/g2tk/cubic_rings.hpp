#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2tk/heis_so7.hpp"
#include "g2tk/matrix.hpp"
#include "g2tk/rational.hpp"

namespace g2tk {

// Integral binary cubic a x^3 + b x^2 y + c x y^2 + d y^3.
struct BinaryCubic {
  Integer a{}, b{}, c{}, d{};

  bool operator==(const BinaryCubic&) const = default;

  Integer disc() const {
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
  }
  WVector to_wvector() const {
    return {Rational(a), frac(b, Integer(3)), frac(c, Integer(3)), Rational(d)};
  }
};

// Element of the cubic algebra in the basis (1, omega, theta); rational
// coordinates so that lattice membership questions stay exact.
using CubicElem = std::array<Rational, 3>;

// Multiplication table of the ring attached to a binary cubic:
//   omega theta = -ad, omega^2 = -ac + a theta - b omega,
//   theta^2 = -bd + c theta - d omega.
class CubicRingTable {
 public:
  explicit CubicRingTable(const BinaryCubic& f);

  const BinaryCubic& form() const { return f_; }
  const CubicElem& omega_theta() const { return wt_; }
  const CubicElem& omega_sq() const { return ww_; }
  const CubicElem& theta_sq() const { return tt_; }

  CubicElem mul(const CubicElem& x, const CubicElem& y) const;

 private:
  BinaryCubic f_;
  CubicElem wt_, ww_, tt_;
};

// A coset h GL2(Z_p) at the prime p, canonicalized to the column Hermite
// form [[p^a, b],[0, p^c]] with b in Z[1/p] and 0 <= b < p^a.  Syntactic
// equality of canonical forms decides coset equality.
struct LatticeClass {
  long p = 0;
  int va = 0, vc = 0;
  Rational b{};

  bool operator==(const LatticeClass&) const = default;
  bool operator<(const LatticeClass& o) const {
    if (va != o.va) return va < o.va;
    if (vc != o.vc) return vc < o.vc;
    return b < o.b;
  }

  MatQ rep() const {
    MatQ h(2, 2);
    h(0, 0) = pow_p(p, va);
    h(0, 1) = b;
    h(1, 1) = pow_p(p, vc);
    return h;
  }
  int det_val() const { return va + vc; }
  std::string str() const;
};

LatticeClass canonical_class(long p, const MatQ& h);

// The rank-3 module Z + Z(delta omega - beta theta) + Z(-gamma omega + alpha
// theta) attached to x = [[alpha, beta],[gamma, delta]], with its closure test.
struct TLattice {
  MatQ x{2, 2};
  CubicElem gen1{}, gen2{};
  bool is_ring = false;
};
TLattice t_lattice(const MatQ& x, const BinaryCubic& fmax, long p);

// Largest n with p^{-n} h integral.
int mat_val(const MatQ& h, long p);
int mat_val(const LatticeClass& h);

// p-adic content: the largest c such that T(p^{-c} h) is still closed under
// multiplication.  Negative for non-rings; the search is bounded by the
// entry valuations.
int content(const LatticeClass& h, const BinaryCubic& fmax);
int content(const MatQ& h, const BinaryCubic& fmax, long p);

// 1 if p^{-val(h)} h is invertible over Z_p, else 2.
int epsilon_class(const LatticeClass& h);

// The p+1 index-p sublattice classes of h O^2.
std::vector<LatticeClass> sublattices_index_p(const LatticeClass& L);

enum class FactorType { kIrreducible, kLineQuadratic, kThreeLines, kDoubleLine, kTripleLine };
const char* factor_type_name(FactorType t);

// Factorization type of f over F_p viewed as a homogeneous cubic on P^1;
// rejects f = 0 mod p.
FactorType factor_type(const BinaryCubic& f, long p);

// Number of zeros in P^1(F_p), in {0,..,3} for f != 0 mod p and p+1 for
// f = 0 mod p (the degenerate count is what the Hecke combination needs).
int count_p1_zeros(const BinaryCubic& f, long p);

// The binary cubic attached to the module T(h): fmax acted on the right by
// adj(h) (twisted by det^{-1}).  Rational coefficients in general; integral
// exactly when T(h) is contained in the maximal order and a ring exactly
// when integral.  Used as the independent oracle for content/is_ring.
std::array<Rational, 4> form_of_class(const LatticeClass& h, const BinaryCubic& fmax);
int form_min_val(const std::array<Rational, 4>& f, long p);

struct SubringClass {
  LatticeClass cls;
  int content = 0;
  int det_val = 0;
};
// All classes [h] with T(h) a ring and det-valuation <= max_val.
std::vector<SubringClass> subring_enum(const BinaryCubic& fmax, long p, int max_val);

// Requires p coprime to 6 and disc(fmax) nonzero mod p.
void require_good_prime(const BinaryCubic& fmax, long p);

}  // namespace g2tk
