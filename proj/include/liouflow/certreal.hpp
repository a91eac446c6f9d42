// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "liouflow/error.hpp"

namespace liouflow {

using Prec = mpfr_prec_t;

inline constexpr Prec kDefaultPrec = 128;
inline constexpr Prec kDefaultPrecCap = 4096;
// Radii are tracked at low precision and always rounded upward.
inline constexpr Prec kRadPrec = 64;

struct PrecisionPolicy {
  Prec base = kDefaultPrec;
  Prec cap = kDefaultPrecCap;
};

// Owning handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(Prec prec = kRadPrec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  Prec prec() const { return mpfr_get_prec(v_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

 private:
  mpfr_t v_;
};

// A ball [mid - rad, mid + rad] that is guaranteed to contain the exact
// quantity it represents.  Every arithmetic operation returns a ball that
// contains every possible exact result of its inputs.
class CertifiedReal {
 public:
  CertifiedReal();  // exact zero
  explicit CertifiedReal(Prec prec);

  static CertifiedReal exact(long v, Prec prec = kDefaultPrec);
  static CertifiedReal from_mpz(const mpz_class& v, Prec prec);
  static CertifiedReal from_mpq(const mpq_class& v, Prec prec);
  static CertifiedReal from_double(double v, Prec prec = kDefaultPrec);
  // Parses a decimal literal; the conversion error is folded into the radius.
  static CertifiedReal from_decimal(const std::string& text, Prec prec);
  static CertifiedReal pi(Prec prec);
  // Smallest ball (at the given precision) containing both balls.
  static CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b);
  // Ball with the given midpoint and radius; the midpoint is rounded to prec.
  static CertifiedReal ball(const BigFloat& mid, const BigFloat& rad, Prec prec);

  Prec prec() const { return mid_.prec(); }
  const BigFloat& mid() const { return mid_; }
  const BigFloat& rad() const { return rad_; }
  double mid_double() const { return mid_.to_double(); }
  double rad_double() const { return rad_.to_double(MPFR_RNDU); }
  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  bool is_exact_zero() const { return is_exact() && mpfr_zero_p(mid_.get()) != 0; }

  // Outward-rounded endpoints at the midpoint precision.
  BigFloat lower() const;
  BigFloat upper() const;
  // Upper bound of |x|.
  BigFloat mag() const;

  CertifiedReal with_prec(Prec prec) const;
  // Widens the radius by the magnitude bound of `extra`.
  CertifiedReal widened(const CertifiedReal& extra) const;
  CertifiedReal widened(const BigFloat& extra) const;

  // True when every point of this ball lies in `other`.
  bool inside(const CertifiedReal& other) const;
  bool overlaps(const CertifiedReal& other) const;

  std::string to_string(int digits = 20) const;
  std::string mid_string(int digits = 20) const;
  std::string rad_string(int digits = 6) const;

  CertifiedReal operator-() const;
  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  CertifiedReal& operator+=(const CertifiedReal& b) { return *this = *this + b; }
  CertifiedReal& operator-=(const CertifiedReal& b) { return *this = *this - b; }
  CertifiedReal& operator*=(const CertifiedReal& b) { return *this = *this * b; }
  CertifiedReal& operator/=(const CertifiedReal& b) { return *this = *this / b; }

 private:
  friend class RealOps;
  BigFloat mid_;
  BigFloat rad_;
};

CertifiedReal operator*(const CertifiedReal& a, long k);
CertifiedReal operator*(const CertifiedReal& a, const mpz_class& k);

CertifiedReal abs(const CertifiedReal& x);
CertifiedReal sqr(const CertifiedReal& x);
CertifiedReal sqrt(const CertifiedReal& x);
CertifiedReal exp(const CertifiedReal& x);
CertifiedReal log(const CertifiedReal& x);
CertifiedReal sin(const CertifiedReal& x);
CertifiedReal cos(const CertifiedReal& x);
// cos(2 pi x) and sin(2 pi x), with exact reduction of x modulo 1 before the
// multiplication by 2 pi, so huge arguments keep their fractional bits.
CertifiedReal cos2pi(const CertifiedReal& x);
CertifiedReal sin2pi(const CertifiedReal& x);
// sin(pi x) / (pi x), certified near x = 0.
CertifiedReal sinc_pi(const CertifiedReal& x);
// x - round(mid(x)): the representative of x mod 1 nearest to zero.
CertifiedReal frac_centered(const CertifiedReal& x);
// Representative of x mod 1 in [0, 1) (certified unless the ball straddles an
// integer, in which case the representative near 0 may be slightly negative or
// slightly above 1; callers that need a strict range check it).
CertifiedReal frac_unit(const CertifiedReal& x);
CertifiedReal max_of(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal min_of(const CertifiedReal& a, const CertifiedReal& b);

// +1 / -1 when the ball excludes zero, 0 for the exact zero ball, throws
// Indeterminate otherwise.
int certified_sign(const CertifiedReal& x);
// Certified comparisons: true only when the relation holds for every point.
bool certainly_lt(const CertifiedReal& a, const CertifiedReal& b);
bool certainly_le(const CertifiedReal& a, const CertifiedReal& b);
inline bool certainly_gt(const CertifiedReal& a, const CertifiedReal& b) { return certainly_lt(b, a); }
inline bool certainly_ge(const CertifiedReal& a, const CertifiedReal& b) { return certainly_le(b, a); }
bool certainly_positive(const CertifiedReal& x);
bool certainly_negative(const CertifiedReal& x);
// Floor of x when it is the same integer for every point of the ball.
std::optional<mpz_class> certified_floor(const CertifiedReal& x);
// Upper bound of |x| as a double (rounded up, +inf if out of range).
double mag_double(const CertifiedReal& x);

// Repeatedly evaluates f at doubling precision until `decided` accepts the
// enclosure.  Throws PrecisionExhausted when prec_max is reached first.
template <class F, class Decided>
CertifiedReal refine_until(F&& f, Decided&& decided, Prec prec0, Prec prec_max) {
  if (prec0 > prec_max) throw Error(ErrorKind::InvalidInput, "refine_until: prec0 > prec_max");
  for (Prec p = prec0;; p *= 2) {
    if (p > prec_max) p = prec_max;
    CertifiedReal v = f(p);
    bool ok = false;
    try {
      ok = decided(v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Indeterminate) throw;
    }
    if (ok) return v;
    if (p == prec_max) break;
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "no decision up to " + std::to_string(prec_max) + " bits");
}

}  // namespace liouflow
