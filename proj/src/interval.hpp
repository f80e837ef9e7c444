#ifndef CFRAC_INTERVAL_HPP
#define CFRAC_INTERVAL_HPP

#include <initializer_list>

#include "scalar.hpp"

namespace cfrac {

// Closed real interval [lo, hi] with outward-rounded arithmetic, used to make
// inequality checks conservative in the float backend: an inequality is
// accepted only when it holds for every point of the enclosures.
struct FloatInterval {
  BigFloat lo, hi;

  static FloatInterval point(const BigFloat& x) { return {x, x}; }
  static FloatInterval of_long(long x, Precision prec) {
    return point(BigFloat::of_long(x, prec));
  }
  static FloatInterval of_rational(const mpq_class& q, Precision prec) {
    return {BigFloat::of_rational(q, prec, MPFR_RNDD),
            BigFloat::of_rational(q, prec, MPFR_RNDU)};
  }
  // Enclosure of a real-valued Scalar.
  static FloatInterval of_real(const Scalar& x, Precision prec) {
    if (x.is_rational()) return of_rational(x.rat_re(), prec);
    return point(x.flt_re());
  }
  // Enclosure of |z| for any Scalar.
  static FloatInterval modulus(const Scalar& z, Precision prec);

  Precision precision() const { return lo.precision(); }

  bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }

  // Certain (conservative) comparisons against another enclosure.
  bool certainly_ge(const FloatInterval& o) const {
    return lo.cmp(o.hi) >= 0;
  }
  bool certainly_le(const FloatInterval& o) const {
    return hi.cmp(o.lo) <= 0;
  }
  bool certainly_gt(const FloatInterval& o) const { return lo.cmp(o.hi) > 0; }
  bool certainly_lt(const FloatInterval& o) const { return hi.cmp(o.lo) < 0; }
};

FloatInterval iv_add(const FloatInterval& a, const FloatInterval& b);
FloatInterval iv_sub(const FloatInterval& a, const FloatInterval& b);
FloatInterval iv_mul(const FloatInterval& a, const FloatInterval& b);
// Throws InvalidParameter when the divisor encloses zero.
FloatInterval iv_div(const FloatInterval& a, const FloatInterval& b);
FloatInterval iv_neg(const FloatInterval& a);
// Square root; the lower endpoint is clamped at zero.
FloatInterval iv_sqrt(const FloatInterval& a);
FloatInterval iv_min(const FloatInterval& a, const FloatInterval& b);
FloatInterval iv_max(const FloatInterval& a, const FloatInterval& b);

}  // namespace cfrac

#endif  // CFRAC_INTERVAL_HPP
