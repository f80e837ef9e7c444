#include "interval.hpp"

namespace cfrac {

namespace {

Precision common_prec(const FloatInterval& a, const FloatInterval& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}

}  // namespace

FloatInterval iv_add(const FloatInterval& a, const FloatInterval& b) {
  Precision p = common_prec(a, b);
  return {bf_add(a.lo, b.lo, p, MPFR_RNDD), bf_add(a.hi, b.hi, p, MPFR_RNDU)};
}

FloatInterval iv_sub(const FloatInterval& a, const FloatInterval& b) {
  Precision p = common_prec(a, b);
  return {bf_sub(a.lo, b.hi, p, MPFR_RNDD), bf_sub(a.hi, b.lo, p, MPFR_RNDU)};
}

FloatInterval iv_mul(const FloatInterval& a, const FloatInterval& b) {
  Precision p = common_prec(a, b);
  const BigFloat* xs[2] = {&a.lo, &a.hi};
  const BigFloat* ys[2] = {&b.lo, &b.hi};
  BigFloat lo(p), hi(p);
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      BigFloat d = bf_mul(*x, *y, p, MPFR_RNDD);
      BigFloat u = bf_mul(*x, *y, p, MPFR_RNDU);
      if (first || d.cmp(lo) < 0) lo = d;
      if (first || u.cmp(hi) > 0) hi = u;
      first = false;
    }
  }
  return {lo, hi};
}

FloatInterval iv_div(const FloatInterval& a, const FloatInterval& b) {
  if (b.contains_zero())
    throw InvalidParameter("interval division by an enclosure of zero");
  Precision p = common_prec(a, b);
  const BigFloat* xs[2] = {&a.lo, &a.hi};
  const BigFloat* ys[2] = {&b.lo, &b.hi};
  BigFloat lo(p), hi(p);
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      BigFloat d = bf_div(*x, *y, p, MPFR_RNDD);
      BigFloat u = bf_div(*x, *y, p, MPFR_RNDU);
      if (first || d.cmp(lo) < 0) lo = d;
      if (first || u.cmp(hi) > 0) hi = u;
      first = false;
    }
  }
  return {lo, hi};
}

FloatInterval iv_neg(const FloatInterval& a) {
  return {bf_neg(a.hi), bf_neg(a.lo)};
}

FloatInterval iv_sqrt(const FloatInterval& a) {
  Precision p = a.precision();
  BigFloat lo = a.lo.sgn() <= 0 ? BigFloat::of_long(0, p)
                                : bf_sqrt(a.lo, p, MPFR_RNDD);
  return {lo, bf_sqrt(a.hi, p, MPFR_RNDU)};
}

FloatInterval iv_min(const FloatInterval& a, const FloatInterval& b) {
  return {a.lo.cmp(b.lo) <= 0 ? a.lo : b.lo,
          a.hi.cmp(b.hi) <= 0 ? a.hi : b.hi};
}

FloatInterval iv_max(const FloatInterval& a, const FloatInterval& b) {
  return {a.lo.cmp(b.lo) >= 0 ? a.lo : b.lo,
          a.hi.cmp(b.hi) >= 0 ? a.hi : b.hi};
}

FloatInterval FloatInterval::modulus(const Scalar& z, Precision prec) {
  if (z.is_rational()) {
    mpq_class a2 = z.rat_re() * z.rat_re() + z.rat_im() * z.rat_im();
    return iv_sqrt(of_rational(a2, prec));
  }
  // |re|^2 + |im|^2 from exact float components, outward.
  Precision p = z.precision() > prec ? z.precision() : prec;
  BigFloat re = bf_abs(z.flt_re());
  BigFloat im = bf_abs(z.flt_im());
  FloatInterval r2 = iv_mul(point(re), point(re));
  FloatInterval i2 = iv_mul(point(im), point(im));
  FloatInterval sum = iv_add(r2, i2);
  (void)p;
  return iv_sqrt(sum);
}

}  // namespace cfrac
