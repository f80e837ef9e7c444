#include "scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <cstdlib>
#include <cstring>
#include <sstream>

namespace cfrac {

namespace {

Precision max_prec(Precision a, Precision b) { return a > b ? a : b; }

// Promote both operands to the float backend at a common precision.
std::pair<Scalar, Scalar> promote(const Scalar& a, const Scalar& b) {
  Precision pa = a.precision() ? a.precision() : kDefaultPrecision;
  Precision pb = b.precision() ? b.precision() : kDefaultPrecision;
  Precision p = max_prec(a.precision() ? pa : 0, b.precision() ? pb : 0);
  if (p == 0) p = kDefaultPrecision;
  return {a.to_float(p), b.to_float(p)};
}

BigFloat bf_binary(const BigFloat& a, const BigFloat& b, Precision prec,
                   mpfr_rnd_t rnd,
                   int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  BigFloat r(prec);
  op(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

}  // namespace

BigFloat bf_add(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd) {
  return bf_binary(a, b, prec, rnd, mpfr_add);
}
BigFloat bf_sub(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd) {
  return bf_binary(a, b, prec, rnd, mpfr_sub);
}
BigFloat bf_mul(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd) {
  return bf_binary(a, b, prec, rnd, mpfr_mul);
}
BigFloat bf_div(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd) {
  return bf_binary(a, b, prec, rnd, mpfr_div);
}
BigFloat bf_sqrt(const BigFloat& a, Precision prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_sqrt(r.raw(), a.raw(), rnd);
  return r;
}
BigFloat bf_neg(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
BigFloat bf_abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

std::string BigFloat::decimal(int digits) const {
  if (digits < 2) digits = 2;
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BigFloat::exact_string() const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : "inf";
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  // value = m * 2^e
  mpq_class q(m);
  if (e > 0) {
    mpz_class two(1);
    mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q *= mpq_class(two);
  } else if (e < 0) {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(-e));
    q /= mpq_class(den);
  }
  q.canonicalize();
  return q.get_str();
}

bool Scalar::is_real() const {
  if (is_rational()) return rat_im() == 0;
  return flt_im().is_zero();
}

bool Scalar::is_zero() const {
  if (is_rational()) return rat_re() == 0 && rat_im() == 0;
  return flt_re().is_zero() && flt_im().is_zero();
}

bool Scalar::is_one() const {
  if (is_rational()) return rat_re() == 1 && rat_im() == 0;
  return flt_im().is_zero() && flt_re().cmp_si(1) == 0;
}

Scalar Scalar::to_float(Precision prec) const {
  if (prec < kMinPrecision) prec = kMinPrecision;
  if (is_rational()) {
    return big(BigFloat::of_rational(rat_re(), prec),
               BigFloat::of_rational(rat_im(), prec));
  }
  BigFloat re(prec), im(prec);
  mpfr_set(re.raw(), flt_re().raw(), MPFR_RNDN);
  mpfr_set(im.raw(), flt_im().raw(), MPFR_RNDN);
  return big(std::move(re), std::move(im));
}

Scalar Scalar::real_part() const {
  if (is_rational()) return rational(rat_re());
  return big(flt_re());
}

Scalar Scalar::imag_part() const {
  if (is_rational()) return rational(rat_im());
  return big(flt_im());
}

Scalar Scalar::conjugate() const {
  if (is_rational()) return rational(rat_re(), mpq_class(-rat_im()));
  return big(flt_re(), bf_neg(flt_im()));
}

Scalar Scalar::abs2() const {
  if (is_rational()) {
    mpq_class r = rat_re() * rat_re() + rat_im() * rat_im();
    return rational(std::move(r));
  }
  Precision p = precision();
  BigFloat r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_sqr(r.raw(), flt_re().raw(), MPFR_RNDN);
  mpfr_sqr(t, flt_im().raw(), MPFR_RNDN);
  mpfr_add(r.raw(), r.raw(), t, MPFR_RNDN);
  mpfr_clear(t);
  return big(std::move(r));
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn);
  r /= mpq_class(rd);
  r.canonicalize();
  return r;
}

std::optional<Scalar> Scalar::abs_exact() const {
  if (!is_rational()) return std::nullopt;
  mpq_class a2 = rat_re() * rat_re() + rat_im() * rat_im();
  auto r = exact_sqrt(a2);
  if (!r) return std::nullopt;
  return rational(std::move(*r));
}

Scalar Scalar::abs(Precision prec) const {
  if (auto e = abs_exact()) return *e;
  return big(abs_big(prec));
}

BigFloat Scalar::abs_big(Precision prec) const {
  if (prec < kMinPrecision) prec = kMinPrecision;
  Scalar f = is_rational() ? to_float(prec) : *this;
  BigFloat r(prec);
  mpfr_hypot(r.raw(), f.flt_re().raw(), f.flt_im().raw(), MPFR_RNDN);
  return r;
}

Scalar Scalar::sqrt(Precision prec) const {
  if (is_rational() && rat_im() == 0) {
    const mpq_class& x = rat_re();
    if (x >= 0) {
      if (auto r = exact_sqrt(x)) return rational(std::move(*r));
    } else {
      if (auto r = exact_sqrt(mpq_class(-x)))
        return rational(mpq_class(0), std::move(*r));
    }
  }
  if (prec < kMinPrecision) prec = kMinPrecision;
  Scalar f = to_float(prec);
  const BigFloat& x = f.flt_re();
  const BigFloat& y = f.flt_im();
  BigFloat u(prec), v(prec);
  if (y.is_zero()) {
    if (x.sgn() >= 0) {
      mpfr_sqrt(u.raw(), x.raw(), MPFR_RNDN);
    } else {
      mpfr_neg(v.raw(), x.raw(), MPFR_RNDN);
      mpfr_sqrt(v.raw(), v.raw(), MPFR_RNDN);
    }
    return big(std::move(u), std::move(v));
  }
  // Principal branch via half-angle; pick the cancellation-free component.
  BigFloat m(prec), t(prec);
  mpfr_hypot(m.raw(), x.raw(), y.raw(), MPFR_RNDN);
  if (x.sgn() >= 0) {
    mpfr_add(t.raw(), m.raw(), x.raw(), MPFR_RNDN);
    mpfr_div_2ui(t.raw(), t.raw(), 1, MPFR_RNDN);
    mpfr_sqrt(u.raw(), t.raw(), MPFR_RNDN);
    mpfr_div(v.raw(), y.raw(), u.raw(), MPFR_RNDN);
    mpfr_div_2ui(v.raw(), v.raw(), 1, MPFR_RNDN);
  } else {
    mpfr_sub(t.raw(), m.raw(), x.raw(), MPFR_RNDN);
    mpfr_div_2ui(t.raw(), t.raw(), 1, MPFR_RNDN);
    mpfr_sqrt(t.raw(), t.raw(), MPFR_RNDN);  // == |v|
    if (y.sgn() >= 0)
      mpfr_set(v.raw(), t.raw(), MPFR_RNDN);
    else
      mpfr_neg(v.raw(), t.raw(), MPFR_RNDN);
    mpfr_div(u.raw(), y.raw(), v.raw(), MPFR_RNDN);
    mpfr_div_2ui(u.raw(), u.raw(), 1, MPFR_RNDN);
  }
  return big(std::move(u), std::move(v));
}

Scalar Scalar::pow_int(const mpz_class& e) const {
  if (e == 0) return integer(1);
  if (mpz_cmpabs_ui(e.get_mpz_t(), 1u << 30) > 0)
    throw EvalError("integer exponent magnitude too large");
  bool neg = e < 0;
  unsigned long k = mpz_get_ui(mpz_class(abs(e)).get_mpz_t());
  Scalar base = *this;
  if (neg) {
    if (base.is_zero()) throw EvalError("zero raised to a negative power");
    base = integer(1) / base;
  }
  Scalar acc = integer(1);
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::equals(const Scalar& o) const {
  if (is_rational() && o.is_rational())
    return rat_re() == o.rat_re() && rat_im() == o.rat_im();
  if (!is_rational() && !o.is_rational()) {
    return mpfr_cmp(flt_re().raw(), o.flt_re().raw()) == 0 &&
           mpfr_cmp(flt_im().raw(), o.flt_im().raw()) == 0;
  }
  const Scalar& r = is_rational() ? *this : o;
  const Scalar& f = is_rational() ? o : *this;
  return f.flt_re().cmp(r.rat_re()) == 0 && f.flt_im().cmp(r.rat_im()) == 0;
}

int Scalar::cmp_real(const Scalar& o) const {
  if (!is_real() || !o.is_real())
    throw InvalidInput("cmp_real on non-real value");
  if (is_rational() && o.is_rational()) return cmp(rat_re(), o.rat_re());
  if (!is_rational() && !o.is_rational()) return flt_re().cmp(o.flt_re());
  if (is_rational()) return -o.flt_re().cmp(rat_re());
  return flt_re().cmp(o.rat_re());
}

std::string Scalar::decimal(int digits) const {
  if (!is_real()) throw InvalidInput("decimal() on non-real value");
  if (is_rational()) {
    Precision p = static_cast<Precision>(
        std::max<int>(kMinPrecision, digits * 4 + 16));
    return BigFloat::of_rational(rat_re(), p).decimal(digits);
  }
  return flt_re().decimal(digits);
}

std::string Scalar::exact_string() const {
  if (!is_real()) throw InvalidInput("exact_string() on non-real value");
  if (is_rational()) return rat_re().get_str();
  return flt_re().exact_string();
}

std::string Scalar::describe(int digits) const {
  auto one = [&](const Scalar& s) {
    if (s.is_rational()) return s.rat_re().get_str();
    return s.flt_re().decimal(digits);
  };
  std::string re = one(real_part());
  if (is_real()) return re;
  std::string im = one(imag_part());
  return re + (im[0] == '-' ? "" : "+") + im + "i";
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar::rational(a.rat_re() + b.rat_re(), a.rat_im() + b.rat_im());
  if (a.is_rational() || b.is_rational()) {
    auto [x, y] = promote(a, b);
    return x + y;
  }
  Precision p = max_prec(a.precision(), b.precision());
  return Scalar::big(bf_add(a.flt_re(), b.flt_re(), p, MPFR_RNDN),
                     bf_add(a.flt_im(), b.flt_im(), p, MPFR_RNDN));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational())
    return Scalar::rational(a.rat_re() - b.rat_re(), a.rat_im() - b.rat_im());
  if (a.is_rational() || b.is_rational()) {
    auto [x, y] = promote(a, b);
    return x - y;
  }
  Precision p = max_prec(a.precision(), b.precision());
  return Scalar::big(bf_sub(a.flt_re(), b.flt_re(), p, MPFR_RNDN),
                     bf_sub(a.flt_im(), b.flt_im(), p, MPFR_RNDN));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) {
    mpq_class re = a.rat_re() * b.rat_re() - a.rat_im() * b.rat_im();
    mpq_class im = a.rat_re() * b.rat_im() + a.rat_im() * b.rat_re();
    return Scalar::rational(std::move(re), std::move(im));
  }
  if (a.is_rational() || b.is_rational()) {
    auto [x, y] = promote(a, b);
    return x * y;
  }
  Precision p = max_prec(a.precision(), b.precision());
  BigFloat re(p), im(p), t(p);
  mpfr_mul(re.raw(), a.flt_re().raw(), b.flt_re().raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.flt_im().raw(), b.flt_im().raw(), MPFR_RNDN);
  mpfr_sub(re.raw(), re.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul(im.raw(), a.flt_re().raw(), b.flt_im().raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.flt_im().raw(), b.flt_re().raw(), MPFR_RNDN);
  mpfr_add(im.raw(), im.raw(), t.raw(), MPFR_RNDN);
  return Scalar::big(std::move(re), std::move(im));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw EvalError("division by zero");
  if (a.is_rational() && b.is_rational()) {
    mpq_class den = b.rat_re() * b.rat_re() + b.rat_im() * b.rat_im();
    mpq_class re = (a.rat_re() * b.rat_re() + a.rat_im() * b.rat_im()) / den;
    mpq_class im = (a.rat_im() * b.rat_re() - a.rat_re() * b.rat_im()) / den;
    return Scalar::rational(std::move(re), std::move(im));
  }
  if (a.is_rational() || b.is_rational()) {
    auto [x, y] = promote(a, b);
    return x / y;
  }
  Precision p = max_prec(a.precision(), b.precision());
  BigFloat den(p), re(p), im(p), t(p);
  mpfr_sqr(den.raw(), b.flt_re().raw(), MPFR_RNDN);
  mpfr_sqr(t.raw(), b.flt_im().raw(), MPFR_RNDN);
  mpfr_add(den.raw(), den.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul(re.raw(), a.flt_re().raw(), b.flt_re().raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.flt_im().raw(), b.flt_im().raw(), MPFR_RNDN);
  mpfr_add(re.raw(), re.raw(), t.raw(), MPFR_RNDN);
  mpfr_div(re.raw(), re.raw(), den.raw(), MPFR_RNDN);
  mpfr_mul(im.raw(), a.flt_im().raw(), b.flt_re().raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.flt_re().raw(), b.flt_im().raw(), MPFR_RNDN);
  mpfr_sub(im.raw(), im.raw(), t.raw(), MPFR_RNDN);
  mpfr_div(im.raw(), im.raw(), den.raw(), MPFR_RNDN);
  return Scalar::big(std::move(re), std::move(im));
}

Scalar operator-(const Scalar& a) {
  if (a.is_rational())
    return Scalar::rational(mpq_class(-a.rat_re()), mpq_class(-a.rat_im()));
  return Scalar::big(bf_neg(a.flt_re()), bf_neg(a.flt_im()));
}

double log2_magnitude(const Scalar& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  Scalar a2 = x.abs2();
  BigFloat f = a2.is_rational() ? BigFloat::of_rational(a2.rat_re(), 64)
                                : a2.flt_re();
  mpfr_t l;
  mpfr_init2(l, 64);
  mpfr_log2(l, f.raw(), MPFR_RNDN);
  double r = mpfr_get_d(l, MPFR_RNDN);
  mpfr_clear(l);
  return 0.5 * r;
}

}  // namespace cfrac
