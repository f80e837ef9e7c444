#ifndef CFRAC_SCALAR_HPP
#define CFRAC_SCALAR_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "errors.hpp"

namespace cfrac {

using Precision = unsigned;

inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kDefaultPrecision = 128;

// Thin RAII wrapper over mpfr_t.  Real-valued; precision is fixed at
// construction and preserved by copies/moves.
class BigFloat {
public:
  explicit BigFloat(Precision prec = kDefaultPrecision) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(prec));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of_long(long x, Precision prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat of_double(double x, Precision prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat of_rational(const mpq_class& q, Precision prec,
                              mpfr_rnd_t rnd = MPFR_RNDN) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
  }

  Precision precision() const {
    return static_cast<Precision>(mpfr_get_prec(v_));
  }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(const mpq_class& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
  int cmp_si(long x) const { return mpfr_cmp_si(v_, x); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Round-to-nearest scientific decimal with the given significant digits.
  std::string decimal(int digits) const;
  // Exact dyadic representation "m/2^k" (or integer); lossless.
  std::string exact_string() const;

private:
  mpfr_t v_;
};

// Directed-rounding arithmetic helpers (result precision = prec).
BigFloat bf_add(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd);
BigFloat bf_sub(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd);
BigFloat bf_mul(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd);
BigFloat bf_div(const BigFloat& a, const BigFloat& b, Precision prec,
                mpfr_rnd_t rnd);
BigFloat bf_sqrt(const BigFloat& a, Precision prec, mpfr_rnd_t rnd);
BigFloat bf_neg(const BigFloat& a);
BigFloat bf_abs(const BigFloat& a);

// A complex number in one of two backends:
//   - exact rational: Gaussian rational, closed under field operations;
//   - big-float: pair of mpfr reals sharing one precision (>= 64 bits).
// Values are immutable once constructed and safe to share across threads.
class Scalar {
public:
  struct Rat {
    mpq_class re, im;
  };
  struct Flt {
    BigFloat re, im;
  };

  Scalar() : v_(Rat{mpq_class(0), mpq_class(0)}) {}

  static Scalar integer(long n) { return rational(mpq_class(n)); }
  static Scalar rational(mpq_class re, mpq_class im = mpq_class(0)) {
    re.canonicalize();
    im.canonicalize();
    return Scalar(Rat{std::move(re), std::move(im)});
  }
  static Scalar ratio(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return rational(std::move(q));
  }
  static Scalar big(BigFloat re) {
    Precision p = re.precision();
    return Scalar(Flt{std::move(re), BigFloat(p)});
  }
  static Scalar big(BigFloat re, BigFloat im) {
    return Scalar(Flt{std::move(re), std::move(im)});
  }
  static Scalar of_double(double x, Precision prec) {
    return big(BigFloat::of_double(x, prec));
  }

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  bool is_real() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rat_re() const { return std::get<Rat>(v_).re; }
  const mpq_class& rat_im() const { return std::get<Rat>(v_).im; }
  const BigFloat& flt_re() const { return std::get<Flt>(v_).re; }
  const BigFloat& flt_im() const { return std::get<Flt>(v_).im; }

  // Precision of the float backend; 0 for exact rationals.
  Precision precision() const {
    return is_rational() ? 0 : flt_re().precision();
  }

  Scalar to_float(Precision prec) const;

  Scalar real_part() const;
  Scalar imag_part() const;
  Scalar conjugate() const;

  // |z|^2, exact in the rational backend.
  Scalar abs2() const;
  // |z| as an exact rational, when |z|^2 is a perfect rational square.
  std::optional<Scalar> abs_exact() const;
  // |z|: exact when possible, otherwise big-float at `prec`.
  Scalar abs(Precision prec) const;
  // |z| rounded to nearest at `prec` (always float).
  BigFloat abs_big(Precision prec) const;

  // Principal square root.  Exact for rational perfect squares (negative
  // reals yield a positive-imaginary result); big-float otherwise.
  Scalar sqrt(Precision prec) const;

  // z^e by binary exponentiation; e may be negative (z must be nonzero).
  Scalar pow_int(const mpz_class& e) const;

  // Exact value equality, comparable across backends.
  bool equals(const Scalar& o) const;
  // Three-way comparison of real values (throws InvalidInput when either
  // operand has a nonzero imaginary part); exact across backends.
  int cmp_real(const Scalar& o) const;

  std::string decimal(int digits) const;       // real values
  std::string exact_string() const;            // real values, lossless
  std::string describe(int digits = 17) const; // human-readable, any value

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

private:
  explicit Scalar(std::variant<Rat, Flt> v) : v_(std::move(v)) {}
  std::variant<Rat, Flt> v_;
};

// Perfect-square test for nonnegative rationals; returns the exact root.
std::optional<mpq_class> exact_sqrt(const mpq_class& q);

// log2(|x|) as a double; -inf for zero.  Used for log-space magnitude
// tracking of element products in the float backend.
double log2_magnitude(const Scalar& x);

}  // namespace cfrac

#endif  // CFRAC_SCALAR_HPP
