#pragma once

#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace ushape {

// Binary mantissa precision plus guard bits. Every numerical operation in the
// library takes one of these explicitly; there is no process-wide default.
//
// Results computed under a context are accurate to 2^-(bits - kGuardSlack)
// relative error. Intermediate values carry bits + guard_bits of mantissa.
struct PrecisionContext {
  static constexpr unsigned kDefaultBits = 256;
  static constexpr unsigned kDefaultGuardBits = 32;
  static constexpr unsigned kMinBits = 64;
  static constexpr unsigned kGuardSlack = 10;

  unsigned bits = kDefaultBits;
  unsigned guard_bits = kDefaultGuardBits;

  // Throws DomainError when bits < kMinBits.
  static PrecisionContext with_bits(unsigned bits);

  // Reads USHAPE_PRECISION_BITS; falls back to kDefaultBits when unset.
  // Throws DomainError on an unparsable or too-small value.
  static PrecisionContext from_env();

  unsigned working_bits() const { return bits + guard_bits; }
};

// Arbitrary-precision binary floating point value with value semantics.
// Arithmetic between two values yields the larger of the two precisions;
// all rounding is to nearest.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = PrecisionContext::kMinBits);
  BigReal(double value, mpfr_prec_t prec);
  template <std::integral I>
  BigReal(I value, mpfr_prec_t prec) : BigReal(prec) {
    mpfr_set_si(value_, static_cast<long>(value), MPFR_RNDN);
  }
  BigReal(const mpz_class& value, mpfr_prec_t prec);
  BigReal(const mpq_class& value, mpfr_prec_t prec);

  // Accepts decimal ("1.25e-3") and C99 hex-float ("0x1.4p+0") notation.
  // Throws MalformedInput when the text is not a complete number.
  static BigReal parse(std::string_view text, mpfr_prec_t prec);

  static BigReal pi(mpfr_prec_t prec);
  // 2^exponent, exact.
  static BigReal exp2i(long exponent, mpfr_prec_t prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  // Rounds to a new precision (in place).
  void set_precision(mpfr_prec_t prec);
  BigReal with_precision(mpfr_prec_t prec) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits, e.g.
  // "1.73205080756887729352744634152e+00" for digits = 30.
  std::string to_decimal(int digits) const;
  // Exact C99 hex-float rendering of the full mantissa.
  std::string to_hex() const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);

  template <std::integral I>
  friend BigReal operator*(const BigReal& a, I k) {
    return a.mul_si(static_cast<long>(k));
  }
  template <std::integral I>
  friend BigReal operator*(I k, const BigReal& a) {
    return a.mul_si(static_cast<long>(k));
  }
  template <std::integral I>
  friend BigReal operator/(const BigReal& a, I k) {
    return a.div_si(static_cast<long>(k));
  }
  template <std::integral I>
  friend BigReal operator+(const BigReal& a, I k) {
    return a.add_si(static_cast<long>(k));
  }
  template <std::integral I>
  friend BigReal operator+(I k, const BigReal& a) {
    return a.add_si(static_cast<long>(k));
  }
  template <std::integral I>
  friend BigReal operator-(const BigReal& a, I k) {
    return a.add_si(-static_cast<long>(k));
  }
  template <std::integral I>
  friend BigReal operator-(I k, const BigReal& a) {
    return (-a).add_si(static_cast<long>(k));
  }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, double b) {
    return mpfr_cmp_d(a.value_, b) == 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, double b);

 private:
  BigReal mul_si(long k) const;
  BigReal div_si(long k) const;
  BigReal add_si(long k) const;

  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal square(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
// Real k-th root; x must be non-negative for even k.
BigReal root(const BigReal& x, unsigned long k);
BigReal asinh(const BigReal& x);
BigReal hypot(const BigReal& a, const BigReal& b);
const BigReal& max(const BigReal& a, const BigReal& b);
const BigReal& min(const BigReal& a, const BigReal& b);

// Nearest integer, ties away from zero. Throws DomainError when the value
// does not fit in int64.
std::int64_t round_to_int64(const BigReal& x);

// Complex number over BigReal. Only the operations the library needs.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
    return {a.re * s, a.im * s};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
};

BigComplex conj(const BigComplex& z);
// |z|^2
BigReal norm(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigComplex inverse(const BigComplex& z);

}  // namespace ushape
