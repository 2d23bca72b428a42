#include "ushape/bigreal.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ushape/errors.hpp"

namespace ushape {

PrecisionContext PrecisionContext::with_bits(unsigned bits) {
  if (bits < kMinBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinBits) + " bits, got " +
                      std::to_string(bits));
  }
  PrecisionContext ctx;
  ctx.bits = bits;
  return ctx;
}

PrecisionContext PrecisionContext::from_env() {
  const char* raw = std::getenv("USHAPE_PRECISION_BITS");
  if (raw == nullptr || *raw == '\0') {
    return PrecisionContext{};
  }
  char* end = nullptr;
  const unsigned long bits = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw DomainError(std::string("USHAPE_PRECISION_BITS is not an integer: ") + raw);
  }
  return with_bits(static_cast<unsigned>(bits));
}

BigReal::BigReal(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, mpfr_prec_t prec) {
  BigReal out(prec);
  const std::string owned(text);
  if (owned.empty()) {
    throw MalformedInput("empty number");
  }
  char* end = nullptr;
  mpfr_strtofr(out.value_, owned.c_str(), &end, 0, MPFR_RNDN);
  if (end == owned.c_str() || *end != '\0') {
    throw MalformedInput("not a number: '" + owned + "'");
  }
  return out;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
  BigReal out(prec);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::exp2i(long exponent, mpfr_prec_t prec) {
  BigReal out(prec);
  mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

void BigReal::set_precision(mpfr_prec_t prec) { mpfr_prec_round(value_, prec, MPFR_RNDN); }

BigReal BigReal::with_precision(mpfr_prec_t prec) const {
  BigReal out(prec);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string BigReal::to_decimal(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string BigReal::to_hex() const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%Ra", value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

namespace {

mpfr_prec_t joint(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(joint(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(joint(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(joint(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out(joint(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a) {
  BigReal out(a.precision());
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  if (mpfr_nan_p(a.value_) || b != b) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal BigReal::mul_si(long k) const {
  BigReal out(precision());
  mpfr_mul_si(out.value_, value_, k, MPFR_RNDN);
  return out;
}

BigReal BigReal::div_si(long k) const {
  BigReal out(precision());
  mpfr_div_si(out.value_, value_, k, MPFR_RNDN);
  return out;
}

BigReal BigReal::add_si(long k) const {
  BigReal out(precision());
  mpfr_add_si(out.value_, value_, k, MPFR_RNDN);
  return out;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal square(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sqr(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out(joint(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigReal root(const BigReal& x, unsigned long k) {
  BigReal out(x.precision());
  mpfr_rootn_ui(out.get(), x.get(), k, MPFR_RNDN);
  return out;
}

BigReal asinh(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_asinh(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal hypot(const BigReal& a, const BigReal& b) {
  BigReal out(joint(a, b));
  mpfr_hypot(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

const BigReal& max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }

const BigReal& min(const BigReal& a, const BigReal& b) { return (b < a) ? b : a; }

std::int64_t round_to_int64(const BigReal& x) {
  BigReal rounded(x.precision());
  mpfr_round(rounded.get(), x.get());
  if (!mpfr_fits_slong_p(rounded.get(), MPFR_RNDN)) {
    throw DomainError("value does not fit in a 64-bit integer: " + x.to_decimal(20));
  }
  return static_cast<std::int64_t>(mpfr_get_si(rounded.get(), MPFR_RNDN));
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigReal d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigComplex inverse(const BigComplex& z) {
  const BigReal d = norm(z);
  return {z.re / d, -z.im / d};
}

}  // namespace ushape
