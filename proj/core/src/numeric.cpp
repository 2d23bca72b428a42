#include "ushape/numeric.hpp"

#include <string>

#include "ushape/errors.hpp"

namespace ushape {

IntQuartic pure_quartic_polynomial(std::int64_t radicand) { return {-radicand, 0, 0, 0, 1}; }

IntQuartic lps_polynomial(std::int64_t n) { return {1, 2, 1 - n, -n, 1}; }

IntQuartic nakamula_polynomial(std::int64_t n) { return {1, -n, 3, -n, 1}; }

mpz_class quartic_discriminant(const std::array<mpz_class, 5>& c) {
  const mpz_class& e = c[0];
  const mpz_class& d = c[1];
  const mpz_class& cc = c[2];
  const mpz_class& b = c[3];
  const mpz_class& a = c[4];
  mpz_class r = 256 * a * a * a * e * e * e;
  r -= 192 * a * a * b * d * e * e;
  r -= 128 * a * a * cc * cc * e * e;
  r += 144 * a * a * cc * d * d * e;
  r -= 27 * a * a * d * d * d * d;
  r += 144 * a * b * b * cc * e * e;
  r -= 6 * a * b * b * d * d * e;
  r -= 80 * a * b * cc * cc * d * e;
  r += 18 * a * b * cc * d * d * d;
  r += 16 * a * cc * cc * cc * cc * e;
  r -= 4 * a * cc * cc * cc * d * d;
  r -= 27 * b * b * b * b * e * e;
  r += 18 * b * b * b * cc * d * e;
  r -= 4 * b * b * b * d * d * d;
  r -= 4 * b * b * cc * cc * cc * e;
  r += b * b * cc * cc * d * d;
  return r;
}

mpz_class quartic_discriminant(const IntQuartic& coeffs) {
  std::array<mpz_class, 5> big;
  for (std::size_t i = 0; i < 5; ++i) {
    big[i] = mpz_class(static_cast<long>(coeffs[i]));
  }
  return quartic_discriminant(big);
}

BigReal evaluate(const IntQuartic& poly, const BigReal& x) {
  BigReal acc(poly[4], x.precision());
  for (int i = 3; i >= 0; --i) {
    acc = acc * x + poly[static_cast<std::size_t>(i)];
  }
  return acc;
}

BigComplex evaluate(const IntQuartic& poly, const BigComplex& z) {
  const mpfr_prec_t prec = z.precision();
  BigComplex acc(BigReal(poly[4], prec), BigReal(prec));
  for (int i = 3; i >= 0; --i) {
    acc = acc * z;
    acc.re = acc.re + poly[static_cast<std::size_t>(i)];
  }
  return acc;
}

BigReal quartic_radical(std::int64_t n, std::int64_t d, int sign, const PrecisionContext& ctx) {
  if (n < 1 || d < 1 || (sign != 1 && sign != -1)) {
    throw DomainError("quartic_radical needs n >= 1, d >= 1, sign = ±1 (n=" + std::to_string(n) +
                      ", d=" + std::to_string(d) + ", sign=" + std::to_string(sign) + ")");
  }
  const mpz_class big_n(static_cast<long>(n));
  const mpz_class radicand = big_n * big_n * big_n * big_n + sign * mpz_class(static_cast<long>(d));
  if (radicand <= 0) {
    throw DomainError("n^4 ± d must be positive, got " + radicand.get_str());
  }
  return root(BigReal(radicand, ctx.working_bits()), 4);
}

BigReal radical_offset(std::int64_t n, std::int64_t d, int sign, const BigReal& omega) {
  const BigReal big_n(n, omega.precision());
  const BigReal denom = (omega + big_n) * (square(omega) + square(big_n));
  return BigReal(sign * d, omega.precision()) / denom;
}

ReciprocalQuarticRoots reciprocal_quartic_roots(std::int64_t n, const PrecisionContext& ctx) {
  if (n < 3) {
    throw DomainError("reciprocal_quartic_roots needs n >= 3, got " + std::to_string(n));
  }
  const mpfr_prec_t prec = ctx.working_bits();
  const BigReal big_n(n, prec);
  const BigReal disc = sqrt(square(big_n) - 4);

  ReciprocalQuarticRoots r;
  r.real_trace = (big_n + disc) / 2;
  r.complex_trace = BigReal(1, prec) / r.real_trace;

  r.epsilon = (r.real_trace + sqrt(square(r.real_trace) - 4)) / 2;
  r.epsilon_inv = BigReal(1, prec) / r.epsilon;

  const BigReal im = sqrt(BigReal(4, prec) - square(r.complex_trace)) / 2;
  const BigReal re = r.complex_trace / 2;
  r.eta = BigComplex(re, im);
  r.eta_inv = BigComplex(re, -im);
  return r;
}

LpsRoots lps_quadratic_roots(std::int64_t n, const PrecisionContext& ctx) {
  if (n > -5) {
    throw DomainError("lps_quadratic_roots needs n <= -5, got " + std::to_string(n));
  }
  const mpfr_prec_t prec = ctx.working_bits();
  const BigReal big_n(n, prec);

  LpsRoots r;
  r.epsilon = (-big_n + sqrt(square(big_n) - 4)) / 2;
  r.epsilon_bar = BigReal(1, prec) / r.epsilon;

  r.rho_large = (-r.epsilon - sqrt(square(r.epsilon) - 4 * r.epsilon)) / 2;
  r.rho_small = r.epsilon / r.rho_large;

  const BigReal& eb = r.epsilon_bar;
  r.rho_complex = BigComplex(-eb / 2, sqrt(eb * (BigReal(4, prec) - eb)) / 2);
  return r;
}

}  // namespace ushape
