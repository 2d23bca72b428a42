#pragma once

#include <array>
#include <cstdint>

#include <gmpxx.h>

#include "ushape/bigreal.hpp"

namespace ushape {

// Monic integer quartic, coefficients in ascending degree: c[0] + c[1] x + ... + x^4.
using IntQuartic = std::array<std::int64_t, 5>;

// x^4 - radicand
IntQuartic pure_quartic_polynomial(std::int64_t radicand);
// x^4 - n x^3 + (1 - n) x^2 + 2x + 1 = (x^2 + εx + ε)(x^2 + ε̄x + ε̄), ε = (-n + √(n²-4))/2.
IntQuartic lps_polynomial(std::int64_t n);
// x^4 - n x^3 + 3x^2 - n x + 1
IntQuartic nakamula_polynomial(std::int64_t n);

// Exact discriminant of a x^4 + b x^3 + c x^2 + d x + e (coefficients ascending).
mpz_class quartic_discriminant(const std::array<mpz_class, 5>& coeffs);
mpz_class quartic_discriminant(const IntQuartic& coeffs);

BigReal evaluate(const IntQuartic& poly, const BigReal& x);
BigComplex evaluate(const IntQuartic& poly, const BigComplex& z);

// ω = (n^4 + sign·d)^(1/4) at ctx.working_bits().
// Throws DomainError unless n >= 1, d >= 1, sign = ±1 and the radicand is positive.
BigReal quartic_radical(std::int64_t n, std::int64_t d, int sign, const PrecisionContext& ctx);

// ω - n for ω = quartic_radical(n, d, sign), evaluated as sign·d / ((ω + n)(ω² + n²)).
// Direct subtraction would lose about 4·log2(n) bits.
BigReal radical_offset(std::int64_t n, std::int64_t d, int sign, const BigReal& omega);

// Roots of x^4 - n x^3 + 3x^2 - n x + 1 via y = x + 1/x, y^2 - n y + 1 = 0.
struct ReciprocalQuarticRoots {
  BigReal epsilon;      // real root, |ε| >= 1
  BigReal epsilon_inv;  // 1/ε
  BigComplex eta;       // complex root with Im > 0, |η| = 1
  BigComplex eta_inv;   // conj(η) = 1/η
  BigReal real_trace;     // ε + 1/ε = (n + √(n²-4))/2
  BigReal complex_trace;  // η + 1/η = (n - √(n²-4))/2
};

// Requires n >= 3 (so that one trace lies above 2 and the other below);
// the field-theoretic hypotheses (n odd, n > 3) are the caller's business.
ReciprocalQuarticRoots reciprocal_quartic_roots(std::int64_t n, const PrecisionContext& ctx);

// Roots of the two quadratic factors of lps_polynomial(n).
struct LpsRoots {
  BigReal epsilon;      // (-n + √(n²-4))/2 > 1
  BigReal epsilon_bar;  // (-n - √(n²-4))/2 = 1/ε
  BigReal rho_large;    // root of x² + εx + ε with the larger absolute value
  BigReal rho_small;    // ε / rho_large
  BigComplex rho_complex;  // root of x² + ε̄x + ε̄ with Im > 0
};

// Requires n <= -5. Throws DomainError otherwise.
LpsRoots lps_quadratic_roots(std::int64_t n, const PrecisionContext& ctx);

// Exact integer predicates. Trial division by a shared read-only prime table
// up to |m|^(1/3); the leftover cofactor has at most two prime factors, so it
// is squarefree exactly when it is not a perfect square.
bool is_squarefree(std::int64_t m);  // throws DomainError for m = 0
bool is_prime(std::int64_t n);       // deterministic Miller–Rabin; false below 2
bool is_perfect_square(std::int64_t m);
// Signed squarefree kernel: m = s·k² with s squarefree. Throws for m = 0.
std::int64_t squarefree_part(std::int64_t m);
// Discriminant of Q(√m) for non-square m.
std::int64_t quadratic_field_discriminant(std::int64_t m);

}  // namespace ushape
