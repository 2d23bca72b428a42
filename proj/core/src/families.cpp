#include "ushape/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ushape/errors.hpp"
#include "ushape/parallel.hpp"

namespace ushape {

namespace {

// n⁴ must fit comfortably in int64 for the exact predicates.
constexpr std::int64_t kMaxQuarticParameter = 50000;
// (4n + 17)(n² - 4) and friends stay far below 2^63 up to here.
constexpr std::int64_t kMaxQuadraticParameter = 1000000;

std::int64_t checked_pow4(std::int64_t n) {
  if (n < 0 || n > kMaxQuarticParameter) {
    throw DomainError("parameter " + std::to_string(n) + " is outside the supported range");
  }
  return n * n * n * n;
}

void check_quadratic_range(std::int64_t n) {
  if (n < -kMaxQuadraticParameter || n > kMaxQuadraticParameter) {
    throw DomainError("parameter " + std::to_string(n) + " is outside the supported range");
  }
}

void require_sieve(Family f, std::int64_t n) {
  if (!sieve_accepts(f, n)) {
    throw DomainError(std::string(family_name(f)) + " hypotheses fail for n = " + std::to_string(n));
  }
}

// Shared tail of every builder: Gram data, shape, regulators.
void finish(FamilyMember& m, const PrecisionContext& ctx) {
  const Gram2 g = gram_from_log_vectors(m.u, m.v, ctx);
  m.witness.orthogonality_residual = abs(g.g12) / sqrt(g.g11 * g.g22);
  m.shape = shape_from_gram(g, ctx);
  m.disc_estimate = BigReal(mpz_class(abs(m.discriminant)), ctx.working_bits());
  m.regulator = regulator_from_basis(m.u, m.v, ctx);
  m.regulator.reg_K = subfield_regulator(m.u, m.v, ctx);
  m.regulator.disc_magnitude = m.disc_estimate;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::StenderCube:
      return "stender-cube";
    case Family::StenderMinusOne:
      return "stender-minus-one";
    case Family::Lps:
      return "lps";
    case Family::Nakamula:
      return "nakamula";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

bool sieve_accepts(Family f, std::int64_t n) {
  switch (f) {
    case Family::StenderCube:
      if (n < 2) return false;
      check_quadratic_range(n);
      return is_prime(n) && is_squarefree(n + 1);
    case Family::StenderMinusOne:
      if (n < 2) return false;
      return is_squarefree(checked_pow4(n) - 1);
    case Family::Lps:
      if (n > -5) return false;
      check_quadratic_range(n);
      return is_squarefree((4 * n + 17) * (n * n - 4));
    case Family::Nakamula: {
      if (n <= 3) return false;
      check_quadratic_range(n);
      const std::int64_t a = n * n - 4;
      const std::int64_t b = 25 - 4 * n * n;
      auto mod4 = [](std::int64_t v) { return ((v % 4) + 4) % 4; };
      return !is_perfect_square(a) && mod4(a) == 1 && !is_perfect_square(b) && mod4(b) == 1 &&
             squarefree_part(a) != squarefree_part(b);
    }
  }
  return false;
}

std::vector<std::int64_t> sieve(Family f, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw DomainError("empty sieve range");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (sieve_accepts(f, n)) out.push_back(n);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](std::int64_t a, std::int64_t b) { return std::llabs(a) < std::llabs(b); });
  return out;
}

std::pair<std::int64_t, std::int64_t> family_range(Family f, std::int64_t n_min, std::int64_t n_max) {
  if (f == Family::Lps) return {-n_max, -n_min};
  return {n_min, n_max};
}

FamilyMember stender_cube_member(std::int64_t n, const PrecisionContext& ctx) {
  const std::int64_t radicand = checked_pow4(n) + n * n * n;
  if (radicand == 8 || radicand == 12 || radicand == 20) {
    throw ExcludedCase("n^4 + n^3 = " + std::to_string(radicand) + " is an excluded case");
  }
  require_sieve(Family::StenderCube, n);
  const mpfr_prec_t prec = ctx.working_bits();
  const std::int64_t d = n * n * n;

  FamilyMember m;
  m.family = Family::StenderCube;
  m.n = n;
  m.d = d;
  const BigReal omega = quartic_radical(n, d, 1, ctx);
  const BigReal offset = radical_offset(n, d, 1, omega);  // ω - n
  const BigReal big_n(n, prec);
  const BigReal plus = omega + big_n;
  const BigReal s = square(square(omega) + square(big_n)) / BigReal(d, prec);

  // u = (ω+n)/(ω-n) has |τ(u)| = 1; v₁ = n³/(ω²-n²)² is fixed by ω ↦ -ω.
  m.u = log_embedding(plus / offset, offset / plus, BigReal(1, prec), ctx);
  m.v = log_embedding(s, s, BigReal(1, prec) / s, ctx);

  m.witness.values = {{"omega", omega}, {"omega_minus_n", offset}, {"v1_real", s}};
  m.witness.cos_theta = BigReal(0, prec);
  m.witness.closed_form_ratio = sqrt(BigReal(3, prec)) * log(s) / (log(plus) - log(offset));

  m.polynomial = pure_quartic_polynomial(radicand);
  m.discriminant = quartic_discriminant(m.polynomial);
  m.subfield_disc = quadratic_field_discriminant(n * (n + 1));
  finish(m, ctx);
  return m;
}

FamilyMember stender_minus_one_member(std::int64_t n, const PrecisionContext& ctx) {
  require_sieve(Family::StenderMinusOne, n);
  const mpfr_prec_t prec = ctx.working_bits();
  const std::int64_t radicand = checked_pow4(n) - 1;

  FamilyMember m;
  m.family = Family::StenderMinusOne;
  m.n = n;
  m.d = 1;
  const BigReal omega = quartic_radical(n, 1, -1, ctx);
  const BigReal offset = abs(radical_offset(n, 1, -1, omega));  // |ω - n|
  const BigReal big_n(n, prec);
  const BigReal plus = omega + big_n;
  const BigReal circle = square(omega) + square(big_n);  // |iω + n|²

  m.u = log_embedding(plus, offset, sqrt(circle), ctx);
  m.v = log_embedding(offset, plus, sqrt(circle), ctx);

  const BigReal a = log(plus);
  const BigReal b = log(offset);
  const BigReal c = log(circle);
  m.witness.values = {{"omega", omega}, {"abs_omega_minus_n", offset}};
  m.witness.cos_theta = (2 * a * b + square(c)) / (square(a) + square(b) + square(c));

  m.polynomial = pure_quartic_polynomial(radicand);
  m.discriminant = quartic_discriminant(m.polynomial);
  m.subfield_disc = quadratic_field_discriminant(radicand);
  finish(m, ctx);
  return m;
}

FamilyMember lps_member(std::int64_t n, const PrecisionContext& ctx) {
  require_sieve(Family::Lps, n);
  const LpsRoots r = lps_quadratic_roots(n, ctx);

  FamilyMember m;
  m.family = Family::Lps;
  m.n = n;
  m.u = log_embedding(abs(r.rho_large), abs(r.rho_small), abs(r.rho_complex), ctx);
  m.v = galois_swap(m.u);

  const BigReal& a1 = m.u.l1;
  const BigReal& a2 = m.u.l2;
  const BigReal s = a1 + a2;
  m.witness.values = {{"epsilon", r.epsilon},
                      {"rho_large", r.rho_large},
                      {"rho_small", r.rho_small},
                      {"rho_complex_re", r.rho_complex.re},
                      {"rho_complex_im", r.rho_complex.im}};
  m.witness.a1 = a1;
  m.witness.a2 = a2;
  m.witness.cos_theta = (2 * a1 * a2 + square(s)) / (square(a1) + square(a2) + square(s));

  m.polynomial = lps_polynomial(n);
  m.discriminant = quartic_discriminant(m.polynomial);
  m.subfield_disc = quadratic_field_discriminant(n * n - 4);
  finish(m, ctx);
  m.regulator.silverman_bound = silverman_lower_bound(m.disc_estimate, 4, 2, 1);
  return m;
}

FamilyMember nakamula_member(std::int64_t n, const PrecisionContext& ctx) {
  require_sieve(Family::Nakamula, n);
  const mpfr_prec_t prec = ctx.working_bits();
  const ReciprocalQuarticRoots r = reciprocal_quartic_roots(n, ctx);

  FamilyMember m;
  m.family = Family::Nakamula;
  m.n = n;
  // ρ and ρ + ρ⁻¹; the latter lies in the quadratic subfield.
  m.u = log_embedding(r.epsilon, r.epsilon_inv, abs(r.eta), ctx);
  m.v = log_embedding(r.real_trace, r.real_trace, r.complex_trace, ctx);

  m.witness.values = {{"epsilon", r.epsilon},
                      {"epsilon_plus_inverse", r.real_trace},
                      {"eta_re", r.eta.re},
                      {"eta_im", r.eta.im}};
  m.witness.cos_theta = BigReal(0, prec);
  const BigReal ratio = sqrt(BigReal(3, prec)) * log(r.real_trace) / log(r.epsilon);
  m.witness.ratio_below_one = ratio < 1.0;
  m.witness.closed_form_ratio = ratio;

  m.polynomial = nakamula_polynomial(n);
  m.discriminant = quartic_discriminant(m.polynomial);
  m.subfield_disc = quadratic_field_discriminant(n * n - 4);
  finish(m, ctx);
  return m;
}

FamilyMember make_member(Family f, std::int64_t n, const PrecisionContext& ctx) {
  switch (f) {
    case Family::StenderCube:
      return stender_cube_member(n, ctx);
    case Family::StenderMinusOne:
      return stender_minus_one_member(n, ctx);
    case Family::Lps:
      return lps_member(n, ctx);
    case Family::Nakamula:
      return nakamula_member(n, ctx);
  }
  throw DomainError("unknown family");
}

std::vector<FamilyMember> sweep(Family f, std::int64_t n_min, std::int64_t n_max,
                                const PrecisionContext& ctx, unsigned threads) {
  const auto [lo, hi] = family_range(f, n_min, n_max);
  if (lo > hi) return {};
  const std::vector<std::int64_t> ns = sieve(f, lo, hi);
  return parallel_map(ns, [&](std::int64_t n) { return make_member(f, n, ctx); }, threads);
}

}  // namespace ushape
