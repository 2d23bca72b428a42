#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ushape/bigreal.hpp"
#include "ushape/lattice.hpp"
#include "ushape/log_vector.hpp"
#include "ushape/numeric.hpp"
#include "ushape/units.hpp"

namespace ushape {

enum class Family { StenderCube, StenderMinusOne, Lps, Nakamula };

inline constexpr Family kAllFamilies[] = {Family::StenderCube, Family::StenderMinusOne, Family::Lps,
                                          Family::Nakamula};

// "stender-cube", "stender-minus-one", "lps", "nakamula"
std::string_view family_name(Family f);
// Throws DomainError for an unknown name.
Family parse_family(std::string_view name);

struct FamilyWitness {
  // Named embedding values (ω, ε, ρ, ...) in construction order.
  std::vector<std::pair<std::string, BigReal>> values;
  std::optional<BigReal> a1;
  std::optional<BigReal> a2;
  // cos of the angle between the two basis vectors, from the closed form
  // for the family (not from the Gram matrix).
  BigReal cos_theta;
  // |<b1, b2>| / (|b1|·|b2|), from the Gram matrix.
  BigReal orthogonality_residual;
  // Orthogonal families: |b2|/|b1| from the closed form.
  std::optional<BigReal> closed_form_ratio;
  bool ratio_below_one = false;
};

struct FamilyMember {
  Family family;
  std::int64_t n = 0;
  std::int64_t d = 0;  // StenderCube: n³, StenderMinusOne: 1, otherwise 0
  LogVector u;
  LogVector v;
  FamilyWitness witness;
  IntQuartic polynomial;    // defining polynomial of a generator
  mpz_class discriminant;   // its exact discriminant
  BigReal disc_estimate;    // |discriminant|
  std::int64_t subfield_disc = 0;  // discriminant of the real quadratic subfield
  ShapePoint shape;
  RegulatorReport regulator;  // reg_K always filled; Silverman bound for LPS
};

// Hypotheses of each family:
//   StenderCube      n prime, n + 1 squarefree
//   StenderMinusOne  n ≥ 2, n⁴ - 1 squarefree
//   Lps              n ≤ -5, (4n + 17)(n² - 4) squarefree
//   Nakamula         n > 3, n² - 4 and 25 - 4n² non-squares ≡ 1 mod 4 with
//                    different squarefree parts
bool sieve_accepts(Family f, std::int64_t n);

// All accepted n in [lo, hi], ordered by ascending |n|.
std::vector<std::int64_t> sieve(Family f, std::int64_t lo, std::int64_t hi);

// Parameter range for "|n| ≤ n_max" in the family's natural sign.
std::pair<std::int64_t, std::int64_t> family_range(Family f, std::int64_t n_min, std::int64_t n_max);

// Throw DomainError if n fails the sieve. stender_cube_member throws
// ExcludedCase when n⁴ + n³ ∈ {8, 12, 20}.
FamilyMember stender_cube_member(std::int64_t n, const PrecisionContext& ctx);
FamilyMember stender_minus_one_member(std::int64_t n, const PrecisionContext& ctx);
FamilyMember lps_member(std::int64_t n, const PrecisionContext& ctx);
FamilyMember nakamula_member(std::int64_t n, const PrecisionContext& ctx);

FamilyMember make_member(Family f, std::int64_t n, const PrecisionContext& ctx);

// Sieve plus member construction over |n| in [n_min, n_max], in sieve order.
std::vector<FamilyMember> sweep(Family f, std::int64_t n_min, std::int64_t n_max,
                                const PrecisionContext& ctx, unsigned threads);

}  // namespace ushape
