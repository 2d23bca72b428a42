#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ushape/bigreal.hpp"
#include "ushape/families.hpp"
#include "ushape/lattice.hpp"

namespace ushape {

struct ConvergenceSample {
  std::int64_t n = 0;
  ShapePoint shape;
  BigReal distance;   // hyperbolic distance to the claimed limit
  BigReal cos_theta;  // angle between the family basis vectors
  BoundaryClass boundary;
};

// value ≈ intercept + slope / log|n|
struct LinearFit {
  BigReal intercept;
  BigReal slope;
};

struct ConvergenceReport {
  Family family;
  ShapePoint claimed_limit;
  std::vector<ConvergenceSample> samples;  // ascending |n|
  LinearFit distance_fit;
  LinearFit cos_fit;
  // distance_fit.intercept; kept under the name the reports print.
  BigReal extrapolated_limit_distance;
};

// The limit point each family approaches.
ShapePoint claimed_limit(Family f, const PrecisionContext& ctx);
// Limit of the basis angle cosine: 0, -1/7, 1/2, 0.
BigReal claimed_cos_limit(Family f, const PrecisionContext& ctx);

// Least squares over (1/log|n|, value). Needs at least two distinct |n|.
LinearFit fit_inverse_log(const std::vector<std::int64_t>& ns, const std::vector<BigReal>& values);

// Sieved members with |n| ≤ n_max. Throws InsufficientSamples below 5 members.
ConvergenceReport convergence_study(Family f, std::int64_t n_max, const ShapePoint& limit,
                                    const PrecisionContext& ctx, unsigned threads = 1);
ConvergenceReport convergence_study(Family f, std::vector<FamilyMember> members, const ShapePoint& limit);

enum class Side { FromBelow, FromAbove, Mixed };
std::string side_name(Side s);

// Ignores the smallest 20% of samples by |n|.
Side side_of_approach(const ConvergenceReport& report, const BigReal& target_cos);

struct EscapeInput {
  std::string id;
  std::int64_t subfield_disc = 0;
  BigReal y;
  BigReal reg_L;
  BigReal disc_magnitude;
};

struct EscapeSample {
  std::string id;
  BigReal y;
  BigReal reg_L;
  BigReal disc_magnitude;
  BigReal ratio;  // y / √(log disc_magnitude)
};

struct EscapeReport {
  std::string subfield_label;  // "Q(sqrt(D))"
  std::vector<EscapeSample> samples;  // ascending disc_magnitude
  BigReal min_ratio;
};

// Throws InsufficientSamples below 2 inputs, MixedSubfields when the
// subfield discriminants differ, DomainError for disc_magnitude ≤ 1.
EscapeReport escape_study(const std::vector<EscapeInput>& inputs);

}  // namespace ushape
