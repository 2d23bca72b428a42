#include "ushape/analysis.hpp"

#include <algorithm>
#include <cstdlib>

#include "ushape/errors.hpp"

namespace ushape {

namespace {

constexpr std::size_t kMinStudySamples = 5;

}  // namespace

ShapePoint claimed_limit(Family f, const PrecisionContext& ctx) {
  switch (f) {
    case Family::StenderMinusOne:
      return limit_arc_point(ctx);
    case Family::Lps:
      return limit_rho(ctx);
    case Family::StenderCube:
    case Family::Nakamula:
      break;
  }
  return limit_i_sqrt3(ctx);
}

BigReal claimed_cos_limit(Family f, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  switch (f) {
    case Family::StenderMinusOne:
      return BigReal(-1, prec) / 7;
    case Family::Lps:
      return BigReal(0.5, prec);
    case Family::StenderCube:
    case Family::Nakamula:
      break;
  }
  return BigReal(0, prec);
}

LinearFit fit_inverse_log(const std::vector<std::int64_t>& ns, const std::vector<BigReal>& values) {
  if (ns.size() != values.size() || ns.size() < 2) {
    throw InsufficientSamples("a line fit needs at least two samples");
  }
  const mpfr_prec_t prec = values.front().precision();
  std::vector<BigReal> t;
  t.reserve(ns.size());
  for (const std::int64_t n : ns) {
    if (std::llabs(n) < 2) throw DomainError("fit needs |n| >= 2");
    t.push_back(BigReal(1, prec) / log(BigReal(std::llabs(n), prec)));
  }
  const auto count = static_cast<long>(ns.size());
  BigReal mean_t(prec);
  BigReal mean_v(prec);
  for (std::size_t i = 0; i < t.size(); ++i) {
    mean_t += t[i];
    mean_v += values[i];
  }
  mean_t /= BigReal(count, prec);
  mean_v /= BigReal(count, prec);
  BigReal sxy(prec);
  BigReal sxx(prec);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const BigReal dt = t[i] - mean_t;
    sxy += dt * (values[i] - mean_v);
    sxx += dt * dt;
  }
  if (sxx.is_zero()) {
    throw InsufficientSamples("a line fit needs at least two distinct |n|");
  }
  const BigReal slope = sxy / sxx;
  return {mean_v - slope * mean_t, slope};
}

ConvergenceReport convergence_study(Family f, std::int64_t n_max, const ShapePoint& limit,
                                    const PrecisionContext& ctx, unsigned threads) {
  return convergence_study(f, sweep(f, 1, n_max, ctx, threads), limit);
}

ConvergenceReport convergence_study(Family f, std::vector<FamilyMember> members, const ShapePoint& limit) {
  if (members.size() < kMinStudySamples) {
    throw InsufficientSamples(std::string(family_name(f)) + " study has " +
                              std::to_string(members.size()) + " members, needs " +
                              std::to_string(kMinStudySamples));
  }
  std::stable_sort(members.begin(), members.end(), [](const FamilyMember& a, const FamilyMember& b) {
    return std::llabs(a.n) < std::llabs(b.n);
  });

  ConvergenceReport report;
  report.family = f;
  report.claimed_limit = limit;
  std::vector<std::int64_t> ns;
  std::vector<BigReal> distances;
  std::vector<BigReal> cosines;
  for (const FamilyMember& m : members) {
    ConvergenceSample s;
    s.n = m.n;
    s.shape = m.shape;
    s.distance = hyperbolic_distance(m.shape, limit);
    s.cos_theta = m.witness.cos_theta;
    s.boundary = classify_boundary(m.shape);
    ns.push_back(m.n);
    distances.push_back(s.distance);
    cosines.push_back(s.cos_theta);
    report.samples.push_back(std::move(s));
  }
  report.distance_fit = fit_inverse_log(ns, distances);
  report.cos_fit = fit_inverse_log(ns, cosines);
  report.extrapolated_limit_distance = report.distance_fit.intercept;
  return report;
}

std::string side_name(Side s) {
  switch (s) {
    case Side::FromBelow:
      return "FromBelow";
    case Side::FromAbove:
      return "FromAbove";
    case Side::Mixed:
      return "Mixed";
  }
  return "Mixed";
}

Side side_of_approach(const ConvergenceReport& report, const BigReal& target_cos) {
  const std::size_t skip = report.samples.size() / 5;
  if (skip >= report.samples.size()) return Side::Mixed;
  bool below = true;
  bool above = true;
  for (std::size_t i = skip; i < report.samples.size(); ++i) {
    const BigReal& c = report.samples[i].cos_theta;
    below = below && c < target_cos;
    above = above && c > target_cos;
  }
  if (below) return Side::FromBelow;
  if (above) return Side::FromAbove;
  return Side::Mixed;
}

EscapeReport escape_study(const std::vector<EscapeInput>& inputs) {
  if (inputs.size() < 2) {
    throw InsufficientSamples("escape study needs at least two fields");
  }
  const std::int64_t subfield = inputs.front().subfield_disc;
  for (const EscapeInput& in : inputs) {
    if (in.subfield_disc != subfield) {
      throw MixedSubfields("fields have subfield discriminants " + std::to_string(subfield) + " and " +
                           std::to_string(in.subfield_disc));
    }
    if (in.disc_magnitude <= 1.0) {
      throw DomainError("field " + in.id + " has |disc| <= 1");
    }
  }

  EscapeReport out;
  out.subfield_label = "Q(sqrt(" + std::to_string(subfield) + "))";
  for (const EscapeInput& in : inputs) {
    out.samples.push_back({in.id, in.y, in.reg_L, in.disc_magnitude, in.y / sqrt(log(in.disc_magnitude))});
  }
  std::stable_sort(out.samples.begin(), out.samples.end(),
                   [](const EscapeSample& a, const EscapeSample& b) { return a.disc_magnitude < b.disc_magnitude; });
  out.min_ratio = out.samples.front().ratio;
  for (const EscapeSample& s : out.samples) {
    out.min_ratio = min(out.min_ratio, s.ratio);
  }
  return out;
}

}  // namespace ushape
