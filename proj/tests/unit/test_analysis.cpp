#include "support.hpp"
#include "ushape/analysis.hpp"
#include "ushape/errors.hpp"
#include "ushape/verify.hpp"

namespace ushape {
namespace {

using testing::big;
using testing::close;
using testing::ctx256;

ConvergenceReport synthetic(const std::vector<double>& cosines) {
  ConvergenceReport r;
  r.family = Family::Lps;
  std::int64_t n = 10;
  for (const double c : cosines) {
    ConvergenceSample s;
    s.n = n++;
    s.cos_theta = big(c);
    r.samples.push_back(std::move(s));
  }
  return r;
}

TEST(Limits, ClaimedPoints) {
  const auto& ctx = ctx256();
  EXPECT_TRUE(close(claimed_limit(Family::Nakamula, ctx).y, sqrt(big(3.0)), 1e-75));
  EXPECT_TRUE(close(claimed_limit(Family::StenderCube, ctx).y, sqrt(big(3.0)), 1e-75));
  EXPECT_EQ(claimed_limit(Family::Lps, ctx).x, 0.5);
  EXPECT_TRUE(close(claimed_limit(Family::StenderMinusOne, ctx).x, big(1.0) / 7, 1e-75));
  EXPECT_TRUE(close(claimed_cos_limit(Family::StenderMinusOne, ctx), big(-1.0) / 7, 1e-75));
  EXPECT_EQ(claimed_cos_limit(Family::Lps, ctx), 0.5);
  EXPECT_TRUE(claimed_cos_limit(Family::Nakamula, ctx).is_zero());
}

TEST(Fit, RecoversExactLine) {
  std::vector<std::int64_t> ns;
  std::vector<BigReal> vs;
  for (const std::int64_t n : {3, 10, 50, 400, 9000}) {
    ns.push_back(n);
    vs.push_back(big(2.0) + big(3.0) / log(big(static_cast<double>(n))));
  }
  const LinearFit f = fit_inverse_log(ns, vs);
  EXPECT_TRUE(close(f.intercept, big(2.0), 1e-70));
  EXPECT_TRUE(close(f.slope, big(3.0), 1e-70));

  // sign of n is irrelevant
  for (auto& n : ns) n = -n;
  EXPECT_TRUE(close(fit_inverse_log(ns, vs).intercept, big(2.0), 1e-70));
}

TEST(Fit, NeedsDistinctSamples) {
  EXPECT_THROW(fit_inverse_log({5}, {big(1.0)}), InsufficientSamples);
  EXPECT_THROW(fit_inverse_log({5, -5}, {big(1.0), big(2.0)}), InsufficientSamples);
  EXPECT_THROW(fit_inverse_log({1, 5}, {big(1.0), big(2.0)}), DomainError);
}

TEST(Study, TooFewMembers) {
  const auto& ctx = ctx256();
  EXPECT_THROW(convergence_study(Family::Nakamula, 4, claimed_limit(Family::Nakamula, ctx), ctx),
               InsufficientSamples);
  EXPECT_THROW(convergence_study(Family::Nakamula, 11, claimed_limit(Family::Nakamula, ctx), ctx),
               InsufficientSamples);
}

TEST(Study, NakamulaApproachesRootThree) {
  const auto& ctx = ctx256();
  const ConvergenceReport r = convergence_study(Family::Nakamula, 1000, claimed_limit(Family::Nakamula, ctx), ctx);
  ASSERT_GE(r.samples.size(), 5u);
  EXPECT_LT(r.samples.back().distance, r.samples.front().distance);
  EXPECT_LE(abs(r.distance_fit.intercept), 0.02);
  EXPECT_EQ(r.extrapolated_limit_distance, r.distance_fit.intercept);
  for (std::size_t i = 1; i < r.samples.size(); ++i) {
    EXPECT_LT(std::llabs(r.samples[i - 1].n), std::llabs(r.samples[i].n));
    EXPECT_GE(r.samples[i].distance.sign(), 0);
  }
  EXPECT_TRUE(check_limit(r, ctx).ok());
}

TEST(Study, MinusOneSideIsRecorded) {
  const auto& ctx = ctx256();
  const ConvergenceReport r =
      convergence_study(Family::StenderMinusOne, 500, claimed_limit(Family::StenderMinusOne, ctx), ctx);
  // cosθ climbs toward -1/7: -0.29 at n = 2, -0.20 at n = 12
  EXPECT_EQ(side_of_approach(r, claimed_cos_limit(Family::StenderMinusOne, ctx)), Side::FromBelow);
}

TEST(Side, Definitions) {
  const BigReal half = big(0.5);
  // first 20% ignored
  EXPECT_EQ(side_of_approach(synthetic({0.9, 0.4, 0.45, 0.49, 0.499}), half), Side::FromBelow);
  EXPECT_EQ(side_of_approach(synthetic({0.1, 0.6, 0.55, 0.51, 0.501}), half), Side::FromAbove);
  EXPECT_EQ(side_of_approach(synthetic({0.5, 0.5, 0.5, 0.5, 0.5}), half), Side::Mixed);
  EXPECT_EQ(side_of_approach(synthetic({0.4, 0.4, 0.6, 0.4, 0.4}), half), Side::Mixed);
  EXPECT_EQ(side_name(Side::FromBelow), "FromBelow");
}

TEST(Escape, HandArithmetic) {
  const mpfr_prec_t prec = ctx256().working_bits();
  std::vector<EscapeInput> in = {
      {"b", 5, big(3.0), big(1.0), exp(BigReal(9, prec))},
      {"a", 5, big(2.0), big(1.0), exp(BigReal(4, prec))},
  };
  const EscapeReport r = escape_study(in);
  EXPECT_EQ(r.subfield_label, "Q(sqrt(5))");
  ASSERT_EQ(r.samples.size(), 2u);
  EXPECT_EQ(r.samples.front().id, "a");
  EXPECT_TRUE(close(r.min_ratio, big(1.0), 1e-70));

  in[1].subfield_disc = 8;
  EXPECT_THROW(escape_study(in), MixedSubfields);
  EXPECT_THROW(escape_study({in[0]}), InsufficientSamples);
  in[1].subfield_disc = 5;
  in[1].disc_magnitude = big(1.0);
  EXPECT_THROW(escape_study(in), DomainError);
}

}  // namespace
}  // namespace ushape
