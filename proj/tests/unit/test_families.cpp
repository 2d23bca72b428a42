#include <string>

#include "oracle_values.hpp"
#include "support.hpp"
#include "ushape/errors.hpp"
#include "ushape/families.hpp"

namespace ushape {
namespace {

using testing::big;
using testing::close;
using testing::ctx256;

TEST(FamilyNames, RoundTrip) {
  for (const Family f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("stender"), DomainError);
}

TEST(Sieve, DocumentedExamples) {
  EXPECT_EQ(sieve(Family::StenderMinusOne, 2, 6), (std::vector<std::int64_t>{2, 4, 6}));
  EXPECT_EQ(sieve(Family::Lps, -9, -5), (std::vector<std::int64_t>{-9}));
  EXPECT_EQ(sieve(Family::StenderCube, 2, 6), (std::vector<std::int64_t>{2, 5}));
}

TEST(Sieve, MatchesFactorizationOracle) {
  for (const auto& o : oracle::kSieves) {
    const Family f = parse_family(o.family);
    EXPECT_EQ(sieve(f, o.lo, o.hi), o.accepted) << o.family;
    for (const std::int64_t n : o.accepted) EXPECT_TRUE(sieve_accepts(f, n));
  }
}

TEST(Sieve, OrderAndRange) {
  const auto [lo, hi] = family_range(Family::Lps, 1, 100);
  EXPECT_EQ(lo, -100);
  EXPECT_EQ(hi, -1);
  const auto ns = sieve(Family::Lps, lo, hi);
  ASSERT_FALSE(ns.empty());
  for (std::size_t i = 1; i < ns.size(); ++i) EXPECT_LT(std::llabs(ns[i - 1]), std::llabs(ns[i]));
  EXPECT_TRUE(sieve(Family::Nakamula, 4, 4).empty());
}

TEST(Members, MatchIndependentEmbeddingOracle) {
  const auto& ctx = ctx256();
  for (const auto& o : oracle::kMembers) {
    SCOPED_TRACE(std::string(o.family) + " n=" + std::to_string(o.n));
    const FamilyMember m = make_member(parse_family(o.family), o.n, ctx);
    EXPECT_TRUE(close(m.shape.x, big(o.x), 1e-42));
    EXPECT_TRUE(close(m.shape.y, big(o.y), 1e-42));
    EXPECT_TRUE(close(m.witness.cos_theta, big(o.cos_theta), 1e-42));
    EXPECT_TRUE(close(m.regulator.reg_L, big(o.reg_L), 1e-42));
    EXPECT_EQ(m.discriminant.get_str(), o.disc);
    EXPECT_TRUE(close(m.u.l1, big(o.u[0]), 1e-42));
    EXPECT_TRUE(close(m.u.l2, big(o.u[1]), 1e-42));
    EXPECT_TRUE(close(m.u.l3, big(o.u[2]), 1e-42));
    EXPECT_TRUE(close(m.v.l1, big(o.v[0]), 1e-42));
    EXPECT_TRUE(close(m.v.l2, big(o.v[1]), 1e-42));
    EXPECT_TRUE(close(m.v.l3, big(o.v[2]), 1e-42));
  }
}

TEST(Members, StenderCubeFive) {
  const FamilyMember m = stender_cube_member(5, ctx256());
  EXPECT_TRUE(close(m.shape.y, big(1.4149), 1e-4));
  EXPECT_EQ(classify_boundary(m.shape).kind, BoundaryClass::Kind::LeftLine);
  EXPECT_EQ(m.d, 125);
  // second vector (c, c, -2c)
  EXPECT_EQ(m.v.l1, m.v.l2);
  EXPECT_TRUE(close(m.v.l3, -2 * m.v.l1, 1e-72));
  EXPECT_LE(m.witness.orthogonality_residual, BigReal::exp2i(-240, 288));
  EXPECT_TRUE(close(*m.witness.closed_form_ratio, m.shape.y, 1e-70));
  EXPECT_THROW(stender_cube_member(3, ctx256()), DomainError);
  EXPECT_THROW(stender_cube_member(7, ctx256()), DomainError);  // 8 = 2³
}

TEST(Members, StenderMinusOneSix) {
  const FamilyMember m = stender_minus_one_member(6, ctx256());
  EXPECT_TRUE(close(m.witness.cos_theta, big(-0.2182), 1e-3));
  EXPECT_TRUE(close(norm2(m.u), norm2(m.v), 1e-72));
  EXPECT_EQ(classify_boundary(m.shape).kind, BoundaryClass::Kind::LowerArc);
  EXPECT_THROW(stender_minus_one_member(3, ctx256()), DomainError);  // 80
}

TEST(Members, LpsMinusNine) {
  const FamilyMember m = lps_member(-9, ctx256());
  ASSERT_TRUE(m.witness.a1 && m.witness.a2);
  EXPECT_TRUE(close(*m.witness.a1, big(2.0464), 1e-4));
  // a₂ is the log of the true second real conjugate, which is positive
  EXPECT_TRUE(close(*m.witness.a2, big(0.13834), 1e-4));
  EXPECT_TRUE(close(m.witness.cos_theta, big(0.594594), 1e-5));
  EXPECT_EQ(m.discriminant, -112651);
  ASSERT_TRUE(m.regulator.silverman_bound.has_value());
  EXPECT_LT(*m.regulator.silverman_bound, m.regulator.reg_L);
  EXPECT_EQ(m.subfield_disc, 77);
  EXPECT_THROW(lps_member(-11, ctx256()), DomainError);
}

TEST(Members, NakamulaFive) {
  const FamilyMember m = nakamula_member(5, ctx256());
  EXPECT_TRUE(close(m.shape.y, big(1.7852), 1e-4));
  EXPECT_TRUE(close(*m.witness.closed_form_ratio, m.shape.y, 1e-70));
  EXPECT_FALSE(m.witness.ratio_below_one);
  EXPECT_LE(abs(dot(m.u, m.v)), BigReal::exp2i(-240, 288) * length(m.u) * length(m.v));
  EXPECT_EQ(m.subfield_disc, 21);
  EXPECT_THROW(nakamula_member(6, ctx256()), DomainError);
}

TEST(Members, WitnessCosineAgreesWithGram) {
  const auto& ctx = ctx256();
  const BigReal tol = BigReal::exp2i(-240, ctx.working_bits());
  for (const Family f : kAllFamilies) {
    for (const FamilyMember& m : sweep(f, 1, 60, ctx, 1)) {
      const BigReal gram_cos = dot(m.u, m.v) / (length(m.u) * length(m.v));
      EXPECT_LE(abs(gram_cos - m.witness.cos_theta), tol) << family_name(f) << ' ' << m.n;
      const BigReal sum_u = m.u.l1 + m.u.l2 + m.u.l3;
      EXPECT_LE(abs(sum_u), tol * length(m.u));
    }
  }
}

TEST(Members, BoundaryClassPerFamily) {
  const auto& ctx = ctx256();
  const std::pair<Family, BoundaryClass::Kind> expected[] = {
      {Family::StenderCube, BoundaryClass::Kind::LeftLine},
      {Family::StenderMinusOne, BoundaryClass::Kind::LowerArc},
      {Family::Lps, BoundaryClass::Kind::RightLine},
      {Family::Nakamula, BoundaryClass::Kind::LeftLine},
  };
  for (const auto& [f, kind] : expected) {
    for (const FamilyMember& m : sweep(f, 1, 200, ctx, 1)) {
      EXPECT_EQ(classify_boundary(m.shape).kind, kind) << family_name(f) << ' ' << m.n;
    }
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const auto& ctx = ctx256();
  const auto one = sweep(Family::Lps, 1, 400, ctx, 1);
  const auto many = sweep(Family::Lps, 1, 400, ctx, 4);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].n, many[i].n);
    EXPECT_EQ(one[i].shape.x.to_hex(), many[i].shape.x.to_hex());
    EXPECT_EQ(one[i].shape.y.to_hex(), many[i].shape.y.to_hex());
  }
}

TEST(Sweep, RangeGuard) {
  EXPECT_THROW(sweep(Family::StenderMinusOne, 60000, 60010, ctx256(), 1), DomainError);
  EXPECT_TRUE(sweep(Family::Nakamula, 1, 3, ctx256(), 1).empty());
}

}  // namespace
}  // namespace ushape
