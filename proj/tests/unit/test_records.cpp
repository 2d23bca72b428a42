#include <fstream>
#include <iterator>

#include "support.hpp"
#include "ushape/errors.hpp"
#include "ushape/records.hpp"

namespace ushape {
namespace {

using testing::big;
using testing::close;
using testing::ctx256;

std::string read_fixture(const char* name) {
  std::ifstream in(std::string(USHAPE_TEST_DATA) + "/" + name, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Algebra, InverseAndReduction) {
  const QuarticAlgebra alg(lps_polynomial(-9));
  const PowerBasisElement rho = alg.root();
  const PowerBasisElement one = alg.constant(1);
  EXPECT_EQ(alg.mul(rho, alg.inverse(rho)), one);
  const PowerBasisElement x = alg.add(rho, alg.mul(rho, rho));
  EXPECT_EQ(alg.mul(x, alg.inverse(x)), one);
  // ρ⁴ = -1 - 2ρ - 10ρ² - 9ρ³
  const PowerBasisElement rho4 = alg.mul(alg.mul(rho, rho), alg.mul(rho, rho));
  EXPECT_EQ(rho4, (PowerBasisElement{-1, -2, -10, -9}));
  EXPECT_THROW(alg.inverse(alg.constant(0)), DomainError);
}

TEST(Records, FixtureAcceptsAndRejects) {
  const ParseResult r = parse_records(read_fixture("records_sample.jsonl"), ctx256());
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0].label, "lps:-9");
  EXPECT_EQ(r.records[1].label, "nakamula:5");

  const std::vector<std::pair<std::size_t, std::string>> expected = {
      {5, "degenerate"}, {6, "non-monic"}, {7, "wrong-signature"},
      {8, "not-a-unit"}, {9, "malformed"}, {10, "malformed"},
  };
  ASSERT_EQ(r.rejects.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(r.rejects[i].line, expected[i].first);
    EXPECT_EQ(r.rejects[i].kind, expected[i].second) << r.rejects[i].message;
  }
  EXPECT_EQ(r.rejects[0].label, "unit-one");
  EXPECT_TRUE(r.rejects[4].label.empty());
}

TEST(Records, CrLfAndNoTrailingNewline) {
  const std::string one = serialize_record(record_from_member(nakamula_member(7, ctx256())));
  const ParseResult r = parse_records(one + "\r\n" + one, ctx256());
  EXPECT_EQ(r.records.size(), 2u);
  EXPECT_TRUE(r.rejects.empty());
}

TEST(Records, NakamulaRootUnit) {
  const ParseResult r = parse_records(read_fixture("records_sample.jsonl"), ctx256());
  const RecordEvaluation e = evaluate_record(r.records[1], ctx256());
  const FamilyMember m = nakamula_member(5, ctx256());
  const BigReal log_eps = log(m.witness.values[0].second);
  EXPECT_TRUE(close(e.u.l1, log_eps, 1e-72));
  EXPECT_TRUE(close(e.u.l2, -log_eps, 1e-72));
  EXPECT_LE(abs(e.u.l3), BigReal::exp2i(-240, 288));
  EXPECT_TRUE(close(e.real_roots[0], m.witness.values[0].second, 1e-72));
  EXPECT_GT(e.complex_root.im.sign(), 0);
}

TEST(Records, LpsMinusNineMatchesFamily) {
  const FamilyMember m = lps_member(-9, ctx256());
  const RecordEvaluation e = evaluate_record(record_from_member(m), ctx256());
  EXPECT_TRUE(close(e.shape.x, m.shape.x, 1e-70));
  EXPECT_TRUE(close(e.shape.y, m.shape.y, 1e-70));
  EXPECT_TRUE(close(e.reg_L, m.regulator.reg_L, 1e-70));
}

TEST(Records, RoundTripEveryFamily) {
  const auto& ctx = ctx256();
  const BigReal tol = BigReal::exp2i(-120, ctx.working_bits());
  for (const Family f : kAllFamilies) {
    for (const FamilyMember& m : sweep(f, 1, 40, ctx, 1)) {
      const std::string line = serialize_record(record_from_member(m));
      const ParseResult r = parse_records(line, ctx);
      ASSERT_EQ(r.records.size(), 1u) << line << (r.rejects.empty() ? "" : r.rejects[0].message);
      EXPECT_EQ(serialize_record(r.records[0]), line);
      const RecordEvaluation e = evaluate_record(r.records[0], ctx);
      EXPECT_LE(abs(e.shape.x - m.shape.x), tol) << line;
      EXPECT_LE(abs(e.shape.y - m.shape.y), tol * m.shape.y) << line;
    }
  }
}

TEST(Records, WrongSignatureFromRoots) {
  FieldRecord r = record_from_member(nakamula_member(5, ctx256()));
  r.poly = {24, -50, 35, -10, 1};
  EXPECT_THROW(evaluate_record(r, ctx256()), WrongSignature);
  r.poly = {1, 0, 0, 0, 1};  // x⁴ + 1: no real roots
  EXPECT_THROW(evaluate_record(r, ctx256()), WrongSignature);
}

TEST(Records, EscapeStudyNeedsOneSubfield) {
  const ParseResult r = parse_records(read_fixture("records_sample.jsonl"), ctx256());
  EXPECT_THROW(escape_study(r.records, ctx256()), MixedSubfields);
  const EscapeReport same = escape_study(std::vector<FieldRecord>{r.records[0], r.records[0]}, ctx256());
  EXPECT_EQ(same.subfield_label, "Q(sqrt(77))");
  EXPECT_GT(same.min_ratio.sign(), 0);
}

}  // namespace
}  // namespace ushape
