// Acceptance checks, one line per criterion:
//   ushape_acceptance               run all twelve
//   ushape_acceptance --criterion 5 run one
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ushape/analysis.hpp"
#include "ushape/cli.hpp"
#include "ushape/families.hpp"
#include "ushape/output.hpp"
#include "ushape/records.hpp"
#include "ushape/units.hpp"
#include "ushape/verify.hpp"

using namespace ushape;

namespace {

constexpr std::int64_t kLimitNMax = 10000;
constexpr std::int64_t kBoundaryNMax = 2000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const PrecisionContext& ctx256() {
  static const PrecisionContext c = PrecisionContext::with_bits(256);
  return c;
}

std::string num(const BigReal& v, int digits = 6) { return v.to_decimal(digits); }

Outcome boundary_theorem() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  std::size_t interior = 0;
  std::ostringstream where;
  for (const Family f : kAllFamilies) {
    const auto members = sweep(f, 1, kBoundaryNMax, ctx256(), 0);
    total += members.size();
    for (const FamilyMember& m : members) {
      if (!classify_boundary(m.shape).is_boundary()) {
        ++interior;
        where << ' ' << family_name(f) << ':' << m.n;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << "fields=" << total << " interior=" << interior << where.str() << " time=" << static_cast<int>(secs) << "s";
  return {interior == 0 && total >= 50 && secs < 120, d.str()};
}

ConvergenceReport study(Family f, const PrecisionContext& ctx) {
  return convergence_study(f, kLimitNMax, claimed_limit(f, ctx), ctx, 0);
}

Outcome distance_limit(Family f) {
  const ConvergenceReport r = study(f, ctx256());
  const auto& first = r.samples.front();
  const auto& last = r.samples.back();
  const bool endpoint = last.distance < first.distance;
  const bool intercept = abs(r.distance_fit.intercept) <= 0.02;
  std::ostringstream d;
  d << "members=" << r.samples.size() << " d(n=" << first.n << ")=" << num(first.distance) << " d(n=" << last.n
    << ")=" << num(last.distance) << " A=" << num(r.distance_fit.intercept) << " (|A|<=0.02 "
    << (intercept ? "yes" : "no") << ")";
  return {endpoint && intercept, d.str()};
}

Outcome cube_limit() { return distance_limit(Family::StenderCube); }

Outcome nakamula_limit() {
  Outcome o = distance_limit(Family::Nakamula);
  const auto& ctx = ctx256();
  const BigReal tol = BigReal::exp2i(-240, ctx.working_bits());
  BigReal worst(ctx.working_bits());
  for (const FamilyMember& m : sweep(Family::Nakamula, 1, kLimitNMax, ctx, 0)) {
    worst = max(worst, abs(dot(m.u, m.v)) / (length(m.u) * length(m.v)));
  }
  o.pass = o.pass && worst <= tol;
  o.detail += " max|u.v|/(|u||v|)=" + worst.to_decimal(3);
  return o;
}

Outcome arc_limit() {
  const auto& ctx = ctx256();
  const ConvergenceReport r = study(Family::StenderMinusOne, ctx);
  const BigReal target = claimed_cos_limit(Family::StenderMinusOne, ctx);
  const auto& first = r.samples.front();
  const auto& last = r.samples.back();
  const bool last_ok = abs(last.cos_theta - target) <= 0.15;
  const bool endpoint = abs(last.cos_theta - target) < abs(first.cos_theta - target);
  const bool intercept = abs(r.cos_fit.intercept - target) <= 0.01;
  std::size_t off_arc = 0;
  for (const auto& s : r.samples) off_arc += s.boundary.kind != BoundaryClass::Kind::LowerArc;
  std::ostringstream d;
  d << "members=" << r.samples.size() << " cos(n=" << first.n << ")=" << num(first.cos_theta) << " cos(n=" << last.n
    << ")=" << num(last.cos_theta) << " cosA=" << num(r.cos_fit.intercept) << " off_arc=" << off_arc;
  return {last_ok && endpoint && intercept && off_arc == 0, d.str()};
}

Outcome rho_limit() {
  const auto& ctx = ctx256();
  const ConvergenceReport r = study(Family::Lps, ctx);
  const BigReal target = claimed_cos_limit(Family::Lps, ctx);
  const Side side = side_of_approach(r, target);
  const bool intercept = abs(r.cos_fit.intercept - target) <= 0.01;
  std::ostringstream d;
  d << "members=" << r.samples.size() << " side=" << side_name(side) << " cos(n=" << r.samples.back().n
    << ")=" << num(r.samples.back().cos_theta) << " cosA=" << num(r.cos_fit.intercept) << " (within 0.01 "
    << (intercept ? "yes" : "no") << ")";
  return {side == Side::FromBelow && intercept, d.str()};
}

Outcome reduction_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult r = run_suite(Suite::ReductionOracle, 0, ctx256(), 0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string d = r.report.substr(0, r.report.find('\n'));
  d += " time=" + std::to_string(static_cast<int>(secs)) + "s";
  return {r.ok && secs < 60, d};
}

// Uniform-ish over GL2(Z) with entries in [-20, 20], the same box the
// brute-force reduction oracle searches. Larger entries cost about
// 4*log2|entry| bits when the transformed Gram is rounded, which is input
// noise, not reduction error.
Unimodular random_unimodular(std::mt19937_64& rng) {
  constexpr long kBound = 20;
  std::uniform_int_distribution<long> entry(-kBound, kBound);
  for (;;) {
    const long a = entry(rng);
    const long c = entry(rng);
    // extended Euclid: a*d0 - c*b0 = g
    long r0 = a, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
      std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (r0 != 1 && r0 != -1) continue;
    const long d0 = s0 * r0;
    const long b0 = -t0 * r0;
    std::vector<long> ks;
    for (long k = -2 * kBound; k <= 2 * kBound; ++k) {
      if (std::labs(b0 + k * a) <= kBound && std::labs(d0 + k * c) <= kBound) ks.push_back(k);
    }
    if (ks.empty()) continue;
    const long k = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
    Unimodular u{a, b0 + k * a, c, d0 + k * c};
    if (rng() & 1) u = u.then(Unimodular{1, 0, 0, -1});
    return u;
  }
}

Outcome invariance() {
  const auto& ctx = ctx256();
  const mpfr_prec_t prec = ctx.working_bits();
  const BigReal tol = BigReal::exp2i(-240, prec);
  std::vector<Gram2> lattices = random_grams(1000, 4242, ctx);
  std::vector<LogVector> vectors;
  for (const Family f : kAllFamilies) {
    for (const FamilyMember& m : sweep(f, 1, 200, ctx, 0)) {
      lattices.push_back(gram_from_log_vectors(m.u, m.v, ctx));
      vectors.push_back(m.u);
      vectors.push_back(m.v);
    }
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logscale(-20, 20);
  std::size_t moved = 0;
  BigReal worst(prec);
  for (const Gram2& g : lattices) {
    const ShapePoint base = shape_from_gram(g, ctx);
    for (int k = 0; k < 20; ++k) {
      const Unimodular t = random_unimodular(rng);
      const BigReal scale = exp(BigReal(logscale(rng), prec));
      const ShapePoint p = shape_from_gram(transform(g, t).scaled(scale), ctx);
      const BigReal gap = max(abs(p.x - base.x), abs(p.y - base.y)) / base.y;
      worst = max(worst, gap);
      moved += gap > tol;
    }
  }
  std::size_t swap_bad = 0;
  for (const LogVector& v : vectors) {
    const LogVector s = galois_swap(v);
    const LogVector ss = galois_swap(s);
    swap_bad += !(ss.l1 == v.l1 && ss.l2 == v.l2 && ss.l3 == v.l3 && norm2(s) == norm2(v));
  }
  std::ostringstream d;
  d << "lattices=" << lattices.size() << " transforms=" << lattices.size() * 20 << " moved=" << moved
    << " max_rel=" << worst.to_decimal(3) << " swap_failures=" << swap_bad << '/' << vectors.size();
  return {moved == 0 && swap_bad == 0, d.str()};
}

Outcome regulator_identity() {
  const auto& ctx = ctx256();
  const mpfr_prec_t prec = ctx.working_bits();
  const BigReal tol = BigReal::exp2i(-120, prec);
  const BigReal root3 = sqrt(BigReal(3, prec));
  std::size_t count = 0;
  std::size_t bad = 0;
  BigReal worst(prec);
  for (const Family f : kAllFamilies) {
    for (const FamilyMember& m : sweep(f, 1, kLimitNMax, ctx, 0)) {
      ++count;
      const BigReal gap = abs(m.regulator.covol - root3 * m.regulator.reg_L) / m.regulator.covol;
      worst = max(worst, gap);
      bad += gap > tol;
    }
  }
  std::ostringstream d;
  d << "members=" << count << " violations=" << bad << " max_rel=" << worst.to_decimal(3);
  return {bad == 0 && count > 0, d.str()};
}

Outcome silverman() {
  const SuiteResult r = run_suite(Suite::Silverman, kLimitNMax, ctx256(), 0);
  return {r.ok, r.report.substr(0, r.report.find('\n'))};
}

// x, y, cosθ at 256 and 512 bits. Coordinates that are zero up to round-off
// are compared against the size of the point, cosθ against 1.
Outcome precision_stability() {
  const PrecisionContext hi = PrecisionContext::with_bits(512);
  const BigReal tol = BigReal::exp2i(-200, hi.working_bits());
  std::size_t count = 0;
  std::size_t bad = 0;
  BigReal worst(hi.working_bits());
  auto rel = [](const BigReal& a, const BigReal& b, const BigReal& scale) {
    return abs(a - b) / max(max(abs(a), abs(b)), scale);
  };
  for (const Family f : kAllFamilies) {
    const auto lo_members = sweep(f, 1, kLimitNMax, ctx256(), 0);
    const auto hi_members = sweep(f, 1, kLimitNMax, hi, 0);
    for (std::size_t i = 0; i < lo_members.size(); ++i) {
      const FamilyMember& a = lo_members[i];
      const FamilyMember& b = hi_members[i];
      const BigReal size = hypot(b.shape.x, b.shape.y);
      const BigReal one(1, hi.working_bits());
      const BigReal gap = max(max(rel(a.shape.x, b.shape.x, size), rel(a.shape.y, b.shape.y, size)),
                              rel(a.witness.cos_theta, b.witness.cos_theta, one));
      worst = max(worst, gap);
      bad += gap > tol;
      ++count;
    }
  }
  std::ostringstream d;
  d << "members=" << count << " changed=" << bad << " max_rel=" << worst.to_decimal(3);
  return {bad == 0, d.str()};
}

Outcome ingestion_round_trip() {
  const auto& ctx = ctx256();
  const BigReal tol = BigReal::exp2i(-120, ctx.working_bits());
  std::size_t count = 0;
  std::size_t bad = 0;
  BigReal worst(ctx.working_bits());
  for (const Family f : {Family::Lps, Family::Nakamula}) {
    const auto members = sweep(f, 1, kLimitNMax, ctx, 0);
    std::string text;
    for (const FamilyMember& m : members) text += serialize_record(record_from_member(m)) + '\n';
    const ParseResult parsed = parse_records(text, ctx);
    bad += parsed.rejects.size();
    for (std::size_t i = 0; i < parsed.records.size() && i < members.size(); ++i) {
      const RecordEvaluation e = evaluate_record(parsed.records[i], ctx);
      const ShapePoint& p = members[i].shape;
      const BigReal gap = max(abs(e.shape.x - p.x), abs(e.shape.y - p.y)) / p.y;
      worst = max(worst, gap);
      bad += gap > tol;
      ++count;
    }
  }
  std::ostringstream d;
  d << "records=" << count << " mismatches=" << bad << " max_rel=" << worst.to_decimal(3);
  return {bad == 0 && count > 0, d.str()};
}

std::string cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "ushape");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome determinism() {
  std::vector<std::vector<std::string>> commands;
  for (const char* suite : {"boundary", "limits", "orthogonality", "silverman", "reduction-oracle"}) {
    commands.push_back({"verify", "--suite", suite, "--n-max", "2000"});
  }
  for (const char* fam : {"stender-cube", "stender-minus-one", "lps", "nakamula"}) {
    commands.push_back({"family", "--name", fam, "--n-max", "2000"});
  }
  std::size_t diffs = 0;
  for (const auto& c : commands) {
    auto with_threads = [&](const char* t) {
      std::vector<std::string> args{"--threads", t};
      args.insert(args.end(), c.begin(), c.end());
      int code = 0;
      const std::string out = cli(args, code);
      return std::to_string(code) + '\n' + out;
    };
    const std::string a = with_threads("1");
    const std::string b = with_threads("1");
    const std::string p = with_threads("8");
    diffs += (a != b) + (a != p);
  }
  std::ostringstream d;
  d << "commands=" << commands.size() << " runs=" << commands.size() * 3 << " differing=" << diffs;
  return {diffs == 0, d.str()};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"boundary membership, all families |n| <= 2000", boundary_theorem},
      {"limit i*sqrt(3), stender-cube", cube_limit},
      {"limit i*sqrt(3), nakamula, orthogonal basis", nakamula_limit},
      {"limit 1/7 + 4i*sqrt(3)/7, stender-minus-one", arc_limit},
      {"limit 1/2 + i*sqrt(3)/2 from below, lps", rho_limit},
      {"reduction agrees with exhaustive search", reduction_oracle},
      {"shape invariant under basis change and scaling", invariance},
      {"covol = sqrt(3)*reg_L", regulator_identity},
      {"silverman bound below reg_L, lps", silverman},
      {"256 vs 512 bits", precision_stability},
      {"record round trip, lps and nakamula", ingestion_round_trip},
      {"byte-identical output across runs and threads", determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria()[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria()[i].name << "  ["
              << o.detail << "]" << std::endl;
  }
  return all_pass ? 0 : 1;
}
