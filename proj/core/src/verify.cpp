#include "ushape/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>

#include "ushape/errors.hpp"
#include "ushape/families.hpp"
#include "ushape/units.hpp"

namespace ushape {

namespace {

constexpr int kReportDigits = 12;
constexpr std::size_t kOracleCases = 1000;
constexpr std::uint64_t kOracleSeed = 20240611;
constexpr int kOracleBound = 20;

std::string num(const BigReal& v) { return v.to_decimal(kReportDigits); }

std::string verdict(bool ok) { return ok ? "ok" : "FAIL"; }

SuiteResult boundary_suite(std::int64_t n_max, const PrecisionContext& ctx, unsigned threads) {
  std::ostringstream out;
  bool ok = true;
  std::size_t total = 0;
  for (const Family f : kAllFamilies) {
    const std::vector<FamilyMember> members = sweep(f, 1, n_max, ctx, threads);
    std::map<std::string, std::size_t> counts;
    std::size_t interior = 0;
    for (const FamilyMember& m : members) {
      const BoundaryClass c = classify_boundary(m.shape);
      ++counts[c.name()];
      if (!c.is_boundary()) {
        ++interior;
        out << "  interior: " << family_name(f) << " n=" << m.n << " x=" << num(m.shape.x) << " y=" << num(m.shape.y)
            << '\n';
      }
    }
    total += members.size();
    out << "boundary " << family_name(f) << " members=" << members.size();
    for (const auto& [name, count] : counts) out << ' ' << name << '=' << count;
    out << " -> " << verdict(interior == 0) << '\n';
    ok = ok && interior == 0;
  }
  ok = ok && total > 0;
  out << "boundary total=" << total << " -> " << verdict(ok) << '\n';
  return {ok, out.str()};
}

SuiteResult limits_suite(std::int64_t n_max, const PrecisionContext& ctx, unsigned threads) {
  std::ostringstream out;
  bool ok = true;
  for (const Family f : kAllFamilies) {
    try {
      const ConvergenceReport report = convergence_study(f, n_max, claimed_limit(f, ctx), ctx, threads);
      const LimitCheck check = check_limit(report, ctx);
      out << check.summary << '\n';
      ok = ok && check.ok();
    } catch (const InsufficientSamples& e) {
      out << "limits " << family_name(f) << " insufficient samples: " << e.what() << " -> FAIL\n";
      ok = false;
    }
  }
  return {ok, out.str()};
}

SuiteResult orthogonality_suite(std::int64_t n_max, const PrecisionContext& ctx, unsigned threads) {
  std::ostringstream out;
  bool ok = true;
  const mpfr_prec_t prec = ctx.working_bits();
  const BigReal tol = BigReal::exp2i(-static_cast<long>(ctx.bits - 16), prec);
  for (const Family f : kAllFamilies) {
    const std::vector<FamilyMember> members = sweep(f, 1, n_max, ctx, threads);
    const bool orthogonal_family = f == Family::StenderCube || f == Family::Nakamula;
    BigReal worst_residual(prec);
    BigReal worst_cos_gap(prec);
    for (const FamilyMember& m : members) {
      const BigReal gram_cos = dot(m.u, m.v) / sqrt(norm2(m.u) * norm2(m.v));
      const BigReal gap = abs(gram_cos - m.witness.cos_theta) / max(BigReal(1, prec), abs(gram_cos));
      worst_cos_gap = max(worst_cos_gap, gap);
      if (orthogonal_family) worst_residual = max(worst_residual, m.witness.orthogonality_residual);
    }
    const bool fam_ok = worst_cos_gap <= tol && (!orthogonal_family || worst_residual <= tol);
    out << "orthogonality " << family_name(f) << " members=" << members.size();
    if (orthogonal_family) out << " max_residual=" << worst_residual.to_decimal(3);
    out << " max_cos_gap=" << worst_cos_gap.to_decimal(3) << " -> " << verdict(fam_ok) << '\n';
    ok = ok && fam_ok;
  }
  return {ok, out.str()};
}

SuiteResult silverman_suite(std::int64_t n_max, const PrecisionContext& ctx, unsigned threads) {
  std::ostringstream out;
  const std::vector<FamilyMember> members = sweep(Family::Lps, 1, n_max, ctx, threads);
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  for (const FamilyMember& m : members) {
    const BigReal& bound = *m.regulator.silverman_bound;
    if (bound.is_zero()) ++vacuous;
    if (!(bound < m.regulator.reg_L)) {
      ++violations;
      out << "  violation: n=" << m.n << " bound=" << num(bound) << " reg_L=" << num(m.regulator.reg_L) << '\n';
    }
  }
  const bool ok = violations == 0 && !members.empty();
  out << "silverman lps members=" << members.size() << " vacuous=" << vacuous << " violations=" << violations
      << " -> " << verdict(ok) << '\n';
  return {ok, out.str()};
}

SuiteResult reduction_oracle_suite(const PrecisionContext& ctx) {
  std::ostringstream out;
  const std::vector<Gram2> grams = random_grams(kOracleCases, kOracleSeed, ctx);
  const mpfr_prec_t prec = ctx.working_bits();
  const BigReal tol(1e-12, prec);
  std::size_t mismatches = 0;
  BigReal worst(prec);
  for (const Gram2& g : grams) {
    const Reduction red = lagrange_reduce(g);
    const ShapePoint p = tau_from_reduced_gram(red.reduced, ctx);
    const OracleCase oc = brute_force_shape(g, kOracleBound, ctx);
    const BigReal dx = abs(p.x - oc.brute_force.x) / max(BigReal(1, prec), abs(oc.brute_force.x));
    const BigReal dy = abs(p.y - oc.brute_force.y) / abs(oc.brute_force.y);
    const BigReal dm = abs(red.reduced.g11 - oc.brute_force_minimum) / oc.brute_force_minimum;
    const BigReal gap = max(max(dx, dy), dm);
    worst = max(worst, gap);
    if (gap > tol) ++mismatches;
  }
  const bool ok = mismatches == 0;
  out << "reduction-oracle cases=" << grams.size() << " bound=" << kOracleBound
      << " mismatches=" << mismatches << " max_rel_gap=" << worst.to_decimal(3) << " -> " << verdict(ok) << '\n';
  return {ok, out.str()};
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Boundary:
      return "boundary";
    case Suite::Limits:
      return "limits";
    case Suite::Orthogonality:
      return "orthogonality";
    case Suite::Silverman:
      return "silverman";
    case Suite::ReductionOracle:
      return "reduction-oracle";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (const Suite s : {Suite::Boundary, Suite::Limits, Suite::Orthogonality, Suite::Silverman,
                        Suite::ReductionOracle}) {
    if (suite_name(s) == name) return s;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

SuiteResult run_suite(Suite s, std::int64_t n_max, const PrecisionContext& ctx, unsigned threads) {
  switch (s) {
    case Suite::Boundary:
      return boundary_suite(n_max, ctx, threads);
    case Suite::Limits:
      return limits_suite(n_max, ctx, threads);
    case Suite::Orthogonality:
      return orthogonality_suite(n_max, ctx, threads);
    case Suite::Silverman:
      return silverman_suite(n_max, ctx, threads);
    case Suite::ReductionOracle:
      return reduction_oracle_suite(ctx);
  }
  throw DomainError("unknown suite");
}

LimitCheck check_limit(const ConvergenceReport& r, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  const auto& first = r.samples.front();
  const auto& last = r.samples.back();
  const BigReal target_cos = claimed_cos_limit(r.family, ctx);
  LimitCheck c;
  std::ostringstream s;
  s << "limits " << family_name(r.family) << " members=" << r.samples.size() << " n=" << first.n << ".." << last.n
    << " d_first=" << num(first.distance) << " d_last=" << num(last.distance)
    << " A=" << num(r.distance_fit.intercept) << " B=" << num(r.distance_fit.slope)
    << " cos_last=" << num(last.cos_theta) << " cos_A=" << num(r.cos_fit.intercept);

  switch (r.family) {
    case Family::StenderCube:
    case Family::Nakamula:
      c.endpoint_ok = last.distance < first.distance;
      c.intercept_ok = abs(r.distance_fit.intercept) <= BigReal(0.02, prec);
      break;
    case Family::StenderMinusOne: {
      c.endpoint_ok = abs(last.cos_theta - target_cos) < abs(first.cos_theta - target_cos);
      c.last_ok = abs(last.cos_theta - target_cos) <= BigReal(0.15, prec);
      c.intercept_ok = abs(r.cos_fit.intercept - target_cos) <= BigReal(0.01, prec);
      c.classes_ok = std::all_of(r.samples.begin(), r.samples.end(), [](const ConvergenceSample& x) {
        return x.boundary.kind == BoundaryClass::Kind::LowerArc;
      });
      break;
    }
    case Family::Lps: {
      const Side side = side_of_approach(r, target_cos);
      s << " side=" << side_name(side);
      c.endpoint_ok = last.distance < first.distance;
      c.side_ok = side == Side::FromBelow;
      c.intercept_ok = abs(r.cos_fit.intercept - target_cos) <= BigReal(0.01, prec);
      break;
    }
  }
  s << " [endpoint " << verdict(c.endpoint_ok) << ", intercept " << verdict(c.intercept_ok);
  if (r.family == Family::Lps) s << ", side " << verdict(c.side_ok);
  if (r.family == Family::StenderMinusOne) s << ", last " << verdict(c.last_ok) << ", classes " << verdict(c.classes_ok);
  s << "] -> " << verdict(c.ok());
  c.summary = s.str();
  return c;
}

std::vector<Gram2> random_grams(std::size_t count, std::uint64_t seed, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> step(-3, 3);
  std::uniform_int_distribution<int> coin(0, 3);

  std::vector<Gram2> out;
  out.reserve(count);
  while (out.size() < count) {
    const double x = unit(rng) - 0.5;
    const double y = std::max(std::exp(unit(rng) * std::log(300.0)), std::sqrt(1 - x * x));
    const double scale = std::exp((unit(rng) - 0.5) * std::log(100.0));
    const BigReal bx(x, prec);
    const BigReal by(y, prec);
    const BigReal bs(scale, prec);
    const Gram2 reduced{bs, bs * bx, bs * (square(bx) + square(by))};

    // Random unimodular change with entries bounded by the search box.
    Unimodular t;
    for (int k = 0; k < 8; ++k) {
      const int e = step(rng);
      Unimodular elem;
      switch (coin(rng)) {
        case 0: elem = {1, e, 0, 1}; break;
        case 1: elem = {1, 0, e, 1}; break;
        case 2: elem = {0, 1, 1, 0}; break;
        default: elem = {1, 0, 0, -1}; break;
      }
      const Unimodular next = t.then(elem);
      if (std::max({std::llabs(next.a), std::llabs(next.b), std::llabs(next.c), std::llabs(next.d)}) <= kOracleBound) {
        t = next;
      }
    }
    const Gram2 g = transform(reduced, t);
    const double a = g.g11.to_double(), b = g.g12.to_double(), d = g.g22.to_double();
    const double tr = a + d;
    const double disc = std::sqrt(std::max((a - d) * (a - d) + 4 * b * b, 0.0));
    const double lmin = (tr - disc) / 2;
    const double lmax = (tr + disc) / 2;
    if (!(lmin > 0) || lmax / lmin > 1e6) continue;
    out.push_back(g);
  }
  return out;
}

OracleCase brute_force_shape(const Gram2& g, int bound, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  auto quad = [&](long a, long c) { return a * a * g.g11 + 2 * a * c * g.g12 + c * c * g.g22; };

  // Rank candidates in long double, confirm the near-ties at full precision.
  struct Cand {
    long a;
    long c;
    long double n;
  };
  std::vector<Cand> cands;
  const long double g11 = mpfr_get_ld(g.g11.get(), MPFR_RNDN);
  const long double g12 = mpfr_get_ld(g.g12.get(), MPFR_RNDN);
  const long double g22 = mpfr_get_ld(g.g22.get(), MPFR_RNDN);
  for (long a = -bound; a <= bound; ++a) {
    for (long c = -bound; c <= bound; ++c) {
      if (a == 0 && c == 0) continue;
      cands.push_back({a, c, a * a * g11 + 2 * a * c * g12 + c * c * g22});
    }
  }
  auto best_exact = [&](auto admissible) {
    long double lo = -1;
    for (const Cand& x : cands) {
      if (admissible(x) && (lo < 0 || x.n < lo)) lo = x.n;
    }
    bool have = false;
    Cand best{};
    BigReal best_norm(prec);
    for (const Cand& x : cands) {
      if (!admissible(x) || x.n > lo * (1 + 1e-9L)) continue;
      const BigReal q = quad(x.a, x.c);
      if (!have || q < best_norm) {
        have = true;
        best = x;
        best_norm = q;
      }
    }
    return std::pair{best, best_norm};
  };
  const auto [v1, n1] = best_exact([](const Cand&) { return true; });
  const auto [v2, n2] = best_exact([&](const Cand& x) { return v1.a * x.c - v1.c * x.a != 0; });
  const BigReal cross =
      v1.a * v2.a * g.g11 + (v1.a * v2.c + v1.c * v2.a) * g.g12 + v1.c * v2.c * g.g22;
  const BigReal det = n1 * n2 - square(cross);
  OracleCase out;
  out.gram = g;
  out.brute_force = ShapePoint{abs(cross) / n1, sqrt(det) / n1, ctx.bits};
  out.brute_force_minimum = n1;
  return out;
}

}  // namespace ushape
