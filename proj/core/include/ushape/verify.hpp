#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ushape/analysis.hpp"
#include "ushape/bigreal.hpp"
#include "ushape/lattice.hpp"

namespace ushape {

enum class Suite { Boundary, Limits, Orthogonality, Silverman, ReductionOracle };

// "boundary", "limits", "orthogonality", "silverman", "reduction-oracle"
std::string_view suite_name(Suite s);
Suite parse_suite(std::string_view name);

struct SuiteResult {
  bool ok = false;
  std::string report;  // deterministic for fixed inputs and precision
};

SuiteResult run_suite(Suite s, std::int64_t n_max, const PrecisionContext& ctx, unsigned threads);

// Per-family limit contract used by the limits suite.
struct LimitCheck {
  bool endpoint_ok = false;   // last sample closer to the limit than the first
  bool intercept_ok = false;  // fitted intercept within tolerance
  bool side_ok = true;        // LPS: FromBelow
  bool classes_ok = true;     // StenderMinusOne: every member on LowerArc
  bool last_ok = true;        // StenderMinusOne: |cosθ + 1/7| ≤ 0.15 at the largest n
  bool ok() const { return endpoint_ok && intercept_ok && side_ok && classes_ok && last_ok; }
  std::string summary;
};

LimitCheck check_limit(const ConvergenceReport& report, const PrecisionContext& ctx);

// Reduction oracle on seeded pseudo-random Gram matrices.
struct OracleCase {
  Gram2 gram;
  ShapePoint brute_force;
  BigReal brute_force_minimum;
};

// Random positive-definite Gram matrices with condition number ≤ 10⁶ whose
// reduced bases have coefficients in [-20, 20].
std::vector<Gram2> random_grams(std::size_t count, std::uint64_t seed, const PrecisionContext& ctx);

// Shortest and next-shortest independent vectors over coefficients in
// [-bound, bound]; returns their shape and the minimum.
OracleCase brute_force_shape(const Gram2& g, int bound, const PrecisionContext& ctx);

}  // namespace ushape
