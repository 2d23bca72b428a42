#pragma once

#include <gtest/gtest.h>

#include <string>

#include "ushape/bigreal.hpp"

namespace ushape::testing {

inline const PrecisionContext& ctx256() {
  static const PrecisionContext ctx = PrecisionContext::with_bits(256);
  return ctx;
}

inline BigReal big(const char* text, const PrecisionContext& ctx = ctx256()) {
  return BigReal::parse(text, ctx.working_bits());
}

inline BigReal big(double v, const PrecisionContext& ctx = ctx256()) { return BigReal(v, ctx.working_bits()); }

// |a - b| ≤ tol·max(|b|, floor)
inline ::testing::AssertionResult close(const BigReal& a, const BigReal& b, double tol, double floor = 1.0) {
  const BigReal scale = max(abs(b), BigReal(floor, b.precision()));
  const BigReal gap = abs(a - b);
  if (gap <= BigReal(tol, b.precision()) * scale) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_decimal(40) << " vs " << b.to_decimal(40) << " (gap "
                                       << gap.to_decimal(3) << ", tol " << tol << ")";
}

}  // namespace ushape::testing
