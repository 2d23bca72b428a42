#pragma once

#include "ushape/bigreal.hpp"

namespace ushape {

// Image of a unit under Log: (log|σ₁(u)|, log|σ₂(u)|, 2·log|τ(u)|).
// Construct through log_embedding() to get the sum-zero check.
struct LogVector {
  BigReal l1;
  BigReal l2;
  BigReal l3;

  mpfr_prec_t precision() const {
    return std::max({l1.precision(), l2.precision(), l3.precision()});
  }

  friend LogVector operator+(const LogVector& a, const LogVector& b) {
    return {a.l1 + b.l1, a.l2 + b.l2, a.l3 + b.l3};
  }
  friend LogVector operator-(const LogVector& a, const LogVector& b) {
    return {a.l1 - b.l1, a.l2 - b.l2, a.l3 - b.l3};
  }
  friend LogVector operator*(std::int64_t k, const LogVector& a) {
    return {k * a.l1, k * a.l2, k * a.l3};
  }
  friend LogVector operator-(const LogVector& a) { return {-a.l1, -a.l2, -a.l3}; }
};

inline BigReal dot(const LogVector& a, const LogVector& b) {
  return a.l1 * b.l1 + a.l2 * b.l2 + a.l3 * b.l3;
}

inline BigReal norm2(const LogVector& a) { return dot(a, a); }

inline BigReal length(const LogVector& a) { return sqrt(norm2(a)); }

}  // namespace ushape
