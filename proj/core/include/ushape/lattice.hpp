#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ushape/bigreal.hpp"
#include "ushape/log_vector.hpp"

namespace ushape {

struct Gram2 {
  BigReal g11;
  BigReal g12;
  BigReal g22;

  BigReal det() const { return g11 * g22 - square(g12); }
  Gram2 scaled(const BigReal& c) const { return {g11 * c, g12 * c, g22 * c}; }
};

// Integer basis change. New basis vectors are the columns of
// (b1 b2)·T, i.e. b1' = a·b1 + c·b2 and b2' = b·b1 + d·b2.
struct Unimodular {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  std::int64_t det() const { return a * d - b * c; }
  // this·other
  Unimodular then(const Unimodular& other) const;
};

// Tᵀ·G·T. Throws DomainError if det T ≠ ±1.
Gram2 transform(const Gram2& g, const Unimodular& t);

// Point of the closed fundamental domain 0 ≤ x ≤ 1/2, x² + y² ≥ 1.
struct ShapePoint {
  BigReal x;
  BigReal y;
  unsigned precision_bits = 0;

  // Checks the domain membership with slack 2^-(precision_bits/2).
  // Throws DomainError on violation.
  static ShapePoint from_coordinates(BigReal x, BigReal y, unsigned precision_bits);
};

struct BoundaryClass {
  enum class Kind { LeftLine, LowerArc, RightLine, Cusp, Interior };
  enum class Corner { None, I, Rho };  // i, or ½ + i√3/2

  Kind kind = Kind::Interior;
  Corner corner = Corner::None;
  // Interior only: Euclidean distance to the nearest boundary component.
  BigReal distance;

  bool is_boundary() const { return kind != Kind::Interior; }
  // "LeftLine", "LowerArc", "RightLine", "Cusp(i)", "Cusp(rho)", "Interior"
  std::string name() const;
};

// Inner products of u and v in R³ with the standard metric.
// Throws DegenerateLattice if det ≤ 2^-(bits-16)·g11·g22.
Gram2 gram_from_log_vectors(const LogVector& u, const LogVector& v, const PrecisionContext& ctx);

struct Reduction {
  Gram2 reduced;
  Unimodular transform;
};

// Lagrange–Gauss reduction. The result has g11 ≤ g22, 2|g12| ≤ g11 and g12 ≤ 0;
// transform(g, result.transform) reproduces result.reduced.
Reduction lagrange_reduce(const Gram2& g);

// x = |g12|/g11, y = √det/g11. Throws NotReduced unless g11 ≤ g22 and
// 2|g12| ≤ g11 up to 2^-(bits-16) relative slack.
ShapePoint tau_from_reduced_gram(const Gram2& g, const PrecisionContext& ctx);

ShapePoint shape_from_gram(const Gram2& g, const PrecisionContext& ctx);
ShapePoint shape_from_basis(const LogVector& u, const LogVector& v, const PrecisionContext& ctx);

// Priority Cusp > LeftLine > RightLine > LowerArc. Cusps are detected by
// hyperbolic distance ≤ tol to i or ½ + i√3/2.
BoundaryClass classify_boundary(const ShapePoint& p, const BigReal& tol);
// tol = 2^-(precision_bits/2)
BoundaryClass classify_boundary(const ShapePoint& p);

BigReal hyperbolic_distance(const ShapePoint& p, const ShapePoint& q);

// i√3, ½ + i√3/2, 1/7 + 4i√3/7
ShapePoint limit_i_sqrt3(const PrecisionContext& ctx);
ShapePoint limit_rho(const PrecisionContext& ctx);
ShapePoint limit_arc_point(const PrecisionContext& ctx);

}  // namespace ushape
