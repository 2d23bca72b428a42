#include "ushape/lattice.hpp"

#include <string>

#include "ushape/errors.hpp"

namespace ushape {

namespace {

constexpr int kMaxReductionSteps = 10000;

BigReal rel_tol(unsigned bits, unsigned slack, mpfr_prec_t prec) {
  return BigReal::exp2i(-static_cast<long>(bits - slack), prec);
}

}  // namespace

Unimodular Unimodular::then(const Unimodular& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Gram2 transform(const Gram2& g, const Unimodular& t) {
  const std::int64_t det = t.det();
  if (det != 1 && det != -1) {
    throw DomainError("basis change has determinant " + std::to_string(det));
  }
  Gram2 out;
  out.g11 = t.a * t.a * g.g11 + 2 * t.a * t.c * g.g12 + t.c * t.c * g.g22;
  out.g12 = t.a * t.b * g.g11 + (t.a * t.d + t.b * t.c) * g.g12 + t.c * t.d * g.g22;
  out.g22 = t.b * t.b * g.g11 + 2 * t.b * t.d * g.g12 + t.d * t.d * g.g22;
  return out;
}

ShapePoint ShapePoint::from_coordinates(BigReal x, BigReal y, unsigned precision_bits) {
  const BigReal slack = BigReal::exp2i(-static_cast<long>(precision_bits / 2), x.precision());
  if (!x.is_finite() || !y.is_finite() || y.sign() <= 0) {
    throw DomainError("shape point needs finite x and y > 0");
  }
  if (x < -slack || x > BigReal(0.5, x.precision()) + slack) {
    throw DomainError("shape point x = " + x.to_decimal(20) + " outside [0, 1/2]");
  }
  if (square(x) + square(y) < 1 - slack) {
    throw DomainError("shape point lies below the unit circle: (" + x.to_decimal(20) + ", " +
                      y.to_decimal(20) + ")");
  }
  return ShapePoint{std::move(x), std::move(y), precision_bits};
}

std::string BoundaryClass::name() const {
  switch (kind) {
    case Kind::LeftLine:
      return "LeftLine";
    case Kind::LowerArc:
      return "LowerArc";
    case Kind::RightLine:
      return "RightLine";
    case Kind::Cusp:
      return corner == Corner::I ? "Cusp(i)" : "Cusp(rho)";
    case Kind::Interior:
      return "Interior";
  }
  return "Interior";
}

Gram2 gram_from_log_vectors(const LogVector& u, const LogVector& v, const PrecisionContext& ctx) {
  Gram2 g{dot(u, u), dot(u, v), dot(v, v)};
  const BigReal det = g.det();
  if (det <= rel_tol(ctx.bits, 16, det.precision()) * g.g11 * g.g22) {
    throw DegenerateLattice("log vectors are linearly dependent (det = " + det.to_decimal(6) + ")");
  }
  return g;
}

Reduction lagrange_reduce(const Gram2& g) {
  if (g.g11.sign() <= 0 || g.g22.sign() <= 0 || g.det().sign() <= 0) {
    throw DomainError("Gram matrix is not positive definite");
  }
  Gram2 w = g;
  Unimodular t;
  const Unimodular swap{0, 1, 1, 0};
  for (int step = 0;; ++step) {
    if (step == kMaxReductionSteps) {
      throw InvariantViolation("Lagrange reduction did not terminate");
    }
    if (w.g22 < w.g11) {
      std::swap(w.g11, w.g22);
      t = t.then(swap);
    }
    // |g12| = g11/2 exactly is already reduced; rounding the tie would cycle.
    if (2 * abs(w.g12) <= w.g11) break;
    const std::int64_t m = round_to_int64(w.g12 / w.g11);
    w.g22 = w.g22 - 2 * m * w.g12 + m * m * w.g11;
    w.g12 = w.g12 - m * w.g11;
    t = t.then(Unimodular{1, -m, 0, 1});
  }
  if (w.g12.sign() > 0) {
    t = t.then(Unimodular{1, 0, 0, -1});
  }
  // Recompute from the input rather than trusting the accumulated updates.
  return {transform(g, t), t};
}

ShapePoint tau_from_reduced_gram(const Gram2& g, const PrecisionContext& ctx) {
  const BigReal tol = rel_tol(ctx.bits, 16, g.g11.precision());
  const BigReal one_plus = 1 + tol;
  if (g.g11.sign() <= 0 || g.g11 > g.g22 * one_plus || 2 * abs(g.g12) > g.g11 * one_plus) {
    throw NotReduced("Gram matrix is not Lagrange-reduced: g11 = " + g.g11.to_decimal(12) +
                     ", g12 = " + g.g12.to_decimal(12) + ", g22 = " + g.g22.to_decimal(12));
  }
  const BigReal det = g.det();
  if (det.sign() <= 0) {
    throw DegenerateLattice("reduced Gram matrix has non-positive determinant");
  }
  return ShapePoint::from_coordinates(abs(g.g12) / g.g11, sqrt(det) / g.g11, ctx.bits);
}

ShapePoint shape_from_gram(const Gram2& g, const PrecisionContext& ctx) {
  return tau_from_reduced_gram(lagrange_reduce(g).reduced, ctx);
}

ShapePoint shape_from_basis(const LogVector& u, const LogVector& v, const PrecisionContext& ctx) {
  return shape_from_gram(gram_from_log_vectors(u, v, ctx), ctx);
}

BigReal hyperbolic_distance(const ShapePoint& p, const ShapePoint& q) {
  const BigReal chord = hypot(p.x - q.x, p.y - q.y);
  return 2 * asinh(chord / (2 * sqrt(p.y * q.y)));
}

BoundaryClass classify_boundary(const ShapePoint& p, const BigReal& tol) {
  const mpfr_prec_t prec = p.x.precision();
  const BigReal half(0.5, prec);
  const ShapePoint corner_i{BigReal(0, prec), BigReal(1, prec), p.precision_bits};
  const ShapePoint corner_rho{half, sqrt(BigReal(3, prec)) / 2, p.precision_bits};

  BoundaryClass out;
  if (hyperbolic_distance(p, corner_i) <= tol) {
    out.kind = BoundaryClass::Kind::Cusp;
    out.corner = BoundaryClass::Corner::I;
    return out;
  }
  if (hyperbolic_distance(p, corner_rho) <= tol) {
    out.kind = BoundaryClass::Kind::Cusp;
    out.corner = BoundaryClass::Corner::Rho;
    return out;
  }
  if (abs(p.x) <= tol && p.y >= 1 - tol) {
    out.kind = BoundaryClass::Kind::LeftLine;
    return out;
  }
  if (abs(p.x - half) <= tol) {
    out.kind = BoundaryClass::Kind::RightLine;
    return out;
  }
  const BigReal radius = hypot(p.x, p.y);
  if (abs(square(p.x) + square(p.y) - 1) <= tol) {
    out.kind = BoundaryClass::Kind::LowerArc;
    return out;
  }
  out.distance = min(min(p.x, half - p.x), radius - 1);
  return out;
}

BoundaryClass classify_boundary(const ShapePoint& p) {
  return classify_boundary(p, BigReal::exp2i(-static_cast<long>(p.precision_bits / 2), p.x.precision()));
}

ShapePoint limit_i_sqrt3(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  return {BigReal(0, prec), sqrt(BigReal(3, prec)), ctx.bits};
}

ShapePoint limit_rho(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  return {BigReal(0.5, prec), sqrt(BigReal(3, prec)) / 2, ctx.bits};
}

ShapePoint limit_arc_point(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  return {BigReal(1, prec) / 7, 4 * sqrt(BigReal(3, prec)) / 7, ctx.bits};
}

}  // namespace ushape
