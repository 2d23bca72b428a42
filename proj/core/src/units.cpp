#include "ushape/units.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "ushape/errors.hpp"

namespace ushape {

namespace {

BigReal max_abs(const LogVector& v) { return max(max(abs(v.l1), abs(v.l2)), abs(v.l3)); }

// Primitive integer vector spanning the kernel of a rank-1 2×2 integer matrix.
std::array<std::int64_t, 2> rank_one_kernel(std::int64_t p, std::int64_t q, std::int64_t r,
                                            std::int64_t s) {
  std::int64_t x = 0;
  std::int64_t y = 0;
  if (p != 0 || q != 0) {
    x = q;
    y = -p;
  } else if (r != 0 || s != 0) {
    x = s;
    y = -r;
  } else {
    throw InvariantViolation("automorphism acts trivially on the unit lattice");
  }
  if (p * x + q * y != 0 || r * x + s * y != 0) {
    throw InvariantViolation("automorphism matrix does not have rank one");
  }
  const std::int64_t g = std::gcd(x, y);
  return {x / g, y / g};
}

LogVector combine(const std::array<std::int64_t, 2>& k, const LogVector& u, const LogVector& v) {
  LogVector out = k[0] * u + k[1] * v;
  if (out.l1.sign() < 0) {
    out = -out;
  }
  return out;
}

}  // namespace

LogVector log_embedding(const BigReal& s1, const BigReal& s2, const BigReal& t_abs,
                        const PrecisionContext& ctx) {
  if (s1.sign() <= 0 || s2.sign() <= 0 || t_abs.sign() <= 0) {
    throw DomainError("log_embedding needs positive absolute values");
  }
  LogVector out{log(s1), log(s2), 2 * log(t_abs)};
  const BigReal sum = out.l1 + out.l2 + out.l3;
  const BigReal scale = max_abs(out);
  if (abs(sum) > BigReal::exp2i(-static_cast<long>(ctx.bits - 16), sum.precision()) * scale) {
    throw NotAUnit("log coordinates sum to " + sum.to_decimal(8) + ", not 0");
  }
  return out;
}

LogVector galois_swap(const LogVector& v) { return {v.l2, v.l1, v.l3}; }

RegulatorReport regulator_from_basis(const LogVector& u, const LogVector& v,
                                     const PrecisionContext& ctx) {
  const Gram2 g = gram_from_log_vectors(u, v, ctx);
  RegulatorReport out{abs(u.l1 * v.l2 - u.l2 * v.l1), sqrt(g.det()), {}, {}, {}};
  const BigReal expected = sqrt(BigReal(3, out.reg_L.precision())) * out.reg_L;
  const BigReal tol = BigReal::exp2i(-static_cast<long>(ctx.bits / 2), expected.precision());
  if (abs(out.covol - expected) > tol * out.covol) {
    throw InvariantViolation("covolume " + out.covol.to_decimal(20) + " differs from sqrt(3)*reg_L " +
                             expected.to_decimal(20));
  }
  return out;
}

BigReal silverman_lower_bound(const BigReal& disc_magnitude, int degree, int unit_rank,
                              int max_subfield_rank) {
  const mpfr_prec_t prec = disc_magnitude.precision();
  if (disc_magnitude <= 1.0 || degree < 2 || max_subfield_rank < 0 || unit_rank < max_subfield_rank) {
    throw DomainError("silverman_lower_bound needs disc > 1, degree >= 2, rank >= subfield rank >= 0");
  }
  const BigReal d(degree, prec);
  const BigReal log2_8d = log(8 * d) / log(BigReal(2, prec));
  const BigReal inner = log(disc_magnitude) - pow(d, log2_8d) * log(d);
  if (inner.sign() <= 0) {
    return BigReal(0, prec);
  }
  BigReal out = BigReal::exp2i(-4L * degree * degree, prec);
  for (int i = 0; i < unit_rank - max_subfield_rank; ++i) {
    out *= inner;
  }
  return out;
}

YBound y_bound_check(const ShapePoint& p, const BigReal& reg_L, const BigReal& reg_K) {
  if (p.y.sign() <= 0 || reg_L.sign() <= 0 || reg_K.sign() <= 0) {
    throw DomainError("y_bound_check needs positive inputs");
  }
  const mpfr_prec_t prec = std::max(p.y.precision(), reg_L.precision());
  const BigReal three(3, prec);
  const BigReal two_32 = pow(BigReal(2, prec), BigReal(1.5, prec));
  const BigReal base = sqrt(reg_L) / reg_K;
  YBound out;
  out.lhs = p.y;
  out.rhs = root(three * three * three, 4) / two_32 * base;
  out.rhs_embedded = root(three, 4) / two_32 * base;
  out.ratio = out.lhs / out.rhs;
  return out;
}

bool q_linear_independence_check(const LogVector& u, const LogVector& v, std::int64_t search_bound,
                                 const PrecisionContext& ctx) {
  const mpfr_prec_t prec = std::max(u.precision(), v.precision());
  const BigReal shape_tol = BigReal::exp2i(-static_cast<long>(ctx.bits - 16), prec);
  const BigReal& a = u.l1;
  const BigReal& b = v.l1;
  if (a.is_zero() || b.is_zero()) {
    throw DomainError("q_linear_independence_check needs nonzero coordinates");
  }
  if (abs(u.l2 + a) > shape_tol * abs(a) || abs(u.l3) > shape_tol * abs(a) ||
      abs(v.l2 - b) > shape_tol * abs(b) || abs(v.l3 + 2 * b) > shape_tol * abs(b)) {
    throw DomainError("expected u = (a, -a, 0) and v = (b, b, -2b)");
  }
  const BigReal tol = BigReal::exp2i(-static_cast<long>(ctx.bits / 2), prec);
  // k = 0 forces m = 0 since a ≠ 0, so only k ≥ 1 needs searching (signs pair up).
  for (std::int64_t k = 1; k <= search_bound; ++k) {
    const std::int64_t m = round_to_int64(k * b / a);
    if (m == 0 || std::llabs(m) > search_bound) continue;
    const BigReal ma = m * a;
    const BigReal kb = k * b;
    if (abs(ma - kb) <= tol * max(abs(ma), abs(kb))) {
      return false;
    }
  }
  return true;
}

Unimodular galois_matrix(const LogVector& u, const LogVector& v, const PrecisionContext& ctx) {
  const Gram2 g = gram_from_log_vectors(u, v, ctx);
  const BigReal det = g.det();
  const BigReal tol = BigReal::exp2i(-static_cast<long>(ctx.bits / 2), det.precision());

  auto solve = [&](const LogVector& w) -> std::array<std::int64_t, 2> {
    const BigReal wu = dot(w, u);
    const BigReal wv = dot(w, v);
    const std::int64_t alpha = round_to_int64((g.g22 * wu - g.g12 * wv) / det);
    const std::int64_t beta = round_to_int64((g.g11 * wv - g.g12 * wu) / det);
    const LogVector residual = w - (alpha * u + beta * v);
    if (length(residual) > tol * length(w)) {
      throw InvariantViolation("basis is not stable under the Galois swap");
    }
    return {alpha, beta};
  };

  const auto su = solve(galois_swap(u));
  const auto sv = solve(galois_swap(v));
  return {su[0], sv[0], su[1], sv[1]};
}

GaloisSplit galois_split(const LogVector& u, const LogVector& v, const PrecisionContext& ctx) {
  const Unimodular m = galois_matrix(u, v, ctx);
  GaloisSplit out;
  out.fixed_coeffs = rank_one_kernel(m.a - 1, m.b, m.c, m.d - 1);
  out.anti_fixed_coeffs = rank_one_kernel(m.a + 1, m.b, m.c, m.d + 1);
  out.fixed = combine(out.fixed_coeffs, u, v);
  out.anti_fixed = combine(out.anti_fixed_coeffs, u, v);
  return out;
}

BigReal subfield_regulator(const LogVector& u, const LogVector& v, const PrecisionContext& ctx) {
  return abs(galois_split(u, v, ctx).fixed.l1);
}

}  // namespace ushape
