#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ushape/bigreal.hpp"
#include "ushape/lattice.hpp"
#include "ushape/log_vector.hpp"

namespace ushape {

// (log s1, log s2, 2·log t_abs) for the absolute values of the three
// embeddings of a unit. Throws DomainError for non-positive input and
// NotAUnit if the coordinates do not sum to zero within
// 2^-(bits-16)·max|l_i|.
LogVector log_embedding(const BigReal& s1, const BigReal& s2, const BigReal& t_abs,
                        const PrecisionContext& ctx);

// Action of the nontrivial automorphism of L/K: swaps the real embeddings.
LogVector galois_swap(const LogVector& v);

struct RegulatorReport {
  BigReal reg_L;
  BigReal covol;
  std::optional<BigReal> reg_K;
  std::optional<BigReal> silverman_bound;
  std::optional<BigReal> disc_magnitude;
};

// reg_L from the two real coordinates, covol = √det(Gram).
// Throws DegenerateLattice for dependent input and InvariantViolation if
// covol and √3·reg_L disagree beyond 2^-(bits/2) relative.
RegulatorReport regulator_from_basis(const LogVector& u, const LogVector& v,
                                     const PrecisionContext& ctx);

// 2^(-4d²)·(log disc - d^(log₂ 8d)·log d)^(r-ρ), or 0 when the inner
// logarithm is not positive.
BigReal silverman_lower_bound(const BigReal& disc_magnitude, int degree, int unit_rank,
                              int max_subfield_rank);

struct YBound {
  BigReal lhs;           // y
  BigReal rhs;           // 3^(3/4)/2^(3/2)·√reg_L/reg_K
  BigReal rhs_embedded;  // 3^(1/4)/2^(3/2)·√reg_L/reg_K, with |ι(ε)| = √6·reg_K
  BigReal ratio;         // lhs/rhs
};

YBound y_bound_check(const ShapePoint& p, const BigReal& reg_L, const BigReal& reg_K);

// u = (a, -a, 0), v = (b, b, -2b). True iff no integers (m, k) with
// 0 < max(|m|,|k|) ≤ search_bound satisfy m·a = k·b within 2^-(bits/2).
// Throws DomainError if u, v do not have that shape or a, b vanish.
bool q_linear_independence_check(const LogVector& u, const LogVector& v, std::int64_t search_bound,
                                 const PrecisionContext& ctx);

// Integer matrix of galois_swap in the basis (u, v): swap(u) = a·u + c·v,
// swap(v) = b·u + d·v. Throws InvariantViolation if the basis is not
// σ-stable to tolerance.
Unimodular galois_matrix(const LogVector& u, const LogVector& v, const PrecisionContext& ctx);

// Primitive generators of the σ-fixed (E_K) and σ-anti-fixed (norm-kernel)
// sublattices of the lattice spanned by (u, v).
struct GaloisSplit {
  LogVector fixed;
  LogVector anti_fixed;
  std::array<std::int64_t, 2> fixed_coeffs;
  std::array<std::int64_t, 2> anti_fixed_coeffs;
};

GaloisSplit galois_split(const LogVector& u, const LogVector& v, const PrecisionContext& ctx);

// |log|σ₁(g)|| for g generating the σ-fixed sublattice.
BigReal subfield_regulator(const LogVector& u, const LogVector& v, const PrecisionContext& ctx);

}  // namespace ushape
