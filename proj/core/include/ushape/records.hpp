#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ushape/analysis.hpp"
#include "ushape/bigreal.hpp"
#include "ushape/families.hpp"
#include "ushape/lattice.hpp"
#include "ushape/log_vector.hpp"

namespace ushape {

// Element of Q[x]/(f): c[0] + c[1]ρ + c[2]ρ² + c[3]ρ³.
using PowerBasisElement = std::array<mpq_class, 4>;

// Arithmetic in Q[x]/(f) for a monic integer quartic f.
class QuarticAlgebra {
 public:
  explicit QuarticAlgebra(const IntQuartic& f);

  PowerBasisElement constant(const mpq_class& c) const;
  PowerBasisElement root() const;  // ρ
  PowerBasisElement add(const PowerBasisElement& a, const PowerBasisElement& b) const;
  PowerBasisElement sub(const PowerBasisElement& a, const PowerBasisElement& b) const;
  PowerBasisElement mul(const PowerBasisElement& a, const PowerBasisElement& b) const;
  // Throws DomainError when a is a zero divisor.
  PowerBasisElement inverse(const PowerBasisElement& a) const;

 private:
  IntQuartic f_;
};

// One externally supplied field. Serialized as a single JSON object per line:
//   {"label": "lps:-9", "poly": [1, 2, 10, 9, 1], "signature": [2, 1],
//    "subfield_disc": 77, "disc_magnitude": "112651",
//    "units": [["0", "1", "0", "0"], ["-1", "-2", "-8", "-1"]]}
// poly is ascending and must be monic; units are power-basis coefficients.
struct FieldRecord {
  std::string label;
  std::array<std::int64_t, 5> poly{};
  std::int64_t subfield_disc = 0;
  std::string disc_magnitude;
  std::array<PowerBasisElement, 2> units;
};

struct RecordReject {
  std::size_t line = 0;  // 1-based
  std::string label;     // empty when the line could not be parsed
  std::string kind;      // malformed, non-monic, signature, wrong-signature, not-a-unit, degenerate, invalid
  std::string message;
};

struct ParseResult {
  std::vector<FieldRecord> records;
  std::vector<RecordReject> rejects;
};

// Parses JSON Lines text. Blank lines and lines starting with '#' are skipped.
// Every record is fully evaluated; failures are collected, never thrown.
ParseResult parse_records(std::string_view text, const PrecisionContext& ctx);

std::string serialize_record(const FieldRecord& r);

// Unit basis of the member written in the power basis of a root of its
// defining polynomial.
FieldRecord record_from_member(const FamilyMember& m);

struct RecordEvaluation {
  LogVector u;
  LogVector v;
  ShapePoint shape;
  BigReal reg_L;
  std::array<BigReal, 2> real_roots;  // σ₁(ρ), σ₂(ρ): descending |.|
  BigComplex complex_root;            // τ(ρ), Im > 0
};

// Throws DomainError for a non-monic polynomial, WrongSignature unless the
// polynomial has exactly two real roots, NotAUnit / DegenerateLattice from
// the unit data.
RecordEvaluation evaluate_record(const FieldRecord& r, const PrecisionContext& ctx);

// Escape study over records that share a quadratic subfield.
EscapeReport escape_study(const std::vector<FieldRecord>& records, const PrecisionContext& ctx);

}  // namespace ushape
