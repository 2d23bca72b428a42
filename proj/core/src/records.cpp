#include "ushape/records.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ushape/errors.hpp"
#include "ushape/numeric.hpp"
#include "ushape/units.hpp"

namespace ushape {

using json = nlohmann::json;

QuarticAlgebra::QuarticAlgebra(const IntQuartic& f) : f_(f) {
  if (f[4] != 1) {
    throw DomainError("QuarticAlgebra needs a monic polynomial");
  }
}

PowerBasisElement QuarticAlgebra::constant(const mpq_class& c) const { return {c, 0, 0, 0}; }

PowerBasisElement QuarticAlgebra::root() const { return {0, 1, 0, 0}; }

PowerBasisElement QuarticAlgebra::add(const PowerBasisElement& a, const PowerBasisElement& b) const {
  PowerBasisElement out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] + b[i];
  return out;
}

PowerBasisElement QuarticAlgebra::sub(const PowerBasisElement& a, const PowerBasisElement& b) const {
  PowerBasisElement out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] - b[i];
  return out;
}

PowerBasisElement QuarticAlgebra::mul(const PowerBasisElement& a, const PowerBasisElement& b) const {
  std::array<mpq_class, 7> p;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) p[i + j] += a[i] * b[j];
  }
  // x⁴ = -(c0 + c1 x + c2 x² + c3 x³)
  for (std::size_t k = 6; k >= 4; --k) {
    const mpq_class top = p[k];
    p[k] = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      p[k - 4 + i] -= top * mpq_class(static_cast<long>(f_[i]));
    }
  }
  return {p[0], p[1], p[2], p[3]};
}

PowerBasisElement QuarticAlgebra::inverse(const PowerBasisElement& a) const {
  // Solve (multiplication-by-a matrix)·b = 1 by Gauss–Jordan over Q.
  std::array<std::array<mpq_class, 5>, 4> m;
  PowerBasisElement power = constant(1);
  for (std::size_t j = 0; j < 4; ++j) {
    const PowerBasisElement col = mul(a, power);
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col[i];
    power = mul(power, root());
  }
  m[0][4] = 1;
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t pivot = c;
    while (pivot < 4 && m[pivot][c] == 0) ++pivot;
    if (pivot == 4) {
      throw DomainError("element is not invertible modulo the polynomial");
    }
    std::swap(m[c], m[pivot]);
    const mpq_class lead = m[c][c];
    for (auto& x : m[c]) x /= lead;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class factor = m[r][c];
      for (std::size_t k = 0; k < 5; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

namespace {

using Cld = std::complex<long double>;

std::array<Cld, 4> durand_kerner(const IntQuartic& f) {
  std::array<long double, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = static_cast<long double>(f[i]);
  // Fujiwara's bound on the root moduli.
  long double radius = 0;
  for (int k = 1; k <= 4; ++k) {
    long double coeff = std::fabs(c[static_cast<std::size_t>(4 - k)]);
    if (k == 4) coeff /= 2;
    radius = std::max(radius, std::pow(coeff, 1.0L / k));
  }
  radius = std::max(2 * radius, 1.0L);

  auto eval = [&](Cld z) {
    Cld acc = c[4];
    for (int i = 3; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
    return acc;
  };

  std::array<Cld, 4> z;
  for (std::size_t k = 0; k < 4; ++k) {
    z[k] = std::polar(radius, 0.4L + static_cast<long double>(k) * std::numbers::pi_v<long double> / 2);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      Cld denom = 1;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      const Cld step = eval(z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step) / std::max(std::abs(z[k]), 1e-300L));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

BigReal polish_real(const IntQuartic& f, BigReal x) {
  const mpfr_prec_t prec = x.precision();
  const BigReal tol = BigReal::exp2i(-(prec - 8), prec);
  for (int iter = 0; iter < 200; ++iter) {
    BigReal value(f[4], prec);
    BigReal slope(prec);
    for (int i = 3; i >= 0; --i) {
      slope = slope * x + value;
      value = value * x + f[static_cast<std::size_t>(i)];
    }
    if (slope.is_zero()) break;
    const BigReal step = value / slope;
    x -= step;
    if (abs(step) <= tol * abs(x)) break;
  }
  return x;
}

BigComplex polish_complex(const IntQuartic& f, BigComplex z) {
  const mpfr_prec_t prec = z.precision();
  const BigReal tol = BigReal::exp2i(-(prec - 8), prec);
  for (int iter = 0; iter < 200; ++iter) {
    BigComplex value(BigReal(f[4], prec), BigReal(prec));
    BigComplex slope{BigReal(prec), BigReal(prec)};
    for (int i = 3; i >= 0; --i) {
      slope = slope * z + value;
      value = value * z;
      value.re += BigReal(f[static_cast<std::size_t>(i)], prec);
    }
    if (norm(slope).is_zero()) break;
    const BigComplex step = value / slope;
    z = z - step;
    if (abs(step) <= tol * abs(z)) break;
  }
  return z;
}

struct Roots {
  std::array<BigReal, 2> real;
  BigComplex complex;
};

Roots signature_21_roots(const IntQuartic& f, mpfr_prec_t prec) {
  std::array<Cld, 4> approx = durand_kerner(f);
  std::sort(approx.begin(), approx.end(),
            [](const Cld& a, const Cld& b) { return std::fabs(a.imag()) < std::fabs(b.imag()); });
  Roots out;
  BigReal re(prec);
  BigReal im(prec);
  mpfr_set_ld(re.get(), approx[2].real(), MPFR_RNDN);
  mpfr_set_ld(im.get(), std::fabs(approx[2].imag()), MPFR_RNDN);
  for (std::size_t i = 0; i < 2; ++i) {
    out.real[i] = BigReal(prec);
    mpfr_set_ld(out.real[i].get(), approx[i].real(), MPFR_RNDN);
    out.real[i] = polish_real(f, out.real[i]);
  }
  out.complex = polish_complex(f, BigComplex(re, im));
  if (out.complex.im.sign() < 0) out.complex = conj(out.complex);
  if (out.complex.im <= BigReal::exp2i(-static_cast<long>(prec / 2), prec) * abs(out.complex)) {
    throw InvariantViolation("complex root collapsed onto the real axis");
  }
  if (abs(out.real[0]) < abs(out.real[1]) ||
      (abs(out.real[0]) == abs(out.real[1]) && out.real[0] < out.real[1])) {
    std::swap(out.real[0], out.real[1]);
  }
  return out;
}

BigReal eval_real(const PowerBasisElement& e, const BigReal& x, BigReal& magnitude) {
  const mpfr_prec_t prec = x.precision();
  BigReal acc(prec);
  magnitude = BigReal(prec);
  const BigReal ax = abs(x);
  for (int i = 3; i >= 0; --i) {
    const BigReal c(e[static_cast<std::size_t>(i)], prec);
    acc = acc * x + c;
    magnitude = magnitude * ax + abs(c);
  }
  return acc;
}

BigComplex eval_complex(const PowerBasisElement& e, const BigComplex& z, BigReal& magnitude) {
  const mpfr_prec_t prec = z.precision();
  BigComplex acc{BigReal(prec), BigReal(prec)};
  magnitude = BigReal(prec);
  const BigReal az = abs(z);
  for (int i = 3; i >= 0; --i) {
    const BigReal c(e[static_cast<std::size_t>(i)], prec);
    acc = acc * z;
    acc.re += c;
    magnitude = magnitude * az + abs(c);
  }
  return acc;
}

// Bits lost to cancellation when a sum of terms of total size `magnitude`
// evaluates to `value`.
long cancellation_bits(const BigReal& magnitude, const BigReal& value) {
  if (value.is_zero()) return 0;
  const BigReal ratio = magnitude / value;
  if (ratio <= 1.0) return 0;
  return static_cast<long>(std::ceil(mpfr_get_d(log(ratio).get(), MPFR_RNDU) / std::numbers::ln2)) + 1;
}

}  // namespace

RecordEvaluation evaluate_record(const FieldRecord& r, const PrecisionContext& ctx) {
  if (r.poly[4] != 1) {
    throw DomainError("record " + r.label + ": polynomial is not monic");
  }
  const IntQuartic f = r.poly;
  if (quartic_discriminant(f) >= 0) {
    throw WrongSignature("record " + r.label + ": polynomial does not have exactly two real roots");
  }

  const mpfr_prec_t target = ctx.working_bits();
  mpfr_prec_t prec = target + 32;
  constexpr int kMaxAttempts = 5;
  for (int attempt = 0;; ++attempt) {
    const Roots roots = signature_21_roots(f, prec);
    std::array<std::array<BigReal, 3>, 2> values;
    long lost = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      BigReal mag(prec);
      for (std::size_t e = 0; e < 2; ++e) {
        const BigReal val = eval_real(r.units[k], roots.real[e], mag);
        lost = std::max(lost, cancellation_bits(mag, abs(val)));
        values[k][e] = abs(val);
      }
      const BigComplex cval = eval_complex(r.units[k], roots.complex, mag);
      lost = std::max(lost, cancellation_bits(mag, abs(cval)));
      values[k][2] = abs(cval);
    }
    if (prec - lost < target && attempt + 1 < kMaxAttempts) {
      prec = target + lost + 64;
      continue;
    }
    for (auto& row : values) {
      for (auto& v : row) {
        if (v.is_zero()) throw NotAUnit("record " + r.label + ": unit evaluates to 0");
        v.set_precision(target);
      }
    }
    RecordEvaluation out;
    out.u = log_embedding(values[0][0], values[0][1], values[0][2], ctx);
    out.v = log_embedding(values[1][0], values[1][1], values[1][2], ctx);
    out.shape = shape_from_basis(out.u, out.v, ctx);
    out.reg_L = regulator_from_basis(out.u, out.v, ctx).reg_L;
    out.real_roots = {roots.real[0].with_precision(target), roots.real[1].with_precision(target)};
    out.complex_root = BigComplex(roots.complex.re.with_precision(target), roots.complex.im.with_precision(target));
    return out;
  }
}

namespace {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  auto parse_int = [&](const std::string& s, mpz_class& out) {
    if (s.empty() || out.set_str(s, 10) != 0) {
      throw MalformedInput("not a rational number: '" + text + "'");
    }
  };
  if (slash == std::string::npos) {
    parse_int(text, num);
  } else {
    parse_int(text.substr(0, slash), num);
    parse_int(text.substr(slash + 1), den);
    if (den == 0) throw MalformedInput("zero denominator in '" + text + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

struct Reject {
  std::string kind;
  std::string message;
};

FieldRecord record_from_json(const json& j) {
  FieldRecord r;
  if (!j.is_object()) throw MalformedInput("record is not a JSON object");
  r.label = j.at("label").get<std::string>();
  const json& poly = j.at("poly");
  if (!poly.is_array() || poly.size() != 5) throw MalformedInput("poly needs 5 integer coefficients");
  for (std::size_t i = 0; i < 5; ++i) r.poly[i] = poly[i].get<std::int64_t>();
  const json& sig = j.at("signature");
  if (!sig.is_array() || sig.size() != 2) throw MalformedInput("signature must be [r, s]");
  if (sig[0].get<int>() != 2 || sig[1].get<int>() != 1) {
    throw WrongSignature("declared signature is not (2,1)");
  }
  r.subfield_disc = j.at("subfield_disc").get<std::int64_t>();
  r.disc_magnitude = j.at("disc_magnitude").get<std::string>();
  const json& units = j.at("units");
  if (!units.is_array() || units.size() != 2) throw MalformedInput("units needs exactly 2 entries");
  for (std::size_t k = 0; k < 2; ++k) {
    const json& u = units[k];
    if (!u.is_array() || u.size() != 4) throw MalformedInput("each unit needs 4 coefficients");
    for (std::size_t i = 0; i < 4; ++i) r.units[k][i] = parse_rational(u[i].get<std::string>());
  }
  return r;
}

}  // namespace

ParseResult parse_records(std::string_view text, const PrecisionContext& ctx) {
  ParseResult out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }

    RecordReject reject;
    reject.line = line_no;
    try {
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception& e) {
        throw MalformedInput(e.what());
      }
      if (j.is_object() && j.contains("label") && j["label"].is_string()) {
        reject.label = j["label"].get<std::string>();
      }
      FieldRecord r;
      try {
        r = record_from_json(j);
      } catch (const json::exception& e) {
        throw MalformedInput(e.what());
      }
      if (r.poly[4] != 1) {
        reject.kind = "non-monic";
        reject.message = "polynomial is not monic";
        out.rejects.push_back(reject);
        continue;
      }
      BigReal::parse(r.disc_magnitude, ctx.working_bits());
      evaluate_record(r, ctx);
      out.records.push_back(std::move(r));
      continue;
    } catch (const MalformedInput& e) {
      reject.kind = "malformed";
      reject.message = e.what();
    } catch (const WrongSignature& e) {
      reject.kind = "wrong-signature";
      reject.message = e.what();
    } catch (const NotAUnit& e) {
      reject.kind = "not-a-unit";
      reject.message = e.what();
    } catch (const DegenerateLattice& e) {
      reject.kind = "degenerate";
      reject.message = e.what();
    } catch (const Error& e) {
      reject.kind = "invalid";
      reject.message = e.what();
    }
    out.rejects.push_back(reject);
    if (end == text.size()) break;
  }
  return out;
}

std::string serialize_record(const FieldRecord& r) {
  json j;
  j["label"] = r.label;
  j["poly"] = json::array();
  for (const std::int64_t c : r.poly) j["poly"].push_back(c);
  j["signature"] = {2, 1};
  j["subfield_disc"] = r.subfield_disc;
  j["disc_magnitude"] = r.disc_magnitude;
  j["units"] = json::array();
  for (const auto& unit : r.units) {
    json coeffs = json::array();
    for (const auto& q : unit) coeffs.push_back(rational_to_string(q));
    j["units"].push_back(coeffs);
  }
  return j.dump();
}

FieldRecord record_from_member(const FamilyMember& m) {
  FieldRecord r;
  r.label = std::string(family_name(m.family)) + ":" + std::to_string(m.n);
  r.poly = m.polynomial;
  r.subfield_disc = m.subfield_disc;
  r.disc_magnitude = mpz_class(abs(m.discriminant)).get_str();

  const QuarticAlgebra alg(m.polynomial);
  const PowerBasisElement rho = alg.root();
  const PowerBasisElement one = alg.constant(1);
  const PowerBasisElement n = alg.constant(mpq_class(static_cast<long>(m.n)));
  switch (m.family) {
    case Family::StenderCube: {
      // ρ = ω; (ω+n)/(ω-n) and n³/(ω²-n²)²
      const PowerBasisElement diff = alg.sub(alg.mul(rho, rho), alg.mul(n, n));
      r.units[0] = alg.mul(alg.add(rho, n), alg.inverse(alg.sub(rho, n)));
      r.units[1] = alg.mul(alg.constant(mpq_class(static_cast<long>(m.d))), alg.inverse(alg.mul(diff, diff)));
      break;
    }
    case Family::StenderMinusOne:
      r.units[0] = alg.add(rho, n);
      r.units[1] = alg.sub(rho, n);
      break;
    case Family::Lps:
      // σ(ρ) = ε/ρ with ε = -ρ²/(ρ+1)
      r.units[0] = rho;
      r.units[1] = alg.sub(alg.constant(0), alg.mul(rho, alg.inverse(alg.add(rho, one))));
      break;
    case Family::Nakamula:
      r.units[0] = rho;
      r.units[1] = alg.add(rho, alg.inverse(rho));
      break;
  }
  return r;
}

EscapeReport escape_study(const std::vector<FieldRecord>& records, const PrecisionContext& ctx) {
  std::vector<EscapeInput> inputs;
  inputs.reserve(records.size());
  for (const FieldRecord& r : records) {
    const RecordEvaluation e = evaluate_record(r, ctx);
    inputs.push_back({r.label, r.subfield_disc, e.shape.y, e.reg_L,
                      BigReal::parse(r.disc_magnitude, ctx.working_bits())});
  }
  return escape_study(inputs);
}

}  // namespace ushape
