#include "ushape/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ushape/bigreal.hpp"
#include "ushape/errors.hpp"
#include "ushape/families.hpp"
#include "ushape/output.hpp"
#include "ushape/parallel.hpp"
#include "ushape/records.hpp"
#include "ushape/verify.hpp"

namespace ushape {

namespace {

// Usage problems detected after CLI11 is done (bad range text, bad env).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFamilyNames = {"stender-cube", "stender-minus-one", "lps", "nakamula"};
const std::vector<std::string> kSuiteNames = {"boundary", "limits", "orthogonality", "silverman",
                                              "reduction-oracle"};

PrecisionContext resolve_precision(const std::optional<unsigned>& flag) {
  try {
    return flag ? PrecisionContext::with_bits(*flag) : PrecisionContext::from_env();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw MalformedInput("cannot write '" + path + "'");
  f << text;
  if (!f.flush()) throw MalformedInput("write failed for '" + path + "'");
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("range must look like a..b, got '" + text + "'");
  try {
    const std::int64_t lo = std::stoll(m[1].str());
    const std::int64_t hi = std::stoll(m[2].str());
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::out_of_range&) {
    throw UsageError("range bound out of range in '" + text + "'");
  }
}

struct Options {
  unsigned threads = 0;

  std::string name;
  std::int64_t n_min = 1;
  std::int64_t n_max = 0;
  std::optional<unsigned> precision;
  std::string in;
  std::string out = "-";
  bool hex = false;

  std::string range;
  std::string suite;
  double y_max = 8.0;
  std::string color_by = "disc";
};

int run_family(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = resolve_precision(o.precision);
  const std::vector<FamilyMember> members = sweep(parse_family(o.name), o.n_min, o.n_max, ctx, o.threads);
  const NumberFormat fmt = o.hex ? NumberFormat::Hex : NumberFormat::Decimal;
  std::vector<ShapeRow> rows;
  rows.reserve(members.size());
  for (const FamilyMember& m : members) rows.push_back(shape_row(m, ctx, fmt));
  write_output(o.out, emit_csv(rows), out);
  return 0;
}

int run_sieve(const Options& o, std::ostream& out) {
  const auto [lo, hi] = parse_range(o.range);
  std::ostringstream s;
  for (const std::int64_t n : sieve(parse_family(o.name), lo, hi)) s << n << '\n';
  write_output(o.out, s.str(), out);
  return 0;
}

int run_records(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = resolve_precision(o.precision);
  const std::vector<FamilyMember> members = sweep(parse_family(o.name), o.n_min, o.n_max, ctx, o.threads);
  std::string text;
  for (const FamilyMember& m : members) text += serialize_record(record_from_member(m)) + '\n';
  write_output(o.out, text, out);
  return 0;
}

int run_dataset(const Options& o, std::ostream& out, std::ostream& err) {
  const PrecisionContext ctx = resolve_precision(o.precision);
  const ParseResult parsed = parse_records(read_file(o.in), ctx);
  for (const RecordReject& r : parsed.rejects) {
    err << o.in << ':' << r.line << ": rejected";
    if (!r.label.empty()) err << " '" << r.label << '\'';
    err << " [" << r.kind << "] " << r.message << '\n';
  }
  const auto rows = parallel_map(
      parsed.records,
      [&](const FieldRecord& r) { return shape_row(r, evaluate_record(r, ctx), ctx); }, o.threads);
  write_output(o.out, emit_csv(rows), out);
  return parsed.rejects.empty() ? 0 : 1;
}

int run_verify(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = resolve_precision(o.precision);
  const SuiteResult r = run_suite(parse_suite(o.suite), o.n_max, ctx, o.threads);
  write_output(o.out, r.report, out);
  return r.ok ? 0 : 1;
}

int run_plot(const Options& o, std::ostream& out) {
  SvgOptions svg;
  svg.y_max = o.y_max;
  svg.color_by = parse_color_by(o.color_by);
  write_output(o.out, emit_svg(parse_csv(read_file(o.in)), svg), out);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Shape points of unit groups in D4 quartic fields of signature (2,1)", "ushape"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "worker threads (0 = hardware)")->capture_default_str();

  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "mantissa bits (default: USHAPE_PRECISION_BITS or 256)")
        ->check(CLI::Range(static_cast<unsigned>(PrecisionContext::kMinBits), 1u << 20));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file, '-' for stdout"); };

  CLI::App* family = app.add_subcommand("family", "CSV of shapes for every sieved member");
  family->add_option("--name", o.name, "family")->required()->check(CLI::IsMember(kFamilyNames));
  family->add_option("--n-min", o.n_min, "smallest |n|")->capture_default_str()->check(CLI::NonNegativeNumber);
  family->add_option("--n-max", o.n_max, "largest |n|")->required()->check(CLI::NonNegativeNumber);
  family->add_flag("--hex", o.hex, "full-precision hex floats instead of 30 digits");
  add_precision(family);
  add_out(family);

  CLI::App* sieve_cmd = app.add_subcommand("sieve", "parameters passing a family's hypotheses");
  sieve_cmd->add_option("--family", o.name, "family")->required()->check(CLI::IsMember(kFamilyNames));
  sieve_cmd->add_option("--range", o.range, "inclusive range a..b")->required();
  add_out(sieve_cmd);

  CLI::App* records = app.add_subcommand("records", "JSON Lines field records for sieved members");
  records->add_option("--name", o.name, "family")->required()->check(CLI::IsMember(kFamilyNames));
  records->add_option("--n-min", o.n_min, "smallest |n|")->capture_default_str()->check(CLI::NonNegativeNumber);
  records->add_option("--n-max", o.n_max, "largest |n|")->required()->check(CLI::NonNegativeNumber);
  add_precision(records);
  add_out(records);

  CLI::App* dataset = app.add_subcommand("dataset", "CSV of shapes for a JSON Lines record file");
  dataset->add_option("--in", o.in, "record file")->required();
  add_precision(dataset);
  add_out(dataset);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite")->required()->check(CLI::IsMember(kSuiteNames));
  o.n_max = 500;
  verify->add_option("--n-max", o.n_max, "largest |n|")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_precision(verify);
  add_out(verify);

  CLI::App* plot = app.add_subcommand("plot", "SVG scatter of shapes over the fundamental domain");
  plot->add_option("--in", o.in, "shape CSV")->required();
  plot->add_option("--y-max", o.y_max, "clamp height")->capture_default_str();
  plot->add_option("--color-by", o.color_by, "disc, source or boundary")
      ->capture_default_str()
      ->check(CLI::IsMember({"disc", "source", "boundary"}));
  add_out(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  try {
    if (family->parsed()) return run_family(o, out);
    if (sieve_cmd->parsed()) return run_sieve(o, out);
    if (records->parsed()) return run_records(o, out);
    if (dataset->parsed()) return run_dataset(o, out, err);
    if (verify->parsed()) return run_verify(o, out);
    if (plot->parsed()) return run_plot(o, out);
  } catch (const UsageError& e) {
    err << "ushape: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const Error& e) {
    err << "ushape: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "ushape: error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace ushape
