#include "degensum/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "degensum/probmoment.hpp"
#include "degensum/ring.hpp"
#include "degensum/special_numbers.hpp"
#include "degensum/sums.hpp"
#include "degensum/verify.hpp"

namespace degensum::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::plain;
}

Rational parse_lambda(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("invalid --lambda '" + text + "': " + e.what());
  }
}

Integer parse_nonnegative(const std::string& text, const char* flag) {
  Integer v;
  try {
    v = parse_integer(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + flag + " '" + text + "'");
  }
  if (sgn(v) < 0) throw UsageError(std::string(flag) + " must be nonnegative");
  return v;
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Left-aligned two-column block.
void print_pairs(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << key << value << '\n';
}

struct LambdaChoice {
  std::string lambda;  // raw --lambda text
  bool symbolic = false;

  bool is_symbolic() const { return symbolic || lambda == "symbolic"; }
};

void check_lambda_choice(const LambdaChoice& c) {
  if (c.symbolic && !c.lambda.empty()) throw UsageError("--lambda and --symbolic are mutually exclusive");
  if (!c.symbolic && c.lambda.empty()) throw UsageError("one of --lambda or --symbolic is required");
}

// --- sum ---------------------------------------------------------------------

struct SumArgs {
  std::size_t k = 0;
  std::string n;
  LambdaChoice lambda;
  std::string method = "direct";
  std::string format = "plain";
};

template <ScalarRing R>
int emit_sum(const R& ring, const SumArgs& a, std::ostream& out) {
  const Integer n = parse_nonnegative(a.n, "--n");
  const SpecialNumbers<R> tables(ring);
  SumReport<R> report;
  if (a.method == "all") {
    report = sum_all_methods(tables, a.k, n);
  } else {
    const SumMethod m = *parse_sum_method(a.method);
    report.k = a.k;
    report.n = n;
    report.lambda = ring.describe();
    report.values.emplace_back(m, sum_with(m, tables, a.k, n));
  }
  switch (parse_format(a.format)) {
    case Format::plain:
      if (report.values.size() == 1) {
        out << to_text(report.values.front().second) << '\n';
      } else {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [m, v] : report.values) rows.emplace_back(std::string(to_string(m)), to_text(v));
        rows.emplace_back("agreement", report.agreement ? "true" : "false");
        print_pairs(out, rows);
      }
      break;
    case Format::json: {
      json values = json::object();
      for (const auto& [m, v] : report.values) values[std::string(to_string(m))] = to_text(v);
      json doc = {{"k", report.k},
                  {"n", integer_json(report.n)},
                  {"lambda", report.lambda},
                  {"values", values},
                  {"agreement", report.agreement}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "method,value\n";
      for (const auto& [m, v] : report.values) out << to_string(m) << ',' << to_text(v) << '\n';
      break;
  }
  return report.agreement ? kOk : kDisagreement;
}

int run_sum(const SumArgs& a, std::ostream& out) {
  if (a.k < 1) throw UsageError("--k must be >= 1");
  check_lambda_choice(a.lambda);
  if (a.method != "all" && !parse_sum_method(a.method)) throw UsageError("unknown --method '" + a.method + "'");
  if (a.lambda.is_symbolic()) return emit_sum(SymbolicLambda{}, a, out);
  return emit_sum(FixedLambda{parse_lambda(a.lambda.lambda)}, a, out);
}

// --- bernoulli / stirling ----------------------------------------------------------

struct TableArgs {
  std::size_t max_n = 10;
  LambdaChoice lambda;
  std::string x;  // optional polynomial argument for bernoulli
  std::string format = "plain";
};

template <ScalarRing R>
Scalar<R> parse_scalar(const R&, const std::string& text) {
  try {
    if constexpr (std::is_same_v<Scalar<R>, LambdaPoly>) {
      return LambdaPoly::parse(text);
    } else {
      return Rational::parse(text);
    }
  } catch (const std::exception& e) {
    throw UsageError("invalid --x '" + text + "': " + e.what());
  }
}

void emit_rows(std::ostream& out, Format format, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  switch (format) {
    case Format::plain: {
      std::vector<std::size_t> width(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c + 1 == cells.size()) {
            out << cells[c];
          } else {
            out << std::right << std::setw(static_cast<int>(width[c])) << cells[c] << "  ";
          }
        }
        out << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      break;
    }
    case Format::csv:
      for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
      out << '\n';
      for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
        out << '\n';
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json obj = json::object();
        for (std::size_t c = 0; c + 1 < r.size(); ++c) obj[header[c]] = std::stol(r[c]);
        obj[header.back()] = r.back();
        arr.push_back(obj);
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

template <ScalarRing R>
int emit_bernoulli(const R& ring, const TableArgs& a, std::ostream& out) {
  const SpecialNumbers<R> tables(ring);
  std::vector<std::vector<std::string>> rows;
  if (a.x.empty()) {
    const auto values = tables.bernoulli_prefix(a.max_n);
    for (std::size_t n = 0; n <= a.max_n; ++n) rows.push_back({std::to_string(n), to_text(values[n])});
  } else {
    const Scalar<R> x = parse_scalar(ring, a.x);
    for (std::size_t n = 0; n <= a.max_n; ++n) rows.push_back({std::to_string(n), to_text(degen_bernoulli_poly(n, x, tables))});
  }
  emit_rows(out, parse_format(a.format), {"n", "value"}, rows);
  return kOk;
}

template <ScalarRing R>
int emit_stirling(const R& ring, const TableArgs& a, std::ostream& out) {
  const SpecialNumbers<R> tables(ring);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n <= a.max_n; ++n) {
    const auto row = tables.stirling_row(n);
    for (std::size_t k = 0; k <= n; ++k) rows.push_back({std::to_string(n), std::to_string(k), to_text(row[k])});
  }
  emit_rows(out, parse_format(a.format), {"n", "k", "value"}, rows);
  return kOk;
}

int run_bernoulli(const TableArgs& a, std::ostream& out) {
  check_lambda_choice(a.lambda);
  if (a.lambda.is_symbolic()) return emit_bernoulli(SymbolicLambda{}, a, out);
  return emit_bernoulli(FixedLambda{parse_lambda(a.lambda.lambda)}, a, out);
}

int run_stirling(const TableArgs& a, std::ostream& out) {
  check_lambda_choice(a.lambda);
  if (a.lambda.is_symbolic()) return emit_stirling(SymbolicLambda{}, a, out);
  return emit_stirling(FixedLambda{parse_lambda(a.lambda.lambda)}, a, out);
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::size_t max_k = 6;
  std::size_t max_n = 12;
  std::vector<std::string> lambdas{"0", "1", "1/2"};
  bool symbolic = false;
  std::uint64_t seed = 1;
  std::string fault;
  std::string format = "plain";
};

unsigned threads_from_env() {
  const char* raw = std::getenv("DEGENSUM_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  Integer v;
  try {
    v = parse_integer(raw);
  } catch (const std::exception&) {
    throw UsageError(std::string("DEGENSUM_THREADS must be a positive integer, got '") + raw + "'");
  }
  if (sgn(v) <= 0 || !v.fits_uint_p()) {
    throw UsageError(std::string("DEGENSUM_THREADS must be a positive integer, got '") + raw + "'");
  }
  return static_cast<unsigned>(v.get_ui());
}

int run_verify_cmd(const VerifyArgs& a, std::ostream& out) {
  if (a.max_k < 1 || a.max_n < 1) throw UsageError("--max-k and --max-n must be >= 1");
  VerifyOptions opts;
  opts.max_k = a.max_k;
  opts.max_n = a.max_n;
  opts.lambdas.clear();
  for (const auto& l : a.lambdas) opts.lambdas.push_back(parse_lambda(l));
  opts.symbolic = a.symbolic;
  opts.seed = a.seed;
  opts.threads = threads_from_env();
  if (!a.fault.empty()) {
    if (a.fault != "stirling") throw UsageError("unknown fault '" + a.fault + "'");
    opts.fault = a.fault;
  }
  const VerifyOutcome outcome = run_verify(opts);
  if (parse_format(a.format) == Format::json) {
    json failures = json::array();
    for (const auto& f : outcome.failures) {
      failures.push_back({{"identity", f.identity}, {"params", f.params}, {"expected", f.expected}, {"got", f.got}});
    }
    out << json{{"cases_run", outcome.cases_run}, {"failures", failures}}.dump(2) << '\n';
  } else {
    for (const auto& f : outcome.failures) {
      out << "FAIL " << f.identity << " [" << f.params << "] expected " << f.expected << " got " << f.got << '\n';
    }
    out << "cases_run " << outcome.cases_run << '\n' << "failures " << outcome.failures.size() << '\n';
  }
  return outcome.exit_code();
}

// --- moment ----------------------------------------------------------------

struct MomentArgs {
  std::string dist;
  std::size_t k = 0;
  std::string lambda;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string format = "plain";
};

FinitePMF load_distribution(const std::string& dist) {
  static constexpr std::string_view kUniform = "uniform:";
  static constexpr std::string_view kFile = "file:";
  if (dist.rfind(kUniform, 0) == 0) {
    return uniform_pmf(parse_nonnegative(dist.substr(kUniform.size()), "--dist uniform:N"));
  }
  if (dist.rfind(kFile, 0) == 0) return load_pmf_file(dist.substr(kFile.size()));
  return load_pmf_file(dist);
}

int run_moment(const MomentArgs& a, std::ostream& out) {
  if (a.k < 1) throw UsageError("--k must be >= 1");
  const Rational lam = parse_lambda(a.lambda);
  const FinitePMF pmf = load_distribution(a.dist);
  const MomentReport r = moment_report(pmf, a.k, lam, a.samples, a.seed);
  const bool mc = r.samples > 0;
  switch (parse_format(a.format)) {
    case Format::plain:
    case Format::csv: {
      std::vector<std::pair<std::string, std::string>> rows = {
          {"k", std::to_string(r.k)},
          {"lambda", r.lambda.to_string()},
          {"exact_direct", r.exact_direct.to_string()},
          {"exact_survival", r.exact_survival.to_string()},
          {"mc_estimate", mc ? format_double(r.mc_estimate) : "skipped"},
          {"mc_stderr", mc ? format_double(r.mc_stderr) : "skipped"},
          {"samples", std::to_string(r.samples)},
          {"seed", std::to_string(r.seed)},
      };
      if (parse_format(a.format) == Format::plain) {
        print_pairs(out, rows);
      } else {
        out << "field,value\n";
        for (const auto& [key, value] : rows) out << key << ',' << value << '\n';
      }
      break;
    }
    case Format::json:
      out << json{{"k", r.k},
                  {"lambda", r.lambda.to_string()},
                  {"exact_direct", r.exact_direct.to_string()},
                  {"exact_survival", r.exact_survival.to_string()},
                  {"mc_estimate", mc ? json(r.mc_estimate) : json(nullptr)},
                  {"mc_stderr", mc ? json(r.mc_stderr) : json(nullptr)},
                  {"samples", r.samples},
                  {"seed", r.seed}}
                 .dump(2)
          << '\n';
      break;
  }
  return r.exact_agree() ? kOk : kDisagreement;
}

void add_lambda_options(CLI::App* cmd, LambdaChoice& choice) {
  cmd->add_option("--lambda", choice.lambda, "Fixed lambda as p/q (or \"symbolic\")");
  cmd->add_flag("--symbolic", choice.symbolic, "Keep lambda as a formal variable, printed as L");
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "degensum: exact sums of degenerate falling factorials S_{k,L}(n) = sum_{j=1}^{n} (j)_{k,L}.\n"
      "Symbolic lambda values print as polynomials in the letter L, e.g. \"14 - 6*L\".\n"
      "Exit codes: 0 ok, 2 mathematical disagreement, 64 usage error, 65 data error.",
      "degensum"};
  app.require_subcommand(1);

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "Compute S_{k,L}(n) by one or all six methods");
  sum->add_option("--k", sum_args.k, "Order k >= 1")->required();
  sum->add_option("--n", sum_args.n, "Upper limit n >= 0")->required();
  add_lambda_options(sum, sum_args.lambda);
  sum->add_option("--method", sum_args.method, "direct|bernoulli|stirling|rec_a|rec_b|rec_prob|all (default direct)");
  add_format_option(sum, sum_args.format);

  TableArgs bern_args;
  auto* bern = app.add_subcommand("bernoulli", "Tabulate degenerate Bernoulli numbers (or polynomials at --x)");
  bern->add_option("--max-n", bern_args.max_n, "Last index")->check(CLI::NonNegativeNumber);
  add_lambda_options(bern, bern_args.lambda);
  bern->add_option("--x", bern_args.x, "Evaluate beta_{n,L}(x) at this argument");
  add_format_option(bern, bern_args.format);

  TableArgs stir_args;
  auto* stir = app.add_subcommand("stirling", "Tabulate degenerate Stirling numbers of the second kind");
  stir->add_option("--max-n", stir_args.max_n, "Last row")->check(CLI::NonNegativeNumber);
  add_lambda_options(stir, stir_args.lambda);
  add_format_option(stir, stir_args.format);

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Run every registered identity over a grid (DEGENSUM_THREADS caps workers)");
  ver->add_option("--max-k", ver_args.max_k, "Largest k");
  ver->add_option("--max-n", ver_args.max_n, "Largest n");
  ver->add_option("--lambdas", ver_args.lambdas, "Comma-separated fixed lambdas")->delimiter(',');
  ver->add_flag("--symbolic", ver_args.symbolic, "Also run every identity with symbolic lambda");
  ver->add_option("--seed", ver_args.seed, "Seed for random PMFs and Monte Carlo");
  ver->add_option("--inject-fault", ver_args.fault)->group("");
  ver->add_option("--format", ver_args.format, "Output format")->check(CLI::IsMember({"plain", "json"}));

  MomentArgs mom_args;
  auto* mom = app.add_subcommand("moment", "Degenerate moment E[(X)_{k,L}] exactly (two routes) and by Monte Carlo");
  mom->add_option("--dist", mom_args.dist, "uniform:N, file:PATH or PATH to a PMF JSON file")->required();
  mom->add_option("--k", mom_args.k, "Order k >= 1")->required();
  mom->add_option("--lambda", mom_args.lambda, "Fixed lambda as p/q")->required();
  mom->add_option("--samples", mom_args.samples, "Monte Carlo samples (0 skips)");
  mom->add_option("--seed", mom_args.seed, "Monte Carlo seed (mt19937_64)");
  add_format_option(mom, mom_args.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (sum->parsed()) return run_sum(sum_args, out);
    if (bern->parsed()) return run_bernoulli(bern_args, out);
    if (stir->parsed()) return run_stirling(stir_args, out);
    if (ver->parsed()) return run_verify_cmd(ver_args, out);
    if (mom->parsed()) return run_moment(mom_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PmfError& e) {
    err << "error: invalid distribution (" << e.invariant() << "): " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace degensum::cli
