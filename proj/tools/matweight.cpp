// matweight: command-line front end for the verification suites, the
// alpha/beta table and point evaluations of K.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matweight/matweight.hpp"

namespace {

using namespace matweight;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string k0 = "3/10";
  std::string k1 = "1/10";
  int n_max = 4;
  double tol = 1e-8;
  std::optional<double> theta;
  std::string format;
  std::string out;
  std::string suite;
};

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--k0", o.k0, "multiplicity k0: exact rational (3/10) or decimal (0.3)")->capture_default_str();
  cmd->add_option("--k1", o.k1, "multiplicity k1: exact rational or decimal")->capture_default_str();
  cmd->add_option("--nmax", o.n_max, "largest n")->capture_default_str();
  cmd->add_option("--tol", o.tol, "relative tolerance for numeric checks")->capture_default_str();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

Rational parse_param(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw usage_error(std::string(flag) + ": not a rational or decimal number: '" + text + "'");
  }
}

bool written_as_decimal(const std::string& text) { return text.find_first_of(".eE") != std::string::npos; }

SuiteConfig make_config(const Options& o) {
  if (o.n_max < 0) throw usage_error("--nmax must be >= 0");
  if (!(o.tol > 0.0) || !std::isfinite(o.tol)) throw usage_error("--tol must be a positive number");
  SuiteConfig cfg;
  cfg.k0 = parse_param(o.k0, "--k0");
  cfg.k1 = parse_param(o.k1, "--k1");
  cfg.n_max = o.n_max;
  cfg.tol = o.tol;
  return cfg;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw usage_error("cannot open --out file '" + o.out + "'");
  f << text;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int cmd_verify(const Options& o) {
  const SuiteConfig cfg = make_config(o);
  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.suite = o.suite;
  const ParamPoint p = ParamPoint::make(cfg.k0.to_double(), cfg.k1.to_double());
  report.params = {{"k0", o.k0},
                   {"k1", o.k1},
                   {"k0_exact", cfg.k0.str()},
                   {"k1_exact", cfg.k1.str()},
                   {"integrable", bool_str(p.integrable)},
                   {"positive_definite", bool_str(p.positive_definite)},
                   {"nmax", std::to_string(cfg.n_max)},
                   {"tol", format_double(cfg.tol)}};
  if (o.suite == "exact" || o.suite == "all") report.append(exact_suite(cfg));
  if (o.suite == "quad" || o.suite == "all") report.append(quad_suite(cfg));
  if (o.suite == "asym" || o.suite == "all") report.append(asym_suite(cfg));
  report.sort_checks();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (o.format == "json") emit(o, to_json(report).dump(2) + "\n");
  else if (o.format == "csv") emit(o, to_csv(report));
  else emit(o, to_text(report));
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_table(const Options& o, bool params_given) {
  const SuiteConfig cfg = make_config(o);
  const bool decimal = written_as_decimal(o.k0) || written_as_decimal(o.k1);
  const AlphaBetaSeq seq = alpha_beta_recurrence(cfg.n_max);
  auto show = [&](const ParamPoly& v) {
    if (!params_given) return to_string(v);
    const Rational x = poly_eval(v, cfg.k0, cfg.k1);
    return decimal ? format_double(x.to_double()) : x.str();
  };
  struct Row {
    int n;
    std::string alpha, beta, s12, s14;
  };
  std::vector<Row> rows;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    rows.push_back({n, show(seq.alpha[un]), show(seq.beta[un]), show(s_inner_closed(n, Pairing::p12)),
                    show(s_inner_closed(n, Pairing::p14))});
  }
  std::ostringstream os;
  if (o.format == "csv") {
    os << "n,alpha,beta,s_p12,s_p14\n";
    for (const Row& r : rows)
      os << r.n << ',' << csv_field(r.alpha) << ',' << csv_field(r.beta) << ',' << csv_field(r.s12) << ','
         << csv_field(r.s14) << '\n';
  } else if (o.format == "json") {
    nlohmann::ordered_json j;
    j["k0"] = params_given ? nlohmann::ordered_json(o.k0) : nlohmann::ordered_json(nullptr);
    j["k1"] = params_given ? nlohmann::ordered_json(o.k1) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& r : rows)
      arr.push_back({{"n", r.n}, {"alpha", r.alpha}, {"beta", r.beta}, {"s_p12", r.s12}, {"s_p14", r.s14}});
    j["rows"] = arr;
    os << j.dump(2) << '\n';
  } else {
    for (const Row& r : rows)
      os << "n=" << r.n << "  alpha=" << r.alpha << "  beta=" << r.beta << "  s_p12=" << r.s12
         << "  s_p14=" << r.s14 << '\n';
  }
  emit(o, os.str());
  return kExitPass;
}

int cmd_eval_k(const Options& o) {
  if (!o.theta) throw usage_error("eval-k requires --theta");
  const Rational k0v = parse_param(o.k0, "--k0"), k1v = parse_param(o.k1, "--k1");
  const ParamPoint p = ParamPoint::make(k0v.to_double(), k1v.to_double());
  const double theta = *o.theta;
  if (!p.positive_definite || !p.integrable) {
    std::cerr << "matweight: (k0, k1) = (" << o.k0 << ", " << o.k1
              << ") is outside the positive-definite region -1/2 < k0 +- k1 < 1/2\n";
    return kExitFail;
  }
  if (!(theta > 0.0 && theta < std::numbers::pi / 4.0)) {
    std::cerr << "matweight: theta must satisfy 0 < theta < pi/4\n";
    return kExitFail;
  }
  const WeightEval w = eval_K(theta, p);
  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["k0"] = o.k0;
    j["k1"] = o.k1;
    j["theta"] = theta;
    j["u"] = w.u;
    j["L"] = {w.L(0, 0), w.L(0, 1), w.L(1, 0), w.L(1, 1)};
    j["K"] = {w.K(0, 0), w.K(0, 1), w.K(1, 1)};
    j["d1"] = w.d1;
    j["d2"] = w.d2;
    j["detK"] = w.detK();
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << "u,L11,L12,L21,L22,k11,k12,k22,d1,d2,detK\n";
    const double vals[] = {w.u, w.L(0, 0), w.L(0, 1), w.L(1, 0), w.L(1, 1), w.K(0, 0),
                           w.K(0, 1), w.K(1, 1), w.d1, w.d2, w.detK()};
    for (std::size_t i = 0; i < std::size(vals); ++i) os << (i ? "," : "") << format_double(vals[i]);
    os << '\n';
  } else {
    os << "u     " << format_double(w.u) << '\n'
       << "L     " << format_double(w.L(0, 0)) << ' ' << format_double(w.L(0, 1)) << " / "
       << format_double(w.L(1, 0)) << ' ' << format_double(w.L(1, 1)) << '\n'
       << "K     " << format_double(w.K(0, 0)) << ' ' << format_double(w.K(0, 1)) << ' '
       << format_double(w.K(1, 1)) << '\n'
       << "d1 d2 " << format_double(w.d1) << ' ' << format_double(w.d2) << '\n'
       << "detK  " << format_double(w.detK()) << '\n';
  }
  emit(o, os.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix weight for W(B2): exact and numerical checks of the normalising constant"};
  app.require_subcommand(1);

  Options verify_opts, table_opts, eval_opts;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_opts.suite, "which suite")
      ->required()
      ->check(CLI::IsMember({"exact", "quad", "asym", "all"}));
  add_common(verify, verify_opts, "json");

  CLI::App* table = app.add_subcommand("table", "tabulate alpha_n, beta_n and the spherical inner products");
  add_common(table, table_opts, "csv");

  CLI::App* eval_k = app.add_subcommand("eval-k", "evaluate L, K, d1, d2 at x = (cos theta, sin theta)");
  add_common(eval_k, eval_opts, "json");
  eval_k->add_option("--theta", eval_opts.theta, "angle in (0, pi/4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_opts);
    if (*table) {
      const bool given = table->count("--k0") > 0 || table->count("--k1") > 0;
      return cmd_table(table_opts, given);
    }
    if (*eval_k) return cmd_eval_k(eval_opts);
  } catch (const usage_error& e) {
    std::cerr << "matweight: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "matweight: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
