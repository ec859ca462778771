// Command-line front end. Everything goes through the C API in qplane.h;
// results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success/verified, 1 usage error, 2 evaluation error
// (syntax, pole, nonzero constant term, ...), 3 verification failure or
// internal cross-check mismatch.

#include <qplane.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

constexpr unsigned kMaxBinomialN = 100;
constexpr unsigned kMaxVerifyN = 100;
constexpr unsigned kMaxTheorem2Order = 24;
constexpr unsigned kMaxSeriesOrder = 32;
constexpr unsigned kOracleHardCap = 24;

/// Owner for strings returned by the library.
struct String {
  char *s = nullptr;
  ~String() { qpl_string_free(s); }
};

int exit_code_for(qpl_status status) {
  switch (status) {
  case QPL_OK:
    return 0;
  case QPL_ERR_INVALID_ARGUMENT:
  case QPL_ERR_MISSING_ORDER:
  case QPL_ERR_OUT_OF_RANGE:
  case QPL_ERR_ORACLE_BOUND:
    return 1;
  case QPL_ERR_SYNTAX:
  case QPL_ERR_EXPONENT_TOO_LARGE:
  case QPL_ERR_DIVISION_BY_ZERO:
  case QPL_ERR_NONZERO_CONSTANT_TERM:
  case QPL_ERR_POLE:
    return 2;
  default:
    return 3;
  }
}

int report_error(qpl_status status) {
  std::fprintf(stderr, "error: %s\n", qpl_last_error());
  return exit_code_for(status);
}

int usage_error(const std::string &message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return 1;
}

/// Oracle cap: library default unless QPLANE_ORACLE_MAX overrides it.
/// Returns false (with a diagnostic) on a malformed or excessive value.
bool resolve_oracle_bound(unsigned &bound) {
  bound = qpl_default_oracle_bound();
  const char *env = std::getenv("QPLANE_ORACLE_MAX");
  if (!env || !*env)
    return true;
  char *end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || end == env) {
    std::fprintf(stderr, "error: QPLANE_ORACLE_MAX is not a number: '%s'\n",
                 env);
    return false;
  }
  if (value > kOracleHardCap) {
    std::fprintf(stderr,
                 "error: QPLANE_ORACLE_MAX %lu exceeds the hard cap %u "
                 "(the oracle walks 2^n words)\n",
                 value, kOracleHardCap);
    return false;
  }
  bound = static_cast<unsigned>(value);
  return true;
}

void print_progress(unsigned index, int pass, void *) {
  std::fprintf(stderr, "check %u: %s\n", index, pass ? "ok" : "FAIL");
}

int run_verification(qpl_status (*verify)(unsigned, unsigned, unsigned,
                                          qpl_progress_fn, void *, char **,
                                          int *),
                     unsigned a, unsigned b, unsigned c) {
  String report;
  int verified = 0;
  qpl_status status =
      verify(a, b, c, print_progress, nullptr, &report.s, &verified);
  if (status != QPL_OK)
    return report_error(status);
  std::puts(report.s);
  return verified ? 0 : 3;
}

// Wrapper so theorem 2 fits the same shape as theorem 1.
qpl_status verify_theorem2_adapter(unsigned order, unsigned, unsigned,
                                   qpl_progress_fn progress, void *user,
                                   char **report_json, int *verified) {
  return qpl_verify_theorem2(order, progress, user, report_json, verified);
}

int run_normalize(const std::string &expr, long order, const std::string &q,
                  bool has_q, bool json) {
  qpl_expr *parsed = nullptr;
  qpl_status status = qpl_parse(expr.c_str(), &parsed);
  if (status != QPL_OK)
    return report_error(status);

  qpl_value *value = nullptr;
  status = qpl_expr_evaluate(parsed, order, &value);
  qpl_expr_free(parsed);
  if (status != QPL_OK)
    return report_error(status);

  if (has_q) {
    qpl_value *specialized = nullptr;
    status = qpl_value_specialize(value, q.c_str(), &specialized);
    qpl_value_free(value);
    if (status != QPL_OK)
      return report_error(status);
    value = specialized;
  }

  String text;
  status = qpl_value_render(value, json ? QPL_FORMAT_JSON : QPL_FORMAT_TEXT,
                            &text.s);
  qpl_value_free(value);
  if (status != QPL_OK)
    return report_error(status);
  std::puts(text.s);
  return 0;
}

int run_qbinom(unsigned n, unsigned k, const std::string &q, bool has_q) {
  qpl_poly *poly = nullptr;
  qpl_status status = qpl_qbinomial(n, k, &poly);
  if (status != QPL_OK)
    return report_error(status);

  String text;
  status = has_q ? qpl_poly_eval(poly, q.c_str(), &text.s)
                 : qpl_poly_render(poly, &text.s);
  qpl_poly_free(poly);
  if (status != QPL_OK)
    return report_error(status);
  std::puts(text.s);
  return 0;
}

int run_expand(unsigned n) {
  qpl_value *value = nullptr;
  qpl_status status = qpl_expand_binomial(n, &value);
  if (status != QPL_OK)
    return report_error(status);

  String text;
  status = qpl_value_render(value, QPL_FORMAT_TEXT, &text.s);
  qpl_value_free(value);
  if (status != QPL_OK)
    return report_error(status);
  std::puts(text.s);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact symbolic computation on the quantum plane yx = q*xy"};
  app.require_subcommand(1);

  int rc = 0;

  // normalize <expr> [--order N] [--q r] [--format text|json]
  std::string norm_expr;
  long norm_order = -1;
  std::string norm_q;
  std::string norm_format = "text";
  auto *normalize = app.add_subcommand(
      "normalize", "normal-order an expression (x powers before y powers)");
  normalize->add_option("expr", norm_expr, "expression, e.g. '(x+y)^3'")
      ->required();
  auto *norm_order_opt =
      normalize
          ->add_option("--order", norm_order,
                       "series truncation order (required with exp_q)")
          ->check(CLI::Range(0l, static_cast<long>(kMaxSeriesOrder)));
  auto *norm_q_opt = normalize->add_option(
      "--q", norm_q, "evaluate coefficients at this rational q");
  normalize->add_option("--format", norm_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  normalize->callback([&] {
    rc = run_normalize(norm_expr, norm_order_opt->count() ? norm_order : -1,
                       norm_q, norm_q_opt->count() > 0, norm_format == "json");
  });

  // qbinom <n> <k> [--q r]
  unsigned qb_n = 0, qb_k = 0;
  std::string qb_q;
  auto *qbinom = app.add_subcommand(
      "qbinom", "Gaussian binomial coefficient, two algorithms cross-checked");
  qbinom->add_option("n", qb_n, "upper index")
      ->required()
      ->check(CLI::Range(0u, kMaxBinomialN));
  qbinom->add_option("k", qb_k, "lower index")->required();
  auto *qb_q_opt =
      qbinom->add_option("--q", qb_q, "evaluate at this rational q");
  qbinom->callback(
      [&] { rc = run_qbinom(qb_n, qb_k, qb_q, qb_q_opt->count() > 0); });

  // expand <n>
  unsigned expand_n = 0;
  auto *expand = app.add_subcommand(
      "expand", "binomial expansion of (x+y)^n with Gaussian coefficients");
  expand->add_option("n", expand_n, "exponent")
      ->required()
      ->check(CLI::Range(0u, kMaxBinomialN));
  expand->callback([&] { rc = run_expand(expand_n); });

  // verify theorem1 --n-max N --oracle-max M
  // verify theorem2 --order N
  auto *verify =
      app.add_subcommand("verify", "mechanically check a theorem, emit a "
                                   "JSON report");
  verify->require_subcommand(1);

  unsigned v1_n_max = 0, v1_oracle_max = 0;
  auto *theorem1 = verify->add_subcommand(
      "theorem1", "binomial theorem: (x+y)^n against Gaussian coefficients");
  theorem1->add_option("--n-max", v1_n_max, "check every n up to this")
      ->required()
      ->check(CLI::Range(0u, kMaxVerifyN));
  theorem1
      ->add_option("--oracle-max", v1_oracle_max,
                   "run the brute-force word oracle up to this n")
      ->required();
  theorem1->callback([&] {
    unsigned bound = 0;
    if (!resolve_oracle_bound(bound)) {
      rc = 1;
      return;
    }
    if (v1_oracle_max > bound) {
      rc = usage_error(
          "--oracle-max " + std::to_string(v1_oracle_max) +
          " exceeds the oracle bound " + std::to_string(bound) +
          " (the oracle walks 2^n words; raise QPLANE_ORACLE_MAX up to 24)");
      return;
    }
    rc = run_verification(qpl_verify_theorem1, v1_n_max, v1_oracle_max, bound);
  });

  unsigned v2_order = 0;
  auto *theorem2 = verify->add_subcommand(
      "theorem2", "q-exponential identity exp_q(x+y) = exp_q(x) exp_q(y)");
  theorem2->add_option("--order", v2_order, "series truncation order")
      ->required()
      ->check(CLI::Range(0u, kMaxTheorem2Order));
  theorem2->callback([&] {
    rc = run_verification(verify_theorem2_adapter, v2_order, 0, 0);
  });

  // eval <expr> --q r [--order N]
  std::string eval_expr, eval_q;
  long eval_order = -1;
  auto *eval = app.add_subcommand(
      "eval", "normal-order, then evaluate coefficients at a rational q");
  eval->add_option("expr", eval_expr, "expression")->required();
  eval->add_option("--q", eval_q, "rational value of q, e.g. 1, -1, 2/3")
      ->required();
  auto *eval_order_opt =
      eval->add_option("--order", eval_order,
                       "series truncation order (required with exp_q)")
          ->check(CLI::Range(0l, static_cast<long>(kMaxSeriesOrder)));
  eval->callback([&] {
    rc = run_normalize(eval_expr, eval_order_opt->count() ? eval_order : -1,
                       eval_q, true, false);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}
