#include "qplane.h"

#include "qplane/errors.hpp"
#include "qplane/evaluate.hpp"
#include "qplane/parser.hpp"
#include "qplane/qcombinatorics.hpp"
#include "qplane/render.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct qpl_expr {
  qplane::ExprNode::Ptr node;
};

struct qpl_value {
  qplane::Value value;
};

struct qpl_poly {
  qplane::QPolynomial poly;
};

namespace {

thread_local std::string t_error_message;
thread_local long t_error_offset = -1;

void clear_error() {
  t_error_message.clear();
  t_error_offset = -1;
}

qpl_status status_for(qplane::errc code) {
  using qplane::errc;
  switch (code) {
  case errc::syntax_error:
    return QPL_ERR_SYNTAX;
  case errc::exponent_too_large:
    return QPL_ERR_EXPONENT_TOO_LARGE;
  case errc::division_by_zero:
    return QPL_ERR_DIVISION_BY_ZERO;
  case errc::not_divisible:
    return QPL_ERR_NOT_DIVISIBLE;
  case errc::out_of_range:
    return QPL_ERR_OUT_OF_RANGE;
  case errc::oracle_bound_exceeded:
    return QPL_ERR_ORACLE_BOUND;
  case errc::nonzero_constant_term:
    return QPL_ERR_NONZERO_CONSTANT_TERM;
  case errc::missing_order:
    return QPL_ERR_MISSING_ORDER;
  case errc::pole_at_specialization:
    return QPL_ERR_POLE;
  case errc::both_zero:
  case errc::invalid_argument:
    return QPL_ERR_INVALID_ARGUMENT;
  }
  return QPL_ERR_INTERNAL;
}

qpl_status fail(qpl_status status, const std::string &message,
                long offset = -1) {
  t_error_message = message;
  t_error_offset = offset;
  return status;
}

/// Runs the body, translating exceptions into statuses and last-error state.
template <typename Fn> qpl_status guard(Fn &&body) {
  clear_error();
  try {
    return body();
  } catch (const qplane::SyntaxError &e) {
    return fail(QPL_ERR_SYNTAX, e.what(), static_cast<long>(e.offset()));
  } catch (const qplane::Error &e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(QPL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(QPL_ERR_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qpl_status write_string(const std::string &s, char **out) {
  *out = dup_string(s);
  return *out ? QPL_OK : fail(QPL_ERR_INTERNAL, "out of memory");
}

/// Exact rational from text such as "2", "-1" or "1/3". A zero denominator
/// is rejected here, before mpq_canonicalize would divide by it.
mpq_class parse_rational(const char *text) {
  if (!text)
    throw qplane::Error(qplane::errc::invalid_argument, "null rational");
  mpq_class r;
  if (mpq_set_str(r.get_mpq_t(), text, 10) != 0)
    throw qplane::Error(qplane::errc::invalid_argument,
                        std::string("not a rational number: '") + text + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw qplane::Error(qplane::errc::division_by_zero,
                        "rational denominator is zero");
  r.canonicalize();
  return r;
}

int run_verification(qplane::VerificationReport report,
                     char **report_json, int *verified) {
  if (verified)
    *verified = report.verified ? 1 : 0;
  if (report_json)
    return write_string(qplane::render_report_json(report), report_json);
  return QPL_OK;
}

qplane::ProgressFn progress_adapter(qpl_progress_fn progress, void *user) {
  if (!progress)
    return {};
  return [progress, user](const qplane::CheckRecord &check) {
    progress(check.index, check.pass ? 1 : 0, user);
  };
}

} // namespace

extern "C" {

const char *qpl_last_error(void) { return t_error_message.c_str(); }

long qpl_last_error_offset(void) { return t_error_offset; }

qpl_status qpl_parse(const char *input, qpl_expr **out) {
  return guard([&]() -> qpl_status {
    if (!input || !out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    auto node = qplane::parse(input);
    *out = new qpl_expr{std::move(node)};
    return QPL_OK;
  });
}

int qpl_expr_has_exp_q(const qpl_expr *expr) {
  return expr && expr->node->contains_exp_q() ? 1 : 0;
}

void qpl_expr_free(qpl_expr *expr) { delete expr; }

qpl_status qpl_expr_evaluate(const qpl_expr *expr, long order,
                             qpl_value **out) {
  return guard([&]() -> qpl_status {
    if (!expr || !out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    std::optional<unsigned> requested;
    if (order >= 0)
      requested = static_cast<unsigned>(order);
    auto value = qplane::evaluate(*expr->node, requested);
    *out = new qpl_value{std::move(value)};
    return QPL_OK;
  });
}

qpl_status qpl_value_render(const qpl_value *value, qpl_format format,
                            char **out) {
  return guard([&]() -> qpl_status {
    if (!value || !out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    auto fmt = format == QPL_FORMAT_JSON ? qplane::OutputFormat::json
                                         : qplane::OutputFormat::text;
    return write_string(qplane::render_value(value->value, fmt), out);
  });
}

qpl_status qpl_value_specialize(const qpl_value *value, const char *q,
                                qpl_value **out) {
  return guard([&]() -> qpl_status {
    if (!value || !out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    mpq_class r = parse_rational(q);
    *out = new qpl_value{qplane::specialize_value(value->value, r)};
    return QPL_OK;
  });
}

void qpl_value_free(qpl_value *value) { delete value; }

qpl_status qpl_qbinomial(unsigned n, unsigned k, qpl_poly **out) {
  return guard([&]() -> qpl_status {
    if (!out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    qplane::QPolynomial quotient = qplane::q_binomial_quotient(n, k);
    qplane::QBinomialTable table(n);
    const qplane::QPolynomial &recurrence =
        qplane::q_binomial_recurrence(n, k, table);
    if (!(quotient == recurrence))
      return fail(QPL_ERR_CROSS_CHECK,
                  "q-binomial algorithms disagree at (" + std::to_string(n) +
                      ", " + std::to_string(k) + "): quotient " +
                      quotient.to_string() + ", recurrence " +
                      recurrence.to_string());
    *out = new qpl_poly{std::move(quotient)};
    return QPL_OK;
  });
}

qpl_status qpl_poly_render(const qpl_poly *poly, char **out) {
  return guard([&]() -> qpl_status {
    if (!poly || !out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    return write_string(poly->poly.to_string(), out);
  });
}

qpl_status qpl_poly_eval(const qpl_poly *poly, const char *q, char **out) {
  return guard([&]() -> qpl_status {
    if (!poly || !out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    mpq_class r = parse_rational(q);
    return write_string(poly->poly.eval(r).get_str(), out);
  });
}

void qpl_poly_free(qpl_poly *poly) { delete poly; }

qpl_status qpl_expand_binomial(unsigned n, qpl_value **out) {
  return guard([&]() -> qpl_status {
    if (!out)
      return fail(QPL_ERR_INVALID_ARGUMENT, "null argument");
    *out = new qpl_value{qplane::expand_binomial_theorem(n)};
    return QPL_OK;
  });
}

qpl_status qpl_verify_theorem1(unsigned n_max, unsigned oracle_max,
                               unsigned oracle_bound,
                               qpl_progress_fn progress, void *user,
                               char **report_json, int *verified) {
  return guard([&]() -> qpl_status {
    auto report = qplane::verify_theorem1(n_max, oracle_max, oracle_bound, {},
                                          progress_adapter(progress, user));
    return static_cast<qpl_status>(
        run_verification(std::move(report), report_json, verified));
  });
}

qpl_status qpl_verify_theorem2(unsigned order, qpl_progress_fn progress,
                               void *user, char **report_json, int *verified) {
  return guard([&]() -> qpl_status {
    auto report =
        qplane::verify_theorem2(order, progress_adapter(progress, user));
    return static_cast<qpl_status>(
        run_verification(std::move(report), report_json, verified));
  });
}

unsigned qpl_default_oracle_bound(void) { return qplane::kDefaultOracleBound; }

void qpl_string_free(char *s) { std::free(s); }

} // extern "C"
