// Exercises the shared library strictly through its C surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qplane.h>

#include <cstring>
#include <string>

namespace {

/// Scoped owner for library strings.
struct String {
  char *s = nullptr;
  ~String() { qpl_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

std::string evaluate_to_text(const char *input, long order = -1) {
  qpl_expr *expr = nullptr;
  REQUIRE(qpl_parse(input, &expr) == QPL_OK);
  qpl_value *value = nullptr;
  REQUIRE(qpl_expr_evaluate(expr, order, &value) == QPL_OK);
  qpl_expr_free(expr);
  String text;
  REQUIRE(qpl_value_render(value, QPL_FORMAT_TEXT, &text.s) == QPL_OK);
  qpl_value_free(value);
  return text.str();
}

} // namespace

TEST_CASE("parse, evaluate, render") {
  CHECK(evaluate_to_text("y*x") == "q*x*y");
  CHECK(evaluate_to_text("(x+y)^2") == "x^2 + (1 + q)*x*y + y^2");
  CHECK(evaluate_to_text("exp_q(x)", 2) == "1 + x + (1 / (1 + q))*x^2");

  qpl_expr *expr = nullptr;
  REQUIRE(qpl_parse("exp_q(x+y)", &expr) == QPL_OK);
  CHECK(qpl_expr_has_exp_q(expr) == 1);
  qpl_expr_free(expr);

  REQUIRE(qpl_parse("x+y", &expr) == QPL_OK);
  CHECK(qpl_expr_has_exp_q(expr) == 0);

  qpl_value *value = nullptr;
  REQUIRE(qpl_expr_evaluate(expr, -1, &value) == QPL_OK);
  String json;
  REQUIRE(qpl_value_render(value, QPL_FORMAT_JSON, &json.s) == QPL_OK);
  CHECK(json.str() ==
        R"({"terms":[{"xexp":1,"yexp":0,"num":"1","den":"1"},)"
        R"({"xexp":0,"yexp":1,"num":"1","den":"1"}]})");
  qpl_value_free(value);
  qpl_expr_free(expr);
}

TEST_CASE("error reporting") {
  qpl_expr *expr = nullptr;
  CHECK(qpl_parse("x +", &expr) == QPL_ERR_SYNTAX);
  CHECK(qpl_last_error_offset() == 3);
  CHECK(std::strlen(qpl_last_error()) > 0);

  CHECK(qpl_parse("x^10001", &expr) == QPL_ERR_EXPONENT_TOO_LARGE);
  CHECK(qpl_last_error_offset() == -1);

  CHECK(qpl_parse("1/0", &expr) == QPL_ERR_DIVISION_BY_ZERO);
  CHECK(qpl_parse(nullptr, &expr) == QPL_ERR_INVALID_ARGUMENT);

  // Missing truncation order for a series expression.
  REQUIRE(qpl_parse("exp_q(x)", &expr) == QPL_OK);
  qpl_value *value = nullptr;
  CHECK(qpl_expr_evaluate(expr, -1, &value) == QPL_ERR_MISSING_ORDER);
  qpl_expr_free(expr);

  // Nonzero constant term inside exp_q.
  REQUIRE(qpl_parse("exp_q(1+x)", &expr) == QPL_OK);
  CHECK(qpl_expr_evaluate(expr, 3, &value) == QPL_ERR_NONZERO_CONSTANT_TERM);
  qpl_expr_free(expr);
}

TEST_CASE("specialization through the C surface") {
  qpl_expr *expr = nullptr;
  REQUIRE(qpl_parse("exp_q(x)", &expr) == QPL_OK);
  qpl_value *value = nullptr;
  REQUIRE(qpl_expr_evaluate(expr, 2, &value) == QPL_OK);
  qpl_expr_free(expr);

  qpl_value *at1 = nullptr;
  REQUIRE(qpl_value_specialize(value, "1", &at1) == QPL_OK);
  String text;
  REQUIRE(qpl_value_render(at1, QPL_FORMAT_TEXT, &text.s) == QPL_OK);
  CHECK(text.str() == "1 + x + 1/2*x^2");
  qpl_value_free(at1);

  qpl_value *at_minus1 = nullptr;
  CHECK(qpl_value_specialize(value, "-1", &at_minus1) == QPL_ERR_POLE);
  CHECK(std::string(qpl_last_error()).find("1 + q") != std::string::npos);

  CHECK(qpl_value_specialize(value, "not-a-number", &at_minus1) ==
        QPL_ERR_INVALID_ARGUMENT);
  CHECK(qpl_value_specialize(value, "1/0", &at_minus1) ==
        QPL_ERR_DIVISION_BY_ZERO);
  qpl_value_free(value);
}

TEST_CASE("q-binomial with built-in cross-check") {
  qpl_poly *poly = nullptr;
  REQUIRE(qpl_qbinomial(4, 2, &poly) == QPL_OK);
  String text;
  REQUIRE(qpl_poly_render(poly, &text.s) == QPL_OK);
  CHECK(text.str() == "1 + q + 2*q^2 + q^3 + q^4");

  String value;
  REQUIRE(qpl_poly_eval(poly, "1", &value.s) == QPL_OK);
  CHECK(value.str() == "6");
  String value_half;
  REQUIRE(qpl_poly_eval(poly, "1/2", &value_half.s) == QPL_OK);
  CHECK(value_half.str() == "35/16");
  qpl_poly_free(poly);

  CHECK(qpl_qbinomial(2, 5, &poly) == QPL_ERR_OUT_OF_RANGE);
}

TEST_CASE("binomial expansion") {
  qpl_value *value = nullptr;
  REQUIRE(qpl_expand_binomial(3, &value) == QPL_OK);
  String text;
  REQUIRE(qpl_value_render(value, QPL_FORMAT_TEXT, &text.s) == QPL_OK);
  CHECK(text.str() ==
        "x^3 + (1 + q + q^2)*x^2*y + (1 + q + q^2)*x*y^2 + y^3");
  qpl_value_free(value);
}

TEST_CASE("verification entry points") {
  unsigned calls = 0;
  auto progress = [](unsigned index, int pass, void *user) {
    CHECK(pass == 1);
    auto *count = static_cast<unsigned *>(user);
    CHECK(index == *count);
    ++*count;
  };

  String report;
  int verified = 0;
  REQUIRE(qpl_verify_theorem1(6, 3, qpl_default_oracle_bound(), progress,
                              &calls, &report.s, &verified) == QPL_OK);
  CHECK(verified == 1);
  CHECK(calls == 7);
  CHECK(report.str().find("\"theorem\":\"theorem1\"") != std::string::npos);
  CHECK(report.str().find("\"status\":\"verified\"") != std::string::npos);

  String report2;
  verified = 0;
  REQUIRE(qpl_verify_theorem2(5, nullptr, nullptr, &report2.s, &verified) ==
          QPL_OK);
  CHECK(verified == 1);
  CHECK(report2.str().find("\"theorem\":\"theorem2\"") != std::string::npos);

  CHECK(qpl_default_oracle_bound() == 14);
}
