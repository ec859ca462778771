#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qplane/errors.hpp"
#include "qplane/qcombinatorics.hpp"
#include "qplane/series.hpp"
#include "test_support.hpp"

using namespace qplane;
using namespace qplane::testsupport;

namespace {

QRational inv(QPolynomial p) {
  return QRational(QPolynomial::one(), std::move(p));
}

} // namespace

TEST_CASE("series construction truncates by total degree") {
  PlaneElement x = PlaneElement::x();
  PlaneElement y = PlaneElement::y();

  CHECK(series_from_element(x + y, 0).body() == PlaneElement::zero());
  CHECK(series_from_element(PlaneElement::one() + x + x.pow(3), 2).body() ==
        PlaneElement::one() + x);
  PlaneElement e = x + y * y;
  CHECK(series_from_element(e, 5).body() == e);
}

TEST_CASE("arithmetic truncates to the smaller order") {
  PlaneElement x = PlaneElement::x();
  TruncatedSeries a(x.pow(2) + x, 4);
  TruncatedSeries b(PlaneElement::one(), 2);

  TruncatedSeries sum = a + b;
  CHECK(sum.order() == 2);
  CHECK(sum.body() == PlaneElement::one() + x + x.pow(2));

  TruncatedSeries prod = a * a;
  CHECK(prod.order() == 4);
  CHECK(prod.body() == x.pow(2) + x.pow(3).scale(QRational(2)) + x.pow(4));

  TruncatedSeries mixed = a * b;
  CHECK(mixed.order() == 2);
  CHECK(mixed.body() == x + x.pow(2));

  CHECK(a.pow(2) == prod);
  CHECK(a.pow(0).body() == PlaneElement::one());
  CHECK((-a).body() == -(a.body()));
}

TEST_CASE("series product truncates like the element product") {
  auto rng = make_rng(0x5eed0301);
  for (int i = 0; i < 200; ++i) {
    PlaneElement a = random_element(rng, 4, 4);
    PlaneElement b = random_element(rng, 4, 4);
    for (unsigned order : {0u, 2u, 5u}) {
      TruncatedSeries lhs =
          series_from_element(a, order) * series_from_element(b, order);
      CHECK(lhs.body() == (a * b).truncate(order));
    }
  }
}

TEST_CASE("exp_q small orders") {
  TruncatedSeries e = exp_q_series(PlaneElement::x(), 2);
  CHECK(e.order() == 2);
  CHECK(e.body().coefficient({0, 0}) == QRational::one());
  CHECK(e.body().coefficient({1, 0}) == QRational::one());
  CHECK(e.body().coefficient({2, 0}) == inv(QPolynomial({1, 1})));
  CHECK(e.body().term_count() == 3);

  CHECK(exp_q_series(PlaneElement::zero(), 7).body() == PlaneElement::one());

  TruncatedSeries joint =
      exp_q_series(PlaneElement::x() + PlaneElement::y(), 2);
  CHECK(joint.body().coefficient({1, 1}) == QRational::one());
  CHECK(joint.body().coefficient({2, 0}) == inv(QPolynomial({1, 1})));
  CHECK(joint.body().coefficient({0, 2}) == inv(QPolynomial({1, 1})));
}

TEST_CASE("exp_q needs a zero constant term") {
  try {
    exp_q_series(PlaneElement::one() + PlaneElement::x(), 3);
    FAIL("nonzero constant term not rejected");
  } catch (const Error &e) {
    CHECK(e.code() == errc::nonzero_constant_term);
  }
}

TEST_CASE("single-variable coefficients are 1/(n!)_q") {
  TruncatedSeries e = exp_q_series(PlaneElement::x(), 8);
  for (unsigned n = 0; n <= 8; ++n)
    CHECK(e.body().coefficient({n, 0}) == inv(q_factorial(n)));
  CHECK(e.body().term_count() == 9);
}

TEST_CASE("product order and noncommutativity") {
  TruncatedSeries ex = exp_q_series(PlaneElement::x(), 2);
  TruncatedSeries ey = exp_q_series(PlaneElement::y(), 2);

  CHECK((ex * ey).body().coefficient({1, 1}) == QRational::one());
  // Reversed factors pick up the swap: y·x = q·xy.
  CHECK((ey * ex).body().coefficient({1, 1}) ==
        QRational(QPolynomial::q_power(1)));

  TruncatedSeries one(PlaneElement::one(), 2);
  CHECK(ex * one == ex);
}

TEST_CASE("reversed factors are a working negative control") {
  TruncatedSeries joint =
      exp_q_series(PlaneElement::x() + PlaneElement::y(), 2);
  TruncatedSeries reversed = exp_q_series(PlaneElement::y(), 2) *
                             exp_q_series(PlaneElement::x(), 2);
  PlaneElement difference = joint.body() - reversed.body();
  CHECK(difference.coefficient({1, 1}) == QRational(QPolynomial({1, -1})));
  CHECK(!difference.is_zero());
}

TEST_CASE("theorem 2 verification") {
  VerificationReport report = verify_theorem2(8);
  CHECK(report.verified);
  CHECK(report.theorem == "theorem2");
  CHECK(report.order_or_n == 8);
  CHECK(report.failures.empty());
  REQUIRE(report.checks.size() == 9);
  for (const auto &check : report.checks)
    CHECK(check.pass);

  CHECK(verify_theorem2(0).verified);

  unsigned calls = 0;
  ProgressFn progress = [&](const CheckRecord &check) {
    CHECK(check.index == calls);
    ++calls;
  };
  verify_theorem2(4, progress);
  CHECK(calls == 5);
}

TEST_CASE("closed form at every degree") {
  const unsigned order = 6;
  TruncatedSeries joint =
      exp_q_series(PlaneElement::x() + PlaneElement::y(), order);
  for (unsigned k = 0; k <= order; ++k)
    for (unsigned l = 0; k + l <= order; ++l)
      CHECK(joint.body().coefficient({k, l}) ==
            inv(q_factorial(k) * q_factorial(l)));
}

TEST_CASE("specialization of exp_q") {
  TruncatedSeries e = exp_q_series(PlaneElement::x(), 2);

  PlaneElement at1 = e.specialize(1);
  CHECK(at1.coefficient({0, 0}) == QRational::one());
  CHECK(at1.coefficient({1, 0}) == QRational::one());
  CHECK(at1.coefficient({2, 0}) == QRational(mpq_class(1, 2)));

  try {
    e.specialize(-1);
    FAIL("pole at q = -1 not detected");
  } catch (const PoleError &err) {
    CHECK(err.xexp() == 2);
    CHECK(err.yexp() == 0);
  }

  // At q = 0 every (k)_0 is 1, so all coefficients are integral.
  PlaneElement at0 =
      exp_q_series(PlaneElement::x() + PlaneElement::y(), 6).specialize(0);
  for (const auto &[m, c] : at0.terms()) {
    CHECK(c.is_polynomial());
    CHECK(c == QRational::one());
  }
}

TEST_CASE("classical exponential partial sums at q = 1") {
  TruncatedSeries e = exp_q_series(PlaneElement::x(), 8);
  PlaneElement at1 = e.specialize(1);
  mpz_class factorial = 1;
  for (unsigned n = 0; n <= 8; ++n) {
    if (n > 0)
      factorial *= n;
    CHECK(at1.coefficient({n, 0}) ==
          QRational(mpq_class(mpz_class(1), factorial)));
  }
}
