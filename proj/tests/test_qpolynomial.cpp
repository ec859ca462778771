#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qplane/errors.hpp"
#include "qplane/qpolynomial.hpp"
#include "test_support.hpp"

using namespace qplane;
using namespace qplane::testsupport;

TEST_CASE("construction strips trailing zeros and fixes degree") {
  CHECK(QPolynomial({1, 2, 0, 0}) == QPolynomial({1, 2}));
  CHECK(QPolynomial({0, 0}).is_zero());
  CHECK(QPolynomial().degree() == -1);
  CHECK(QPolynomial({7}).degree() == 0);
  CHECK(QPolynomial({1, 0, 3}).degree() == 2);
  CHECK(QPolynomial({1, 0, 3}).term_count() == 2);
  CHECK(QPolynomial::q_power(3) == QPolynomial({0, 0, 0, 1}));
  CHECK(QPolynomial::monomial(5, 2) == QPolynomial({0, 0, 5}));
  CHECK(QPolynomial::one().is_one());
  CHECK(QPolynomial({1, 2}).coeff(1) == 2);
  CHECK(QPolynomial({1, 2}).coeff(9) == 0); // beyond stored range
}

TEST_CASE("addition") {
  const QPolynomial two_q{1, 1}; // 1 + q
  CHECK(two_q + two_q == QPolynomial({2, 2}));
  CHECK(two_q + QPolynomial::zero() == two_q);
  CHECK(two_q + (-two_q) == QPolynomial::zero());
  CHECK((two_q - two_q).is_zero());
}

TEST_CASE("multiplication") {
  const QPolynomial a{1, 1};    // 1 + q
  const QPolynomial b{1, 1, 1}; // 1 + q + q^2
  CHECK(a * a == QPolynomial({1, 2, 1}));
  CHECK(a * b == QPolynomial({1, 2, 2, 1}));
  // Cross-check the convolution by the evaluation homomorphism at q = 2:
  // 3 * 7 = 21.
  CHECK((a * b).eval(2) == mpq_class(21));
  CHECK(a.eval(2) * b.eval(2) == mpq_class(21));
  CHECK(b * QPolynomial::one() == b);
  CHECK(b * QPolynomial::zero() == QPolynomial::zero());
  CHECK(b * mpz_class(3) == QPolynomial({3, 3, 3}));
}

TEST_CASE("exact division") {
  // (q^2 - 1) / (q - 1) = q + 1
  CHECK(QPolynomial({-1, 0, 1}).exact_div(QPolynomial({-1, 1})) ==
        QPolynomial({1, 1}));
  // Inverse of the multiplication example above.
  CHECK(QPolynomial({1, 2, 2, 1}).exact_div(QPolynomial({1, 1})) ==
        QPolynomial({1, 1, 1}));
  CHECK(QPolynomial::zero().exact_div(QPolynomial({5, 1})) ==
        QPolynomial::zero());

  // (1 + q^2) / (1 + q) leaves remainder 2 at the constant step.
  CHECK_THROWS_WITH_AS(QPolynomial({1, 0, 1}).exact_div(QPolynomial({1, 1})),
                       doctest::Contains("remainder"), Error);
  try {
    QPolynomial({1, 0, 1}).exact_div(QPolynomial({1, 1}));
  } catch (const Error &e) {
    CHECK(e.code() == errc::not_divisible);
  }

  // Non-integer quotient coefficient: q / 2.
  CHECK_THROWS_AS(QPolynomial({0, 1}).exact_div(QPolynomial({2})), Error);

  try {
    QPolynomial({1}).exact_div(QPolynomial::zero());
    FAIL("division by zero not detected");
  } catch (const Error &e) {
    CHECK(e.code() == errc::division_by_zero);
  }
}

TEST_CASE("evaluation") {
  CHECK(QPolynomial({1, 1, 1}).eval(1) == mpq_class(3));
  CHECK(QPolynomial({1, 1}).eval(-1) == mpq_class(0));
  // 1 + 2 + 2*4 + 8 + 16; equals the Gaussian C(4,2) at q=2, i.e.
  // (2^4-1)(2^3-1)/((2^2-1)(2-1)) = 15*7/3 = 35.
  CHECK(QPolynomial({1, 1, 2, 1, 1}).eval(2) == mpq_class(35));
  CHECK(QPolynomial({1, 1}).eval(mpq_class(1, 2)) == mpq_class(3, 2));
  CHECK(QPolynomial::zero().eval(5) == mpq_class(0));
}

TEST_CASE("content and primitive part") {
  CHECK(QPolynomial({2, 4, 6}).content() == 2);
  CHECK(QPolynomial({2, 4, 6}).primitive_part() == QPolynomial({1, 2, 3}));
  CHECK(QPolynomial({-2, -4}).content() == 2);
  // The sign stays in the primitive part, not the content.
  CHECK(QPolynomial({-2, -4}).primitive_part() == QPolynomial({-1, -2}));
  CHECK(QPolynomial::zero().content() == 0);
}

TEST_CASE("gcd") {
  // Divisor case: gcd(q^2 - 1, q - 1) = q - 1.
  CHECK(poly_gcd(QPolynomial({-1, 0, 1}), QPolynomial({-1, 1})) ==
        QPolynomial({-1, 1}));
  // Coprime cyclotomic factors.
  CHECK(poly_gcd(QPolynomial({1, 1}), QPolynomial({1, 1, 1})) ==
        QPolynomial::one());
  // gcd with zero is the other argument, normalized to positive lead.
  CHECK(poly_gcd(QPolynomial({-2, -2}), QPolynomial::zero()) ==
        QPolynomial({2, 2}));
  CHECK(poly_gcd(QPolynomial::zero(), QPolynomial({0, 3})) ==
        QPolynomial({0, 3}));
  // Content and polynomial part both contribute.
  CHECK(poly_gcd(QPolynomial({2, 2}), QPolynomial({4, 4, 4, 4})) ==
        QPolynomial({2, 2}));
  try {
    poly_gcd(QPolynomial::zero(), QPolynomial::zero());
    FAIL("gcd(0, 0) not rejected");
  } catch (const Error &e) {
    CHECK(e.code() == errc::both_zero);
  }
}

TEST_CASE("canonical text") {
  CHECK(QPolynomial({1, 1, 2}).to_string() == "1 + q + 2*q^2");
  CHECK(QPolynomial::zero().to_string() == "0");
  CHECK(QPolynomial({0, 1}).to_string() == "q");
  CHECK(QPolynomial({-1, 1}).to_string() == "-1 + q");
  CHECK(QPolynomial({2, 0, -3}).to_string() == "2 - 3*q^2");
  CHECK(QPolynomial({0, 0, 7}).to_string() == "7*q^2");
}

TEST_CASE("ring axioms on random polynomials") {
  auto rng = make_rng(0x5eed0001);
  for (int i = 0; i < 300; ++i) {
    QPolynomial a = random_poly(rng, 16);
    QPolynomial b = random_poly(rng, 16);
    QPolynomial c = random_poly(rng, 16);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto rng = make_rng(0x5eed0002);
  std::uniform_int_distribution<long> num_dist(-6, 6);
  std::uniform_int_distribution<long> den_dist(1, 6);
  for (int i = 0; i < 300; ++i) {
    QPolynomial a = random_poly(rng, 12);
    QPolynomial b = random_poly(rng, 12);
    mpq_class r(num_dist(rng), den_dist(rng));
    r.canonicalize();
    CHECK((a * b).eval(r) == a.eval(r) * b.eval(r));
    CHECK((a + b).eval(r) == a.eval(r) + b.eval(r));
  }
}

TEST_CASE("exact division inverts multiplication") {
  auto rng = make_rng(0x5eed0003);
  for (int i = 0; i < 300; ++i) {
    QPolynomial a = random_poly(rng, 12);
    QPolynomial b = random_nonzero_poly(rng, 12);
    CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("gcd divides both arguments") {
  auto rng = make_rng(0x5eed0004);
  for (int i = 0; i < 200; ++i) {
    QPolynomial a = random_poly(rng, 10);
    QPolynomial b = random_poly(rng, 10);
    if (a.is_zero() && b.is_zero())
      continue;
    QPolynomial g = poly_gcd(a, b);
    CHECK(g.leading_coeff() > 0);
    if (!a.is_zero())
      CHECK(a.exact_div(g) * g == a);
    if (!b.is_zero())
      CHECK(b.exact_div(g) * g == b);
    // A common factor never hides: planting one must show up in the gcd.
    QPolynomial planted{1, 1};
    QPolynomial g2 = poly_gcd(a * planted, b * planted);
    if (!(a * planted).is_zero() || !(b * planted).is_zero())
      CHECK(g2.exact_div(planted) * planted == g2);
  }
}
