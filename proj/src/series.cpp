#include "qplane/series.hpp"

#include "qplane/errors.hpp"
#include "qplane/qcombinatorics.hpp"

#include <algorithm>
#include <chrono>

namespace qplane {

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &rhs) const {
  unsigned order = std::min(order_, rhs.order_);
  return {body_ + rhs.body_, order};
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &rhs) const {
  unsigned order = std::min(order_, rhs.order_);
  return {body_ - rhs.body_, order};
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &rhs) const {
  unsigned order = std::min(order_, rhs.order_);
  return {body_ * rhs.body_, order};
}

TruncatedSeries TruncatedSeries::pow(unsigned n) const {
  TruncatedSeries r{PlaneElement::one(), order_};
  for (unsigned i = 0; i < n; ++i)
    r = r * *this;
  return r;
}

TruncatedSeries exp_q_series(const PlaneElement &arg, unsigned order) {
  if (!arg.coefficient({0, 0}).is_zero())
    throw Error(errc::nonzero_constant_term,
                "exp_q argument has constant term " +
                    arg.coefficient({0, 0}).to_string() +
                    "; formal substitution needs a zero constant term");

  // Direct form: sum of arg^n / (n!)_q. Since arg has no constant term,
  // arg^n only contributes monomials of degree >= n, so the sum is finite.
  PlaneElement sum = PlaneElement::one();
  PlaneElement power = PlaneElement::one();
  QPolynomial factorial = QPolynomial::one();
  for (unsigned n = 1; n <= order; ++n) {
    power = (power * arg).truncate(order);
    if (power.is_zero())
      break;
    factorial *= q_integer(n);
    sum += power.scale(QRational(QPolynomial::one(), factorial));
  }
  return {sum, order};
}

VerificationReport verify_theorem2(unsigned order,
                                   const ProgressFn &progress) {
  VerificationReport report;
  report.theorem = "theorem2";
  report.order_or_n = order;
  const auto t0 = std::chrono::steady_clock::now();

  const TruncatedSeries lhs = exp_q_series(PlaneElement::x(), order);
  const TruncatedSeries rhs = exp_q_series(PlaneElement::y(), order);
  const TruncatedSeries joint =
      exp_q_series(PlaneElement::x() + PlaneElement::y(), order);
  const TruncatedSeries product = lhs * rhs;
  const PlaneElement difference = joint.body() - product.body();

  // Factorials up to the order, for the closed-form coefficients.
  std::vector<QPolynomial> factorial(order + 1);
  factorial[0] = QPolynomial::one();
  for (unsigned n = 1; n <= order; ++n)
    factorial[n] = factorial[n - 1] * q_integer(n);

  for (unsigned degree = 0; degree <= order; ++degree) {
    const auto td = std::chrono::steady_clock::now();
    CheckRecord check;
    check.index = degree;
    const std::size_t before = report.failures.size();

    for (unsigned k = 0; k <= degree; ++k) {
      const unsigned l = degree - k;
      const NormalMonomial m{k, l};

      const QRational &residual = difference.coefficient(m);
      if (!residual.is_zero()) {
        CoefficientFailure f;
        f.index = degree;
        f.xexp = k;
        f.yexp = l;
        f.route = "product-vs-joint";
        f.expected = joint.body().coefficient(m).to_string();
        f.actual = product.body().coefficient(m).to_string();
        report.failures.push_back(std::move(f));
      }

      const QRational closed_form(QPolynomial::one(),
                                  factorial[k] * factorial[l]);
      if (!(joint.body().coefficient(m) == closed_form)) {
        CoefficientFailure f;
        f.index = degree;
        f.xexp = k;
        f.yexp = l;
        f.route = "closed-form";
        f.expected = closed_form.to_string();
        f.actual = joint.body().coefficient(m).to_string();
        report.failures.push_back(std::move(f));
      }
    }

    check.pass = report.failures.size() == before;
    check.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - td)
                           .count();
    if (!check.pass)
      report.verified = false;
    report.checks.push_back(check);
    if (progress)
      progress(check);
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

} // namespace qplane
