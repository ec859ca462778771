#pragma once

#include "qplane/plane.hpp"
#include "qplane/report.hpp"

namespace qplane {

/// A quantum-plane element truncated at a total degree. Arithmetic between
/// series of different orders truncates to the smaller order.
class TruncatedSeries {
public:
  TruncatedSeries() = default;
  TruncatedSeries(PlaneElement body, unsigned order)
      : body_(body.truncate(order)), order_(order) {}

  const PlaneElement &body() const { return body_; }
  unsigned order() const { return order_; }

  TruncatedSeries operator+(const TruncatedSeries &rhs) const;
  TruncatedSeries operator-(const TruncatedSeries &rhs) const;
  /// Noncommutative: factor order is significant.
  TruncatedSeries operator*(const TruncatedSeries &rhs) const;
  TruncatedSeries operator-() const { return {-body_, order_}; }
  TruncatedSeries pow(unsigned n) const;

  bool operator==(const TruncatedSeries &rhs) const = default;

  /// Coefficients evaluated at q = r; throws PoleError when a denominator
  /// vanishes there, e.g. (2)_q at q = -1.
  PlaneElement specialize(const mpq_class &r) const {
    return body_.specialize(r);
  }

  std::string to_string() const { return body_.to_string(); }

private:
  PlaneElement body_;
  unsigned order_ = 0;
};

inline TruncatedSeries series_from_element(const PlaneElement &a,
                                           unsigned order) {
  return {a, order};
}

/// Partial sum of exp_q: sum over n = 0..order of arg^n / (n!)_q, truncated
/// at total degree = order. The argument must have zero constant term;
/// otherwise Error(errc::nonzero_constant_term) is thrown.
TruncatedSeries exp_q_series(const PlaneElement &arg, unsigned order);

/// Checks exp_q(x+y) = exp_q(x) exp_q(y) coefficientwise at one truncation
/// order, plus the closed form: the x^k y^l coefficient of the left side
/// must be 1/((k!)_q (l!)_q) for all k + l <= order.
VerificationReport verify_theorem2(unsigned order,
                                   const ProgressFn &progress = {});

} // namespace qplane
