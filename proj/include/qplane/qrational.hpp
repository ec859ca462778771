#pragma once

#include "qplane/qpolynomial.hpp"

#include <string>

namespace qplane {

/// Reduced ratio of two QPolynomials; the coefficient field for series.
///
/// Canonical form, maintained by every constructor and operation:
///   - the denominator is never zero and its leading coefficient is positive,
///   - numerator and denominator share no content and no polynomial factor,
///   - zero is exactly num = 0, den = 1.
/// Equality is therefore structural comparison.
class QRational {
public:
  QRational() : num_(), den_(QPolynomial::one()) {}
  QRational(QPolynomial num, QPolynomial den);
  explicit QRational(QPolynomial num) : num_(std::move(num)), den_(1) {}
  explicit QRational(long constant) : num_(constant), den_(1) {}
  explicit QRational(const mpq_class &r);

  static QRational zero() { return QRational(); }
  static QRational one() { return QRational(1); }

  const QPolynomial &num() const { return num_; }
  const QPolynomial &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QRational operator-() const;
  QRational operator+(const QRational &rhs) const;
  QRational operator-(const QRational &rhs) const;
  QRational operator*(const QRational &rhs) const;
  QRational &operator+=(const QRational &rhs);
  QRational &operator-=(const QRational &rhs);
  QRational &operator*=(const QRational &rhs);

  /// Multiplicative inverse; throws Error(errc::division_by_zero) on zero.
  QRational inverse() const;

  bool operator==(const QRational &rhs) const = default;

  /// True when the denominator vanishes at q = r (root-of-unity degeneracy).
  bool has_pole_at(const mpq_class &r) const;
  /// Exact value at q = r; pre: !has_pole_at(r).
  mpq_class eval(const mpq_class &r) const;

  /// "num / (den)", "/ (1)" omitted; multi-term numerators parenthesized.
  std::string to_string() const;

private:
  void normalize();

  QPolynomial num_;
  QPolynomial den_;
};

} // namespace qplane
