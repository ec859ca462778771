#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace qplane {

/// Polynomial in the formal parameter q with arbitrary-precision integer
/// coefficients. Storage is dense, low degree first, with no trailing zero:
/// an empty coefficient vector is the zero polynomial.
///
/// Gaussian polynomials are dense (every degree from 0 to k(n-k) carries a
/// positive coefficient), so dense storage is the right fit here.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpz_class> coeffs);
  QPolynomial(std::initializer_list<long> coeffs);
  explicit QPolynomial(const mpz_class &constant);
  explicit QPolynomial(long constant);

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one() { return QPolynomial(1); }
  /// c * q^degree
  static QPolynomial monomial(const mpz_class &c, std::size_t degree);
  /// q^degree
  static QPolynomial q_power(std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  /// Length minus one; -1 stands in for the zero polynomial's "minus
  /// infinity" degree and must never feed degree arithmetic.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  /// Coefficient of q^i (zero beyond the stored range).
  const mpz_class &coeff(std::size_t i) const;
  const mpz_class &leading_coeff() const;
  const std::vector<mpz_class> &coeffs() const { return coeffs_; }

  QPolynomial operator-() const;
  QPolynomial operator+(const QPolynomial &rhs) const;
  QPolynomial operator-(const QPolynomial &rhs) const;
  QPolynomial operator*(const QPolynomial &rhs) const;
  QPolynomial &operator+=(const QPolynomial &rhs);
  QPolynomial &operator-=(const QPolynomial &rhs);
  QPolynomial &operator*=(const QPolynomial &rhs);
  QPolynomial operator*(const mpz_class &scalar) const;

  bool operator==(const QPolynomial &rhs) const = default;

  /// Exact quotient: returns c with (*this) = b * c. Throws
  /// Error(errc::not_divisible) when long division leaves a remainder or a
  /// non-integer coefficient, Error(errc::division_by_zero) when b is zero.
  QPolynomial exact_div(const QPolynomial &b) const;

  /// Horner evaluation at an exact rational point.
  mpq_class eval(const mpq_class &r) const;

  /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
  mpz_class content() const;
  /// *this divided by its content; leading-coefficient sign is preserved.
  QPolynomial primitive_part() const;

  /// Canonical text: ascending degree, "1 + q + 2*q^2" style, "0" when zero.
  std::string to_string() const;

private:
  void strip();

  std::vector<mpz_class> coeffs_;
};

/// Greatest common divisor in Z[q]: integer gcd of the contents times the
/// primitive gcd of the primitive parts, normalized to a positive leading
/// coefficient. Uses a primitive Euclidean remainder sequence (content
/// stripped after every pseudo-division) to keep coefficients small.
/// Throws Error(errc::both_zero) when both inputs vanish.
QPolynomial poly_gcd(const QPolynomial &a, const QPolynomial &b);

} // namespace qplane
