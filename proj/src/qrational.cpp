#include "qplane/qrational.hpp"

#include "qplane/errors.hpp"

#include <cassert>
#include <utility>

namespace qplane {

QRational::QRational(QPolynomial num, QPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw Error(errc::division_by_zero, "rational with zero denominator");
  normalize();
}

QRational::QRational(const mpq_class &r)
    : num_(r.get_num()), den_(r.get_den()) {
  // mpq_class is canonical already: den > 0, gcd(num, den) = 1.
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial::one();
    return;
  }
  if (!den_.is_one()) {
    QPolynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRational QRational::operator-() const {
  QRational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QRational QRational::operator+(const QRational &rhs) const {
  return QRational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

QRational QRational::operator-(const QRational &rhs) const {
  return QRational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

QRational QRational::operator*(const QRational &rhs) const {
  if (is_zero() || rhs.is_zero())
    return QRational();
  return QRational(num_ * rhs.num_, den_ * rhs.den_);
}

QRational &QRational::operator+=(const QRational &rhs) {
  *this = *this + rhs;
  return *this;
}

QRational &QRational::operator-=(const QRational &rhs) {
  *this = *this - rhs;
  return *this;
}

QRational &QRational::operator*=(const QRational &rhs) {
  *this = *this * rhs;
  return *this;
}

QRational QRational::inverse() const {
  if (is_zero())
    throw Error(errc::division_by_zero, "inverse of zero");
  return QRational(den_, num_);
}

bool QRational::has_pole_at(const mpq_class &r) const {
  return den_.eval(r) == 0;
}

mpq_class QRational::eval(const mpq_class &r) const {
  mpq_class d = den_.eval(r);
  assert(d != 0 && "pole must be checked before evaluation");
  mpq_class v = num_.eval(r) / d;
  v.canonicalize();
  return v;
}

std::string QRational::to_string() const {
  if (den_.is_one())
    return num_.to_string();
  std::string n = num_.to_string();
  if (num_.term_count() > 1)
    n = "(" + n + ")";
  return n + " / (" + den_.to_string() + ")";
}

} // namespace qplane
