#include "qplane/qpolynomial.hpp"

#include "qplane/errors.hpp"

#include <sstream>
#include <utility>

namespace qplane {

namespace {
const mpz_class kZero = 0;
}

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  strip();
}

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs)
    coeffs_.emplace_back(c);
  strip();
}

QPolynomial::QPolynomial(const mpz_class &constant) {
  if (constant != 0)
    coeffs_.push_back(constant);
}

QPolynomial::QPolynomial(long constant) : QPolynomial(mpz_class(constant)) {}

QPolynomial QPolynomial::monomial(const mpz_class &c, std::size_t degree) {
  QPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, kZero);
    p.coeffs_[degree] = c;
  }
  return p;
}

QPolynomial QPolynomial::q_power(std::size_t degree) {
  return monomial(1, degree);
}

bool QPolynomial::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

std::size_t QPolynomial::term_count() const {
  std::size_t n = 0;
  for (const auto &c : coeffs_)
    if (c != 0)
      ++n;
  return n;
}

const mpz_class &QPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class &QPolynomial::leading_coeff() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

void QPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto &c : coeffs_)
    r.coeffs_.push_back(-c);
  return r;
}

QPolynomial QPolynomial::operator+(const QPolynomial &rhs) const {
  QPolynomial r = *this;
  r += rhs;
  return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial &rhs) const {
  QPolynomial r = *this;
  r -= rhs;
  return r;
}

QPolynomial &QPolynomial::operator+=(const QPolynomial &rhs) {
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  strip();
  return *this;
}

QPolynomial &QPolynomial::operator-=(const QPolynomial &rhs) {
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  strip();
  return *this;
}

QPolynomial QPolynomial::operator*(const QPolynomial &rhs) const {
  if (is_zero() || rhs.is_zero())
    return QPolynomial();
  QPolynomial r;
  r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  r.strip();
  return r;
}

QPolynomial &QPolynomial::operator*=(const QPolynomial &rhs) {
  *this = *this * rhs;
  return *this;
}

QPolynomial QPolynomial::operator*(const mpz_class &scalar) const {
  if (scalar == 0)
    return QPolynomial();
  QPolynomial r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto &c : coeffs_)
    r.coeffs_.push_back(c * scalar);
  return r;
}

QPolynomial QPolynomial::exact_div(const QPolynomial &b) const {
  if (b.is_zero())
    throw Error(errc::division_by_zero, "polynomial division by zero");
  if (is_zero())
    return QPolynomial();
  if (degree() < b.degree())
    throw Error(errc::not_divisible,
                "exact division failed: dividend degree below divisor degree");

  // Long division from the top. For an exact quotient over Z every leading
  // coefficient of the running remainder must be divisible by lc(b).
  QPolynomial rem = *this;
  const std::size_t quot_len = coeffs_.size() - b.coeffs_.size() + 1;
  std::vector<mpz_class> quot(quot_len, kZero);
  const mpz_class &blc = b.leading_coeff();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    mpz_class c, residue;
    mpz_tdiv_qr(c.get_mpz_t(), residue.get_mpz_t(),
                rem.leading_coeff().get_mpz_t(), blc.get_mpz_t());
    if (residue != 0)
      throw Error(errc::not_divisible,
                  "exact division failed: non-integer quotient coefficient");
    const std::size_t shift = rem.coeffs_.size() - b.coeffs_.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      rem.coeffs_[shift + j] -= c * b.coeffs_[j];
    rem.strip();
  }
  if (!rem.is_zero())
    throw Error(errc::not_divisible,
                "exact division failed: nonzero remainder " + rem.to_string());
  return QPolynomial(std::move(quot));
}

mpq_class QPolynomial::eval(const mpq_class &r) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= r;
    acc += *it;
  }
  acc.canonicalize();
  return acc;
}

mpz_class QPolynomial::content() const {
  mpz_class g = 0;
  for (const auto &c : coeffs_) {
    g = gcd(g, c);
    if (g == 1)
      break;
  }
  return abs(g);
}

QPolynomial QPolynomial::primitive_part() const {
  if (is_zero())
    return QPolynomial();
  mpz_class c = content();
  if (c == 1)
    return *this;
  QPolynomial r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto &a : coeffs_)
    r.coeffs_.push_back(a / c);
  return r;
}

std::string QPolynomial::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class &c = coeffs_[i];
    if (c == 0)
      continue;
    const bool negative = c < 0;
    if (first) {
      if (negative)
        out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1)
        out << a.get_str() << "*";
      out << "q";
      if (i > 1)
        out << "^" << i;
    }
  }
  return out.str();
}

namespace {

// Pseudo-remainder: repeatedly scales the remainder by lc(b) so each
// reduction step stays in Z[q]. Content is stripped by the caller.
QPolynomial pseudo_rem(QPolynomial a, const QPolynomial &b) {
  const mpz_class &blc = b.leading_coeff();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    QPolynomial scaled = a * blc;
    QPolynomial shifted =
        QPolynomial::monomial(a.leading_coeff(),
                              static_cast<std::size_t>(a.degree() - b.degree())) *
        b;
    a = scaled - shifted;
  }
  return a;
}

} // namespace

QPolynomial poly_gcd(const QPolynomial &a, const QPolynomial &b) {
  if (a.is_zero() && b.is_zero())
    throw Error(errc::both_zero, "gcd(0, 0) is undefined");
  if (a.is_zero() || b.is_zero()) {
    QPolynomial r = a.is_zero() ? b : a;
    if (r.leading_coeff() < 0)
      r = -r;
    return r;
  }

  mpz_class content_gcd = gcd(a.content(), b.content());
  QPolynomial u = a.primitive_part();
  QPolynomial v = b.primitive_part();
  while (!v.is_zero()) {
    QPolynomial r = pseudo_rem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  if (u.leading_coeff() < 0)
    u = -u;
  return u * content_gcd;
}

} // namespace qplane
