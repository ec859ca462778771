#include "qplane/plane.hpp"

#include "qplane/errors.hpp"
#include "qplane/qcombinatorics.hpp"

#include <chrono>
#include <sstream>
#include <utility>

namespace qplane {

std::pair<QPolynomial, NormalMonomial> monomial_mul(const NormalMonomial &a,
                                                    const NormalMonomial &b) {
  // Each of a.yexp y's crosses each of b.xexp x's exactly once.
  const std::size_t swaps =
      static_cast<std::size_t>(a.yexp) * static_cast<std::size_t>(b.xexp);
  return {QPolynomial::q_power(swaps),
          NormalMonomial{a.xexp + b.xexp, a.yexp + b.yexp}};
}

PlaneElement PlaneElement::constant(QRational c) {
  return monomial({0, 0}, std::move(c));
}

PlaneElement PlaneElement::monomial(NormalMonomial m, QRational c) {
  PlaneElement e;
  if (!c.is_zero())
    e.terms_.emplace(m, std::move(c));
  return e;
}

const QRational &PlaneElement::coefficient(const NormalMonomial &m) const {
  static const QRational kZero;
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

unsigned PlaneElement::total_degree() const {
  unsigned d = 0;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.total_degree());
  return d;
}

void PlaneElement::add_term(const NormalMonomial &m, const QRational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

PlaneElement PlaneElement::operator-() const {
  PlaneElement r;
  for (const auto &[m, c] : terms_)
    r.terms_.emplace(m, -c);
  return r;
}

PlaneElement PlaneElement::operator+(const PlaneElement &rhs) const {
  PlaneElement r = *this;
  r += rhs;
  return r;
}

PlaneElement PlaneElement::operator-(const PlaneElement &rhs) const {
  PlaneElement r = *this;
  r -= rhs;
  return r;
}

PlaneElement &PlaneElement::operator+=(const PlaneElement &rhs) {
  for (const auto &[m, c] : rhs.terms_)
    add_term(m, c);
  return *this;
}

PlaneElement &PlaneElement::operator-=(const PlaneElement &rhs) {
  for (const auto &[m, c] : rhs.terms_)
    add_term(m, -c);
  return *this;
}

PlaneElement PlaneElement::operator*(const PlaneElement &rhs) const {
  PlaneElement r;
  for (const auto &[ma, ca] : terms_) {
    for (const auto &[mb, cb] : rhs.terms_) {
      QRational c = ca * cb;
      const std::size_t swaps = static_cast<std::size_t>(ma.yexp) *
                                static_cast<std::size_t>(mb.xexp);
      if (swaps > 0)
        c *= QRational(QPolynomial::q_power(swaps));
      r.add_term({ma.xexp + mb.xexp, ma.yexp + mb.yexp}, c);
    }
  }
  return r;
}

PlaneElement PlaneElement::scale(const QRational &c) const {
  PlaneElement r;
  for (const auto &[m, coeff] : terms_) {
    QRational v = coeff * c;
    if (!v.is_zero())
      r.terms_.emplace(m, std::move(v));
  }
  return r;
}

PlaneElement PlaneElement::pow(unsigned n) const {
  PlaneElement r = one();
  for (unsigned i = 0; i < n; ++i)
    r = r * *this;
  return r;
}

PlaneElement PlaneElement::truncate(unsigned order) const {
  PlaneElement r;
  for (const auto &[m, c] : terms_)
    if (m.total_degree() <= order)
      r.terms_.emplace(m, c);
  return r;
}

PlaneElement PlaneElement::specialize(const mpq_class &r) const {
  PlaneElement out;
  for (const auto &[m, c] : terms_) {
    if (c.has_pole_at(r)) {
      std::string mono = render_monomial(m);
      std::ostringstream msg;
      msg << "denominator " << c.den().to_string() << " vanishes at q = "
          << mpq_class(r).get_str() << " on "
          << (mono.empty() ? "the constant term" : mono);
      throw PoleError(m.xexp, m.yexp, c.den().to_string(), msg.str());
    }
    mpq_class v = c.eval(r);
    if (v != 0)
      out.terms_.emplace(m, QRational(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical text rendering

std::string render_monomial(const NormalMonomial &m) {
  std::string s;
  if (m.xexp > 0) {
    s += "x";
    if (m.xexp > 1)
      s += "^" + std::to_string(m.xexp);
  }
  if (m.yexp > 0) {
    if (!s.empty())
      s += "*";
    s += "y";
    if (m.yexp > 1)
      s += "^" + std::to_string(m.yexp);
  }
  return s;
}

namespace {

std::string integer_term_text(const mpz_class &a, std::size_t deg) {
  // a is positive; "2", "q", "2*q^3" shapes.
  std::string s;
  if (deg == 0)
    return a.get_str();
  if (a != 1)
    s = a.get_str() + "*";
  s += "q";
  if (deg > 1)
    s += "^" + std::to_string(deg);
  return s;
}

std::string fraction_term_text(const mpz_class &a, const mpz_class &m,
                               std::size_t deg) {
  // a/m with a positive and m > 1 after reduction; "1/2", "3/2*q^2" shapes.
  std::string s = a.get_str() + "/" + m.get_str();
  if (deg > 0) {
    s += "*q";
    if (deg > 1)
      s += "^" + std::to_string(deg);
  }
  return s;
}

// Polynomial over a constant denominator rendered with per-term reduced
// rational coefficients: (1 + 2q)/2 becomes "1/2 + q". Every piece stays
// inside the expression grammar, so rendered output re-parses.
std::string rational_poly_text(const QPolynomial &num, const mpz_class &den) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < num.coeffs().size(); ++i) {
    const mpz_class &c = num.coeff(i);
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
    mpz_class g = gcd(a, den);
    mpz_class p = a / g;
    mpz_class r = den / g;
    if (r == 1)
      out << integer_term_text(p, i);
    else
      out << fraction_term_text(p, r, i);
  }
  return out.str();
}

struct CoeffText {
  bool negative = false; // sign pulled out of the term (atomic only)
  std::string text;      // body, sign removed when `negative`
  bool atomic = false;   // may prefix "*monomial" without parentheses
  bool is_unit = false;  // |coefficient| == 1: elide entirely before monomial
};

CoeffText coefficient_text(const QRational &c) {
  CoeffText out;
  const QPolynomial &num = c.num();
  const QPolynomial &den = c.den();
  const bool const_den = den.degree() == 0;

  if (const_den && num.term_count() == 1) {
    out.atomic = true;
    std::size_t deg = static_cast<std::size_t>(num.degree());
    mpz_class a = num.leading_coeff();
    out.negative = a < 0;
    a = abs(a);
    const mpz_class &m = den.coeff(0);
    if (m == 1) {
      out.is_unit = (a == 1 && deg == 0);
      out.text = integer_term_text(a, deg);
    } else {
      out.text = fraction_term_text(a, m, deg);
    }
    return out;
  }

  if (den.is_one())
    out.text = num.to_string();
  else if (const_den)
    out.text = rational_poly_text(num, den.coeff(0));
  else
    out.text = c.to_string();
  return out;
}

} // namespace

std::string PlaneElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    CoeffText ct = coefficient_text(c);
    std::string mono = render_monomial(m);
    std::string body;
    if (mono.empty())
      body = ct.text;
    else if (ct.is_unit)
      body = mono;
    else if (ct.atomic)
      body = ct.text + "*" + mono;
    else
      body = "(" + ct.text + ")*" + mono;

    if (first) {
      if (ct.negative)
        out << "-";
      first = false;
    } else {
      out << (ct.negative ? " - " : " + ");
    }
    out << body;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Brute-force oracle and theorem 1 verification

std::size_t Word::inversions() const {
  std::size_t inv = 0;
  std::size_t ys_seen = 0;
  for (Letter l : letters) {
    if (l == Letter::Y)
      ++ys_seen;
    else
      inv += ys_seen;
  }
  return inv;
}

std::size_t Word::x_count() const {
  std::size_t n = 0;
  for (Letter l : letters)
    if (l == Letter::X)
      ++n;
  return n;
}

PlaneElement word_oracle_expand(unsigned n, unsigned bound) {
  if (n > bound)
    throw Error(errc::oracle_bound_exceeded,
                "oracle expansion of degree " + std::to_string(n) +
                    " exceeds bound " + std::to_string(bound));

  // One coefficient accumulator per x-count; q-degree is at most k(n-k).
  std::vector<std::vector<mpz_class>> acc(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    acc[k].assign(static_cast<std::size_t>(k) * (n - k) + 1, mpz_class(0));

  Word w;
  w.letters.resize(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (unsigned i = 0; i < n; ++i)
      w.letters[i] =
          (mask >> i) & 1 ? Word::Letter::X : Word::Letter::Y;
    acc[w.x_count()][w.inversions()] += 1;
  }

  PlaneElement e;
  for (unsigned k = 0; k <= n; ++k)
    e += PlaneElement::monomial(
        {k, n - k}, QRational(QPolynomial(std::move(acc[k]))));
  return e;
}

PlaneElement expand_binomial_theorem(unsigned n) {
  QBinomialTable table(n);
  PlaneElement e;
  for (unsigned k = 0; k <= n; ++k)
    e += PlaneElement::monomial({k, n - k}, QRational(table.at(n, k)));
  return e;
}

namespace {

void record_differences(unsigned n, const PlaneElement &reference,
                        const PlaneElement &other, const std::string &route,
                        VerificationReport &report) {
  auto note = [&](const NormalMonomial &m) {
    CoefficientFailure f;
    f.index = n;
    f.xexp = m.xexp;
    f.yexp = m.yexp;
    f.route = route;
    f.expected = reference.coefficient(m).to_string();
    f.actual = other.coefficient(m).to_string();
    report.failures.push_back(std::move(f));
  };
  for (const auto &[m, c] : reference.terms())
    if (!(other.coefficient(m) == c))
      note(m);
  for (const auto &[m, c] : other.terms())
    if (reference.coefficient(m).is_zero())
      note(m);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

VerificationReport verify_theorem1(unsigned n_max, unsigned oracle_max,
                                   unsigned oracle_bound,
                                   const TamperFn &tamper,
                                   const ProgressFn &progress) {
  VerificationReport report;
  report.theorem = "theorem1";
  report.order_or_n = n_max;
  const auto t0 = std::chrono::steady_clock::now();

  QBinomialTable table(n_max);
  const PlaneElement x_plus_y = PlaneElement::x() + PlaneElement::y();
  PlaneElement power = PlaneElement::one();

  for (unsigned n = 0; n <= n_max; ++n) {
    const auto tn = std::chrono::steady_clock::now();
    if (n > 0)
      power = power * x_plus_y; // (x+y)^n, left-associated

    PlaneElement expansion;
    for (unsigned k = 0; k <= n; ++k)
      expansion +=
          PlaneElement::monomial({k, n - k}, QRational(table.at(n, k)));
    if (tamper)
      tamper(n, expansion);

    CheckRecord check;
    check.index = n;

    const std::size_t before = report.failures.size();
    record_differences(n, expansion, power, "power-vs-binomial", report);
    if (n <= oracle_max) {
      check.oracle_checked = true;
      PlaneElement oracle = word_oracle_expand(n, oracle_bound);
      record_differences(n, expansion, oracle, "oracle-vs-binomial", report);
    }
    check.pass = report.failures.size() == before;
    check.elapsed_ms = ms_since(tn);
    if (!check.pass)
      report.verified = false;
    report.checks.push_back(check);
    if (progress)
      progress(check);
  }

  report.elapsed_ms = ms_since(t0);
  return report;
}

} // namespace qplane
