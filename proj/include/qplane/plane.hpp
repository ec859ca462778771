#pragma once

#include "qplane/qrational.hpp"
#include "qplane/report.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qplane {

/// x^xexp * y^yexp, in that fixed order. All arithmetic in the quantum
/// plane rewrites onto these x-before-y monomials.
struct NormalMonomial {
  unsigned xexp = 0;
  unsigned yexp = 0;

  unsigned total_degree() const { return xexp + yexp; }

  bool operator==(const NormalMonomial &) const = default;

  /// Canonical term order: ascending total degree, then descending
  /// x-exponent, matching the k = n..0 reading of the binomial expansion.
  friend bool operator<(const NormalMonomial &a, const NormalMonomial &b) {
    if (a.total_degree() != b.total_degree())
      return a.total_degree() < b.total_degree();
    return a.xexp > b.xexp;
  }
};

/// Commutation factor and combined monomial for
///   (x^a.x y^a.y) (x^b.x y^b.y) = q^{a.y * b.x} x^{a.x+b.x} y^{a.y+b.y},
/// obtained by iterating yx = qxy once per crossing pair.
std::pair<QPolynomial, NormalMonomial> monomial_mul(const NormalMonomial &a,
                                                    const NormalMonomial &b);

/// "x^k*y^l" with exponent 1 and factor 1 elided; "" for the unit monomial.
std::string render_monomial(const NormalMonomial &m);

/// Element of the quantum plane in canonical form: a finite map from normal
/// monomials to nonzero QRational coefficients. Structural map equality is
/// element equality. Values are immutable in spirit: no operation mutates
/// its inputs and elements may be shared freely across threads.
class PlaneElement {
public:
  using TermMap = std::map<NormalMonomial, QRational>;

  PlaneElement() = default;

  static PlaneElement zero() { return PlaneElement(); }
  static PlaneElement one() { return constant(QRational::one()); }
  static PlaneElement x() { return monomial({1, 0}, QRational::one()); }
  static PlaneElement y() { return monomial({0, 1}, QRational::one()); }
  /// The central parameter q as a degree-zero element.
  static PlaneElement q_scalar() {
    return constant(QRational(QPolynomial::q_power(1)));
  }
  static PlaneElement constant(QRational c);
  static PlaneElement monomial(NormalMonomial m, QRational c);

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of m; the zero rational when m is absent.
  const QRational &coefficient(const NormalMonomial &m) const;

  /// Largest total degree among stored terms; 0 for the zero element.
  unsigned total_degree() const;

  PlaneElement operator-() const;
  PlaneElement operator+(const PlaneElement &rhs) const;
  PlaneElement operator-(const PlaneElement &rhs) const;
  PlaneElement operator*(const PlaneElement &rhs) const;
  PlaneElement &operator+=(const PlaneElement &rhs);
  PlaneElement &operator-=(const PlaneElement &rhs);
  PlaneElement scale(const QRational &c) const;

  /// n-fold product by repeated left-associated multiplication; a^0 = 1.
  PlaneElement pow(unsigned n) const;

  /// Drops every term of total degree > order.
  PlaneElement truncate(unsigned order) const;

  bool operator==(const PlaneElement &rhs) const = default;

  /// Every coefficient evaluated at q = r, as an element with constant
  /// coefficients. Throws PoleError when a denominator vanishes at r.
  PlaneElement specialize(const mpq_class &r) const;

  /// Canonical text: "x^2 + (1 + q)*x*y + y^2" — the CLI output contract.
  std::string to_string() const;

private:
  void add_term(const NormalMonomial &m, const QRational &c);

  TermMap terms_;
};

/// Letter sequence over {X, Y}; carries no coefficient. Used only by the
/// brute-force expansion oracle.
struct Word {
  enum class Letter { X, Y };
  std::vector<Letter> letters;

  /// Count of (Y before X) pairs; normal-ordering the word contributes
  /// q^{inversions}.
  std::size_t inversions() const;
  std::size_t x_count() const;
};

inline constexpr unsigned kDefaultOracleBound = 14;

/// Expands (x+y)^n by brute force: sums q^{inv(w)} x^{#X(w)} y^{#Y(w)} over
/// all 2^n words w. Independent of every other expansion code path.
/// Throws Error(errc::oracle_bound_exceeded) when n > bound.
PlaneElement word_oracle_expand(unsigned n, unsigned bound = kDefaultOracleBound);

/// The right side of the q-binomial theorem, built directly from the
/// recurrence table: sum over k of C(n,k)_q x^k y^{n-k}.
PlaneElement expand_binomial_theorem(unsigned n);

/// Test seam: mutates the binomial-expansion element for one n before the
/// comparison, so detector tests can plant a corruption.
using TamperFn = std::function<void(unsigned n, PlaneElement &)>;

/// Checks (x+y)^n = sum_k C(n,k)_q x^k y^{n-k} for every n <= n_max by
/// repeated multiplication against the table expansion, and both against
/// the 2^n word oracle for n <= oracle_max.
VerificationReport verify_theorem1(unsigned n_max, unsigned oracle_max,
                                   unsigned oracle_bound = kDefaultOracleBound,
                                   const TamperFn &tamper = {},
                                   const ProgressFn &progress = {});

} // namespace qplane
