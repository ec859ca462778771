#pragma once

#include "qplane/qpolynomial.hpp"

#include <vector>

namespace qplane {

/// q-integer (k)_q = 1 + q + ... + q^{k-1}; (0)_q is the empty sum 0.
QPolynomial q_integer(unsigned k);

/// q-factorial (n!)_q = (1)_q (2)_q ... (n)_q; (0!)_q is the empty product 1.
QPolynomial q_factorial(unsigned n);

/// Triangular table of Gaussian binomial coefficients, filled row by row
/// with the recurrence
///   C(n,k)_q = C(n-1,k)_q + q^{n-k} C(n-1,k-1)_q,   C(n,0)_q = C(n,n)_q = 1.
/// Construction is single-writer; a completed table is immutable and may be
/// shared across threads.
class QBinomialTable {
public:
  explicit QBinomialTable(unsigned n_max);

  unsigned n_max() const { return n_max_; }

  /// Entry (n,k); throws Error(errc::out_of_range) when k > n or n > n_max.
  const QPolynomial &at(unsigned n, unsigned k) const;

  /// Grow the table to cover rows up to n.
  void ensure_rows(unsigned n);

  /// Overwrite one entry. Exists for fault-injection tests of the symmetry
  /// checker; production code never calls it.
  void set_entry(unsigned n, unsigned k, QPolynomial value);

private:
  unsigned n_max_ = 0;
  std::vector<std::vector<QPolynomial>> rows_;
};

/// Gaussian binomial by the quotient formula (n!)_q / ((k!)_q ((n-k)!)_q).
/// The division is exact for every valid (n,k); a remainder would mean the
/// implementation is broken and surfaces as std::logic_error.
/// Throws Error(errc::out_of_range) when k > n.
QPolynomial q_binomial_quotient(unsigned n, unsigned k);

/// Gaussian binomial from the recurrence table, extending it as needed.
/// Throws Error(errc::out_of_range) when k > n.
const QPolynomial &q_binomial_recurrence(unsigned n, unsigned k,
                                         QBinomialTable &table);

/// One detected asymmetry: entries (n,k) and (n,n-k) differ. k <= n-k.
struct SymmetryViolation {
  unsigned n;
  unsigned k;

  bool operator==(const SymmetryViolation &) const = default;
};

/// Compares entries(n,k) with entries(n,n-k) for all 0 <= k <= n <= n_max.
/// Empty result for a correct table.
std::vector<SymmetryViolation> q_binomial_check_symmetry(const QBinomialTable &table);
std::vector<SymmetryViolation> q_binomial_check_symmetry(unsigned n_max);

/// Gaussian binomial evaluated at q = 1: the classical binomial coefficient.
mpz_class pascal_degeneration(unsigned n, unsigned k);

} // namespace qplane
