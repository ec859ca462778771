#include "qplane/qcombinatorics.hpp"

#include "qplane/errors.hpp"

#include <stdexcept>
#include <utility>

namespace qplane {

QPolynomial q_integer(unsigned k) {
  std::vector<mpz_class> ones(k, mpz_class(1));
  return QPolynomial(std::move(ones));
}

QPolynomial q_factorial(unsigned n) {
  QPolynomial r = QPolynomial::one();
  for (unsigned k = 2; k <= n; ++k)
    r *= q_integer(k);
  return r;
}

QBinomialTable::QBinomialTable(unsigned n_max) {
  rows_.push_back({QPolynomial::one()});
  ensure_rows(n_max);
}

void QBinomialTable::ensure_rows(unsigned n) {
  while (rows_.size() <= n) {
    const unsigned row = static_cast<unsigned>(rows_.size());
    const auto &prev = rows_.back();
    std::vector<QPolynomial> next(row + 1);
    next[0] = QPolynomial::one();
    next[row] = QPolynomial::one();
    for (unsigned k = 1; k < row; ++k)
      next[k] = prev[k] + QPolynomial::q_power(row - k) * prev[k - 1];
    rows_.push_back(std::move(next));
  }
  if (n > n_max_)
    n_max_ = n;
}

const QPolynomial &QBinomialTable::at(unsigned n, unsigned k) const {
  if (n > n_max_ || k > n)
    throw Error(errc::out_of_range, "binomial table index (" +
                                        std::to_string(n) + "," +
                                        std::to_string(k) + ") out of range");
  return rows_[n][k];
}

void QBinomialTable::set_entry(unsigned n, unsigned k, QPolynomial value) {
  if (n > n_max_ || k > n)
    throw Error(errc::out_of_range, "binomial table index out of range");
  rows_[n][k] = std::move(value);
}

QPolynomial q_binomial_quotient(unsigned n, unsigned k) {
  if (k > n)
    throw Error(errc::out_of_range,
                "q-binomial (" + std::to_string(n) + "," + std::to_string(k) +
                    "): k exceeds n");
  try {
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k));
  } catch (const Error &e) {
    // Gaussian binomials are polynomials; a remainder here is a bug.
    throw std::logic_error(
        std::string("q-binomial quotient left a remainder: ") + e.what());
  }
}

const QPolynomial &q_binomial_recurrence(unsigned n, unsigned k,
                                         QBinomialTable &table) {
  if (k > n)
    throw Error(errc::out_of_range,
                "q-binomial (" + std::to_string(n) + "," + std::to_string(k) +
                    "): k exceeds n");
  table.ensure_rows(n);
  return table.at(n, k);
}

std::vector<SymmetryViolation>
q_binomial_check_symmetry(const QBinomialTable &table) {
  std::vector<SymmetryViolation> violations;
  for (unsigned n = 0; n <= table.n_max(); ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const unsigned mirror = n - k;
      if (table.at(n, k) == table.at(n, mirror))
        continue;
      // The comparison runs for every k; record each broken pair once.
      if (k <= mirror)
        violations.push_back({n, k});
    }
  }
  return violations;
}

std::vector<SymmetryViolation> q_binomial_check_symmetry(unsigned n_max) {
  QBinomialTable table(n_max);
  return q_binomial_check_symmetry(table);
}

mpz_class pascal_degeneration(unsigned n, unsigned k) {
  if (k > n)
    throw Error(errc::out_of_range,
                "binomial (" + std::to_string(n) + "," + std::to_string(k) +
                    "): k exceeds n");
  QBinomialTable table(n);
  mpq_class v = table.at(n, k).eval(mpq_class(1));
  return v.get_num();
}

} // namespace qplane
