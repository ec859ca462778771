#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qplane {

enum class errc {
  syntax_error,
  exponent_too_large,
  division_by_zero,
  not_divisible,
  both_zero,
  out_of_range,
  oracle_bound_exceeded,
  nonzero_constant_term,
  missing_order,
  pole_at_specialization,
  invalid_argument,
};

/// Recoverable domain error. Internal invariant violations (a Gaussian
/// binomial division leaving a remainder, for instance) are std::logic_error
/// instead: they indicate a bug, not bad input.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

/// Parse failure. Carries the byte offset of the offending token and the
/// set of tokens that would have been accepted there.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string &what)
      : Error(errc::syntax_error, what), offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string> &expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Specialization hit a root of the denominator, e.g. (2)_q at q = -1.
/// Reports the monomial whose coefficient degenerates and the vanishing
/// denominator in canonical text form.
class PoleError : public Error {
public:
  PoleError(unsigned xexp, unsigned yexp, std::string denominator,
            const std::string &what)
      : Error(errc::pole_at_specialization, what), xexp_(xexp), yexp_(yexp),
        denominator_(std::move(denominator)) {}

  unsigned xexp() const { return xexp_; }
  unsigned yexp() const { return yexp_; }
  const std::string &denominator() const { return denominator_; }

private:
  unsigned xexp_;
  unsigned yexp_;
  std::string denominator_;
};

} // namespace qplane
