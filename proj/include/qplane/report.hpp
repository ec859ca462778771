#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qplane {

/// One coefficient that came out wrong: the monomial, the two values in
/// canonical text form, and which pair of routes disagreed.
struct CoefficientFailure {
  unsigned index = 0; // n for theorem 1, total degree for theorem 2
  unsigned xexp = 0;
  unsigned yexp = 0;
  std::string route;
  std::string expected;
  std::string actual;
};

/// Pass/fail line for one n (theorem 1) or one total degree (theorem 2).
struct CheckRecord {
  unsigned index = 0;
  bool pass = true;
  bool oracle_checked = false;
  double elapsed_ms = 0.0;
};

/// Streaming observer for long verification runs, invoked once per
/// completed check, in index order.
using ProgressFn = std::function<void(const CheckRecord &)>;

struct VerificationReport {
  std::string theorem;
  unsigned order_or_n = 0;
  bool verified = true;
  std::vector<CoefficientFailure> failures;
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0.0;
};

} // namespace qplane
