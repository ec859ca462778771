#pragma once

#include "qplane/evaluate.hpp"
#include "qplane/report.hpp"

#include <string>

namespace qplane {

enum class OutputFormat { text, json };

/// Render an evaluated value. Text is the canonical form; json is
/// {"terms":[{"xexp":k,"yexp":l,"num":"<poly>","den":"<poly>"},...]} with
/// terms in display order and polynomials in canonical text form.
std::string render_value(const Value &v, OutputFormat format);
std::string render_element(const PlaneElement &e, OutputFormat format);

/// Verification report as a JSON object
/// {theorem, order_or_n, status, failures, elapsed_ms}.
std::string render_report_json(const VerificationReport &report);

} // namespace qplane
