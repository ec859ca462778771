#pragma once

#include "qplane/parser.hpp"
#include "qplane/plane.hpp"
#include "qplane/series.hpp"

#include <optional>
#include <variant>

namespace qplane {

/// Result of evaluating an expression: exact element, or truncated series
/// once exp_q is involved.
using Value = std::variant<PlaneElement, TruncatedSeries>;

/// Bottom-up evaluation into canonical form. exp_q delegates to
/// exp_q_series and requires `order`; an expression without exp_q yields an
/// exact PlaneElement and ignores `order`. Throws
/// Error(errc::missing_order) and propagates exp_q_series errors.
Value evaluate(const ExprNode &e, std::optional<unsigned> order = {});

/// Coefficients of a value evaluated at q = r. Throws PoleError on a
/// vanishing denominator.
PlaneElement specialize_value(const Value &v, const mpq_class &r);

} // namespace qplane
