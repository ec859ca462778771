#include "qplane/evaluate.hpp"

#include "qplane/errors.hpp"

namespace qplane {

namespace {

/// Apply a binary operation, lifting an exact element to a truncated series
/// whenever the other side is one. Series arithmetic already truncates to
/// the smaller order.
template <typename ElemOp, typename SeriesOp>
Value combine(Value a, Value b, ElemOp elem_op, SeriesOp series_op) {
  if (std::holds_alternative<PlaneElement>(a) &&
      std::holds_alternative<PlaneElement>(b)) {
    return elem_op(std::get<PlaneElement>(a), std::get<PlaneElement>(b));
  }
  auto lift = [&](Value &v) -> TruncatedSeries {
    if (auto *s = std::get_if<TruncatedSeries>(&v))
      return std::move(*s);
    unsigned order = std::holds_alternative<TruncatedSeries>(a)
                         ? std::get<TruncatedSeries>(a).order()
                         : std::get<TruncatedSeries>(b).order();
    return series_from_element(std::get<PlaneElement>(v), order);
  };
  TruncatedSeries sb = lift(b);
  TruncatedSeries sa = lift(a);
  return series_op(sa, sb);
}

Value evaluate_node(const ExprNode &e, std::optional<unsigned> order) {
  switch (e.kind) {
  case ExprNode::Kind::Var:
    switch (e.var) {
    case 'x':
      return PlaneElement::x();
    case 'y':
      return PlaneElement::y();
    default:
      return PlaneElement::q_scalar();
    }
  case ExprNode::Kind::IntLit:
    return PlaneElement::constant(QRational(mpq_class(e.int_value)));
  case ExprNode::Kind::RatLit:
    return PlaneElement::constant(QRational(e.rat_value));
  case ExprNode::Kind::Add:
    return combine(
        evaluate_node(*e.left, order), evaluate_node(*e.right, order),
        [](const PlaneElement &a, const PlaneElement &b) { return a + b; },
        [](const TruncatedSeries &a, const TruncatedSeries &b) {
          return a + b;
        });
  case ExprNode::Kind::Sub:
    return combine(
        evaluate_node(*e.left, order), evaluate_node(*e.right, order),
        [](const PlaneElement &a, const PlaneElement &b) { return a - b; },
        [](const TruncatedSeries &a, const TruncatedSeries &b) {
          return a - b;
        });
  case ExprNode::Kind::Mul:
    return combine(
        evaluate_node(*e.left, order), evaluate_node(*e.right, order),
        [](const PlaneElement &a, const PlaneElement &b) { return a * b; },
        [](const TruncatedSeries &a, const TruncatedSeries &b) {
          return a * b;
        });
  case ExprNode::Kind::Pow: {
    Value base = evaluate_node(*e.left, order);
    if (auto *elem = std::get_if<PlaneElement>(&base))
      return elem->pow(e.exponent);
    return std::get<TruncatedSeries>(base).pow(e.exponent);
  }
  case ExprNode::Kind::ExpQ: {
    if (!order)
      throw Error(errc::missing_order,
                  "exp_q requires a truncation order");
    Value arg = evaluate_node(*e.left, order);
    if (auto *elem = std::get_if<PlaneElement>(&arg))
      return exp_q_series(*elem, *order);
    const auto &s = std::get<TruncatedSeries>(arg);
    return exp_q_series(s.body(), std::min(*order, s.order()));
  }
  }
  throw Error(errc::invalid_argument, "malformed expression tree");
}

} // namespace

Value evaluate(const ExprNode &e, std::optional<unsigned> order) {
  return evaluate_node(e, order);
}

PlaneElement specialize_value(const Value &v, const mpq_class &r) {
  if (auto *elem = std::get_if<PlaneElement>(&v))
    return elem->specialize(r);
  return std::get<TruncatedSeries>(v).specialize(r);
}

} // namespace qplane
