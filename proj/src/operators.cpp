#include "unrep/operators.hpp"

#include "unrep/errors.hpp"

namespace unrep {

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::t_norm:
      return "t-norm";
    case OperatorKind::t_conorm:
      return "t-conorm";
    case OperatorKind::uninorm:
      return "uninorm";
    case OperatorKind::implication:
      return "implication";
    case OperatorKind::raw:
      return "raw";
  }
  return "raw";
}

OperatorKind operator_kind_from_string(std::string_view text) {
  if (text == "t-norm") return OperatorKind::t_norm;
  if (text == "t-conorm") return OperatorKind::t_conorm;
  if (text == "uninorm") return OperatorKind::uninorm;
  if (text == "implication") return OperatorKind::implication;
  if (text == "raw") return OperatorKind::raw;
  throw InvalidArgument("unknown operator kind '" + std::string(text) + "'");
}

MonotoneMap::MonotoneMap(std::function<double(double)> forward,
                         std::function<double(double)> inverse,
                         std::function<double(int, double)> closed_iterate)
    : forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      closed_iterate_(std::move(closed_iterate)) {}

double MonotoneMap::iterate(int n, double x) const {
  if (closed_iterate_) return closed_iterate_(n, x);
  for (; n > 0; --n) x = forward_(x);
  for (; n < 0; ++n) x = inverse_(x);
  return x;
}

}  // namespace unrep
