#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unrep {

enum class Monotonicity { increasing, decreasing, unknown };

/// A unary map on [0,1] together with the analytic facts known about it.
struct UnitFunction {
  std::function<double(double)> eval;
  std::string name;
  Monotonicity direction = Monotonicity::unknown;
  std::vector<double> declared_discontinuities;
  std::optional<std::function<double(double)>> closed_inverse;

  double operator()(double x) const { return eval(x); }
};

enum class OperatorKind { t_norm, t_conorm, uninorm, implication, raw };

std::string_view to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(std::string_view text);

/// A binary operator on [0,1]^2 with the claims made about it by its builder.
/// Claims are verified by the checkers, never trusted.
struct BinaryOperator {
  std::function<double(double, double)> eval;
  std::string name;
  OperatorKind kind = OperatorKind::raw;
  std::optional<double> neutral;
  std::optional<bool> disjunctive;
  std::optional<std::string> discontinuity_note;

  double operator()(double x, double y) const { return eval(x, y); }
};

/// An operator defined only on the open square ]lo,hi[^2.
struct BandOperator {
  BinaryOperator op;
  double lo = 0.0;
  double hi = 1.0;

  double operator()(double x, double y) const { return op.eval(x, y); }
  bool contains(double x) const { return x > lo && x < hi; }
};

/// A continuous strictly increasing bijection of [0,1] used to index the
/// bands of a power sequence. `iterate(n, x)` is f composed n times (n < 0
/// composes the inverse); when no closed form is given it composes.
class MonotoneMap {
 public:
  MonotoneMap(std::function<double(double)> forward,
              std::function<double(double)> inverse,
              std::function<double(int, double)> closed_iterate = {});

  double operator()(double x) const { return forward_(x); }
  double inverse(double x) const { return inverse_(x); }
  double iterate(int n, double x) const;
  bool has_closed_iterate() const { return static_cast<bool>(closed_iterate_); }

 private:
  std::function<double(double)> forward_;
  std::function<double(double)> inverse_;
  std::function<double(int, double)> closed_iterate_;
};

}  // namespace unrep
