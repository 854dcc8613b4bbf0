#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "unrep/numerics.hpp"
#include "unrep/operators.hpp"

namespace unrep {

/// A fuzzy negation candidate: a decreasing map with N(0)=1 and N(1)=0.
/// The claimed flags are builder metadata; classify_negation checks them.
struct Negation {
  std::function<double(double)> eval;
  std::string name;
  bool claimed_continuous = false;
  bool claimed_strict = false;
  std::optional<std::function<double(double)>> closed_inverse;
  std::vector<double> declared_discontinuities;

  double operator()(double x) const { return eval(x); }
  UnitFunction as_unit_function() const;
};

namespace negation_spec {
struct Standard {};
/// (1-x)/(1+lambda x), lambda >= 0.
struct Sugeno {
  double lambda;
};
/// 1 at 0, 0 at 1, `value` on ]0,1[.
struct Step {
  double value;
};
/// x -> 2^(-2^(-log2(-log2 x))): maps 2^(-2^n) to 2^(-2^(-n)).
struct PowerLog {};
struct SquareOf {
  Negation base;
};
struct FromCut {
  BinaryOperator op;
  double alpha;
};
/// Knots (x, N(x)) joined linearly; must start at (0,1) and end at (1,0).
struct Table {
  std::vector<std::pair<double, double>> knots;
};
}  // namespace negation_spec

using NegationSpec =
    std::variant<negation_spec::Standard, negation_spec::Sugeno,
                 negation_spec::Step, negation_spec::PowerLog,
                 negation_spec::SquareOf, negation_spec::FromCut,
                 negation_spec::Table>;

/// Throws InvalidSpec for lambda < 0, step value outside ]0,1[, or a
/// malformed table.
Negation build_negation(const NegationSpec& spec);

struct NegationClass {
  bool is_negation = false;
  bool is_continuous = false;
  bool is_strict = false;
  bool is_strong = false;
  double worst_residual = 0.0;  // worst involution defect max|N(N(x))-x|
  ContinuityVerdict continuity;
};

NegationClass classify_negation(const Negation& n, const Grid& grid,
                                const Tolerances& tol);

enum class InversionMethod { automatic, bisection };

/// R_N(0)=1 and R_N(x)=sup{y : N(y) > x} on ]0,1]. `automatic` uses the
/// closed-form inverse when the negation carries one.
Negation modified_pseudo_inverse(const Negation& n,
                                 InversionMethod method = InversionMethod::automatic);

/// Pseudo-inverse without the modification at 0: sup{y : N(y) > x}.
double pseudo_inverse_at(const Negation& n, double x);

}  // namespace unrep
