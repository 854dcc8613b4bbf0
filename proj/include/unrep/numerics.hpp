#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unrep/operators.hpp"

namespace unrep {

/// A finite sampling of [0,1]: strictly increasing, first point 0, last 1.
class Grid {
 public:
  /// Validates the invariants; throws InvalidArgument otherwise.
  static Grid from_points(std::vector<double> points);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  /// Largest gap between consecutive points.
  double spacing_hint() const { return spacing_hint_; }
  /// Points strictly inside ]0,1[.
  std::vector<double> interior() const;

 private:
  Grid(std::vector<double> points, double spacing);
  std::vector<double> points_;
  double spacing_hint_;
};

/// {i/n : i = 0..n}; n >= 2.
Grid uniform_grid(int n);

struct Tolerances {
  double eq_tol = 1e-9;      // equality of operator values
  double exact_tol = 1e-12;  // closed-form identities and cut endpoints
  double jump_floor = 1e-6;  // residual jump that declares a discontinuity
  int refine_rounds = 40;

  /// Throws InvalidArgument when a field is not strictly positive.
  void validate() const;
};

struct JumpWitness {
  double location;
  double jump;
};

struct ContinuityVerdict {
  bool continuous = true;
  std::vector<JumpWitness> witnesses;
  double endpoint_low = 0.0;
  double endpoint_high = 0.0;
};

/// Decides continuity of a monotone function sampled on `grid`.
///
/// Every grid interval whose values differ by more than `jump_floor` is
/// bisected `refine_rounds` times, always following the half with the
/// larger jump. For a monotone function a genuine jump keeps its size under
/// this refinement while a steep continuous stretch shrinks, so a witness is
/// recorded only when the final jump is above `jump_floor` and has not
/// decayed since the halfway round (see kPersistenceRatio).
ContinuityVerdict monotone_continuity_probe(const UnitFunction& f,
                                            const Grid& grid,
                                            const Tolerances& tol);

/// Minimum ratio final/halfway jump for a jump to count as persistent.
inline constexpr double kPersistenceRatio = 0.9;

/// sup{y in [0,1] : f(y) > target} for decreasing f, with sup of the empty
/// set taken as 0. Bisection runs on the binary64 representation, so the
/// result is accurate to one ulp everywhere in [0,1], including near 0.
/// When f is continuous at the crossing the upper bracket is returned.
double sup_invert(const UnitFunction& f, double target);

/// Largest change between adjacent doubles that sup_invert still reads as
/// continuous.
inline constexpr double kAdjacentGap = 1e-12;

/// Same bisection for an increasing f: inf{y : f(y) >= target}, or 1 if f
/// never reaches target. Used to find inverse powers along a cut.
double inf_reach(const std::function<double(double)>& increasing_f,
                 double target);

/// Next/previous representable double inside [0,1].
double next_up(double x);

/// Evaluates f at x and checks the result lies in [0,1] (NaN rejected).
double guarded_eval(const std::function<double(double)>& f, double x);

/// Clamps x into [eps, 1-eps] for use inside logarithm chains only.
double log_clamp(double x);
inline constexpr double kLogEpsilon = 1e-300;

}  // namespace unrep
