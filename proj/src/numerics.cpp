#include "unrep/numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "unrep/errors.hpp"

namespace unrep {

namespace {

std::uint64_t to_bits(double x) { return std::bit_cast<std::uint64_t>(x); }
double from_bits(std::uint64_t b) { return std::bit_cast<double>(b); }

// Midpoint in representation space; both arguments are non-negative.
double bit_midpoint(double lo, double hi) {
  const std::uint64_t a = to_bits(lo);
  const std::uint64_t b = to_bits(hi);
  return from_bits(a + (b - a) / 2);
}

}  // namespace

Grid::Grid(std::vector<double> points, double spacing)
    : points_(std::move(points)), spacing_hint_(spacing) {}

Grid Grid::from_points(std::vector<double> points) {
  if (points.size() < 2) {
    throw InvalidArgument("grid needs at least two points");
  }
  if (points.front() != 0.0 || points.back() != 1.0) {
    throw InvalidArgument("grid must start at 0 and end at 1");
  }
  double spacing = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double gap = points[i] - points[i - 1];
    if (!(gap > 0.0)) {
      throw InvalidArgument("grid points must be strictly increasing");
    }
    spacing = std::max(spacing, gap);
  }
  return Grid(std::move(points), spacing);
}

std::vector<double> Grid::interior() const {
  return {points_.begin() + 1, points_.end() - 1};
}

Grid uniform_grid(int n) {
  if (n < 2) {
    throw InvalidArgument("uniform_grid: n must be at least 2, got " +
                          std::to_string(n));
  }
  std::vector<double> pts(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    pts[static_cast<std::size_t>(i)] =
        static_cast<double>(i) / static_cast<double>(n);
  }
  return Grid::from_points(std::move(pts));
}

void Tolerances::validate() const {
  if (!(eq_tol > 0.0) || !(exact_tol > 0.0) || !(jump_floor > 0.0)) {
    throw InvalidArgument("tolerances must be strictly positive");
  }
  if (refine_rounds < 1) {
    throw InvalidArgument("refine_rounds must be at least 1");
  }
}

double guarded_eval(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (std::isnan(v) || v < -1e-12 || v > 1.0 + 1e-12) {
    throw EvaluationError("evaluation left [0,1] at x=" + std::to_string(x), x);
  }
  return v;
}

double log_clamp(double x) {
  return std::clamp(x, kLogEpsilon, 1.0 - kLogEpsilon);
}

double next_up(double x) {
  if (x >= 1.0) return 1.0;
  return std::nextafter(x, 2.0);
}

ContinuityVerdict monotone_continuity_probe(const UnitFunction& f,
                                            const Grid& grid,
                                            const Tolerances& tol) {
  ContinuityVerdict verdict;
  const auto pts = grid.points();
  std::vector<double> values(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    values[i] = guarded_eval(f.eval, pts[i]);
  }
  verdict.endpoint_low = values.front();
  verdict.endpoint_high = values.back();

  const int halfway = std::max(1, tol.refine_rounds / 2);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i];
    double b = pts[i + 1];
    double fa = values[i];
    double fb = values[i + 1];
    double jump = std::abs(fb - fa);
    if (jump <= tol.jump_floor) continue;

    double jump_at_halfway = jump;
    int round = 0;
    for (; round < tol.refine_rounds; ++round) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;  // interval exhausted at binary64 resolution
      const double fm = guarded_eval(f.eval, m);
      const double left = std::abs(fm - fa);
      const double right = std::abs(fb - fm);
      if (left >= right) {
        b = m;
        fb = fm;
        jump = left;
      } else {
        a = m;
        fa = fm;
        jump = right;
      }
      if (round + 1 == halfway) jump_at_halfway = jump;
      if (jump <= tol.jump_floor) break;
    }
    if (jump > tol.jump_floor && jump >= kPersistenceRatio * jump_at_halfway) {
      verdict.witnesses.push_back({0.5 * (a + b), jump});
    }
  }
  verdict.continuous = verdict.witnesses.empty();
  return verdict;
}

double sup_invert(const UnitFunction& f, double target) {
  if (f.direction != Monotonicity::decreasing) {
    throw InvalidArgument("sup_invert requires a function declared decreasing: " +
                          f.name);
  }
  if (!(f.eval(0.0) > target)) return 0.0;  // empty set
  if (f.eval(1.0) > target) return 1.0;
  // Invariant: f(lo) > target >= f(hi).
  double lo = 0.0;
  double hi = 1.0;
  while (to_bits(hi) - to_bits(lo) > 1) {
    const double mid = bit_midpoint(lo, hi);
    if (f.eval(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // lo and hi are adjacent doubles. Without a jump between them the set is
  // open at its supremum, which is then hi rather than lo. A jump into the
  // right endpoint means the set is [0,1[ and its supremum is 1.
  if (f.eval(lo) - f.eval(hi) <= kAdjacentGap || hi == 1.0) return hi;
  return lo;
}

double inf_reach(const std::function<double(double)>& increasing_f,
                 double target) {
  if (increasing_f(0.0) >= target) return 0.0;
  if (increasing_f(1.0) < target) return 1.0;
  // Invariant: f(lo) < target <= f(hi).
  double lo = 0.0;
  double hi = 1.0;
  while (to_bits(hi) - to_bits(lo) > 1) {
    const double mid = bit_midpoint(lo, hi);
    if (increasing_f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace unrep
