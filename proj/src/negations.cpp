#include "unrep/negations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unrep/errors.hpp"

namespace unrep {

namespace {

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Negation standard() {
  Negation n;
  n.eval = [](double x) { return 1.0 - x; };
  n.name = "standard";
  n.claimed_continuous = true;
  n.claimed_strict = true;
  n.closed_inverse = [](double y) { return 1.0 - y; };
  return n;
}

Negation sugeno(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidSpec("sugeno negation needs lambda >= 0, got " +
                      format_param(lambda));
  }
  auto f = [lambda](double x) { return (1.0 - x) / (1.0 + lambda * x); };
  Negation n;
  n.eval = f;
  n.name = "sugeno(" + format_param(lambda) + ")";
  n.claimed_continuous = true;
  n.claimed_strict = true;
  n.closed_inverse = f;  // the Sugeno class is involutive
  return n;
}

Negation step(double value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw InvalidSpec("step negation needs a value in ]0,1[, got " +
                      format_param(value));
  }
  Negation n;
  n.eval = [value](double x) {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return value;
  };
  n.name = "step(" + format_param(value) + ")";
  n.declared_discontinuities = {0.0, 1.0};
  return n;
}

double power_log(double x) {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  const double inner = -std::log2(log_clamp(x));  // in ]0, +inf[
  return std::exp2(-std::exp2(-std::log2(inner)));
}

Negation powerlog() {
  Negation n;
  n.eval = power_log;
  n.name = "powerlog";
  n.claimed_continuous = true;
  n.claimed_strict = true;
  n.closed_inverse = power_log;  // involutive: log2 N(x) = 1 / log2 x
  return n;
}

Negation square_of(const Negation& base) {
  Negation n;
  auto b = base.eval;
  n.eval = [b](double x) {
    const double v = b(x);
    return v * v;
  };
  n.name = "square_of(" + base.name + ")";
  n.claimed_continuous = base.claimed_continuous;
  n.claimed_strict = base.claimed_strict;
  n.declared_discontinuities = base.declared_discontinuities;
  if (base.closed_inverse) {
    auto inv = *base.closed_inverse;
    n.closed_inverse = [inv](double y) { return inv(std::sqrt(y)); };
  }
  return n;
}

Negation from_cut(const BinaryOperator& op, double alpha) {
  Negation n;
  auto f = op.eval;
  n.eval = [f, alpha](double x) { return f(x, alpha); };
  n.name = op.name + "(.," + format_param(alpha) + ")";
  return n;
}

Negation table(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw InvalidSpec("negation table needs two knots");
  if (knots.front() != std::pair{0.0, 1.0} ||
      knots.back() != std::pair{1.0, 0.0}) {
    throw InvalidSpec("negation table must start at (0,1) and end at (1,0)");
  }
  bool strict = true;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      throw InvalidSpec("negation table abscissae must be strictly increasing");
    }
    if (knots[i].second > knots[i - 1].second) {
      throw InvalidSpec("negation table values must be non-increasing");
    }
    if (knots[i].second == knots[i - 1].second) strict = false;
  }
  Negation n;
  n.eval = [knots = std::move(knots)](double x) {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    auto it = std::upper_bound(
        knots.begin(), knots.end(), x,
        [](double v, const std::pair<double, double>& k) { return v < k.first; });
    const auto& right = *it;
    const auto& left = *(it - 1);
    const double t = (x - left.first) / (right.first - left.first);
    return left.second + t * (right.second - left.second);
  };
  n.name = "table";
  n.claimed_continuous = true;
  n.claimed_strict = strict;
  return n;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

UnitFunction Negation::as_unit_function() const {
  UnitFunction f;
  f.eval = eval;
  f.name = name;
  f.direction = Monotonicity::decreasing;
  f.declared_discontinuities = declared_discontinuities;
  f.closed_inverse = closed_inverse;
  return f;
}

Negation build_negation(const NegationSpec& spec) {
  return std::visit(
      Overloaded{
          [](const negation_spec::Standard&) { return standard(); },
          [](const negation_spec::Sugeno& s) { return sugeno(s.lambda); },
          [](const negation_spec::Step& s) { return step(s.value); },
          [](const negation_spec::PowerLog&) { return powerlog(); },
          [](const negation_spec::SquareOf& s) { return square_of(s.base); },
          [](const negation_spec::FromCut& s) {
            return from_cut(s.op, s.alpha);
          },
          [](const negation_spec::Table& s) { return table(s.knots); },
      },
      spec);
}

NegationClass classify_negation(const Negation& n, const Grid& grid,
                                const Tolerances& tol) {
  NegationClass out;
  const auto pts = grid.points();
  std::vector<double> values(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) values[i] = n.eval(pts[i]);

  const bool boundary = std::abs(values.front() - 1.0) <= tol.exact_tol &&
                        std::abs(values.back()) <= tol.exact_tol;
  bool monotone = true;
  bool strictly = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double drop = values[i - 1] - values[i];
    if (drop < -tol.eq_tol) monotone = false;
    // Equality is judged relative to magnitude so that a negation falling
    // super-exponentially towards 0 is not mistaken for a flat one.
    const double scale = std::max(std::abs(values[i - 1]), std::abs(values[i]));
    if (!(drop > tol.eq_tol * scale)) strictly = false;
  }
  out.is_negation = boundary && monotone;

  out.continuity = monotone_continuity_probe(n.as_unit_function(), grid, tol);
  out.is_continuous = out.is_negation && out.continuity.continuous;
  out.is_strict = out.is_continuous && strictly;

  double worst = 0.0;
  for (double x : pts) worst = std::max(worst, std::abs(n.eval(n.eval(x)) - x));
  out.worst_residual = worst;
  out.is_strong = out.is_strict && worst <= tol.eq_tol;
  return out;
}

double pseudo_inverse_at(const Negation& n, double x) {
  return sup_invert(n.as_unit_function(), x);
}

Negation modified_pseudo_inverse(const Negation& n, InversionMethod method) {
  Negation r;
  r.name = "R[" + n.name + "]";
  // Decreasing in general; strictly decreasing and a negation when n is
  // continuous.
  r.claimed_continuous = n.claimed_continuous && n.claimed_strict;
  r.claimed_strict = n.claimed_continuous;
  if (method == InversionMethod::automatic && n.closed_inverse) {
    auto inv = *n.closed_inverse;
    r.eval = [inv](double x) { return x <= 0.0 ? 1.0 : inv(x); };
    if (n.claimed_strict) r.closed_inverse = n.eval;
  } else {
    const UnitFunction f = n.as_unit_function();
    r.eval = [f](double x) { return x <= 0.0 ? 1.0 : sup_invert(f, x); };
  }
  return r;
}

}  // namespace unrep
