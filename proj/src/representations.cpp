#include "unrep/representations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "unrep/errors.hpp"

namespace unrep {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(CutRole role) {
  return role == CutRole::uninorm_cut ? "uninorm-cut" : "implication-cut";
}

CutRole cut_role_from_string(std::string_view text) {
  if (text == "uninorm-cut") return CutRole::uninorm_cut;
  if (text == "implication-cut") return CutRole::implication_cut;
  throw InvalidArgument("unknown cut role '" + std::string(text) + "'");
}

CutReport cut_report(const BinaryOperator& op, CutRole role, double alpha,
                     const Grid& grid, const Tolerances& tol) {
  const bool increasing = role == CutRole::uninorm_cut;
  const bool in_range =
      increasing ? (alpha > 0.0 && alpha < 1.0) : (alpha >= 0.0 && alpha < 1.0);
  if (!in_range) {
    throw InvalidArgument("alpha " + num(alpha) + " out of range for " +
                          std::string(to_string(role)));
  }
  UnitFunction cut;
  auto g = op.eval;
  cut.eval = [g, alpha](double x) { return g(x, alpha); };
  cut.name = op.name + "(.," + num(alpha) + ")";
  cut.direction = increasing ? Monotonicity::increasing : Monotonicity::decreasing;

  CutReport rep;
  rep.alpha = alpha;
  rep.role = role;
  const auto p = grid.points();
  rep.monotone_ok = true;
  double prev = cut(p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double v = cut(p[i]);
    const double step = increasing ? v - prev : prev - v;
    if (step < -tol.eq_tol) rep.monotone_ok = false;
    prev = v;
  }
  rep.continuity = monotone_continuity_probe(cut, grid, tol);
  rep.endpoint_low = rep.continuity.endpoint_low;
  rep.endpoint_high = rep.continuity.endpoint_high;
  const double want_low = increasing ? 0.0 : 1.0;
  const double want_high = increasing ? 1.0 : 0.0;
  rep.valid = rep.monotone_ok && rep.continuity.continuous &&
              std::abs(rep.endpoint_low - want_low) <= tol.exact_tol &&
              std::abs(rep.endpoint_high - want_high) <= tol.exact_tol;
  return rep;
}

std::vector<CutReport> scan_cuts(const BinaryOperator& op, CutRole role,
                                 std::vector<double> alphas, const Grid& grid,
                                 const Tolerances& tol) {
  std::sort(alphas.begin(), alphas.end());
  std::vector<CutReport> out;
  out.reserve(alphas.size());
  for (double a : alphas) out.push_back(cut_report(op, role, a, grid, tol));
  return out;
}

std::vector<double> default_alphas(std::optional<double> neutral,
                                   const std::vector<double>& special) {
  std::vector<double> out;
  for (int i = 1; i <= 99; ++i) out.push_back(i / 100.0);
  if (neutral) out.push_back(*neutral);
  out.insert(out.end(), special.begin(), special.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RepresentationRecord extract_representation(const BinaryOperator& i,
                                            double alpha, const Grid& grid,
                                            const Tolerances& tol,
                                            const ExtractOptions& opts) {
  CutReport cut = cut_report(i, CutRole::implication_cut, alpha, grid, tol);
  if (!cut.valid) {
    std::string why;
    if (!cut.monotone_ok) why += " not decreasing;";
    if (!cut.continuity.continuous) {
      why += " jump of " + num(cut.continuity.witnesses.front().jump) +
             " near " + num(cut.continuity.witnesses.front().location) + ";";
    }
    why += " endpoints (" + num(cut.endpoint_low) + ", " +
           num(cut.endpoint_high) + ")";
    throw PreconditionViolation("cut of '" + i.name + "' at alpha=" +
                                num(alpha) + " is not a continuous negation:" +
                                why);
  }

  RepresentationRecord rec;
  rec.alpha = alpha;
  rec.cut = cut;
  auto g = i.eval;
  rec.n_star.eval = [g, alpha](double x) { return g(x, alpha); };
  rec.n_star.name = "N*[" + i.name + "," + num(alpha) + "]";
  rec.n_star.claimed_continuous = true;

  const Negation r = modified_pseudo_inverse(rec.n_star, InversionMethod::bisection);
  auto inv = r.eval;
  rec.u_star.eval = [g, inv](double x, double y) { return g(inv(x), y); };
  rec.u_star.name = "U*[" + i.name + "," + num(alpha) + "]";
  rec.u_star.kind = OperatorKind::uninorm;
  rec.u_star.neutral = alpha;
  rec.u_star.disjunctive = true;

  const auto p = grid.points();
  double worst = 0.0;
  for (double x : p) {
    const double nx = rec.n_star(x);
    for (double y : p) {
      const double d = std::abs(rec.u_star(nx, y) - i(x, y));
      worst = std::max(worst, std::isnan(d) ? std::numeric_limits<double>::infinity() : d);
    }
  }
  rec.reconstruction_residual = worst;

  if (opts.check_axioms) {
    const Grid coarse = uniform_grid(opts.triples.grid_n);
    rec.u_star_axiom_residual =
        check_uninorm_axioms(rec.u_star, coarse, tol, opts.triples).worst();
  }
  return rec;
}

UniquenessVerdict uniqueness_verdict(const BinaryOperator& u, const Grid& grid,
                                     const std::vector<double>& alphas,
                                     const Tolerances& tol) {
  if (!u.neutral) {
    throw InvalidArgument("uniqueness_verdict: '" + u.name +
                          "' has no neutral element");
  }
  UniquenessVerdict v;
  v.neutral = *u.neutral;
  v.cuts = scan_cuts(u, CutRole::uninorm_cut, alphas, grid, tol);
  for (const CutReport& c : v.cuts) {
    if (c.valid && std::abs(c.alpha - v.neutral) > tol.exact_tol) {
      v.witnesses.push_back(c.alpha);
    }
  }
  v.unique = v.witnesses.empty();
  return v;
}

EqualityRecord operators_equal(
    const BinaryOperator& a, const BinaryOperator& b, const Grid& grid,
    const Tolerances& tol,
    const std::vector<std::pair<double, double>>& exclusions) {
  EqualityRecord rec;
  auto excluded = [&exclusions](double x, double y) {
    return std::any_of(exclusions.begin(), exclusions.end(), [x, y](const auto& e) {
      return std::abs(e.first - x) <= 1e-12 && std::abs(e.second - y) <= 1e-12;
    });
  };
  for (double x : grid.points()) {
    for (double y : grid.points()) {
      if (excluded(x, y)) continue;
      ++rec.compared;
      double d = std::abs(a(x, y) - b(x, y));
      if (std::isnan(d)) d = std::numeric_limits<double>::infinity();
      if (rec.witness.empty() || d > rec.residual) {
        rec.residual = d;
        rec.witness = {x, y};
      }
    }
  }
  rec.equal = rec.residual <= tol.eq_tol;
  return rec;
}

CoincidenceReport coincidence_region_check(const BinaryOperator& u1,
                                           const BinaryOperator& u2, double a,
                                           double d, const Grid& grid,
                                           const Tolerances& tol) {
  if (!(a < d)) {
    throw InvalidArgument("coincidence_region_check needs a < d");
  }
  CoincidenceReport rep;
  const auto p = grid.points();
  for (double x : p) {
    const bool x_out = x <= a || x >= d;
    for (double y : p) {
      const bool y_out = y <= a || y >= d;
      const double diff = std::abs(u1(x, y) - u2(x, y));
      if (x_out && y_out) {
        if (diff > rep.outer_residual) {
          rep.outer_residual = diff;
          rep.outer_witness = {x, y};
        }
      } else if (!x_out && !y_out) {
        if (diff > rep.interior_gap) {
          rep.interior_gap = diff;
          rep.interior_witness = {x, y};
        }
      }
    }
  }
  rep.coincide = rep.outer_residual <= tol.eq_tol;
  rep.disagree_inside = rep.interior_gap > tol.eq_tol;
  return rep;
}

}  // namespace unrep
