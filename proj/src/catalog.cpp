#include "unrep/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include "unrep/errors.hpp"

namespace unrep {

namespace {

using Eval1 = std::function<double(double)>;
using Eval2 = std::function<double(double, double)>;
using Exclusions = std::vector<std::pair<double, double>>;

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

bool excluded(const Exclusions& ex, double x, double y) {
  return std::any_of(ex.begin(), ex.end(), [x, y](const auto& p) {
    return p.first == x && p.second == y;
  });
}

double diff(double a, double b) {
  const double d = std::abs(a - b);
  return std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
}

RelationOutcome compare_pairs(const Eval2& a, const Eval2& b,
                              const std::vector<double>& xs,
                              const std::vector<double>& ys, double tol,
                              const Exclusions& ex = {}) {
  RelationOutcome out;
  double wx = 0.0, wy = 0.0;
  for (double x : xs) {
    for (double y : ys) {
      if (excluded(ex, x, y)) continue;
      const double d = diff(a(x, y), b(x, y));
      if (d > out.residual) {
        out.residual = d;
        wx = x;
        wy = y;
      }
    }
  }
  out.pass = out.residual <= tol;
  out.detail = "worst at (" + num(wx) + ", " + num(wy) + ")";
  return out;
}

RelationOutcome compare_unary(const Eval1& a, const Eval1& b,
                              const std::vector<double>& xs, double tol) {
  RelationOutcome out;
  double wx = 0.0;
  for (double x : xs) {
    const double d = diff(a(x), b(x));
    if (d > out.residual) {
      out.residual = d;
      wx = x;
    }
  }
  out.pass = out.residual <= tol;
  out.detail = "worst at " + num(wx);
  return out;
}

Relation implication_equality(std::string a_u, std::string a_n, std::string b_u,
                              std::string b_n, double tol, Exclusions ex = {}) {
  Relation r;
  r.kind = RelationKind::implication_equality;
  r.description = a_u + "(" + a_n + "(x),y) = " + b_u + "(" + b_n + "(x),y)";
  r.tolerance = tol;
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances& t) {
    const BinaryOperator ia = un_implication(c.op(a_u), c.neg(a_n));
    const BinaryOperator ib = un_implication(c.op(b_u), c.neg(b_n));
    const auto pts = c.points(g);
    return compare_pairs(ia.eval, ib.eval, pts, pts, t.eq_tol, ex);
  };
  return r;
}

Relation operator_reference(std::string op, std::string what, Eval2 ref,
                            double tol, Exclusions ex = {}) {
  Relation r;
  r.kind = RelationKind::reference_equality;
  r.description = op + " matches " + what;
  r.tolerance = tol;
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances& t) {
    const auto pts = c.points(g);
    return compare_pairs(c.op(op).eval, ref, pts, pts, t.eq_tol, ex);
  };
  return r;
}

Relation negation_reference(std::string n, std::string what, Eval1 ref,
                            double tol) {
  Relation r;
  r.kind = RelationKind::reference_equality;
  r.description = n + " matches " + what;
  r.tolerance = tol;
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances& t) {
    return compare_unary(c.neg(n).eval, ref, c.points(g), t.eq_tol);
  };
  return r;
}

Relation neutral_element(std::string op, double e, double tol) {
  Relation r;
  r.kind = RelationKind::neutral_element;
  r.description = op + " has neutral element " + num(e);
  r.tolerance = tol;
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances& t) {
    const BinaryOperator& u = c.op(op);
    RelationOutcome out = compare_unary(
        [&u, e](double x) { return u(x, e); }, [](double x) { return x; },
        c.points(g), t.eq_tol);
    const RelationOutcome sym = compare_unary(
        [&u, e](double x) { return u(e, x); }, [](double x) { return x; },
        c.points(g), t.eq_tol);
    if (sym.residual > out.residual) out = sym;
    if (!u.neutral || std::abs(*u.neutral - e) > t.exact_tol) {
      out.pass = false;
      out.detail += "; claimed neutral differs";
    }
    return out;
  };
  return r;
}

Relation cut_relation(bool expect_valid, std::string op, CutRole role,
                      std::vector<double> alphas) {
  Relation r;
  r.kind = expect_valid ? RelationKind::cut_valid : RelationKind::cut_invalid;
  std::string list;
  for (double a : alphas) list += (list.empty() ? "" : ",") + num(a);
  if (alphas.size() > 6) list = std::to_string(alphas.size()) + " alphas";
  r.description = std::string(to_string(role)) + " of " + op + " " +
                  (expect_valid ? "valid" : "invalid") + " at " + list;
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances& t) {
    RelationOutcome out;
    out.pass = true;
    int wrong = 0;
    for (const CutReport& rep : scan_cuts(c.op(op), role, alphas, g, t)) {
      if (rep.valid != expect_valid) {
        ++wrong;
        if (out.pass) out.detail = "first mismatch at alpha=" + num(rep.alpha);
        out.pass = false;
      }
    }
    out.residual = wrong;
    if (out.pass) out.detail = std::to_string(alphas.size()) + " cuts as expected";
    return out;
  };
  return r;
}

Relation uniqueness(std::string op, bool expect_unique,
                    std::vector<double> required, std::size_t min_witnesses,
                    std::vector<double> special) {
  Relation r;
  r.kind = RelationKind::uniqueness;
  r.description = op + (expect_unique ? " gives a unique representation"
                                      : " gives several representations");
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances& t) {
    const BinaryOperator& u = c.op(op);
    const UniquenessVerdict v =
        uniqueness_verdict(u, g, default_alphas(u.neutral, special), t);
    RelationOutcome out;
    out.pass = v.unique == expect_unique && v.witnesses.size() >= min_witnesses;
    for (double w : required) {
      const bool found = std::any_of(v.witnesses.begin(), v.witnesses.end(),
                                     [w](double a) { return a == w; });
      if (!found) {
        out.pass = false;
        out.detail = "missing witness " + num(w) + "; ";
      }
    }
    out.detail += std::to_string(v.witnesses.size()) + " witness alphas";
    return out;
  };
  return r;
}

Relation coincidence(std::string u1, std::string u2, double a, double d,
                     double tol) {
  Relation r;
  r.kind = RelationKind::coincidence;
  r.description = u1 + " = " + u2 + " on ([0," + num(a) + "] u [" + num(d) +
                  ",1])^2 and differs inside";
  r.tolerance = tol;
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances& t) {
    const CoincidenceReport rep =
        coincidence_region_check(c.op(u1), c.op(u2), a, d, g, t);
    RelationOutcome out;
    out.pass = rep.coincide && rep.disagree_inside;
    out.residual = rep.outer_residual;
    out.detail = "interior gap " + num(rep.interior_gap);
    if (!rep.interior_witness.empty()) {
      out.detail += " at (" + num(rep.interior_witness[0]) + ", " +
                    num(rep.interior_witness[1]) + ")";
    }
    return out;
  };
  return r;
}

Relation point_values(std::string op, std::vector<std::array<double, 3>> table,
                      double tol) {
  Relation r;
  r.kind = RelationKind::point_values;
  r.description = op + " at " + std::to_string(table.size()) + " points";
  r.tolerance = tol;
  r.check = [=](const CatalogInstance& c, const Grid&, const Tolerances& t) {
    const BinaryOperator& u = c.op(op);
    RelationOutcome out;
    for (const auto& [x, y, v] : table) {
      const double d = diff(u(x, y), v);
      if (d > out.residual || out.detail.empty()) {
        out.residual = std::max(out.residual, d);
        out.detail = "worst at (" + num(x) + ", " + num(y) + ")";
      }
    }
    out.pass = out.residual <= t.eq_tol;
    return out;
  };
  return r;
}

Relation negation_values(std::string n, std::vector<std::array<double, 2>> table,
                         double tol) {
  Relation r;
  r.kind = RelationKind::point_values;
  r.description = n + " at " + std::to_string(table.size()) + " points";
  r.tolerance = tol;
  r.check = [=](const CatalogInstance& c, const Grid&, const Tolerances& t) {
    const Negation& neg = c.neg(n);
    RelationOutcome out;
    double wx = 0.0;
    for (const auto& [x, v] : table) {
      const double d = diff(neg(x), v);
      if (d > out.residual) {
        out.residual = d;
        wx = x;
      }
    }
    out.pass = out.residual <= t.eq_tol;
    out.detail = "worst at " + num(wx);
    return out;
  };
  return r;
}

// x(n) = 2^(-2^n) for the power-band uninorm started at x = 1/4.
Relation power_sequence_relation(std::string op, double x, int k) {
  Relation r;
  r.kind = RelationKind::power_sequence;
  r.description = "powers of " + num(x) + " under " + op + " are 2^(-2^n), |n| <= " +
                  std::to_string(k);
  r.tolerance = 1e-12;
  r.check = [=](const CatalogInstance& c, const Grid&, const Tolerances& t) {
    const BinaryOperator& u = c.op(op);
    const PowerSequence seq = power_sequence(u, x, k, t);
    RelationOutcome out;
    for (int n = 1; n <= k; ++n) {
      const auto i = static_cast<std::size_t>(n - 1);
      out.residual = std::max(
          {out.residual, diff(seq.forward[i], std::exp2(-std::exp2(n))),
           diff(seq.backward[i], std::exp2(-std::exp2(-n))),
           diff(u(seq.forward[i], seq.backward[i]), seq.neutral)});
    }
    out.pass = out.residual <= t.eq_tol;
    out.detail = "a_x~" + num(seq.a_x) + " d_x~" + num(seq.d_x);
    return out;
  };
  return r;
}

Relation lemma_relation(std::string op, double x, double a, double d) {
  Relation r;
  r.kind = RelationKind::lemma_lemNW;
  r.description = "cut at " + num(x) + " of " + op +
                  " has no fixed point in the band, fixes its ends";
  r.check = [=](const CatalogInstance& c, const Grid& g, const Tolerances&) {
    const BinaryOperator& u = c.op(op);
    RelationOutcome out;
    double margin = std::numeric_limits<double>::infinity();
    for (double s : g.points()) {
      if (s > a + 0.01 && s < d - 0.01) {
        margin = std::min(margin, std::abs(u(x, s) - s));
      }
    }
    const double corner = u(a, d);
    out.residual = std::max({std::abs(u(x, a) - a), std::abs(u(x, d) - d),
                             std::min(std::abs(corner - a), std::abs(corner - d))});
    out.pass = margin > 1e-6 && out.residual == 0.0;
    out.detail = "smallest |f(s)-s| " + num(margin) + ", U(a,d)=" + num(corner);
    return out;
  };
  return r;
}

double ex1_rational(double k, double x, double y) {
  if ((x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0)) return 1.0;
  return k * x * y / (k * x * y + (1.0 - x) * (1.0 - y));
}

double band_piecewise(double x, double y, const Eval2& inside) {
  if (x > 0.25 && x < 0.75 && y > 0.25 && y < 0.75) return inside(x, y);
  if (std::max(x, y) >= 0.75) return std::max(x, y);
  return std::min(x, y);
}

CatalogInstance example1() {
  CatalogInstance c;
  c.name = "example1";
  c.operators["U1"] = representable_uninorm(logit_generator(0.5), true);
  c.operators["U2"] = representable_uninorm(logit_generator(0.25), true);
  c.negations["N1"] = build_negation(negation_spec::Standard{});
  c.negations["N2"] = build_negation(negation_spec::Sugeno{2.0});
  c.uninorm = "U1";
  c.negation = "N1";
  c.special_alphas = {0.25};
  const Exclusions corners = {{0.0, 0.0}, {1.0, 1.0}};
  auto& rel = c.expected_relations;
  rel.push_back(implication_equality("U1", "N1", "U2", "N2", 1e-12, corners));
  rel.push_back(operator_reference(
      "I", "(1-x)y/((1-x)y+x(1-y))",
      [](double x, double y) {
        return (1.0 - x) * y / ((1.0 - x) * y + x * (1.0 - y));
      },
      1e-12, corners));
  rel.push_back(operator_reference(
      "U1", "xy/(xy+(1-x)(1-y))",
      [](double x, double y) { return ex1_rational(1.0, x, y); }, 1e-12));
  rel.push_back(operator_reference(
      "U2", "3xy/(3xy+(1-x)(1-y))",
      [](double x, double y) { return ex1_rational(3.0, x, y); }, 1e-12));
  rel.push_back(neutral_element("U1", 0.5, 1e-12));
  rel.push_back(neutral_element("U2", 0.25, 1e-12));
  rel.push_back(cut_relation(true, "U1", CutRole::uninorm_cut, {0.25}));
  rel.push_back(cut_relation(true, "U2", CutRole::uninorm_cut, {0.5}));
  rel.push_back(uniqueness("U1", false, {0.25}, 98, {}));
  return c;
}

CatalogInstance step_negation() {
  CatalogInstance c;
  c.name = "step-negation";
  c.operators["U1"] = representable_uninorm(logit_generator(0.5), true);
  c.operators["U2"] = representable_uninorm(logit_generator(0.25), true);
  c.negations["N1"] = build_negation(negation_spec::Step{0.5});
  c.negations["N2"] = build_negation(negation_spec::Step{0.25});
  c.uninorm = "U1";
  c.negation = "N1";
  auto& rel = c.expected_relations;
  rel.push_back(implication_equality("U1", "N1", "U2", "N2", 1e-12));
  rel.push_back(operator_reference(
      "I", "the three-branch step implication",
      [](double x, double y) {
        if (x == 0.0 || y == 1.0) return 1.0;
        if (x == 1.0) return 0.0;
        return y;
      },
      1e-12));
  std::vector<double> alphas = default_alphas(0.5, {0.25});
  alphas.insert(alphas.begin(), 0.0);
  rel.push_back(cut_relation(false, "I", CutRole::implication_cut, alphas));
  return c;
}

CatalogInstance u3u4() {
  CatalogInstance c;
  c.name = "u3u4";
  const BinaryOperator ex1_u1 = representable_uninorm(logit_generator(0.5), true);
  const BinaryOperator ex1_u2 = representable_uninorm(logit_generator(0.25), true);
  c.operators["U3"] =
      band_ordinal_sum(band_rescale(ex1_u1, 0.25, 0.75), OuterMode::minmax);
  c.operators["U4"] =
      band_ordinal_sum(band_rescale(ex1_u2, 0.25, 0.75), OuterMode::minmax);
  c.negations["N1"] = build_negation(negation_spec::Standard{});
  const BinaryOperator i = un_implication(c.operators["U3"], c.negations["N1"]);
  c.negations["N2"] = build_negation(negation_spec::FromCut{i, 0.375});
  c.uninorm = "U3";
  c.negation = "N1";
  c.special_alphas = {0.375};
  auto& rel = c.expected_relations;
  rel.push_back(implication_equality("U3", "N1", "U4", "N2", 1e-12));
  rel.push_back(operator_reference(
      "U3", "the band formula with 1/2 factor",
      [](double x, double y) {
        return band_piecewise(x, y, [](double s, double t) {
          const double p = (s - 0.25) * (t - 0.25);
          return 0.25 + 0.5 * p / (p + (0.75 - s) * (0.75 - t));
        });
      },
      1e-12));
  rel.push_back(operator_reference(
      "U4", "the band formula with factor 3",
      [](double x, double y) {
        return band_piecewise(x, y, [](double s, double t) {
          const double p = (s - 0.25) * (t - 0.25);
          return 0.25 + 3.0 * p / (6.0 * p + 2.0 * (0.75 - s) * (0.75 - t));
        });
      },
      1e-12));
  rel.push_back(operator_reference(
      "I", "the closed-form implication",
      [](double x, double y) {
        if (x > 0.25 && x < 0.75 && y > 0.25 && y < 0.75) {
          const double p = (0.75 - x) * (y - 0.25);
          return 0.25 + p / (2.0 * p + 2.0 * (x - 0.25) * (0.75 - y));
        }
        const double nx = 1.0 - x;
        return std::max(nx, y) >= 0.75 ? std::max(nx, y) : std::min(nx, y);
      },
      1e-12));
  rel.push_back(negation_reference(
      "N2", "3/(16x) on the band, 1-x outside",
      [](double x) {
        return (x > 0.25 && x < 0.75) ? 3.0 / (16.0 * x) : 1.0 - x;
      },
      1e-12));
  rel.push_back(neutral_element("U3", 0.5, 1e-12));
  rel.push_back(neutral_element("U4", 0.375, 1e-12));
  rel.push_back(coincidence("U3", "U4", 0.25, 0.75, 1e-12));
  rel.push_back(point_values(
      "U3", {{{0.5, 0.5, 0.5}, {0.1, 0.9, 0.9}, {0.1, 0.5, 0.1}}}, 1e-12));
  rel.push_back(point_values("U4", {{{0.5, 0.5, 0.625}}}, 1e-12));
  rel.push_back(cut_relation(true, "U3", CutRole::uninorm_cut, {0.375}));
  rel.push_back(cut_relation(true, "U4", CutRole::uninorm_cut, {0.5}));
  return c;
}

CatalogInstance unique_rep() {
  CatalogInstance c;
  c.name = "unique-rep";
  const double e = 0.5;
  c.operators["U"] = drastic_band_uninorm(e);
  c.negations["N"] = build_negation(negation_spec::Standard{});
  c.uninorm = "U";
  c.negation = "N";
  auto& rel = c.expected_relations;
  rel.push_back(uniqueness("U", true, {}, 0, {}));
  rel.push_back(point_values(
      "U", {{{0.2, 0.3, 0.0}, {0.7, 0.8, 0.8}, {0.3, 0.7, 0.3}, {0.3, 0.5, 0.3}}},
      1e-12));
  Relation cuts;
  cuts.kind = RelationKind::reference_equality;
  cuts.description = "horizontal cuts of U follow the three-piece forms";
  cuts.tolerance = 1e-12;
  cuts.check = [e](const CatalogInstance& inst, const Grid& g,
                   const Tolerances& t) {
    auto ref = [e](double x, double alpha) {
      if (alpha == 1.0) return 1.0;
      if (alpha > e) return (x >= e && x <= alpha) ? alpha : x;
      if (alpha < e) {
        if (x < e) return 0.0;
        return x < 1.0 ? alpha : 1.0;
      }
      return x;
    };
    const std::vector<double> pts(g.points().begin(), g.points().end());
    return compare_pairs(inst.op("U").eval, ref, pts, default_alphas(e), t.eq_tol);
  };
  rel.push_back(cuts);
  rel.push_back(cut_relation(true, "U", CutRole::uninorm_cut, {e}));
  return c;
}

CatalogInstance nonc_power() {
  CatalogInstance c;
  c.name = "nonc-power";
  const BinaryOperator u1 = power_band_uninorm();
  c.operators["U1"] = u1;
  c.operators["U2"] = conjugate_shift(u1, std::exp2(-0.5), 0.25);
  c.negations["N1"] = build_negation(negation_spec::PowerLog{});
  c.negations["N2"] = build_negation(negation_spec::SquareOf{c.negations["N1"]});
  c.uninorm = "U1";
  c.negation = "N1";
  c.special_alphas = {0.25};
  c.interior_only = true;
  auto& rel = c.expected_relations;
  rel.push_back(implication_equality("U1", "N1", "U2", "N2", 1e-9));
  std::vector<std::array<double, 2>> swaps;
  for (int n = -3; n <= 3; ++n) {
    swaps.push_back({std::exp2(-std::exp2(n)), std::exp2(-std::exp2(-n))});
  }
  rel.push_back(negation_values("N1", swaps, 1e-12));
  rel.push_back(power_sequence_relation("U1", 0.25, 5));
  rel.push_back(neutral_element("U1", 0.5, 1e-12));
  rel.push_back(neutral_element("U2", 0.25, 1e-12));
  rel.push_back(negation_reference(
      "N1", "exp(ln2 ln2 / ln x)",
      [](double x) { return std::exp(std::log(2.0) * std::log(2.0) / std::log(x)); },
      1e-12));
  Relation square;
  square.kind = RelationKind::reference_equality;
  square.description = "N2(x) = U1(N1(x), 1/4)";
  square.tolerance = 1e-12;
  square.check = [](const CatalogInstance& inst, const Grid& g,
                    const Tolerances& t) {
    const BinaryOperator& u = inst.op("U1");
    const Negation& n1 = inst.neg("N1");
    return compare_unary(inst.neg("N2").eval,
                         [&](double x) { return u(n1(x), 0.25); },
                         inst.points(g), t.eq_tol);
  };
  rel.push_back(square);
  rel.push_back(operator_reference(
      "U1", "an independent band construction from F = min",
      [band = propF_uninorm(squaring_fband())](double x, double y) {
        return band(x, y);
      },
      1e-12));
  rel.push_back(cut_relation(true, "U1", CutRole::uninorm_cut, {0.25}));
  rel.push_back(cut_relation(true, "U2", CutRole::uninorm_cut, {0.5}));
  return c;
}

CatalogInstance osum_nonc() {
  CatalogInstance c;
  c.name = "osum-nonc";
  c.operators["U"] = band_ordinal_sum(
      band_rescale(power_band_uninorm(), 0.25, 0.75), OuterMode::prod_dualprod);
  c.negations["N"] = build_negation(negation_spec::Standard{});
  c.uninorm = "U";
  c.negation = "N";
  c.special_alphas = {0.375};
  auto& rel = c.expected_relations;
  rel.push_back(neutral_element("U", 0.5, 1e-12));
  rel.push_back(uniqueness("U", false, {0.375}, 1, {0.375}));
  rel.push_back(cut_relation(true, "U", CutRole::uninorm_cut, {0.375, 0.5}));
  rel.push_back(point_values("U",
                             {{{0.1, 0.2, 0.02},
                               {0.8, 0.9, 0.98},
                               {0.1, 0.5, 0.1},
                               {0.9, 0.1, 0.9},
                               {0.5, 0.9, 0.9},
                               {0.375, 0.375, 0.28125}}},
                             1e-12));
  return c;
}

CatalogInstance equf() {
  CatalogInstance c;
  c.name = "equf";
  const double a = 0.25, d = 0.75, e = 0.5;
  const MonotoneMap f = quadratic_band_map();
  c.operators["U"] =
      eqUf_uninorm(f, band_rescale(power_band_uninorm(), a, d), a, d, e);
  c.negations["N"] = build_negation(negation_spec::Standard{});
  c.uninorm = "U";
  c.negation = "N";
  c.special_alphas = {0.375, 0.6};
  auto& rel = c.expected_relations;
  rel.push_back(neutral_element("U", e, 1e-12));
  rel.push_back(cut_relation(true, "U", CutRole::uninorm_cut, {0.375, 0.5}));
  rel.push_back(cut_relation(false, "U", CutRole::uninorm_cut, {0.6}));
  rel.push_back(uniqueness("U", false, {0.375}, 1, {0.375}));
  rel.push_back(lemma_relation("U", 0.375, a, d));
  Relation cut_is_f;
  cut_is_f.kind = RelationKind::reference_equality;
  cut_is_f.description = "U(3/8, .) is the piecewise quadratic f";
  cut_is_f.tolerance = 1e-12;
  cut_is_f.check = [f](const CatalogInstance& inst, const Grid& g,
                       const Tolerances& t) {
    const BinaryOperator& u = inst.op("U");
    return compare_unary([&u](double s) { return u(0.375, s); },
                         [&f](double s) { return f(s); }, inst.points(g),
                         t.eq_tol);
  };
  rel.push_back(cut_is_f);
  rel.push_back(point_values(
      "U",
      {{{0.1, 0.9, 0.75},
        {0.1, 0.2, 0.0},
        {0.9, 0.375, 0.75 + 0.25 * std::pow(4.0 * 0.15, 2.0)},
        {0.9, 0.5, 0.9},
        {0.9, 0.3, 0.84},
        {0.8, 0.9, 1.0}}},
      1e-12));
  return c;
}

}  // namespace

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::implication_equality: return "implication-equality";
    case RelationKind::neutral_element: return "neutral-element";
    case RelationKind::cut_valid: return "cut-valid";
    case RelationKind::cut_invalid: return "cut-invalid";
    case RelationKind::uniqueness: return "uniqueness";
    case RelationKind::coincidence: return "coincidence";
    case RelationKind::power_sequence: return "power-sequence";
    case RelationKind::lemma_lemNW: return "lemma-lemNW";
    case RelationKind::reference_equality: return "reference-equality";
    case RelationKind::point_values: return "point-values";
  }
  return "?";
}

const BinaryOperator& CatalogInstance::op(const std::string& key) const {
  auto it = operators.find(key);
  if (it == operators.end()) {
    throw NotFound("instance '" + name + "' has no operator '" + key + "'");
  }
  return it->second;
}

const Negation& CatalogInstance::neg(const std::string& key) const {
  auto it = negations.find(key);
  if (it == negations.end()) {
    throw NotFound("instance '" + name + "' has no negation '" + key + "'");
  }
  return it->second;
}

std::vector<double> CatalogInstance::points(const Grid& grid) const {
  if (interior_only) return grid.interior();
  return {grid.points().begin(), grid.points().end()};
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "example1", "step-negation", "u3u4",  "unique-rep",
      "nonc-power", "osum-nonc",   "equf"};
  return names;
}

FBandSpec squaring_fband() {
  MonotoneMap f([](double v) { return v * v; },
                [](double v) { return std::sqrt(v); });
  auto F = [](double s, double t) {
    if (s == 0.25) return t * t;
    if (t == 0.25) return s * s;
    return std::min(s, t);
  };
  return FBandSpec{f, F, 0.5, 0.25};
}

CatalogInstance catalog_instance(const std::string& name) {
  CatalogInstance c;
  if (name == "example1") {
    c = example1();
  } else if (name == "step-negation") {
    c = step_negation();
  } else if (name == "u3u4") {
    c = u3u4();
  } else if (name == "unique-rep") {
    c = unique_rep();
  } else if (name == "nonc-power") {
    c = nonc_power();
  } else if (name == "osum-nonc") {
    c = osum_nonc();
  } else if (name == "equf") {
    c = equf();
  } else {
    throw NotFound("unknown catalog instance '" + name + "'");
  }
  c.operators["I"] = un_implication(c.op(c.uninorm), c.neg(c.negation));
  return c;
}

InstanceReport verify_instance(const std::string& name, const Grid& grid,
                               const Tolerances& tol) {
  CatalogInstance inst;
  try {
    inst = catalog_instance(name);
  } catch (const NotFound&) {
    throw;
  } catch (const Error& e) {
    throw Error(name + ": " + e.what());
  }
  InstanceReport rep;
  rep.name = name;
  for (const Relation& r : inst.expected_relations) {
    Tolerances t = tol;
    if (r.tolerance > 0.0) t.eq_tol = r.tolerance;
    RelationResult res;
    res.kind = r.kind;
    res.description = r.description;
    res.tolerance = t.eq_tol;
    try {
      const RelationOutcome out = r.check(inst, grid, t);
      res.pass = out.pass;
      res.residual = out.residual;
      res.detail = out.detail;
    } catch (const Error& e) {
      res.pass = false;
      res.residual = std::numeric_limits<double>::infinity();
      res.detail = e.what();
    }
    rep.pass = rep.pass && res.pass;
    if (std::isfinite(res.residual)) {
      rep.max_residual = std::max(rep.max_residual, res.residual);
    }
    rep.relations.push_back(std::move(res));
  }
  return rep;
}

}  // namespace unrep
