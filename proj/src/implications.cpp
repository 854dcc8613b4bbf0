#include "unrep/implications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unrep/errors.hpp"

namespace unrep {

namespace {

void note(PropertyReport& rep, double r, std::vector<double> witness) {
  if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
  if (r > rep.worst_residual) {
    rep.worst_residual = r;
    rep.witness = std::move(witness);
  }
}

PropertyReport start(Property p) {
  PropertyReport rep;
  rep.property = p;
  return rep;
}

PropertyReport finish(PropertyReport rep, const Tolerances& tol) {
  rep.holds = rep.worst_residual <= tol.eq_tol;
  return rep;
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::I1: return "I1";
    case Property::I2: return "I2";
    case Property::I3: return "I3";
    case Property::NP: return "NP";
    case Property::EP: return "EP";
    case Property::IP: return "IP";
    case Property::OP: return "OP";
    case Property::CP: return "CP";
    case Property::LCP: return "L-CP";
    case Property::RCP: return "R-CP";
  }
  return "?";
}

Property property_from_string(std::string_view text) {
  for (Property p : {Property::I1, Property::I2, Property::I3, Property::NP,
                     Property::EP, Property::IP, Property::OP, Property::CP,
                     Property::LCP, Property::RCP}) {
    if (text == to_string(p)) return p;
  }
  if (text == "LCP") return Property::LCP;
  if (text == "RCP") return Property::RCP;
  throw InvalidArgument("unknown property '" + std::string(text) + "'");
}

BinaryOperator un_implication(const BinaryOperator& u, const Negation& n) {
  BinaryOperator op;
  auto f = u.eval;
  auto neg = n.eval;
  op.eval = [f, neg](double x, double y) { return f(neg(x), y); };
  op.name = "I[" + u.name + "," + n.name + "]";
  op.kind = OperatorKind::implication;
  return op;
}

std::vector<PropertyReport> check_implication_axioms(const BinaryOperator& i,
                                                     const Grid& grid,
                                                     const Tolerances& tol) {
  const auto p = grid.points();
  PropertyReport i1 = start(Property::I1);
  PropertyReport i2 = start(Property::I2);
  for (double z : p) {
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      note(i1, i(p[j + 1], z) - i(p[j], z), {p[j], p[j + 1], z});
      note(i2, i(z, p[j]) - i(z, p[j + 1]), {z, p[j], p[j + 1]});
    }
  }
  PropertyReport i3 = start(Property::I3);
  note(i3, std::abs(i(0.0, 0.0) - 1.0), {0.0, 0.0});
  note(i3, std::abs(i(1.0, 1.0) - 1.0), {1.0, 1.0});
  note(i3, std::abs(i(1.0, 0.0)), {1.0, 0.0});
  return {finish(i1, tol), finish(i2, tol), finish(i3, tol)};
}

UnitFunction alpha_cut(const BinaryOperator& i, double alpha) {
  UnitFunction f;
  auto g = i.eval;
  f.eval = [g, alpha](double x) { return g(x, alpha); };
  f.name = i.name + "(.," + std::to_string(alpha) + ")";
  f.direction = Monotonicity::decreasing;
  return f;
}

PropertyReport check_property(const BinaryOperator& i, Property prop,
                              const Grid& grid, const Tolerances& tol,
                              const std::optional<Negation>& n,
                              const TripleSampling& triples) {
  const bool needs_n =
      prop == Property::CP || prop == Property::LCP || prop == Property::RCP;
  if (needs_n && !n) {
    throw InvalidArgument(std::string(to_string(prop)) +
                          " needs a negation to check against");
  }
  if (prop == Property::I1 || prop == Property::I2 || prop == Property::I3) {
    const auto all = check_implication_axioms(i, grid, tol);
    return all[static_cast<std::size_t>(prop)];
  }

  PropertyReport rep = start(prop);
  const auto p = grid.points();
  switch (prop) {
    case Property::NP:
      for (double y : p) note(rep, std::abs(i(1.0, y) - y), {y});
      break;
    case Property::IP:
      for (double x : p) note(rep, std::abs(i(x, x) - 1.0), {x});
      break;
    case Property::EP:
      for (const auto& t : sample_triples(triples)) {
        note(rep, std::abs(i(t[0], i(t[1], t[2])) - i(t[1], i(t[0], t[2]))),
             {t[0], t[1], t[2]});
      }
      break;
    case Property::OP:
      for (double x : p) {
        for (double y : p) {
          const bool one = i(x, y) >= 1.0 - tol.eq_tol;
          const bool below = x <= y + tol.eq_tol;
          if (below && !one) note(rep, 1.0 - i(x, y), {x, y});
          if (!below && one) note(rep, x - y, {x, y});
        }
      }
      break;
    case Property::CP:
      for (double x : p) {
        for (double y : p) {
          note(rep, std::abs(i(x, y) - i(n->eval(y), n->eval(x))), {x, y});
        }
      }
      break;
    case Property::LCP:
      for (double x : p) {
        for (double y : p) {
          note(rep, std::abs(i(n->eval(x), y) - i(n->eval(y), x)), {x, y});
        }
      }
      break;
    case Property::RCP:
      for (double x : p) {
        for (double y : p) {
          note(rep, std::abs(i(x, n->eval(y)) - i(y, n->eval(x))), {x, y});
        }
      }
      break;
    default:
      break;
  }
  return finish(rep, tol);
}

}  // namespace unrep
