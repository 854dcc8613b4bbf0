#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unrep/negations.hpp"
#include "unrep/numerics.hpp"
#include "unrep/operators.hpp"
#include "unrep/uninorms.hpp"

namespace unrep {

enum class Property { I1, I2, I3, NP, EP, IP, OP, CP, LCP, RCP };

std::string_view to_string(Property p);
/// Accepts the names printed by to_string ("L-CP" and "LCP" alike).
Property property_from_string(std::string_view text);

struct PropertyReport {
  Property property = Property::I1;
  bool holds = true;
  double worst_residual = 0.0;
  std::vector<double> witness;
};

/// I(x,y) = U(N(x), y).
BinaryOperator un_implication(const BinaryOperator& u, const Negation& n);

/// I1 (antitone in x), I2 (isotone in y) on grid neighbours, and the three
/// boundary values of I3.
std::vector<PropertyReport> check_implication_axioms(const BinaryOperator& i,
                                                     const Grid& grid,
                                                     const Tolerances& tol);

/// x -> I(x, alpha), declared decreasing.
UnitFunction alpha_cut(const BinaryOperator& i, double alpha);

/// Worst defect of the property's identity over grid pairs (triples for EP).
/// CP, LCP and RCP need `n`; without it they throw InvalidArgument.
PropertyReport check_property(const BinaryOperator& i, Property prop,
                              const Grid& grid, const Tolerances& tol,
                              const std::optional<Negation>& n = std::nullopt,
                              const TripleSampling& triples = {});

}  // namespace unrep
