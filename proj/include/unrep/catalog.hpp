#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unrep/implications.hpp"
#include "unrep/negations.hpp"
#include "unrep/numerics.hpp"
#include "unrep/operators.hpp"
#include "unrep/representations.hpp"
#include "unrep/uninorms.hpp"

namespace unrep {

enum class RelationKind {
  implication_equality,
  neutral_element,
  cut_valid,
  cut_invalid,
  uniqueness,
  coincidence,
  power_sequence,
  lemma_lemNW,
  reference_equality,
  point_values,
};

std::string_view to_string(RelationKind kind);

struct CatalogInstance;

struct RelationOutcome {
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct Relation {
  RelationKind kind;
  std::string description;
  /// Tolerance the relation is judged at; 0 means the caller's eq_tol.
  double tolerance = 0.0;
  std::function<RelationOutcome(const CatalogInstance&, const Grid&,
                                const Tolerances&)>
      check;
};

struct CatalogInstance {
  std::string name;
  std::map<std::string, BinaryOperator> operators;
  std::map<std::string, Negation> negations;
  std::vector<Relation> expected_relations;
  /// The (U,N) pair generating the instance's implication "I".
  std::string uninorm;
  std::string negation;
  /// Cut positions worth scanning besides the default list.
  std::vector<double> special_alphas;
  /// Compare on grid points inside ]0,1[ only.
  bool interior_only = false;

  /// Throw NotFound for names outside the instance.
  const BinaryOperator& op(const std::string& key) const;
  const Negation& neg(const std::string& key) const;
  std::vector<double> points(const Grid& grid) const;
};

/// "example1", "step-negation", "u3u4", "unique-rep", "nonc-power",
/// "osum-nonc", "equf".
const std::vector<std::string>& catalog_names();

/// Throws NotFound for an unknown name.
CatalogInstance catalog_instance(const std::string& name);

/// f(x) = x^2 composed without closed-form iterates, F = min on ]1/4,1/2]^2
/// with F(s,1/4) = s^2, e = 1/2.
FBandSpec squaring_fband();

struct RelationResult {
  RelationKind kind;
  std::string description;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct InstanceReport {
  std::string name;
  std::vector<RelationResult> relations;
  bool pass = true;
  double max_residual = 0.0;
};

/// Runs every expected relation. Library errors raised while evaluating a
/// relation fail that relation; construction errors propagate with the
/// instance name prefixed.
InstanceReport verify_instance(const std::string& name, const Grid& grid,
                               const Tolerances& tol);

}  // namespace unrep
