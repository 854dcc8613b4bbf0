#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "unrep/negations.hpp"
#include "unrep/numerics.hpp"
#include "unrep/operators.hpp"
#include "unrep/uninorms.hpp"

namespace unrep {

enum class CutRole { uninorm_cut, implication_cut };

std::string_view to_string(CutRole role);
CutRole cut_role_from_string(std::string_view text);

/// Verdict on the horizontal cut x -> op(x, alpha).
struct CutReport {
  double alpha = 0.0;
  CutRole role = CutRole::uninorm_cut;
  bool monotone_ok = false;
  ContinuityVerdict continuity;
  double endpoint_low = 0.0;
  double endpoint_high = 0.0;
  bool valid = false;
};

/// uninorm-cut is valid when increasing, continuous, 0 at 0 and 1 at 1;
/// implication-cut when decreasing, continuous, 1 at 0 and 0 at 1. Endpoints
/// are compared with exact_tol. Throws InvalidArgument for alpha outside
/// ]0,1[ (uninorm-cut) or [0,1[ (implication-cut).
CutReport cut_report(const BinaryOperator& op, CutRole role, double alpha,
                     const Grid& grid, const Tolerances& tol);

/// One report per alpha, ordered by alpha.
std::vector<CutReport> scan_cuts(const BinaryOperator& op, CutRole role,
                                 std::vector<double> alphas, const Grid& grid,
                                 const Tolerances& tol);

/// The 99 points i/100 plus `neutral` and `special`, sorted, duplicates
/// removed.
std::vector<double> default_alphas(std::optional<double> neutral,
                                   const std::vector<double>& special = {});

struct RepresentationRecord {
  double alpha = 0.0;
  Negation n_star;
  BinaryOperator u_star;
  double reconstruction_residual = 0.0;
  /// Worst axiom residual of u_star; negative when the check was skipped.
  double u_star_axiom_residual = -1.0;
  CutReport cut;
};

struct ExtractOptions {
  bool check_axioms = true;
  TripleSampling triples;
};

/// N* = I(., alpha) and U*(x,y) = I(R_N*(x), y) with R computed by
/// bisection. Throws PreconditionViolation when the cut at alpha is not a
/// continuous negation.
RepresentationRecord extract_representation(const BinaryOperator& i,
                                            double alpha, const Grid& grid,
                                            const Tolerances& tol,
                                            const ExtractOptions& opts = {});

struct UniquenessVerdict {
  bool unique = true;
  double neutral = 0.0;
  std::vector<double> witnesses;  // valid alphas other than the neutral
  std::vector<CutReport> cuts;
};

/// Throws InvalidArgument when U has no neutral element.
UniquenessVerdict uniqueness_verdict(const BinaryOperator& u, const Grid& grid,
                                     const std::vector<double>& alphas,
                                     const Tolerances& tol);

struct EqualityRecord {
  bool equal = true;
  double residual = 0.0;
  std::vector<double> witness;  // (x, y) of the worst difference
  std::size_t compared = 0;
};

/// max |A - B| over grid x grid without the excluded points; equal when
/// the residual is at most eq_tol.
EqualityRecord operators_equal(
    const BinaryOperator& a, const BinaryOperator& b, const Grid& grid,
    const Tolerances& tol,
    const std::vector<std::pair<double, double>>& exclusions = {});

struct CoincidenceReport {
  bool coincide = true;
  double outer_residual = 0.0;
  std::vector<double> outer_witness;
  bool disagree_inside = false;
  double interior_gap = 0.0;
  std::vector<double> interior_witness;
};

/// Compares U1 and U2 on grid points of ([0,a] u [d,1])^2 and reports the
/// largest disagreement inside ]a,d[^2. Throws InvalidArgument unless a < d.
CoincidenceReport coincidence_region_check(const BinaryOperator& u1,
                                           const BinaryOperator& u2, double a,
                                           double d, const Grid& grid,
                                           const Tolerances& tol);

}  // namespace unrep
