#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "unrep/numerics.hpp"
#include "unrep/operators.hpp"

namespace unrep {

/// Additive generator of a representable uninorm: h maps ]0,1[ onto the
/// reals, h(0+) = -inf, h(1-) = +inf, h(neutral) = 0.
struct GeneratorDescriptor {
  std::function<double(double)> h;
  std::function<double(double)> h_inverse;
  double neutral = 0.5;
  std::string name;
};

/// h(x) = ln(k x / (1-x)) with k = (1-e)/e, so that h(e) = 0.
GeneratorDescriptor logit_generator(double e);

/// h^-1(h(x)+h(y)) off the corners; U(0,1) = U(1,0) = 1 when disjunctive,
/// 0 otherwise.
BinaryOperator representable_uninorm(const GeneratorDescriptor& g,
                                     bool disjunctive);

BinaryOperator minimum_tnorm();
BinaryOperator product_tnorm();
BinaryOperator lukasiewicz_tnorm();
BinaryOperator drastic_tnorm();
BinaryOperator maximum_tconorm();
BinaryOperator probabilistic_sum();
BinaryOperator bounded_sum();
BinaryOperator drastic_tconorm();

enum class CrossMode { min, max };

/// T rescaled to [0,e]^2, S rescaled to [e,1]^2, min or max elsewhere.
/// Throws InvalidArgument if T or S carry the wrong kind tag or e is not
/// in ]0,1[.
BinaryOperator minmax_uninorm(const BinaryOperator& t, const BinaryOperator& s,
                              double e, CrossMode mode);

/// Disjunctive uninorm whose underlying functions are the drastic product
/// and the maximum.
BinaryOperator drastic_band_uninorm(double e);

/// Band index of x in ]0,1[ for the partition by u(n) = 2^(-2^n):
/// x in ]u(n+1), u(n)].
int power_band_index(double x);

/// The uninorm built from f(x) = x^2 and e = 1/2 on the bands
/// ]u(n+1), u(n)], with min as the base operation.
BinaryOperator power_band_uninorm();

/// U'(x,y) = U(w, U(x,y)). Throws PreconditionViolation unless
/// U(w,z) equals the neutral element of U within `exact_tol`; the result
/// claims neutral element z.
BinaryOperator conjugate_shift(const BinaryOperator& u, double w, double z,
                               double exact_tol = 1e-12);

/// Affine conjugation of `inner` onto ]a,d[. Throws InvalidArgument unless
/// 0 <= a < d <= 1.
BandOperator band_rescale(const BinaryOperator& inner, double a, double d);

enum class OuterMode {
  minmax,         // [d,1] under max absorbs everything, then [0,a] under min
  prod_dualprod,  // [d,1] under x+y-xy absorbs, then [0,a] under product
};

/// Ordinal sum of `inner` on its band with the outer pieces of `mode`.
BinaryOperator band_ordinal_sum(const BandOperator& inner, OuterMode mode);

/// Data of a band construction: f a continuous increasing bijection of [0,1],
/// F a commutative, non-decreasing map on [x,e]^2 with x = f(e), F(s,e) = s
/// and F(s,x) = f(s).
struct FBandSpec {
  MonotoneMap f;
  std::function<double(double, double)> F;
  double e = 0.5;
  double x = 0.25;
  /// Also test the associativity chain for band indices outside {0,1}.
  bool check_all_bands = false;
  int samples = 24;
};

/// Checks the FBandSpec invariants on a sample of [x,e]. Throws InvalidSpec
/// naming the violated point or triple.
void validate_fband(const FBandSpec& spec, double tol = 1e-9);

/// U(s,t) = f^(n+m)(F(f^(-n)(s), f^(-m)(t))) for s in band n and t in band m,
/// bands being ]f^(n+1)(e), f^(n)(e)]. The band of the result is the open
/// interval between the limits of f^(n)(x) for n -> +inf and n -> -inf.
BandOperator propF_uninorm(const FBandSpec& spec);

/// f(s) = 4s^2 on [0,1/4], 1/4 + 2(s-1/4)^2 on ]1/4,3/4[,
/// 3/4 + 4(s-3/4)^2 on [3/4,1], with closed-form iterates.
MonotoneMap quadratic_band_map();

/// The seven-case uninorm glued from `inner` on ]a,d[ and the iterates of f
/// outside. Throws InvalidSpec if f does not fix a and d.
BinaryOperator eqUf_uninorm(const MonotoneMap& f, const BandOperator& inner,
                            double a, double d, double e);

struct PowerSequence {
  double base = 0.0;
  double neutral = 0.0;
  std::vector<double> forward;   // x(1), x(2), ..., x(K) with x(1) = x
  std::vector<double> backward;  // x(-1), ..., x(-K)
  double a_x = 0.0;
  double d_x = 0.0;
  bool converged = false;
};

/// Forward powers x(n) = U(x, x(n-1)); backward powers start from the y with
/// U(x,y) = e. Throws InvalidArgument when U has no neutral element or x = e,
/// and NoInverseError when the cut U(x,.) does not attain e within eq_tol.
PowerSequence power_sequence(const BinaryOperator& u, double x, int k,
                             const Tolerances& tol = {});

struct AxiomResult {
  bool holds = true;
  double worst_residual = 0.0;
  std::vector<double> witness;
};

struct AxiomReport {
  AxiomResult commutativity;
  AxiomResult associativity;
  AxiomResult monotonicity;
  AxiomResult neutral;
  /// From U(1,0): "disjunctive", "conjunctive" or "neither".
  std::string classification;
  bool classification_matches_claim = true;

  bool pass() const {
    return commutativity.holds && associativity.holds && monotonicity.holds &&
           neutral.holds && classification_matches_claim;
  }
  double worst() const;
};

struct TripleSampling {
  int grid_n = 32;
  int random_triples = 10000;
  std::uint64_t seed = 0x554E494E;
};

/// Triples of the uniform grid of size grid_n followed by seeded uniform
/// random triples. Deterministic for a given sampling.
std::vector<std::array<double, 3>> sample_triples(const TripleSampling& s);

/// Pairs are taken from `grid`, triples from `triples`.
AxiomReport check_uninorm_axioms(const BinaryOperator& u, const Grid& grid,
                                 const Tolerances& tol,
                                 const TripleSampling& triples = {});

struct UnderlyingOperator {
  BinaryOperator op;
  ContinuityVerdict continuity;
};

/// T_U(x,y) = U(ex,ey)/e and S_U(x,y) = (U(e+(1-e)x, e+(1-e)y) - e)/(1-e),
/// each probed for continuity along the lines of `grid`. Throws
/// InvalidArgument unless U claims a neutral element in ]0,1[.
std::pair<UnderlyingOperator, UnderlyingOperator> underlying_ops(
    const BinaryOperator& u, const Grid& grid, const Tolerances& tol = {});

}  // namespace unrep
