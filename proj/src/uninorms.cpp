#include "unrep/uninorms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "unrep/errors.hpp"

namespace unrep {

namespace {

// Relative distance under which a base coordinate is read as the upper end
// of its band. Rounded boundary points (2^(-1/2), pseudo-inverse results)
// land within a few ulps of it; a wider window would flatten cuts.
constexpr double kBaseSnap = 1e-13;
// Same role for the searched band index, in the value coordinate.
constexpr double kValueSnap = 1e-13;
constexpr int kMaxBandSteps = 4096;

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool is_corner(double x, double y) {
  return (x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0);
}

BinaryOperator make(std::string name, OperatorKind kind,
                    std::function<double(double, double)> eval) {
  BinaryOperator op;
  op.eval = std::move(eval);
  op.name = std::move(name);
  op.kind = kind;
  if (kind == OperatorKind::t_norm) op.neutral = 1.0;
  if (kind == OperatorKind::t_conorm) op.neutral = 0.0;
  return op;
}

struct Band {
  int n;
  double base;  // f^(-n) of the point, in ]1/4, 1/2]
};

Band power_band(double x) {
  int n = static_cast<int>(std::floor(std::log2(-std::log2(x))));
  double base = std::pow(x, std::exp2(-n));
  if (base <= 0.25 * (1.0 + kBaseSnap)) {
    ++n;
    base = 0.5;
  } else if (base >= 0.5 * (1.0 - kBaseSnap)) {
    base = 0.5;
  }
  return {n, base};
}

double power_iterate(int n, double v) { return std::pow(v, std::exp2(n)); }

double residual(double a, double b) {
  const double r = std::abs(a - b);
  return std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
}

void record(AxiomResult& res, double r, std::vector<double> witness) {
  if (r > res.worst_residual) {
    res.worst_residual = r;
    res.witness = std::move(witness);
  }
}

}  // namespace

GeneratorDescriptor logit_generator(double e) {
  if (!(e > 0.0 && e < 1.0)) {
    throw InvalidSpec("logit generator needs e in ]0,1[, got " + num(e));
  }
  const double k = (1.0 - e) / e;
  GeneratorDescriptor g;
  g.h = [k](double x) { return std::log(k * x / (1.0 - x)); };
  g.h_inverse = [k](double t) { return 1.0 / (1.0 + k * std::exp(-t)); };
  g.neutral = e;
  g.name = "logit(" + num(e) + ")";
  return g;
}

BinaryOperator representable_uninorm(const GeneratorDescriptor& g,
                                     bool disjunctive) {
  const double corner = disjunctive ? 1.0 : 0.0;
  auto h = g.h;
  auto hi = g.h_inverse;
  BinaryOperator op = make("representable[" + g.name + "]",
                           OperatorKind::uninorm,
                           [h, hi, corner](double x, double y) {
                             if (is_corner(x, y)) return corner;
                             return hi(h(x) + h(y));
                           });
  op.neutral = g.neutral;
  op.disjunctive = disjunctive;
  return op;
}

BinaryOperator minimum_tnorm() {
  return make("minimum", OperatorKind::t_norm,
              [](double x, double y) { return std::min(x, y); });
}

BinaryOperator product_tnorm() {
  return make("product", OperatorKind::t_norm,
              [](double x, double y) { return x * y; });
}

BinaryOperator lukasiewicz_tnorm() {
  return make("lukasiewicz", OperatorKind::t_norm,
              [](double x, double y) { return std::max(0.0, x + y - 1.0); });
}

BinaryOperator drastic_tnorm() {
  return make("drastic-product", OperatorKind::t_norm, [](double x, double y) {
    if (x == 1.0) return y;
    if (y == 1.0) return x;
    return 0.0;
  });
}

BinaryOperator maximum_tconorm() {
  return make("maximum", OperatorKind::t_conorm,
              [](double x, double y) { return std::max(x, y); });
}

BinaryOperator probabilistic_sum() {
  return make("probabilistic-sum", OperatorKind::t_conorm,
              [](double x, double y) { return x + y - x * y; });
}

BinaryOperator bounded_sum() {
  return make("bounded-sum", OperatorKind::t_conorm,
              [](double x, double y) { return std::min(1.0, x + y); });
}

BinaryOperator drastic_tconorm() {
  return make("drastic-sum", OperatorKind::t_conorm, [](double x, double y) {
    if (x == 0.0) return y;
    if (y == 0.0) return x;
    return 1.0;
  });
}

BinaryOperator minmax_uninorm(const BinaryOperator& t, const BinaryOperator& s,
                              double e, CrossMode mode) {
  if (t.kind != OperatorKind::t_norm) {
    throw InvalidArgument("minmax_uninorm: '" + t.name + "' is not a t-norm");
  }
  if (s.kind != OperatorKind::t_conorm) {
    throw InvalidArgument("minmax_uninorm: '" + s.name +
                          "' is not a t-conorm");
  }
  if (!(e > 0.0 && e < 1.0)) {
    throw InvalidArgument("minmax_uninorm: e must lie in ]0,1[, got " + num(e));
  }
  auto te = t.eval;
  auto se = s.eval;
  const bool use_max = mode == CrossMode::max;
  BinaryOperator op = make(
      std::string(use_max ? "Umax" : "Umin") + "[" + t.name + "," + s.name +
          "," + num(e) + "]",
      OperatorKind::uninorm, [te, se, e, use_max](double x, double y) {
        if (x <= e && y <= e) return e * te(x / e, y / e);
        if (x >= e && y >= e) {
          return e + (1.0 - e) * se((x - e) / (1.0 - e), (y - e) / (1.0 - e));
        }
        return use_max ? std::max(x, y) : std::min(x, y);
      });
  op.neutral = e;
  op.disjunctive = use_max;
  return op;
}

BinaryOperator drastic_band_uninorm(double e) {
  if (!(e > 0.0 && e < 1.0)) {
    throw InvalidSpec("drastic_band_uninorm needs e in ]0,1[, got " + num(e));
  }
  BinaryOperator op = make(
      "drastic-band(" + num(e) + ")", OperatorKind::uninorm,
      [e](double x, double y) {
        if (std::max(x, y) == 1.0) return 1.0;
        if (x > e && y > e) return std::max(x, y);
        if (x < e && y < e) return 0.0;
        if (y == e) return x;
        if (x == e) return y;
        return std::min(x, y);
      });
  op.neutral = e;
  op.disjunctive = true;
  op.discontinuity_note = "underlying t-norm is the drastic product";
  return op;
}

int power_band_index(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw InvalidArgument("power_band_index needs x in ]0,1[, got " + num(x));
  }
  return power_band(x).n;
}

BinaryOperator power_band_uninorm() {
  BinaryOperator op =
      make("power-band", OperatorKind::uninorm, [](double x, double y) {
        if (std::max(x, y) == 1.0) return 1.0;
        if (std::min(x, y) == 0.0) return 0.0;
        if (x == 0.5) return y;
        if (y == 0.5) return x;
        const Band bx = power_band(x);
        const Band by = power_band(y);
        return power_iterate(bx.n + by.n, std::min(bx.base, by.base));
      });
  op.neutral = 0.5;
  op.disjunctive = true;
  op.discontinuity_note = "jumps on the lower border of each band rectangle";
  return op;
}

BinaryOperator conjugate_shift(const BinaryOperator& u, double w, double z,
                               double exact_tol) {
  if (!u.neutral) {
    throw PreconditionViolation("conjugate_shift: '" + u.name +
                                "' has no neutral element");
  }
  const double back = u.eval(w, z);
  if (std::abs(back - *u.neutral) > exact_tol) {
    throw PreconditionViolation("conjugate_shift: U(w,z) = " + num(back) +
                                " differs from the neutral element " +
                                num(*u.neutral));
  }
  auto f = u.eval;
  BinaryOperator op = make("shift[" + u.name + "," + num(w) + "]",
                           OperatorKind::uninorm, [f, w](double x, double y) {
                             return f(w, f(x, y));
                           });
  op.neutral = z;
  op.disjunctive = u.disjunctive;
  op.discontinuity_note = u.discontinuity_note;
  return op;
}

BandOperator band_rescale(const BinaryOperator& inner, double a, double d) {
  if (!(a >= 0.0 && a < d && d <= 1.0)) {
    throw InvalidArgument("band_rescale needs 0 <= a < d <= 1, got a=" +
                          num(a) + " d=" + num(d));
  }
  const double w = d - a;
  auto f = inner.eval;
  BandOperator band;
  band.op = make("rescale[" + inner.name + "," + num(a) + "," + num(d) + "]",
                 OperatorKind::uninorm, [f, a, w](double x, double y) {
                   return a + w * f((x - a) / w, (y - a) / w);
                 });
  if (inner.neutral) band.op.neutral = a + w * *inner.neutral;
  band.op.discontinuity_note = inner.discontinuity_note;
  band.lo = a;
  band.hi = d;
  return band;
}

BinaryOperator band_ordinal_sum(const BandOperator& inner, OuterMode mode) {
  const double a = inner.lo;
  const double d = inner.hi;
  auto f = inner.op.eval;
  BinaryOperator op;
  if (mode == OuterMode::minmax) {
    op = make("osum-minmax[" + inner.op.name + "]", OperatorKind::uninorm,
              [f, a, d](double x, double y) {
                if (x > a && x < d && y > a && y < d) return f(x, y);
                if (std::max(x, y) >= d) return std::max(x, y);
                return std::min(x, y);
              });
  } else {
    op = make("osum-prod[" + inner.op.name + "]", OperatorKind::uninorm,
              [f, a, d](double x, double y) {
                const bool xt = x >= d;
                const bool yt = y >= d;
                if (xt && yt) return x + y - x * y;
                if (xt) return x;
                if (yt) return y;
                const bool xb = x <= a;
                const bool yb = y <= a;
                if (xb && yb) return x * y;
                if (xb) return x;
                if (yb) return y;
                return f(x, y);
              });
  }
  op.neutral = inner.op.neutral;
  op.disjunctive = true;
  op.discontinuity_note = inner.op.discontinuity_note;
  return op;
}

namespace {

// Band index of v with respect to ]f^(n+1)(e), f^(n)(e)], found by walking
// v back into ]x,e] where x = f(e). Returns the index and the walked value.
Band locate_band(const MonotoneMap& f, double e, double x, double v) {
  int n = 0;
  for (int step = 0; step < kMaxBandSteps; ++step) {
    if (std::abs(v - e) <= kValueSnap) return {n, e};
    if (std::abs(v - x) <= kValueSnap) return {n + 1, e};
    if (v < x) {
      v = f.inverse(v);
      ++n;
    } else if (v > e) {
      v = f(v);
      --n;
    } else {
      return {n, v};
    }
  }
  throw EvaluationError("band search did not terminate at " + num(v), v);
}

// Iterates to a fixed point; one ulp short of 0 or 1 is still the end.
double fixed_limit(const std::function<double(double)>& step, double v) {
  for (int i = 0; i < kMaxBandSteps; ++i) {
    const double next = step(v);
    if (next == v) break;
    v = next;
  }
  if (v < 1e-13) return 0.0;
  if (v > 1.0 - 1e-13) return 1.0;
  return v;
}

}  // namespace

void validate_fband(const FBandSpec& spec, double tol) {
  const double e = spec.e;
  const double x = spec.x;
  if (!(x > 0.0 && x < e && e < 1.0)) {
    throw InvalidSpec("FBandSpec needs 0 < x < e < 1");
  }
  if (std::abs(spec.f(e) - x) > tol) {
    throw InvalidSpec("FBandSpec: x must equal f(e)");
  }
  if (std::abs(spec.f(0.0)) > tol || std::abs(spec.f(1.0) - 1.0) > tol) {
    throw InvalidSpec("FBandSpec: f must fix 0 and 1");
  }
  const int k = std::max(2, spec.samples);
  std::vector<double> pts(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) pts[static_cast<std::size_t>(i)] = x + (e - x) * i / k;

  auto fail = [](const std::string& what, std::initializer_list<double> at) {
    std::string where;
    for (double v : at) where += (where.empty() ? "" : ",") + num(v);
    throw InvalidSpec("FBandSpec: " + what + " at (" + where + ")");
  };

  for (double s : pts) {
    if (std::abs(spec.F(s, e) - s) > tol) fail("F(s,e) != s", {s});
    if (std::abs(spec.F(s, x) - spec.f(s)) > tol) fail("F(s,x) != f(s)", {s});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double v = spec.F(pts[i], pts[j]);
      if (std::abs(v - spec.F(pts[j], pts[i])) > tol) {
        fail("F not commutative", {pts[i], pts[j]});
      }
      if (j + 1 < pts.size() && spec.F(pts[i], pts[j + 1]) < v - tol) {
        fail("F decreasing", {pts[i], pts[j]});
      }
    }
  }

  // Associativity chain over ]x,e]: F(s,t) and F(t,u) fall in band 0 or 1.
  const MonotoneMap& f = spec.f;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    for (std::size_t j = 1; j < pts.size(); ++j) {
      for (std::size_t l = 1; l < pts.size(); ++l) {
        const double s = pts[i], t = pts[j], u = pts[l];
        const Band st = locate_band(f, e, x, spec.F(s, t));
        const Band tu = locate_band(f, e, x, spec.F(t, u));
        const double lhs = f.iterate(tu.n, spec.F(s, tu.base));
        const double rhs = f.iterate(st.n, spec.F(st.base, u));
        if (std::abs(lhs - rhs) > tol) fail("associativity chain fails", {s, t, u});
      }
    }
  }

  if (spec.check_all_bands) {
    const BandOperator U = propF_uninorm(spec);
    std::vector<double> spread;
    for (int n = -2; n <= 2; ++n) {
      for (std::size_t i = 1; i < pts.size(); i += 3) {
        spread.push_back(f.iterate(n, pts[i]));
      }
    }
    for (double s : spread) {
      for (double t : spread) {
        for (double u : spread) {
          const double lhs = U(s, U(t, u));
          const double rhs = U(U(s, t), u);
          if (std::abs(lhs - rhs) > tol) fail("band associativity fails", {s, t, u});
        }
      }
    }
  }
}

BandOperator propF_uninorm(const FBandSpec& spec) {
  validate_fband(spec);
  const MonotoneMap f = spec.f;
  const double e = spec.e;
  const double x = spec.x;
  auto F = spec.F;
  BandOperator band;
  band.lo = fixed_limit([&f](double v) { return f(v); }, x);
  band.hi = fixed_limit([&f](double v) { return f.inverse(v); }, x);
  band.op = make("propF", OperatorKind::uninorm,
                 [f, F, e, x](double s, double t) {
                   const Band bs = locate_band(f, e, x, s);
                   const Band bt = locate_band(f, e, x, t);
                   return f.iterate(bs.n + bt.n, F(bs.base, bt.base));
                 });
  band.op.neutral = e;
  return band;
}

MonotoneMap quadratic_band_map() {
  auto forward = [](double s) {
    if (s <= 0.25) return 4.0 * s * s;
    if (s < 0.75) return 0.25 + 2.0 * (s - 0.25) * (s - 0.25);
    return 0.75 + 4.0 * (s - 0.75) * (s - 0.75);
  };
  auto inverse = [](double v) {
    if (v <= 0.25) return 0.5 * std::sqrt(v);
    if (v < 0.75) return 0.25 + std::sqrt(0.5 * (v - 0.25));
    return 0.75 + 0.5 * std::sqrt(v - 0.75);
  };
  auto iterate = [](int n, double s) {
    const double p = std::exp2(n);
    if (s <= 0.25) return 0.25 * std::pow(4.0 * s, p);
    if (s < 0.75) return 0.25 + 0.5 * std::pow(2.0 * (s - 0.25), p);
    return 0.75 + 0.25 * std::pow(4.0 * (s - 0.75), p);
  };
  return MonotoneMap(forward, inverse, iterate);
}

BinaryOperator eqUf_uninorm(const MonotoneMap& f, const BandOperator& inner,
                            double a, double d, double e) {
  if (std::abs(f(a) - a) > 1e-12 || std::abs(f(d) - d) > 1e-12) {
    throw InvalidSpec("eqUf_uninorm: f must fix a and d");
  }
  if (!(a < e && e < d)) {
    throw InvalidSpec("eqUf_uninorm: need a < e < d");
  }
  const double fe = f(e);
  auto g = inner.op.eval;
  BinaryOperator op = make(
      "eqUf[" + inner.op.name + "]", OperatorKind::uninorm,
      [f, g, a, d, e, fe](double x, double y) {
        const bool xl = x <= a;
        const bool yl = y <= a;
        const bool xh = x >= d && x < 1.0;
        const bool yh = y >= d && y < 1.0;
        if (xl && yl) return 0.0;
        if (xh && yh) return 1.0;
        if ((xl && yh) || (xh && yl)) return d;
        if (std::max(x, y) == 1.0) return 1.0;
        const bool xo = xl || x >= d;
        const bool yo = yl || y >= d;
        if (xo) return f.iterate(locate_band(f, e, fe, y).n, x);
        if (yo) return f.iterate(locate_band(f, e, fe, x).n, y);
        return g(x, y);
      });
  op.neutral = e;
  op.disjunctive = true;
  op.discontinuity_note = inner.op.discontinuity_note;
  return op;
}

PowerSequence power_sequence(const BinaryOperator& u, double x, int k,
                             const Tolerances& tol) {
  if (!u.neutral) {
    throw InvalidArgument("power_sequence: '" + u.name +
                          "' has no neutral element");
  }
  if (k < 1) throw InvalidArgument("power_sequence: K must be positive");
  const double e = *u.neutral;
  if (x == e) throw InvalidArgument("power_sequence: x equals the neutral element");

  PowerSequence seq;
  seq.base = x;
  seq.neutral = e;
  seq.forward.push_back(x);
  for (int i = 1; i < k; ++i) seq.forward.push_back(u(x, seq.forward.back()));

  auto cut = u.eval;
  const double y = inf_reach([&cut, x](double t) { return cut(x, t); }, e);
  if (std::abs(u(x, y) - e) > tol.eq_tol) {
    throw NoInverseError("cut of '" + u.name + "' at " + num(x) +
                         " does not attain the neutral element");
  }
  seq.backward.push_back(y);
  for (int i = 1; i < k; ++i) seq.backward.push_back(u(y, seq.backward.back()));

  const double lo = x < e ? seq.forward.back() : seq.backward.back();
  const double hi = x < e ? seq.backward.back() : seq.forward.back();
  seq.a_x = lo;
  seq.d_x = hi;
  auto settled = [](const std::vector<double>& v) {
    return v.size() >= 2 && std::abs(v.back() - v[v.size() - 2]) < 1e-15;
  };
  seq.converged = settled(seq.forward) && settled(seq.backward);
  return seq;
}

double AxiomReport::worst() const {
  return std::max({commutativity.worst_residual, associativity.worst_residual,
                   monotonicity.worst_residual, neutral.worst_residual});
}

std::vector<std::array<double, 3>> sample_triples(const TripleSampling& s) {
  std::vector<std::array<double, 3>> out;
  const Grid g = uniform_grid(s.grid_n);
  const auto p = g.points();
  out.reserve(p.size() * p.size() * p.size() +
              static_cast<std::size_t>(std::max(0, s.random_triples)));
  for (double x : p) {
    for (double y : p) {
      for (double z : p) out.push_back({x, y, z});
    }
  }
  std::mt19937_64 rng(s.seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < s.random_triples; ++i) {
    const double a = unit();
    const double b = unit();
    const double c = unit();
    out.push_back({a, b, c});
  }
  return out;
}

AxiomReport check_uninorm_axioms(const BinaryOperator& u, const Grid& grid,
                                 const Tolerances& tol,
                                 const TripleSampling& triples) {
  AxiomReport rep;
  const auto p = grid.points();

  for (double x : p) {
    for (double y : p) {
      record(rep.commutativity, residual(u(x, y), u(y, x)), {x, y});
    }
  }
  for (double x : p) {
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      const double y0 = p[j];
      const double y1 = p[j + 1];
      record(rep.monotonicity, std::max(0.0, u(x, y0) - u(x, y1)), {x, y0, y1});
      record(rep.monotonicity, std::max(0.0, u(y0, x) - u(y1, x)), {y0, y1, x});
    }
  }
  for (const auto& t : sample_triples(triples)) {
    const double lhs = u(t[0], u(t[1], t[2]));
    const double rhs = u(u(t[0], t[1]), t[2]);
    record(rep.associativity, residual(lhs, rhs), {t[0], t[1], t[2]});
  }
  if (u.neutral) {
    const double e = *u.neutral;
    for (double x : p) {
      record(rep.neutral, residual(u(x, e), x), {x});
      record(rep.neutral, residual(u(e, x), x), {x});
    }
  } else {
    rep.neutral.worst_residual = std::numeric_limits<double>::infinity();
  }

  const double corner = u(1.0, 0.0);
  if (std::abs(corner - 1.0) <= tol.exact_tol) {
    rep.classification = "disjunctive";
  } else if (std::abs(corner) <= tol.exact_tol) {
    rep.classification = "conjunctive";
  } else {
    rep.classification = "neither";
  }
  if (u.disjunctive) {
    rep.classification_matches_claim =
        rep.classification == (*u.disjunctive ? "disjunctive" : "conjunctive");
  }

  for (AxiomResult* r : {&rep.commutativity, &rep.associativity,
                         &rep.monotonicity, &rep.neutral}) {
    r->holds = r->worst_residual <= tol.eq_tol;
  }
  return rep;
}

std::pair<UnderlyingOperator, UnderlyingOperator> underlying_ops(
    const BinaryOperator& u, const Grid& grid, const Tolerances& tol) {
  if (!u.neutral || !(*u.neutral > 0.0 && *u.neutral < 1.0)) {
    throw InvalidArgument("underlying_ops: '" + u.name +
                          "' needs a neutral element in ]0,1[");
  }
  const double e = *u.neutral;
  auto f = u.eval;
  UnderlyingOperator t;
  t.op = make("T[" + u.name + "]", OperatorKind::t_norm,
              [f, e](double x, double y) {
                return std::clamp(f(e * x, e * y) / e, 0.0, 1.0);
              });
  UnderlyingOperator s;
  s.op = make("S[" + u.name + "]", OperatorKind::t_conorm,
              [f, e](double x, double y) {
                const double v = (f(e + (1.0 - e) * x, e + (1.0 - e) * y) - e) /
                                 (1.0 - e);
                return std::clamp(v, 0.0, 1.0);
              });

  for (UnderlyingOperator* part : {&t, &s}) {
    ContinuityVerdict all;
    for (double x : grid.points()) {
      UnitFunction line;
      auto g = part->op.eval;
      line.eval = [g, x](double y) { return g(x, y); };
      line.name = part->op.name + "(" + num(x) + ",.)";
      line.direction = Monotonicity::increasing;
      ContinuityVerdict v = monotone_continuity_probe(line, grid, tol);
      all.witnesses.insert(all.witnesses.end(), v.witnesses.begin(),
                           v.witnesses.end());
      all.endpoint_low = v.endpoint_low;
      all.endpoint_high = v.endpoint_high;
    }
    all.continuous = all.witnesses.empty();
    part->continuity = std::move(all);
  }
  return {std::move(t), std::move(s)};
}

}  // namespace unrep
