#include "unrep/spec_file.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "unrep/catalog.hpp"
#include "unrep/errors.hpp"
#include "unrep/uninorms.hpp"

namespace unrep {

namespace fs = std::filesystem;

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

struct Section {
  std::string kind;
  int line = 0;
  std::map<std::string, Entry> keys;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Section read_section(std::string_view text) {
  Section sec;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(std::string_view(raw).substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("unterminated section header", line);
      if (!sec.kind.empty()) throw ParseError("only one section per file", line);
      sec.kind = trim(std::string_view(s).substr(1, s.size() - 2));
      if (sec.kind != "operator" && sec.kind != "negation") {
        throw ParseError("unknown section [" + sec.kind + "]", line);
      }
      sec.line = line;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line);
    if (sec.kind.empty()) throw ParseError("key outside a section", line);
    const std::string key = trim(std::string_view(s).substr(0, eq));
    const std::string value = trim(std::string_view(s).substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line);
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line);
    if (!sec.keys.emplace(key, Entry{value, line}).second) {
      throw ParseError("duplicate key '" + key + "'", line);
    }
  }
  if (sec.kind.empty()) throw ParseError("no [operator] or [negation] section", 0);
  return sec;
}

struct BuilderKeys {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::map<std::string, BuilderKeys>& operator_builders() {
  static const std::map<std::string, BuilderKeys> table = {
      {"representable", {{"generator", "e"}, {"disjunctive"}}},
      {"minimum", {}},
      {"product", {}},
      {"lukasiewicz", {}},
      {"drastic-product", {}},
      {"maximum", {}},
      {"probabilistic-sum", {}},
      {"bounded-sum", {}},
      {"drastic-sum", {}},
      {"minmax", {{"e", "inner", "outer"}, {"cross"}}},
      {"drastic-band", {{"e"}, {}}},
      {"power-band", {}},
      {"conjugate-shift", {{"base", "w", "z"}, {}}},
      {"ordinal-sum", {{"inner", "a", "d", "outer"}, {}}},
      {"equf", {{"inner", "a", "d", "e"}, {}}},
      {"un-implication", {{"base", "negation"}, {}}},
      {"catalog", {{"base"}, {}}},
      {"sampled", {{"file"}, {}}},
  };
  return table;
}

const std::map<std::string, BuilderKeys>& negation_builders() {
  static const std::map<std::string, BuilderKeys> table = {
      {"standard", {}},
      {"sugeno", {{"lambda"}, {}}},
      {"step", {{"value"}, {}}},
      {"powerlog", {}},
      {"square-of", {{"base"}, {}}},
      {"from-cut", {{"base", "alpha"}, {}}},
      {"table", {{"knots"}, {}}},
      {"catalog", {{"base"}, {}}},
  };
  return table;
}

class Reader {
 public:
  Reader(Section sec, fs::path base_dir)
      : sec_(std::move(sec)), base_dir_(std::move(base_dir)) {}

  const Section& section() const { return sec_; }

  bool has(const std::string& key) const { return sec_.keys.count(key) > 0; }

  const Entry& entry(const std::string& key) const {
    auto it = sec_.keys.find(key);
    if (it == sec_.keys.end()) {
      throw ParseError("missing key '" + key + "'", sec_.line);
    }
    return it->second;
  }

  std::string text(const std::string& key) const { return entry(key).value; }

  double number(const std::string& key) const {
    const Entry& en = entry(key);
    return parse_number(en.value, en.line, key);
  }

  static double parse_number(const std::string& s, int line,
                             const std::string& key) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end || !std::isfinite(v)) {
      throw ParseError("'" + key + "' is not a number: " + s, line);
    }
    return v;
  }

  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const Entry& en = entry(key);
    if (en.value == "true" || en.value == "yes" || en.value == "1") return true;
    if (en.value == "false" || en.value == "no" || en.value == "0") return false;
    throw ParseError("'" + key + "' must be true or false", en.line);
  }

  LoadedSpec reference(const std::string& key) const {
    const Entry& en = entry(key);
    try {
      return resolve_reference(en.value, base_dir_);
    } catch (const ParseError& e) {
      throw ParseError("in '" + en.value + "': " + e.what(), en.line);
    } catch (const Error& e) {
      throw ParseError(e.what(), en.line);
    }
  }

  BinaryOperator operator_ref(const std::string& key) const {
    LoadedSpec s = reference(key);
    if (!s.is_operator()) {
      throw ParseError("'" + key + "' must name an operator", entry(key).line);
    }
    return s.op();
  }

  Negation negation_ref(const std::string& key) const {
    LoadedSpec s = reference(key);
    if (s.is_operator()) {
      throw ParseError("'" + key + "' must name a negation", entry(key).line);
    }
    return s.neg();
  }

  const fs::path& base_dir() const { return base_dir_; }

 private:
  Section sec_;
  fs::path base_dir_;
};

void check_keys(const Reader& r, const BuilderKeys& bk, bool is_operator) {
  std::set<std::string> allowed = {"name", "builder"};
  if (is_operator) {
    allowed.insert("kind");
    allowed.insert("neutral");
  }
  allowed.insert(bk.required.begin(), bk.required.end());
  allowed.insert(bk.optional.begin(), bk.optional.end());
  for (const auto& [key, en] : r.section().keys) {
    if (!allowed.count(key)) {
      throw ParseError("unknown key '" + key + "' for builder '" +
                           r.text("builder") + "'",
                       en.line);
    }
  }
  for (const auto& key : bk.required) r.entry(key);
}

BinaryOperator named_tnorm(const std::string& name) {
  if (name == "minimum") return minimum_tnorm();
  if (name == "product") return product_tnorm();
  if (name == "lukasiewicz") return lukasiewicz_tnorm();
  if (name == "drastic-product") return drastic_tnorm();
  if (name == "maximum") return maximum_tconorm();
  if (name == "probabilistic-sum") return probabilistic_sum();
  if (name == "bounded-sum") return bounded_sum();
  if (name == "drastic-sum") return drastic_tconorm();
  throw NotFound("no t-norm or t-conorm named '" + name + "'");
}

bool is_named_tnorm(const std::string& name) {
  static const std::set<std::string> names = {
      "minimum", "product",  "lukasiewicz",       "drastic-product",
      "maximum", "bounded-sum", "probabilistic-sum", "drastic-sum"};
  return names.count(name) > 0;
}

BinaryOperator operand(const Reader& r, const std::string& key) {
  const std::string v = r.text(key);
  if (is_named_tnorm(v)) return named_tnorm(v);
  return r.operator_ref(key);
}

std::pair<std::string, std::string> split_catalog(const std::string& ref) {
  const auto slash = ref.find('/');
  if (slash == std::string::npos) {
    throw InvalidArgument("catalog reference needs <instance>/<name>: " + ref);
  }
  return {ref.substr(0, slash), ref.substr(slash + 1)};
}

LoadedSpec from_catalog(const std::string& ref) {
  const auto [inst, name] = split_catalog(ref);
  const CatalogInstance c = catalog_instance(inst);
  LoadedSpec s;
  s.name = name;
  if (c.operators.count(name)) {
    s.section = "operator";
    s.value = c.op(name);
  } else {
    s.section = "negation";
    s.value = c.neg(name);
  }
  return s;
}

BinaryOperator build_operator(const Reader& r) {
  const std::string builder = r.text("builder");
  auto it = operator_builders().find(builder);
  if (it == operator_builders().end()) {
    throw ParseError("unknown operator builder '" + builder + "'",
                     r.entry("builder").line);
  }
  check_keys(r, it->second, true);

  if (is_named_tnorm(builder)) return named_tnorm(builder);
  if (builder == "representable") {
    if (r.text("generator") != "logit") {
      throw ParseError("unknown generator '" + r.text("generator") + "'",
                       r.entry("generator").line);
    }
    return representable_uninorm(logit_generator(r.number("e")),
                                 r.flag("disjunctive", true));
  }
  if (builder == "minmax") {
    CrossMode mode = CrossMode::max;
    if (r.has("cross")) {
      const std::string c = r.text("cross");
      if (c == "min") {
        mode = CrossMode::min;
      } else if (c != "max") {
        throw ParseError("cross must be min or max", r.entry("cross").line);
      }
    }
    return minmax_uninorm(operand(r, "inner"), operand(r, "outer"),
                          r.number("e"), mode);
  }
  if (builder == "drastic-band") return drastic_band_uninorm(r.number("e"));
  if (builder == "power-band") return power_band_uninorm();
  if (builder == "conjugate-shift") {
    return conjugate_shift(r.operator_ref("base"), r.number("w"), r.number("z"));
  }
  if (builder == "ordinal-sum") {
    const std::string outer = r.text("outer");
    OuterMode mode = OuterMode::minmax;
    if (outer == "prod-dualprod") {
      mode = OuterMode::prod_dualprod;
    } else if (outer != "minmax") {
      throw ParseError("outer must be minmax or prod-dualprod",
                       r.entry("outer").line);
    }
    return band_ordinal_sum(
        band_rescale(operand(r, "inner"), r.number("a"), r.number("d")), mode);
  }
  if (builder == "equf") {
    const double a = r.number("a");
    const double d = r.number("d");
    return eqUf_uninorm(quadratic_band_map(),
                        band_rescale(operand(r, "inner"), a, d), a, d,
                        r.number("e"));
  }
  if (builder == "un-implication") {
    return un_implication(r.operator_ref("base"), r.negation_ref("negation"));
  }
  if (builder == "catalog") {
    LoadedSpec s = from_catalog(r.text("base"));
    if (!s.is_operator()) {
      throw ParseError("'" + r.text("base") + "' is a negation",
                       r.entry("base").line);
    }
    return s.op();
  }
  // sampled
  fs::path file = r.text("file");
  if (file.is_relative()) file = r.base_dir() / file;
  return read_sampled_operator(file);
}

std::vector<std::pair<double, double>> parse_knots(const Entry& en) {
  std::vector<std::pair<double, double>> knots;
  std::istringstream in(en.value);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ParseError("knots are x:y pairs separated by commas", en.line);
    }
    knots.emplace_back(
        Reader::parse_number(trim(item.substr(0, colon)), en.line, "knots"),
        Reader::parse_number(trim(item.substr(colon + 1)), en.line, "knots"));
  }
  return knots;
}

Negation build_negation_from(const Reader& r) {
  const std::string builder = r.text("builder");
  auto it = negation_builders().find(builder);
  if (it == negation_builders().end()) {
    throw ParseError("unknown negation builder '" + builder + "'",
                     r.entry("builder").line);
  }
  check_keys(r, it->second, false);

  if (builder == "standard") return build_negation(negation_spec::Standard{});
  if (builder == "sugeno") {
    return build_negation(negation_spec::Sugeno{r.number("lambda")});
  }
  if (builder == "step") return build_negation(negation_spec::Step{r.number("value")});
  if (builder == "powerlog") return build_negation(negation_spec::PowerLog{});
  if (builder == "square-of") {
    return build_negation(negation_spec::SquareOf{r.negation_ref("base")});
  }
  if (builder == "from-cut") {
    return build_negation(
        negation_spec::FromCut{r.operator_ref("base"), r.number("alpha")});
  }
  if (builder == "table") {
    return build_negation(negation_spec::Table{parse_knots(r.entry("knots"))});
  }
  LoadedSpec s = from_catalog(r.text("base"));
  if (s.is_operator()) {
    throw ParseError("'" + r.text("base") + "' is an operator",
                     r.entry("base").line);
  }
  return s.neg();
}

}  // namespace

const BinaryOperator& LoadedSpec::op() const {
  if (!is_operator()) throw InvalidArgument("'" + name + "' is a negation");
  return std::get<BinaryOperator>(value);
}

const Negation& LoadedSpec::neg() const {
  if (is_operator()) throw InvalidArgument("'" + name + "' is an operator");
  return std::get<Negation>(value);
}

LoadedSpec parse_spec(std::string_view text, const fs::path& base_dir) {
  Reader r(read_section(text), base_dir);
  r.entry("builder");
  LoadedSpec out;
  out.section = r.section().kind;
  // Builder domain errors carry the line of the builder key.
  try {
    if (out.section == "operator") {
      BinaryOperator op = build_operator(r);
      if (r.has("kind")) {
        try {
          op.kind = operator_kind_from_string(r.text("kind"));
        } catch (const InvalidArgument& e) {
          throw ParseError(e.what(), r.entry("kind").line);
        }
      }
      if (r.has("neutral")) {
        if (r.text("neutral") == "none") {
          op.neutral.reset();
        } else {
          op.neutral = r.number("neutral");
        }
      }
      if (r.has("name")) op.name = r.text("name");
      out.name = op.name;
      out.value = std::move(op);
    } else {
      Negation n = build_negation_from(r);
      if (r.has("name")) n.name = r.text("name");
      out.name = n.name;
      out.value = std::move(n);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), r.entry("builder").line);
  }
  return out;
}

LoadedSpec load_spec_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file " + path.string(), 0);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec(buf.str(), path.parent_path());
  } catch (const ParseError& e) {
    throw e.in(path.string());
  }
}

LoadedSpec resolve_reference(const std::string& ref, const fs::path& base_dir) {
  constexpr std::string_view prefix = "catalog:";
  if (ref.rfind(prefix, 0) == 0) return from_catalog(ref.substr(prefix.size()));
  fs::path p = ref;
  if (p.is_relative()) p = base_dir / p;
  return load_spec_file(p);
}

BinaryOperator read_sampled_operator(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sampled operator " + path.string(), 0);
  std::string raw;
  int line = 1;
  if (!std::getline(in, raw) || trim(raw) != "x,y,value") {
    throw ParseError("expected header x,y,value", line);
  }
  std::map<std::pair<double, double>, double> table;
  std::set<double> xs_set, ys_set;
  while (std::getline(in, raw)) {
    ++line;
    if (trim(raw).empty()) continue;
    std::array<double, 3> v{};
    std::istringstream row(raw);
    std::string cell;
    int k = 0;
    while (std::getline(row, cell, ',')) {
      if (k >= 3) throw ParseError("too many columns", line);
      v[static_cast<std::size_t>(k)] =
          Reader::parse_number(trim(cell), line, k == 2 ? "value" : "coordinate");
      ++k;
    }
    if (k != 3) throw ParseError("expected three columns", line);
    if (!table.emplace(std::make_pair(v[0], v[1]), v[2]).second) {
      throw ParseError("duplicate sample point", line);
    }
    xs_set.insert(v[0]);
    ys_set.insert(v[1]);
  }
  std::vector<double> xs(xs_set.begin(), xs_set.end());
  std::vector<double> ys(ys_set.begin(), ys_set.end());
  if (table.size() != xs.size() * ys.size() || xs.size() < 2 || ys.size() < 2) {
    throw ParseError("samples must cover a rectangular grid", 0);
  }
  if (xs.front() != 0.0 || xs.back() != 1.0 || ys.front() != 0.0 ||
      ys.back() != 1.0) {
    throw ParseError("sample grid must span [0,1] in both coordinates", 0);
  }

  BinaryOperator op;
  op.name = "sampled(" + path.filename().string() + ")";
  op.eval = [table = std::move(table), xs, ys](double x, double y) {
    auto hit = table.find({x, y});
    if (hit != table.end()) return hit->second;
    auto cell = [](const std::vector<double>& axis, double v) {
      auto it = std::upper_bound(axis.begin(), axis.end(), v);
      std::size_t i = it == axis.begin() ? 0 : static_cast<std::size_t>(it - axis.begin()) - 1;
      i = std::min(i, axis.size() - 2);
      const double t = (v - axis[i]) / (axis[i + 1] - axis[i]);
      return std::make_pair(i, std::clamp(t, 0.0, 1.0));
    };
    const auto [i, tx] = cell(xs, x);
    const auto [j, ty] = cell(ys, y);
    const double v00 = table.at({xs[i], ys[j]});
    const double v01 = table.at({xs[i], ys[j + 1]});
    const double v10 = table.at({xs[i + 1], ys[j]});
    const double v11 = table.at({xs[i + 1], ys[j + 1]});
    return (1 - tx) * ((1 - ty) * v00 + ty * v01) +
           tx * ((1 - ty) * v10 + ty * v11);
  };
  return op;
}

std::string render(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sampled_operator(std::ostream& out, const BinaryOperator& op, int n) {
  const Grid g = uniform_grid(n);
  out << "x,y,value\n";
  for (double x : g.points()) {
    for (double y : g.points()) {
      out << render(x) << ',' << render(y) << ',' << render(op(x, y)) << '\n';
    }
  }
}

void write_sampled_negation(std::ostream& out, const Negation& neg, int n) {
  const Grid g = uniform_grid(n);
  out << "x,value\n";
  for (double x : g.points()) out << render(x) << ',' << render(neg(x)) << '\n';
}

}  // namespace unrep
