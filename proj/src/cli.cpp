#include "unrep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unrep/catalog.hpp"
#include "unrep/errors.hpp"
#include "unrep/spec_file.hpp"

namespace unrep {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Common {
  int grid = 400;
  int triple_grid = 32;
  int random_triples = 10000;
  double tol = 1e-9;
  double exact_tol = 1e-12;
  double jump_floor = 1e-6;
  std::string seed = "0x554E494E";
  std::string out;

  Tolerances tolerances() const {
    Tolerances t;
    t.eq_tol = tol;
    t.exact_tol = exact_tol;
    t.jump_floor = jump_floor;
    t.validate();
    return t;
  }

  std::uint64_t seed_value() const {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(seed, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != seed.size()) throw InvalidArgument("bad --seed '" + seed + "'");
    return v;
  }

  TripleSampling triples() const {
    TripleSampling s;
    s.grid_n = triple_grid;
    s.random_triples = random_triples;
    s.seed = seed_value();
    return s;
  }

  Grid make_grid() const {
    if (grid < 2) throw InvalidArgument("--grid must be at least 2");
    return uniform_grid(grid);
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--grid", c.grid, "Uniform grid size n (points i/n)")
      ->capture_default_str();
  cmd->add_option("--tol", c.tol, "Equality tolerance")->capture_default_str();
  cmd->add_option("--exact-tol", c.exact_tol, "Tolerance for exact identities")
      ->capture_default_str();
  cmd->add_option("--jump-floor", c.jump_floor, "Smallest jump read as a discontinuity")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed of the random triples")
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write the JSON report here instead of stdout");
}

Json vec(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json envelope(const std::string& command, Json inputs, const Common& c) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["grid"] = c.grid;
  j["tolerances"] = {{"eq_tol", c.tol},
                     {"exact_tol", c.exact_tol},
                     {"jump_floor", c.jump_floor},
                     {"refine_rounds", Tolerances{}.refine_rounds}};
  j["seed"] = c.seed_value();
  return j;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + p.string());
  return f;
}

Json to_json(const ContinuityVerdict& v) {
  Json jumps = Json::array();
  for (const auto& w : v.witnesses) {
    jumps.push_back({{"location", w.location}, {"jump", w.jump}});
  }
  return {{"continuous", v.continuous}, {"jumps", jumps}};
}

Json to_json(const CutReport& r) {
  Json j;
  j["alpha"] = r.alpha;
  j["role"] = to_string(r.role);
  j["monotone"] = r.monotone_ok;
  j["continuous"] = r.continuity.continuous;
  j["f0"] = r.endpoint_low;
  j["f1"] = r.endpoint_high;
  j["valid"] = r.valid;
  j["jumps"] = to_json(r.continuity)["jumps"];
  return j;
}

Json to_json(const AxiomResult& a) {
  return {{"holds", a.holds}, {"residual", a.worst_residual}, {"witness", vec(a.witness)}};
}

Json to_json(const PropertyReport& p) {
  return {{"property", to_string(p.property)},
          {"holds", p.holds},
          {"residual", p.worst_residual},
          {"witness", vec(p.witness)}};
}

std::vector<double> parse_list(const std::string& text, char sep) {
  std::vector<double> v;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size() || item.empty()) {
      throw InvalidArgument("not a number: '" + item + "'");
    }
    v.push_back(x);
  }
  return v;
}

// "x,y;x,y"
std::vector<std::pair<double, double>> parse_exclusions(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::istringstream in(text);
  std::string pair;
  while (std::getline(in, pair, ';')) {
    const auto v = parse_list(pair, ',');
    if (v.size() != 2) throw InvalidArgument("exclusion '" + pair + "' is not x,y");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

// ---- verify-catalog ----

struct VerifyArgs {
  Common c;
  std::vector<std::string> only;
  std::string csv;
};

int cmd_verify_catalog(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = a.only.empty() ? catalog_names() : a.only;
  for (const auto& n : names) {
    const auto& all = catalog_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) {
      throw NotFound("unknown catalog instance '" + n + "'");
    }
  }
  const Grid grid = a.c.make_grid();
  const Tolerances tol = a.c.tolerances();

  Json inputs;
  inputs["instances"] = names;
  Json j = envelope("verify-catalog", inputs, a.c);
  Json results = Json::array();
  bool pass = true;
  std::ostringstream csv;
  csv << "instance,kind,description,pass,residual,tolerance,detail\n";
  for (const auto& n : names) {
    const InstanceReport rep = verify_instance(n, grid, tol);
    Json rels = Json::array();
    for (const auto& r : rep.relations) {
      rels.push_back({{"kind", to_string(r.kind)},
                      {"description", r.description},
                      {"pass", r.pass},
                      {"residual", r.residual},
                      {"tolerance", r.tolerance},
                      {"detail", r.detail}});
      csv << n << ',' << to_string(r.kind) << ',' << csv_field(r.description)
          << ',' << (r.pass ? "true" : "false") << ',' << render(r.residual)
          << ',' << render(r.tolerance) << ',' << csv_field(r.detail) << '\n';
      if (!r.pass) err << n << ": FAIL " << r.description << " (" << r.detail << ")\n";
    }
    results.push_back({{"name", n},
                       {"pass", rep.pass},
                       {"max_residual", rep.max_residual},
                       {"relations", rels}});
    pass = pass && rep.pass;
  }
  j["result"] = {{"instances", results}};
  j["pass"] = pass;
  emit(j, a.c.out, out);
  if (!a.csv.empty()) open_out(a.csv) << csv.str();
  return pass ? kExitPass : kExitNegative;
}

// ---- axioms ----

struct SpecArgs {
  Common c;
  std::string spec;
  std::string role;
  std::string alphas;
  std::string csv;
};

int cmd_axioms(const SpecArgs& a, std::ostream& out, std::ostream& err) {
  const LoadedSpec s = load_spec_file(a.spec);
  const Grid grid = a.c.make_grid();
  const Tolerances tol = a.c.tolerances();
  Json j = envelope("axioms", {{"spec", a.spec}, {"name", s.name}}, a.c);
  Json r;
  bool pass = true;
  if (!s.is_operator()) {
    const NegationClass nc = classify_negation(s.neg(), grid, tol);
    r["role"] = "negation";
    r["is_negation"] = nc.is_negation;
    r["continuous"] = nc.is_continuous;
    r["strict"] = nc.is_strict;
    r["strong"] = nc.is_strong;
    r["involution_residual"] = nc.worst_residual;
    r["continuity"] = to_json(nc.continuity);
    pass = nc.is_negation;
  } else if (a.role == "implication" ||
             (a.role.empty() && s.op().kind == OperatorKind::implication)) {
    r["role"] = "implication";
    Json props = Json::array();
    auto reports = check_implication_axioms(s.op(), grid, tol);
    reports.push_back(check_property(s.op(), Property::EP, grid, tol,
                                     std::nullopt, a.c.triples()));
    for (const auto& p : reports) {
      props.push_back(to_json(p));
      if (!p.holds) {
        err << "FAIL " << to_string(p.property) << " residual "
            << render(p.worst_residual) << " at " << vec(p.witness).dump() << "\n";
      }
      pass = pass && p.holds;
    }
    r["properties"] = props;
  } else {
    const AxiomReport rep =
        check_uninorm_axioms(s.op(), grid, tol, a.c.triples());
    r["role"] = "uninorm";
    r["claimed_neutral"] = s.op().neutral ? Json(*s.op().neutral) : Json();
    r["commutativity"] = to_json(rep.commutativity);
    r["associativity"] = to_json(rep.associativity);
    r["monotonicity"] = to_json(rep.monotonicity);
    r["neutral"] = to_json(rep.neutral);
    r["classification"] = rep.classification;
    r["classification_matches_claim"] = rep.classification_matches_claim;
    pass = rep.pass();
    const std::pair<const char*, const AxiomResult*> named[] = {
        {"commutativity", &rep.commutativity},
        {"associativity", &rep.associativity},
        {"monotonicity", &rep.monotonicity},
        {"neutral", &rep.neutral}};
    for (const auto& [name, res] : named) {
      if (!res->holds) {
        err << "FAIL " << name << " residual " << render(res->worst_residual)
            << " at " << vec(res->witness).dump() << "\n";
      }
    }
  }
  j["result"] = r;
  j["pass"] = pass;
  emit(j, a.c.out, out);
  return pass ? kExitPass : kExitNegative;
}

// ---- cuts ----

int cmd_cuts(const SpecArgs& a, std::ostream& out, std::ostream&) {
  const LoadedSpec s = load_spec_file(a.spec);
  const BinaryOperator& op = s.op();
  CutRole role = op.kind == OperatorKind::implication ? CutRole::implication_cut
                                                      : CutRole::uninorm_cut;
  if (!a.role.empty()) role = cut_role_from_string(a.role);
  const std::vector<double> alphas =
      a.alphas.empty() ? default_alphas(op.neutral) : parse_list(a.alphas, ',');
  const Grid grid = a.c.make_grid();
  const auto reports = scan_cuts(op, role, alphas, grid, a.c.tolerances());

  std::ostringstream csv;
  csv << "alpha,monotone,continuous,f0,f1,valid\n";
  Json rows = Json::array();
  int valid = 0;
  for (const auto& r : reports) {
    csv << render(r.alpha) << ',' << (r.monotone_ok ? "true" : "false") << ','
        << (r.continuity.continuous ? "true" : "false") << ','
        << render(r.endpoint_low) << ',' << render(r.endpoint_high) << ','
        << (r.valid ? "true" : "false") << '\n';
    rows.push_back(to_json(r));
    valid += r.valid ? 1 : 0;
  }
  csv << "# valid " << valid << " of " << reports.size() << '\n';

  Json j = envelope("cuts", {{"spec", a.spec}, {"name", s.name}, {"role", to_string(role)}},
                    a.c);
  j["result"] = {{"valid_count", valid},
                 {"total", reports.size()},
                 {"valid_alphas", [&] {
                    Json v = Json::array();
                    for (const auto& r : reports)
                      if (r.valid) v.push_back(r.alpha);
                    return v;
                  }()},
                 {"cuts", rows}};
  j["pass"] = valid > 0;
  emit(j, a.c.out, out);
  if (!a.csv.empty()) open_out(a.csv) << csv.str();
  return valid > 0 ? kExitPass : kExitNegative;
}

// ---- extract ----

struct ExtractArgs {
  Common c;
  std::string spec;
  std::string catalog;
  double alpha = 0.5;
  std::string dir;
  int sample_n = 40;
};

int cmd_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err) {
  if (a.spec.empty() == a.catalog.empty()) {
    throw InvalidArgument("give either a spec file or --catalog NAME");
  }
  BinaryOperator imp;
  Json inputs;
  if (!a.catalog.empty()) {
    imp = catalog_instance(a.catalog).op("I");
    inputs["catalog"] = a.catalog;
  } else {
    imp = load_spec_file(a.spec).op();
    inputs["spec"] = a.spec;
  }
  inputs["alpha"] = a.alpha;
  const Grid grid = a.c.make_grid();
  const Tolerances tol = a.c.tolerances();
  Json j = envelope("extract", inputs, a.c);

  ExtractOptions opts;
  opts.triples = a.c.triples();
  RepresentationRecord rec;
  try {
    rec = extract_representation(imp, a.alpha, grid, tol, opts);
  } catch (const PreconditionViolation& e) {
    err << "cut at alpha=" << render(a.alpha) << " is not a continuous negation: "
        << e.what() << "\n";
    j["result"] = {{"error", e.what()},
                   {"cut", to_json(cut_report(imp, CutRole::implication_cut,
                                              a.alpha, grid, tol))}};
    j["pass"] = false;
    emit(j, a.c.out, out);
    return kExitNegative;
  }

  const bool pass = rec.reconstruction_residual <= tol.eq_tol;
  j["result"] = {{"alpha", rec.alpha},
                 {"n_star", rec.n_star.name},
                 {"u_star", rec.u_star.name},
                 {"u_star_neutral", rec.u_star.neutral ? Json(*rec.u_star.neutral) : Json()},
                 {"reconstruction_residual", rec.reconstruction_residual},
                 {"u_star_axiom_residual", rec.u_star_axiom_residual},
                 {"cut", to_json(rec.cut)}};
  j["pass"] = pass;
  if (!a.dir.empty()) {
    fs::create_directories(a.dir);
    auto ns = open_out(fs::path(a.dir) / "n_star.csv");
    write_sampled_negation(ns, rec.n_star, a.sample_n);
    auto us = open_out(fs::path(a.dir) / "u_star.csv");
    write_sampled_operator(us, rec.u_star, a.sample_n);
    open_out(fs::path(a.dir) / "record.json") << j.dump(2) << "\n";
  }
  emit(j, a.c.out, out);
  return pass ? kExitPass : kExitNegative;
}

// ---- equal ----

struct EqualArgs {
  Common c;
  std::string a;
  std::string b;
  std::string exclude;
};

int cmd_equal(const EqualArgs& a, std::ostream& out, std::ostream&) {
  const BinaryOperator x = resolve_reference(a.a).op();
  const BinaryOperator y = resolve_reference(a.b).op();
  const auto excl = a.exclude.empty() ? std::vector<std::pair<double, double>>{}
                                      : parse_exclusions(a.exclude);
  const EqualityRecord rec =
      operators_equal(x, y, a.c.make_grid(), a.c.tolerances(), excl);
  Json ex = Json::array();
  for (const auto& [p, q] : excl) ex.push_back(Json::array({p, q}));
  Json j = envelope("equal", {{"a", a.a}, {"b", a.b}, {"exclusions", ex}}, a.c);
  j["result"] = {{"equal", rec.equal},
                 {"residual", rec.residual},
                 {"witness", vec(rec.witness)},
                 {"compared", rec.compared}};
  j["pass"] = rec.equal;
  emit(j, a.c.out, out);
  return rec.equal ? kExitPass : kExitNegative;
}

// ---- sample ----

int cmd_sample(const SpecArgs& a, std::ostream& out, std::ostream&) {
  const LoadedSpec s = resolve_reference(a.spec);
  if (a.c.grid < 2) throw InvalidArgument("--grid must be at least 2");
  std::ostringstream csv;
  if (s.is_operator()) {
    write_sampled_operator(csv, s.op(), a.c.grid);
  } else {
    write_sampled_negation(csv, s.neg(), a.c.grid);
  }
  if (a.c.out.empty()) {
    out << csv.str();
  } else {
    open_out(a.c.out) << csv.str();
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Uninorms, negations and (U,N)-implications: checks and representations",
               "unrep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-catalog", "Verify the bundled examples");
  add_common(verify, va.c);
  verify->add_option("--only", va.only, "Instance name (repeatable)");
  verify->add_option("--csv", va.csv, "Per-relation CSV output");

  SpecArgs ax;
  auto* axioms = app.add_subcommand("axioms", "Check uninorm, implication or negation axioms");
  add_common(axioms, ax.c);
  axioms->add_option("spec", ax.spec, "Operator or negation spec file")->required();
  axioms->add_option("--role", ax.role, "uninorm or implication (default from kind)")
      ->check(CLI::IsMember({"uninorm", "implication"}));
  axioms->add_option("--triple-grid", ax.c.triple_grid, "Grid size for triples")
      ->capture_default_str();

  SpecArgs cu;
  auto* cuts = app.add_subcommand("cuts", "Scan horizontal cuts");
  add_common(cuts, cu.c);
  cuts->add_option("spec", cu.spec, "Operator spec file")->required();
  cuts->add_option("--role", cu.role, "uninorm-cut or implication-cut")
      ->check(CLI::IsMember({"uninorm-cut", "implication-cut"}));
  cuts->add_option("--alphas", cu.alphas, "Comma separated alpha list");
  cuts->add_option("--csv", cu.csv, "CSV output path");

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Extract the representation at a cut");
  add_common(extract, ex.c);
  extract->remove_option(extract->get_option("--out"));
  extract->add_option("spec", ex.spec, "Implication spec file");
  extract->add_option("--catalog", ex.catalog, "Use the implication of a catalog instance");
  extract->add_option("--alpha", ex.alpha, "Cut position")->required();
  extract->add_option("--out", ex.dir, "Directory for n_star.csv, u_star.csv, record.json");
  extract->add_option("--sample-n", ex.sample_n, "Grid size of the written samples")
      ->capture_default_str();

  EqualArgs eq;
  auto* equal = app.add_subcommand("equal", "Compare two operators on the grid");
  add_common(equal, eq.c);
  equal->add_option("a", eq.a, "Spec file or catalog:<instance>/<name>")->required();
  equal->add_option("b", eq.b, "Spec file or catalog:<instance>/<name>")->required();
  equal->add_option("--exclude", eq.exclude, "Points left out, as x,y;x,y");

  SpecArgs sa;
  auto* sample = app.add_subcommand("sample", "Write x,y,value samples of an operator");
  add_common(sample, sa.c);
  sample->get_option("--out")->description("Write the CSV here instead of stdout");
  sample->add_option("spec", sa.spec, "Spec file or catalog:<instance>/<name>")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify_catalog(va, out, err);
    if (*axioms) return cmd_axioms(ax, out, err);
    if (*cuts) return cmd_cuts(cu, out, err);
    if (*extract) return cmd_extract(ex, out, err);
    if (*equal) return cmd_equal(eq, out, err);
    if (*sample) return cmd_sample(sa, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    err << "invalid spec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}

}  // namespace unrep
