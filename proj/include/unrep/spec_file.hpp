#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unrep/negations.hpp"
#include "unrep/operators.hpp"

namespace unrep {

/// What one spec file builds: a binary operator or a negation.
struct LoadedSpec {
  std::string section;  // "operator" or "negation"
  std::string name;
  std::variant<BinaryOperator, Negation> value;

  bool is_operator() const { return value.index() == 0; }
  const BinaryOperator& op() const;
  const Negation& neg() const;
};

/// Parses the INI-style spec format:
///
///   # comment
///   [operator]
///   name = U
///   builder = representable
///   generator = logit
///   e = 0.25
///
/// Operator references (keys inner, outer, base, negation) are either
/// `catalog:<instance>/<name>` or a path to another spec file, resolved
/// against `base_dir`. Throws ParseError with the offending line.
LoadedSpec parse_spec(std::string_view text,
                      const std::filesystem::path& base_dir = ".");
LoadedSpec load_spec_file(const std::filesystem::path& path);

/// `catalog:<instance>/<name>` or a spec file path.
LoadedSpec resolve_reference(const std::string& ref,
                             const std::filesystem::path& base_dir = ".");

/// Reads an `x,y,value` CSV sampled on a rectangular grid. The operator
/// returns stored values at the sample points and interpolates bilinearly
/// elsewhere.
BinaryOperator read_sampled_operator(const std::filesystem::path& path);

/// Writes `x,y,value` rows, x major, on {i/n}.
void write_sampled_operator(std::ostream& out, const BinaryOperator& op, int n);
void write_sampled_negation(std::ostream& out, const Negation& neg, int n);

/// 17 significant digits.
std::string render(double v);

}  // namespace unrep
