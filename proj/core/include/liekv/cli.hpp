#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liekv/theorems.hpp"

namespace liekv {

struct Summary {
  std::size_t certified = 0;
  std::size_t refuted = 0;
  std::size_t undecided = 0;
  std::size_t skipped = 0;
  std::size_t counterexamples = 0;
};

struct Report {
  std::string command;
  std::string version;
  std::string input;
  std::string input_digest;
  /// Every flag with its effective value.
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  /// Command-specific results.
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Finding> findings;
  Summary summary;
  /// A theorem conclusion or a constant-length / GO claim was refuted.
  bool refutation = false;
  /// One line per refutation, printed to the error stream.
  std::vector<std::string> witnesses;
};

struct CommandOptions {
  SamplingParams sampling;
  /// Comma-separated rationals or a basis name; empty means all candidate fields.
  std::string field;
  bool go = false;
  /// "all" or comma-separated statement ids.
  std::string statements = "all";
  std::size_t inner_samples = 24;
};

std::string tool_version();
/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Parses "c1,...,cn" or a basis name into a vector of g.
Vector parse_field(const LieAlgebra& a, const std::string& text);

/// The commands take the raw document bytes so the digest covers exactly
/// what was read.
Report cmd_inspect(const std::string& input_name, const std::string& bytes, const CommandOptions& opts);
Report cmd_spectrum(const std::string& input_name, const std::string& bytes, const CommandOptions& opts);
Report cmd_check(const std::string& input_name, const std::string& bytes, const CommandOptions& opts);
Report cmd_verify(const std::string& input_name, const std::string& bytes, const CommandOptions& opts);

nlohmann::ordered_json finding_json(const Finding& f);
nlohmann::ordered_json report_json(const Report& r);
std::string render_json(const Report& r);
std::string render_markdown(const Report& r);

/// Full command line. Returns the exit code: 0 clean, 1 refutation found,
/// 2 usage, input or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liekv
