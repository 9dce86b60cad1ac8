#pragma once

#include "packcover/oracles.hpp"
#include "packcover/setcover.hpp"
#include "packcover/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace packcover {

/// What a solver run is asked to do; mirrors the CLI flags.
struct RunConfig {
  std::string command;  // game | pack | cover | int-pack | int-cover | setcover
  double eps = 0.1;
  std::optional<std::uint64_t> s;  // fixed iteration count for pack/cover
  double cap_multiplier = 10.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  std::uint64_t seed = 0;
  std::string input_path;
  std::string output_path;  // empty -> stdout
};

enum class InstanceKind { ExplicitMatrix, Sets, Flow };

struct ParsedInput {
  InstanceKind kind;
  ExplicitInstance matrix;
  SetSystem sets;
  FlowInstance flow;
};

/// Parse an instance file. Set-system files start with a single integer n,
/// matrix files with "m n", flow files with keyword lines (source/sink/arc).
ParsedInput parse_instance_text(const std::string& text);
ParsedInput parse_instance_file(const std::string& path);

std::string emit_instance(const ParsedInput& input);

/// Execute the configured command, writing the structured result document to
/// `out`. Returns 0 on success, a stable nonzero error code otherwise (the
/// diagnostic goes to `err`).
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Format a double with 12 significant digits, the document convention.
std::string format_number(double x);

}  // namespace packcover
