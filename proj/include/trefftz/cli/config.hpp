#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trefftz/geometry.hpp"
#include "trefftz/precond.hpp"
#include "trefftz/problems.hpp"
#include "trefftz/solver.hpp"

namespace trefftz::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using KeyValues = std::map<std::string, std::string>;

/// Flat `key = value` lines; `#` starts a comment, blank lines are ignored.
KeyValues parse_key_values(std::istream& in, const std::string& source = "<config>");
KeyValues load_config_file(const std::string& path);

/// Keys recognised in config files and as --flags.
const std::vector<std::string>& known_keys();

/// Real number with optional fraction and π factor: "0.5", "1/32",
/// "0.2pi", "2*pi", "pi/4".
double parse_real(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

struct LabConfig {
  std::string command;

  std::string geometry = "triangle";
  std::vector<double> kappas{0.2 * 3.141592653589793};
  double h = 0.1;
  int p_min = 4;
  int p_max = 15;
  std::vector<int> p_list;  ///< overrides the p range when non-empty
  std::string center = "default";

  std::string matrix = "all";  ///< M, S, D or all (spectrum)
  std::vector<int> polygon_sides;  ///< L-gon sweep (toeplitz-distance)

  std::vector<PrecondKind> preconds{PrecondKind::None};
  std::vector<Side> sides{Side::Left};
  Method method = Method::Gmres;
  int restart = 5;
  std::vector<double> tols{1e-6};
  int maxit = 0;
  std::vector<double> deltas{kDefaultDelta};

  std::string problem = "plane";  ///< plane, point or combo
  double incident = 0.0;
  Vec2 source{2.0, -4.0};
  double amplitude = 1.0;
  std::optional<std::pair<double, double>> fan;

  std::string out;   ///< CSV path; empty writes to stdout
  std::string plot;  ///< optional SVG path

  /// Resolved key/value view used for hashing and echoing.
  KeyValues resolved;
};

/// Build a validated config; unknown keys and bad values raise ConfigError.
LabConfig resolve_config(const std::string& command, const KeyValues& kv);

/// FNV-1a 64 over the canonical `key=value` lines of the resolved config.
std::uint64_t config_hash(const LabConfig& cfg);
std::string config_hash_hex(const LabConfig& cfg);

/// disk, triangle, square, regular:L, cyclic-quad, general-quad, skinny,
/// polygon:x,y;x,y;..., cyclic:θ0,θ1,...  (h is ignored for general-quad
/// and skinny, which have fixed coordinates).
ElementGeometry make_geometry(const std::string& spec, double h, const std::string& center = "default");

ExactSolution make_solution(const LabConfig& cfg, double kappa);

/// The p values to sweep.
std::vector<int> p_values(const LabConfig& cfg);

}  // namespace trefftz::cli
