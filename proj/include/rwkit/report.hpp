#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"
#include "rwkit/ars.hpp"
#include "rwkit/critical_pairs.hpp"
#include "rwkit/parallel.hpp"
#include "rwkit/trs_io.hpp"

namespace rwkit {

/// Knobs shared by every subcommand. Fuel left unset picks the per-command
/// default: 1000 steps for normalize, 10000 expansions everywhere else.
struct analysis_config {
  std::optional<std::size_t> fuel;
  std::size_t max_term_size = default_max_term_nodes;
  bool assume_terminating = false;
  std::string output_format = "text";  // "text" or "json"
  bool dedupe_symmetric_cps = false;
};

inline constexpr std::size_t default_search_fuel = 10000;
inline constexpr std::size_t default_normalize_fuel = 1000;

/// One finished analysis: the machine report, its text rendering, and the
/// process exit code (0 definite, 2 unknown; errors surface as exceptions
/// and exit 1 in the driver).
struct command_output {
  int exit_code = 0;
  std::string text;
  nlohmann::json report;
};

command_output run_check(const trs& system, const std::string& input, const analysis_config& cfg);
command_output run_cps(const trs& system, const std::string& input, const analysis_config& cfg);
command_output run_orthogonal(const trs& system, const std::string& input,
                              const analysis_config& cfg);
command_output run_normalize(const trs& system, const std::string& input,
                             const std::string& term_text, bool allow_fresh_consts,
                             const analysis_config& cfg);
command_output run_joinable(const trs& system, const std::string& input,
                            const std::string& left_text, const std::string& right_text,
                            bool allow_fresh_consts, const analysis_config& cfg);
command_output run_parallel(const trs& system, const std::string& input,
                            const std::string& term_text, bool allow_fresh_consts,
                            const analysis_config& cfg);
command_output run_ars(const finite_ars& system, const std::string& input,
                       const analysis_config& cfg);

}  // namespace rwkit
