#pragma once

#include <ostream>

#include "trefftz/cli/config.hpp"
#include "trefftz/cli/csv.hpp"
#include "trefftz/cli/svg.hpp"

namespace trefftz::cli {

enum ExitCode { kExitOk = 0, kExitConfig = 2, kExitAllFailed = 3 };

struct CommandResult {
  CsvTable table;
  PlotSpec plot;
  std::size_t cells = 0;   ///< computed cells (rows)
  std::size_t failed = 0;  ///< cells that raised an error
};

CommandResult cmd_spectrum(const LabConfig& cfg);
CommandResult cmd_condition(const LabConfig& cfg);
CommandResult cmd_toeplitz_distance(const LabConfig& cfg);
CommandResult cmd_solve(const LabConfig& cfg);

CommandResult run_command(const LabConfig& cfg);

/// Runs the command, writes the CSV (to cfg.out, or `out` when empty) and
/// the optional SVG, and returns the process exit code. Problems writing the
/// plot are reported on `err` but never change the exit code.
int execute(const LabConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace trefftz::cli
