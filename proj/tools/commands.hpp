#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mace/capacity.hpp"

namespace mace::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // a report row failed, or an internal error
inline constexpr int kExitSpec = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitShape = 4;

extern const std::vector<std::string> kDefaultReportStates;

struct ReportRow {
    std::string state_name;
    CapacityBracket c_assisted;
    CapacityBracket c_unassisted;
    double ggm = 0.0;
    double gm = 0.0;
};

inline const std::vector<std::string> kReportRowFields{"state_name", "c_assisted", "c_unassisted", "ggm", "gm"};

nlohmann::json report_row_record(const ReportRow& row, const std::vector<std::string>& labels);

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mace::cli
