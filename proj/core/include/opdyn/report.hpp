#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "opdyn/analysis.hpp"
#include "opdyn/dynamics.hpp"

namespace opdyn {

// Ordered key=value pairs written as '#'-prefixed lines at the top of a CSV.
using CsvHeader = std::vector<std::pair<std::string, std::string>>;

void write_header(std::ostream& out, const CsvHeader& header);

// Fixed six-decimal formatting used by every writer.
std::string format_real(double value);

// p_b,mean_black_frac,mean_stab_time,n_trials,n_timeouts,labels
// where labels is a space-separated list of LABEL:count membership counts.
void write_phase_csv(std::ostream& out, const CsvHeader& header, const PhaseReport& report);

struct EliteRow {
  std::uint32_t r = 1;
  double min_fraction = 0.0;
  WinCriterion criterion = WinCriterion::Wins;
};

// r,min_fraction,criterion
void write_elite_csv(std::ostream& out, const CsvHeader& header, const std::vector<EliteRow>& rows);

// round,black_count,bichromatic_count; round 0 is the initial colouring.
void write_trajectory_csv(std::ostream& out, const CsvHeader& header, const RunResult& result);

}  // namespace opdyn
