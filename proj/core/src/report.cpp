#include "opdyn/report.hpp"

#include <cstdio>
#include <ostream>

namespace opdyn {

void write_header(std::ostream& out, const CsvHeader& header) {
  for (const auto& [key, value] : header) out << "# " << key << '=' << value << '\n';
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

void write_phase_csv(std::ostream& out, const CsvHeader& header, const PhaseReport& report) {
  write_header(out, header);
  out << report.parameter_name << ",mean_black_frac,mean_stab_time,n_trials,n_timeouts,labels\n";
  for (const PhaseRow& row : report.rows) {
    out << format_real(row.parameter) << ',' << format_real(row.mean_black_fraction) << ','
        << format_real(row.mean_stabilization_time) << ',' << row.trials << ',' << row.timeouts << ',';
    bool first = true;
    for (std::size_t l = 0; l < kOutcomeLabelCount; ++l) {
      if (row.label_counts[l] == 0) continue;
      if (!first) out << ' ';
      out << to_string(static_cast<OutcomeLabel>(l)) << ':' << row.label_counts[l];
      first = false;
    }
    out << '\n';
  }
}

void write_elite_csv(std::ostream& out, const CsvHeader& header, const std::vector<EliteRow>& rows) {
  write_header(out, header);
  out << "r,min_fraction,criterion\n";
  for (const EliteRow& row : rows) {
    out << row.r << ',' << format_real(row.min_fraction) << ',' << to_string(row.criterion) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const CsvHeader& header, const RunResult& result) {
  write_header(out, header);
  out << "round,black_count,bichromatic_count\n";
  for (std::size_t t = 0; t < result.black_count_per_round.size(); ++t) {
    out << t << ',' << result.black_count_per_round[t] << ',';
    if (t < result.bichromatic_per_round.size()) out << result.bichromatic_per_round[t];
    out << '\n';
  }
}

}  // namespace opdyn
