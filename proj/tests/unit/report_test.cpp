#include <sstream>

#include "doctest.h"
#include "opdyn/generators.hpp"
#include "opdyn/report.hpp"

using namespace opdyn;

TEST_SUITE("report") {

TEST_CASE("header lines come first") {
  std::ostringstream out;
  write_header(out, {{"command", "sweep"}, {"seed", "7"}});
  CHECK(out.str() == "# command=sweep\n# seed=7\n");
  CHECK(format_real(0.1) == "0.100000");
  CHECK(format_real(2.0 / 3.0) == "0.666667");
}

TEST_CASE("phase csv") {
  PhaseReport report;
  PhaseRow row;
  row.parameter = 0.55;
  row.mean_black_fraction = 1.0;
  row.mean_stabilization_time = 3.5;
  row.trials = 8;
  row.label_counts[static_cast<std::size_t>(OutcomeLabel::BlackTakesOver)] = 8;
  row.label_counts[static_cast<std::size_t>(OutcomeLabel::BlackWins)] = 8;
  report.rows.push_back(row);
  std::ostringstream out;
  write_phase_csv(out, {{"seed", "1"}}, report);
  CHECK(out.str() ==
        "# seed=1\n"
        "p_b,mean_black_frac,mean_stab_time,n_trials,n_timeouts,labels\n"
        "0.550000,1.000000,3.500000,8,0,BLACK_TAKES_OVER:8 BLACK_WINS:8\n");
}

TEST_CASE("elite csv") {
  std::ostringstream out;
  write_elite_csv(out, {}, {{16, 0.004, WinCriterion::Wins}, {1, 5.0 / 9.0, WinCriterion::TakesOver}});
  CHECK(out.str() == "r,min_fraction,criterion\n16,0.004000,WINS\n1,0.555556,TAKES_OVER\n");
}

TEST_CASE("trajectory csv") {
  RunOptions options;
  options.record_bichromatic = true;
  const auto result = run(gen_cycle(4), Coloring::from_string("bbbw"), ModelConfig::majority(), options);
  std::ostringstream out;
  write_trajectory_csv(out, {}, result);
  CHECK(out.str() == "round,black_count,bichromatic_count\n0,3,2\n1,4,0\n2,4,0\n");
}

}
