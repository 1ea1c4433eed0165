#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace riesz {

/// Dyadic grid family N_i = 2^i (N_min - 1) + 1; every level keeps the coarse
/// interior nodes x_j = j/(N_min - 1) at index j 2^i.
struct RefinementSchedule {
  int n_min = 11;
  int i_max = 5;

  int nodes_at(int level) const { return (1 << level) * (n_min - 1) + 1; }
};

struct ErrorTable {
  double alpha;
  std::vector<int> orders;
  RefinementSchedule schedule;
  // E[{i, N}] = summed absolute error at the common interior nodes.
  std::map<std::pair<int, int>, double> E;

  double rate(int level, int order) const;  // log2(E_i / E_{i+1})
};

ErrorTable run_poly_experiment(int q, double alpha,
                               const std::vector<int>& orders,
                               const RefinementSchedule& schedule);

ErrorTable run_cosine_experiment(int f_cycles, double alpha,
                                 const std::vector<int>& orders,
                                 const RefinementSchedule& schedule);

/// Shared pipeline for a custom reference/sample pair (exposed for tests).
ErrorTable run_experiment(const std::function<double(double)>& exact,
                          const std::function<double(double)>& sample,
                          double alpha, const std::vector<int>& orders,
                          const RefinementSchedule& schedule);

/// CSV with header `i,N,E,R`, floats at 17 significant digits, empty R on
/// the last level.
void write_error_table(const ErrorTable& table, std::ostream& out);

/// Writes response_<N>.csv and rate_<N>.csv per order into out_dir.
void emit_spectrum(double alpha, const std::vector<int>& orders, int points,
                   const std::string& out_dir);

}  // namespace riesz
