#pragma once

#include <vector>

#include "riesz/filter.hpp"

namespace riesz {

/// Uniform grid on [0,1] with N_x nodes inclusive, h = 1/(N_x - 1).
struct GridSpec {
  int node_count;

  explicit GridSpec(int node_count_);
  double spacing() const { return 1.0 / (node_count - 1); }
};

/// One-sided raw central Grunwald-Letnikov kernel,
/// k_n = ((-1)^n / h^alpha) binom(alpha, alpha/2 + n) for n = 0..M.
struct RawKernel {
  std::vector<double> values;
  double alpha;
  GridSpec grid;
};

/// Filtered one-sided stencil k_0..k_{N_x-2}.
struct Stencil {
  std::vector<double> values;
  double alpha;
  int order_N;
  GridSpec grid;
};

/// Everything needed to grow a stencil to a finer grid without recomputing
/// it: the raw-kernel tail feeding both the resumed recurrence and the
/// mirrored convolution, plus the already-final filtered values. The tail
/// and the cached filtered values are kept in h-free form (the h = 1
/// kernel); only the output carries the h^{-alpha} scale. That makes an
/// extension reproduce a fresh build bit for bit, however many steps it
/// took to get there.
struct ResumeState {
  std::vector<double> raw_tail;       // last 2 N_h unit raw values (or all)
  std::vector<double> unit_filtered;  // filtered values before h scaling
  std::vector<double> filtered;       // scaled values, same as Stencil::values
  Filter filter;
  GridSpec grid;
};

RawKernel raw_kernel(double alpha, const GridSpec& grid, int length);

Stencil build_stencil(const Filter& filter, const GridSpec& grid);

/// build_stencil that also captures the resumption state.
std::pair<Stencil, ResumeState> build_stencil_resumable(const Filter& filter,
                                                        const GridSpec& grid);

/// Scale the saved tail by (h_old/h_new)^alpha, resume the recurrence, and
/// convolve only the new indices. Equivalent to a fresh build at new_grid.
std::pair<Stencil, ResumeState> extend_stencil(const ResumeState& state,
                                               const GridSpec& new_grid);

/// Apply the operator at the interior nodes n = 1..N_x-2. samples must have
/// length N_x with samples.front() == f0 and samples.back() == f1.
std::vector<double> apply_operator(const Stencil& stencil,
                                   const std::vector<double>& samples,
                                   double f0, double f1);

}  // namespace riesz
