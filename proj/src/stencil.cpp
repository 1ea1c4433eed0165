#include "riesz/stencil.hpp"

#include <cmath>
#include <utility>

#include "riesz/errors.hpp"
#include "riesz/special.hpp"

namespace riesz {

GridSpec::GridSpec(int node_count_) : node_count(node_count_) {
  if (node_count < 3) throw validation_error("GridSpec: need N_x >= 3");
}

RawKernel raw_kernel(double alpha, const GridSpec& grid, int length) {
  if (!(alpha > 0.0) || alpha > 2.0)
    throw validation_error("raw_kernel: alpha must lie in (0, 2]");
  if (length < 1) throw validation_error("raw_kernel: length must be >= 1");
  const double h = grid.spacing();
  double k0 = std::pow(h, -alpha) * gamma_fn(alpha + 1.0) /
              std::pow(gamma_fn(alpha / 2.0 + 1.0), 2.0);
  if (!std::isfinite(k0))
    throw instability_error("raw_kernel: h^{-alpha} overflow");
  RawKernel out{{}, alpha, grid};
  out.values.resize(length + 1);
  out.values[0] = k0;
  for (int n = 1; n <= length; ++n)
    out.values[n] =
        -((alpha / 2.0 - n + 1.0) / (alpha / 2.0 + n)) * out.values[n - 1];
  return out;
}

namespace {

// filtered_k_n = sum_{m=-N_h}^{N_h} g_{|m|} raw_{|n-m|}
double convolve_at(const std::vector<double>& g,
                   const std::vector<double>& raw, int n) {
  const int nh = static_cast<int>(g.size()) - 1;
  double acc = g[0] * raw[n];
  for (int m = 1; m <= nh; ++m)
    acc += g[m] * (raw[std::abs(n - m)] + raw[n + m]);
  return acc;
}

// h-free kernel (the h = 1 values); the recurrence factors do not involve h
std::vector<double> unit_raw(double alpha, int length) {
  std::vector<double> k(length + 1);
  k[0] = gamma_fn(alpha + 1.0) / std::pow(gamma_fn(alpha / 2.0 + 1.0), 2.0);
  for (int n = 1; n <= length; ++n)
    k[n] = -((alpha / 2.0 - n + 1.0) / (alpha / 2.0 + n)) * k[n - 1];
  return k;
}

double h_scale(double alpha, const GridSpec& grid) {
  double s = std::pow(grid.spacing(), -alpha);
  if (!std::isfinite(s))
    throw instability_error("build_stencil: h^{-alpha} overflow");
  return s;
}

std::vector<double> unit_filtered_values(const Filter& filter, int nx) {
  const int nh = filter.spec.half_width();
  auto raw = unit_raw(filter.spec.alpha, nx + nh - 2);
  std::vector<double> out(nx - 1);
  for (int n = 0; n <= nx - 2; ++n) out[n] = convolve_at(filter.g, raw, n);
  return out;
}

std::vector<double> scaled(const std::vector<double>& unit, double s) {
  std::vector<double> out(unit.size());
  for (size_t n = 0; n < unit.size(); ++n) out[n] = unit[n] * s;
  return out;
}

}  // namespace

Stencil build_stencil(const Filter& filter, const GridSpec& grid) {
  const int nx = grid.node_count;
  Stencil out{{}, filter.spec.alpha, filter.spec.order_N, grid};
  out.values =
      scaled(unit_filtered_values(filter, nx), h_scale(filter.spec.alpha, grid));
  return out;
}

std::pair<Stencil, ResumeState> build_stencil_resumable(const Filter& filter,
                                                        const GridSpec& grid) {
  const int nh = filter.spec.half_width();
  const int nx = grid.node_count;
  auto raw = unit_raw(filter.spec.alpha, nx + nh - 2);
  std::vector<double> unit(nx - 1);
  for (int n = 0; n <= nx - 2; ++n) unit[n] = convolve_at(filter.g, raw, n);
  Stencil st{scaled(unit, h_scale(filter.spec.alpha, grid)), filter.spec.alpha,
             filter.spec.order_N, grid};
  const int tail_len =
      std::min<int>(std::max(2 * nh, 1), static_cast<int>(raw.size()));
  ResumeState state{{raw.end() - tail_len, raw.end()},
                    std::move(unit),
                    st.values,
                    filter,
                    grid};
  return {std::move(st), std::move(state)};
}

std::pair<Stencil, ResumeState> extend_stencil(const ResumeState& state,
                                               const GridSpec& new_grid) {
  const int nh = state.filter.spec.half_width();
  const double alpha = state.filter.spec.alpha;
  const int old_nx = state.grid.node_count;
  const int new_nx = new_grid.node_count;
  if (new_nx < old_nx)
    throw validation_error("extend_stencil: grid can only grow");
  if (static_cast<int>(state.unit_filtered.size()) != old_nx - 1 ||
      static_cast<int>(state.filtered.size()) != old_nx - 1)
    throw validation_error("extend_stencil: state/filter mismatch");
  if (new_nx == old_nx) {
    Stencil st{state.filtered, alpha, state.filter.spec.order_N, new_grid};
    return {std::move(st), state};
  }

  const int old_top = old_nx + nh - 2;  // last raw index held by the tail
  const int new_top = new_nx + nh - 2;
  const int tail_len = static_cast<int>(state.raw_tail.size());
  const int base = old_top - tail_len + 1;  // raw index of tail[0]

  std::vector<double> raw(new_top - base + 1);
  for (int t = 0; t < tail_len; ++t) raw[t] = state.raw_tail[t];
  for (int n = old_top + 1; n <= new_top; ++n)
    raw[n - base] =
        -((alpha / 2.0 - n + 1.0) / (alpha / 2.0 + n)) * raw[n - 1 - base];

  std::vector<double> unit(new_nx - 1);
  for (int n = 0; n <= old_nx - 2; ++n) unit[n] = state.unit_filtered[n];
  const auto& g = state.filter.g;
  for (int n = old_nx - 1; n <= new_nx - 2; ++n) {
    double acc = g[0] * raw[n - base];
    for (int m = 1; m <= nh; ++m)
      acc += g[m] * (raw[n - m - base] + raw[n + m - base]);
    unit[n] = acc;
  }

  Stencil st{scaled(unit, h_scale(alpha, new_grid)), alpha,
             state.filter.spec.order_N, new_grid};
  const int new_tail_len =
      std::min<int>(std::max(2 * nh, 1), static_cast<int>(raw.size()));
  ResumeState next{{raw.end() - new_tail_len, raw.end()},
                   std::move(unit),
                   st.values,
                   state.filter,
                   new_grid};
  return {std::move(st), std::move(next)};
}

std::vector<double> apply_operator(const Stencil& stencil,
                                   const std::vector<double>& samples,
                                   double f0, double f1) {
  const int nx = stencil.grid.node_count;
  if (static_cast<int>(samples.size()) != nx)
    throw validation_error("apply_operator: samples length must equal N_x");
  if (samples.front() != f0 || samples.back() != f1)
    throw validation_error("apply_operator: boundary samples disagree");
  const auto& k = stencil.values;
  std::vector<double> out(nx - 2);
  for (int n = 1; n <= nx - 2; ++n) {
    double acc = 0.0;
    for (int m = 1; m <= nx - 2; ++m) acc += k[std::abs(n - m)] * samples[m];
    acc += k[n] * f0 + k[nx - 1 - n] * f1;
    // sign anchored by the alpha=2, N=2 case: the operator must return f''
    out[n - 1] = -acc;
  }
  return out;
}

}  // namespace riesz
