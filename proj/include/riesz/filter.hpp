#pragma once

#include <vector>

namespace riesz {

/// Order parameters for the prefilter: alpha in (0,2], even N >= 2,
/// half-width N_h = N/2 - 1.
struct FilterSpec {
  double alpha;
  int order_N;

  FilterSpec(double alpha_, int order_N_);
  int half_width() const { return order_N / 2 - 1; }
};

/// Maclaurin coefficients of sinc(x/2): coeffs[n] multiplies x^{2n}.
struct SincSeries {
  std::vector<double> coeffs;
};

/// Maclaurin coefficients of sinc(x/2)^alpha, same x^{2n} convention.
struct PowerSeries {
  std::vector<double> coeffs;
};

/// Inverse of the even symmetric integer Vandermonde system, in the scaled
/// form produced by the specialized recurrence. entries[n][m] maps the
/// (scaled) series coefficient b_n to filter tap g_m.
struct ScaledVandermondeInverse {
  int half_width;
  std::vector<std::vector<double>> entries;
};

/// Cosine-series prefilter: G(x) = g[0] + 2 sum_{m>=1} g[m] cos(m x).
struct Filter {
  std::vector<double> g;
  FilterSpec spec;
};

/// sinc(x/2) coefficients up to x^{2 N_h} via the stable ratio recurrence.
SincSeries sinc_maclaurin(const FilterSpec& spec);

/// Same series with an explicit term count (used by the spectral module,
/// which needs the expansion well past N_h).
SincSeries sinc_maclaurin_terms(int count);

/// Coefficients of sinc(x/2)^alpha recovered through the odd DFT:
/// transform, principal-branch fractional power, inverse transform.
PowerSeries fractional_power_series_dft(const SincSeries& series, double alpha);

/// Independent oracle for the same coefficients via the standard power-series
/// recurrence for p(z)^alpha with p(0) = 1.
PowerSeries fractional_power_series_miller(const SincSeries& series,
                                           double alpha);

/// Specialized O(N_h^3) inverse exploiting the even symmetry of the integer
/// node set {-N_h..N_h}; rows carry a documented per-row scaling, compensated
/// in build_filter by the factor (-1)^n (2n-1)!!.
ScaledVandermondeInverse vandermonde_inverse_specialized(int half_width);

/// Generic Vandermonde inverse by the Bjorck-Pereyra style recurrence.
/// Test oracle; requires distinct nodes.
std::vector<std::vector<double>> vandermonde_inverse_bjorck(
    const std::vector<double>& nodes);

/// Production path: DFT fractional power + specialized Vandermonde inverse.
/// Cross-checked against build_filter_direct; raises instability_error if the
/// two paths diverge beyond 1e-6.
Filter build_filter(const FilterSpec& spec);

/// Oracle path: dense partially pivoted solve of the cosine cancellation
/// system with Miller-recurrence coefficients.
Filter build_filter_direct(const FilterSpec& spec);

}  // namespace riesz
