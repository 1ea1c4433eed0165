#pragma once

#include <vector>

#include "riesz/filter.hpp"
#include "riesz/stencil.hpp"

namespace riesz {

struct PositivityReport {
  bool dominant;
  double margin;
};

struct EigenBoundReport {
  double max_abs_eig;
  double bound;
  bool within_bound;
};

/// G(x) = g_0 + 2 sum g_m cos(m x).
double filter_response(const Filter& filter, double x);

/// F(x) = |sinc(x/2)|^alpha G(x); returns exactly 1 at x = 0.
double relative_response(const Filter& filter, double x);

/// r(x) = log2[(1 - F(x)) / (1 - F(x/2))]. Below x ~ 0.5 the residuals are
/// evaluated through the truncated Maclaurin product in double-double
/// arithmetic; naive subtraction would be pure cancellation noise there.
double spectral_rate(const Filter& filter, double x);

/// 1 - F(x) by the cancellation-safe series path (exposed for diagnostics).
double one_minus_response(const Filter& filter, double x);

/// Gershgorin dominance of the filter taps.
PositivityReport positivity_check(const Filter& filter);

/// Spectral radius of the operator matrix by power iteration against the
/// (pi N_x)^alpha bound.
EigenBoundReport eigen_bound_estimate(const Stencil& stencil);

}  // namespace riesz
