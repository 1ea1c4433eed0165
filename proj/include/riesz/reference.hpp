#pragma once

#include <functional>

namespace riesz {

/// u(x) = x^q (1-x)^q on [0,1], zero outside.
struct PolynomialCase {
  int q;
  double alpha;

  PolynomialCase(int q_, double alpha_);
};

/// u(x) = cos(2 pi f x) with compact support on [0,1].
struct CosineCase {
  int f_cycles;
  double alpha;

  CosineCase(int f_cycles_, double alpha_);
};

/// C_alpha = -1 / (2 cos(pi alpha / 2)); singular at alpha = 1.
double riesz_constant(double alpha);

/// Closed-form Riesz derivative of the polynomial case at x in (0,1).
double poly_riesz_exact(const PolynomialCase& c, double x);

/// Closed-form Riesz derivative of the truncated cosine at x in (0,1).
double cosine_riesz_exact(const CosineCase& c, double x);

/// Left Riemann-Liouville derivative of cos(lambda x) at x > 0, alpha in
/// (0,2). Power-series branch for lambda x < 17, asymptotic Mittag-Leffler
/// branch beyond it.
double rl_cos_left(double alpha, double lambda, double x);

/// A commonly quoted three-term regularized-1F2 closed form for the same
/// left RL derivative. Kept for cross-checks only: it differs from the
/// series branch by an exact global factor of pi (see README).
double rl_cos_left_closed_form(double alpha, int f_cycles, double x);

/// Quadrature oracle for the left RL derivative of a C^2 function, via two
/// integrations by parts:
///   u(0) x^{-alpha}/Gamma(1-alpha) + u'(0) x^{1-alpha}/Gamma(2-alpha)
///   + (1/Gamma(2-alpha)) int_0^x (x-xi)^{1-alpha} u''(xi) dxi.
/// Composite Gauss-Legendre with geometric refinement into the weakly
/// singular endpoint; absolute tolerance ~1e-9. Test-only.
double rl_quadrature_oracle(const std::function<double(double)>& u,
                            const std::function<double(double)>& du,
                            const std::function<double(double)>& d2u,
                            double alpha, double x);

}  // namespace riesz
