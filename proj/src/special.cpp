#include "riesz/special.hpp"

#include <cmath>
#include <numbers>

#include "riesz/errors.hpp"

namespace riesz {

DftPlan::DftPlan(int L) : length(L) {
  if (L < 1 || L % 2 == 0)
    throw validation_error("DftPlan length must be odd and >= 1");
}

namespace {

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_positive(double x) {
  // valid for x > 0.5; callers shift below that
  double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  double t = z + 7.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
         std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw validation_error("gamma requires x > 0");
  if (x < 0.5) return gamma_positive(x + 1.0) / x;
  return gamma_positive(x);
}

double inv_gamma(double x) {
  if (x > 0.0) return 1.0 / gamma_fn(x);
  // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi, entire in x
  double n = std::nearbyint(x);
  if (x == n) return 0.0;
  // sin(pi x) via the distance to the nearest integer keeps accuracy for
  // large negative x
  double s = std::sin(std::numbers::pi * (x - n));
  if (static_cast<long long>(n) % 2 != 0) s = -s;
  return gamma_fn(1.0 - x) * s / std::numbers::pi;
}

double hyp1f2_regularized(double a, double b1, double b2, double z,
                          int max_terms) {
  KahanSum sum;
  double term = inv_gamma(b1) * inv_gamma(b2);
  double prev_mag = HUGE_VAL;
  bool past_peak = false;
  for (int k = 0; k < max_terms; ++k) {
    sum.add(term);
    double mag = std::fabs(term);
    if (mag < prev_mag) past_peak = true;
    if (past_peak && mag < 1e-17 * std::fabs(sum.total()) + 1e-300)
      return sum.total();
    prev_mag = mag;
    term *= (a + k) * z / ((b1 + k) * (b2 + k) * (k + 1));
  }
  if (z == 0.0) return sum.total();
  throw convergence_error("hyp1f2_regularized: series did not converge");
}

std::vector<std::complex<double>> dft_odd(const std::vector<double>& coeffs,
                                          const DftPlan& plan) {
  const int L = plan.length;
  if (static_cast<int>(coeffs.size()) > L)
    throw validation_error("dft_odd: input longer than plan length");
  std::vector<std::complex<double>> out(L);
  for (int m = 0; m < L; ++m) {
    std::complex<double> acc = 0.0;
    for (int n = 0; n < static_cast<int>(coeffs.size()); ++n) {
      double w = -2.0 * std::numbers::pi * m * n / L;
      acc += coeffs[n] * std::complex<double>(std::cos(w), std::sin(w));
    }
    out[m] = acc;
  }
  return out;
}

std::vector<double> idft_odd(const std::vector<std::complex<double>>& spectrum,
                             const DftPlan& plan) {
  const int L = plan.length;
  if (static_cast<int>(spectrum.size()) != L)
    throw validation_error("idft_odd: spectrum length must equal plan length");
  std::vector<double> out(L);
  double max_mag = 0.0, max_imag = 0.0;
  for (int n = 0; n < L; ++n) {
    std::complex<double> acc = 0.0;
    for (int m = 0; m < L; ++m) {
      double w = 2.0 * std::numbers::pi * m * n / L;
      acc += spectrum[m] * std::complex<double>(std::cos(w), std::sin(w));
    }
    acc /= static_cast<double>(L);
    out[n] = acc.real();
    max_mag = std::max(max_mag, std::abs(acc));
    max_imag = std::max(max_imag, std::fabs(acc.imag()));
  }
  if (max_imag > 1e-12 * max_mag)
    throw instability_error("idft_odd: imaginary residue exceeds threshold");
  return out;
}

}  // namespace riesz
