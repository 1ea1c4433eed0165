#pragma once

#include <complex>
#include <vector>

namespace riesz {

/// Fixed odd transform length for the small direct DFT pair below.
struct DftPlan {
  int length;
  explicit DftPlan(int L);
};

/// Gamma function for x > 0. Lanczos approximation, relative error ~1e-14
/// on the range used here. Throws validation_error for x <= 0.
double gamma_fn(double x);

/// 1/Gamma(x) for any real x; uses the reflection formula for x <= 0 where
/// Gamma itself has poles (the reciprocal is entire).
double inv_gamma(double x);

/// Kahan compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double total() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Regularized 1F2(a; b1, b2; z) = sum_k (a)_k z^k / (Gamma(b1+k) Gamma(b2+k) k!).
/// Forward term recurrence with compensated summation; terminates when the
/// running term drops below eps * |partial sum| past the term-magnitude peak.
double hyp1f2_regularized(double a, double b1, double b2, double z,
                          int max_terms = 500);

/// X_m = sum_n c_n e^{-i omega_m n}, omega_m = 2 pi m / L. Input is
/// zero-padded to the plan length; direct O(L^2) summation.
std::vector<std::complex<double>> dft_odd(const std::vector<double>& coeffs,
                                          const DftPlan& plan);

/// b_n = (1/L) sum_m X_m e^{+i omega_m n}. The imaginary residue of every
/// output must stay below 1e-12 times the peak magnitude; a larger residue
/// means the spectrum lost its conjugate symmetry and raises instability_error.
std::vector<double> idft_odd(const std::vector<std::complex<double>>& spectrum,
                             const DftPlan& plan);

}  // namespace riesz
