#include "riesz/filter.hpp"

#include <quadmath.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/special.hpp"

namespace riesz {

FilterSpec::FilterSpec(double alpha_, int order_N_)
    : alpha(alpha_), order_N(order_N_) {
  if (!(alpha > 0.0) || alpha > 2.0)
    throw validation_error("FilterSpec: alpha must lie in (0, 2]");
  if (order_N < 2 || order_N % 2 != 0)
    throw validation_error("FilterSpec: order N must be even and >= 2");
}

SincSeries sinc_maclaurin_terms(int count) {
  SincSeries s;
  s.coeffs.resize(count);
  s.coeffs[0] = 1.0;
  for (int n = 1; n < count; ++n)
    s.coeffs[n] = -s.coeffs[n - 1] / (4.0 * (2 * n) * (2 * n + 1));
  return s;
}

SincSeries sinc_maclaurin(const FilterSpec& spec) {
  return sinc_maclaurin_terms(spec.half_width() + 1);
}

PowerSeries fractional_power_series_miller(const SincSeries& series,
                                           double alpha) {
  const int n = static_cast<int>(series.coeffs.size());
  PowerSeries p;
  p.coeffs.assign(n, 0.0);
  p.coeffs[0] = 1.0;
  for (int k = 1; k < n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j)
      s += ((alpha + 1.0) * j - k) * series.coeffs[j] * p.coeffs[k - j];
    p.coeffs[k] = s / k;
  }
  return p;
}

PowerSeries fractional_power_series_dft(const SincSeries& series,
                                        double alpha) {
  const int size = static_cast<int>(series.coeffs.size());
  // Aliasing folds coefficient n+L onto coefficient n. The power series of
  // the truncated sinc polynomial decays like 39.5^-n (nearest zero of
  // sinc(x/2) in the x^2 variable), so the +21 margin puts the folded tail
  // below quad epsilon even for the shortest inputs.
  DftPlan plan(4 * size + 21);
  const int L = plan.length;
  // The transform runs in quad precision: the highest coefficient sits ~11
  // digits below the O(1) spectrum scale, so double rounding in the round
  // trip would leave it with only ~5 correct digits against the oracle.
  using quad = __float128;
  const quad pi = acosq(-1.0);
  std::vector<quad> wc(L), ws(L);
  for (int r = 0; r < L; ++r) {
    quad w = 2.0 * pi * r / L;
    wc[r] = cosq(w);
    ws[r] = sinq(w);
  }
  std::vector<quad> sre(L), sim(L);
  for (int m = 0; m < L; ++m) {
    quad ar = 0.0, ai = 0.0;
    for (int n = 0; n < size; ++n) {
      const int r = (m * n) % L;
      ar += static_cast<quad>(series.coeffs[n]) * wc[r];
      ai -= static_cast<quad>(series.coeffs[n]) * ws[r];
    }
    // principal branch of X^alpha
    const quad mod = expq(0.5 * static_cast<quad>(alpha) *
                          logq(ar * ar + ai * ai));
    const quad th = static_cast<quad>(alpha) * atan2q(ai, ar);
    sre[m] = mod * cosq(th);
    sim[m] = mod * sinq(th);
  }
  PowerSeries p;
  p.coeffs.resize(size);
  quad max_mag = 0.0, max_imag = 0.0;
  for (int n = 0; n < L; ++n) {
    quad ar = 0.0, ai = 0.0;
    for (int m = 0; m < L; ++m) {
      const int r = (m * n) % L;
      ar += sre[m] * wc[r] - sim[m] * ws[r];
      ai += sre[m] * ws[r] + sim[m] * wc[r];
    }
    ar /= L;
    ai /= L;
    const quad mag = sqrtq(ar * ar + ai * ai);
    if (mag > max_mag) max_mag = mag;
    if (fabsq(ai) > max_imag) max_imag = fabsq(ai);
    if (n < size) p.coeffs[n] = static_cast<double>(ar);
  }
  if (max_imag > 1e-12 * max_mag)
    throw instability_error(
        "fractional_power_series_dft: imaginary residue exceeds threshold");
  return p;
}

ScaledVandermondeInverse vandermonde_inverse_specialized(int half_width) {
  if (half_width < 0)
    throw validation_error("vandermonde_inverse_specialized: N_h >= 0");
  const int n_sz = half_width + 1;
  ScaledVandermondeInverse out;
  out.half_width = half_width;
  auto& V = out.entries;
  V.assign(n_sz, std::vector<double>(n_sz, 0.0));
  V[0][0] = 1.0;
  for (int k = 1; k <= half_width; ++k) {
    const double denom = 2.0 * k * (2.0 * k - 1.0);
    for (int n = k; n >= 1; --n)
      V[n][k] = (2.0 * n * V[n - 1][k - 1] + (k - 1.0) * V[n][k - 1]) / denom;
    for (int n = 1; n < k; ++n)
      V[n][k] -= (k * (k - 1.0)) / denom * V[n][k - 1];
    for (int m = 0; m < k; ++m)
      V[k][m] = -(2.0 * k) / (static_cast<double>(k - m) * (k + m)) * V[k - 1][m];
    // descending n so V[n-1][m] still holds the step k-1 value
    for (int n = k - 1; n >= 1; --n)
      for (int m = 0; m < k; ++m)
        V[n][m] = (static_cast<double>(k) * k * V[n][m] - 2.0 * n * V[n - 1][m]) /
                  (static_cast<double>(k - m) * (k + m));
    for (const auto& row : V)
      for (double e : row)
        if (std::fabs(e) > 1e300)
          throw instability_error(
              "vandermonde_inverse_specialized: entry overflow");
  }
  return out;
}

std::vector<std::vector<double>> vandermonde_inverse_bjorck(
    const std::vector<double>& nodes) {
  const int N = static_cast<int>(nodes.size()) - 1;
  if (N < 0) throw validation_error("vandermonde_inverse_bjorck: empty nodes");
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (nodes[i] == nodes[j])
        throw validation_error("vandermonde_inverse_bjorck: duplicate nodes");
  std::vector<std::vector<double>> v(N + 1, std::vector<double>(N + 1, 0.0));
  v[0][0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    std::vector<std::vector<double>> cur(N + 1, std::vector<double>(N + 1, 0.0));
    double num = 1.0, den = 1.0;
    for (int n = 0; n <= k - 2; ++n) num *= nodes[k - 1] - nodes[n];
    for (int n = 0; n <= k - 1; ++n) den *= nodes[k] - nodes[n];
    const double r = num / den;
    cur[0][k] = -r * nodes[k - 1] * v[0][k - 1];
    for (int i = 1; i <= k; ++i)
      cur[i][k] = r * (v[i - 1][k - 1] - nodes[k - 1] * v[i][k - 1]);
    for (int j = 0; j < k; ++j) {
      cur[0][j] = nodes[k] / (nodes[k] - nodes[j]) * v[0][j];
      for (int i = 1; i <= k; ++i)
        cur[i][j] = (nodes[k] * v[i][j] - v[i - 1][j]) / (nodes[k] - nodes[j]);
    }
    v = std::move(cur);
  }
  return v;
}

namespace {

std::vector<double> solve_dense(std::vector<std::vector<double>> A,
                                std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    if (A[piv][col] == 0.0)
      throw instability_error("solve_dense: singular system");
    std::swap(A[col], A[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = col + 1; r < n; ++r) {
      double f = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return x;
}

void check_filter(const Filter& f) {
  double dc = f.g[0], off = 0.0;
  for (size_t m = 1; m < f.g.size(); ++m) {
    dc += 2.0 * f.g[m];
    off += 2.0 * std::fabs(f.g[m]);
  }
  if (std::fabs(dc - 1.0) > 1e-12)
    throw instability_error("filter: DC normalization violated");
  if (f.g[0] <= off)
    std::fprintf(stderr,
                 "warning: filter not diagonally dominant (alpha=%g N=%d)\n",
                 f.spec.alpha, f.spec.order_N);
}

}  // namespace

Filter build_filter_direct(const FilterSpec& spec) {
  const int nh = spec.half_width();
  auto a = sinc_maclaurin(spec);
  auto b = fractional_power_series_miller(a, -spec.alpha);
  std::vector<std::vector<double>> M(nh + 1, std::vector<double>(nh + 1, 0.0));
  double fact = 1.0;  // (2n)!
  for (int n = 0; n <= nh; ++n) {
    if (n > 0) fact *= (2.0 * n - 1.0) * (2.0 * n);
    M[n][0] = (n == 0) ? 1.0 : 0.0;
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (int m = 1; m <= nh; ++m)
      M[n][m] = 2.0 * sign * std::pow(static_cast<double>(m), 2.0 * n) / fact;
  }
  Filter f{solve_dense(std::move(M), b.coeffs), spec};
  check_filter(f);
  return f;
}

Filter build_filter(const FilterSpec& spec) {
  const int nh = spec.half_width();
  auto a = sinc_maclaurin(spec);
  auto b = fractional_power_series_dft(a, -spec.alpha);
  auto V = vandermonde_inverse_specialized(nh);
  std::vector<double> fac(nh + 1);
  fac[0] = 1.0;
  for (int n = 1; n <= nh; ++n) fac[n] = fac[n - 1] * -(2.0 * n - 1.0);
  std::vector<double> g(nh + 1, 0.0);
  for (int m = 0; m <= nh; ++m) {
    KahanSum s;
    for (int n = 0; n <= nh; ++n) s.add(V.entries[n][m] * fac[n] * b.coeffs[n]);
    g[m] = s.total();
  }
  Filter f{std::move(g), spec};
  Filter oracle = build_filter_direct(spec);
  for (int m = 0; m <= nh; ++m) {
    double scale = std::max(std::fabs(oracle.g[m]), 1e-300);
    if (std::fabs(f.g[m] - oracle.g[m]) / scale > 1e-6)
      throw instability_error(
          "build_filter: production and direct paths diverged (N=" +
          std::to_string(spec.order_N) + ")");
  }
  check_filter(f);
  return f;
}

}  // namespace riesz
