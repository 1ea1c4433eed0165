#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "riesz/errors.hpp"
#include "riesz/filter.hpp"

using namespace riesz;

namespace {

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double scale = std::max(std::fabs(b[i]), 1e-300);
    worst = std::max(worst, std::fabs(a[i] - b[i]) / scale);
  }
  return worst;
}

std::vector<double> convolve(const std::vector<double>& a,
                             const std::vector<double>& b, size_t keep) {
  std::vector<double> out(keep, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size() && i + j < keep; ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(FilterSpec(1.0, 5), validation_error);
  CHECK_THROWS_AS(FilterSpec(1.0, 0), validation_error);
  CHECK_THROWS_AS(FilterSpec(0.0, 4), validation_error);
  CHECK_THROWS_AS(FilterSpec(2.5, 4), validation_error);
  CHECK(FilterSpec(2.0, 16).half_width() == 7);
}

TEST_CASE("sinc maclaurin closed form") {
  auto s = sinc_maclaurin_terms(4);
  CHECK(s.coeffs[0] == 1.0);
  CHECK(s.coeffs[1] == doctest::Approx(-1.0 / 24.0).epsilon(1e-15));
  CHECK(s.coeffs[2] == doctest::Approx(1.0 / 1920.0).epsilon(1e-15));
  // invariants: alternating, shrinking
  for (int n = 1; n < 4; ++n) {
    CHECK(s.coeffs[n] * s.coeffs[n - 1] < 0.0);
    CHECK(std::fabs(s.coeffs[n]) < std::fabs(s.coeffs[n - 1]));
  }
}

TEST_CASE("miller recurrence trivial powers") {
  auto a = sinc_maclaurin_terms(6);
  auto p1 = fractional_power_series_miller(a, 1.0);
  // alpha=1 still runs the full convolution, so allow its rounding
  CHECK(max_rel_diff(p1.coeffs, a.coeffs) < 1e-13);
  auto p0 = fractional_power_series_miller(a, 0.0);
  CHECK(p0.coeffs[0] == 1.0);
  for (int n = 1; n < 6; ++n) CHECK(std::fabs(p0.coeffs[n]) < 1e-16);
}

TEST_CASE("miller half power squared recovers the series") {
  auto a = sinc_maclaurin_terms(8);
  auto h = fractional_power_series_miller(a, 0.5);
  auto sq = convolve(h.coeffs, h.coeffs, 8);
  CHECK(max_rel_diff(sq, a.coeffs) < 1e-12);
}

TEST_CASE("dft power path vs direct and miller") {
  auto a = sinc_maclaurin_terms(4);
  auto b1 = fractional_power_series_dft(a, 1.0);
  CHECK(max_rel_diff(b1.coeffs, a.coeffs) < 1e-12);

  auto b2 = fractional_power_series_dft(a, 2.0);
  auto sq = convolve(a.coeffs, a.coeffs, 4);
  CHECK(max_rel_diff(b2.coeffs, sq) < 1e-12);

  auto bf = fractional_power_series_dft(a, 1.3);
  auto bm = fractional_power_series_miller(a, 1.3);
  CHECK(max_rel_diff(bf.coeffs, bm.coeffs) < 1e-11);
}

TEST_CASE("dft vs miller across the supported range") {
  for (int N = 4; N <= 16; N += 2) {
    auto a = sinc_maclaurin_terms(N / 2);
    for (double alpha : {0.2, 0.7, 1.3, 1.8, 2.0}) {
      auto bf = fractional_power_series_dft(a, -alpha);
      auto bm = fractional_power_series_miller(a, -alpha);
      CHECK(max_rel_diff(bf.coeffs, bm.coeffs) < 1e-11);
    }
  }
}

TEST_CASE("bjorck-pereyra base cases") {
  auto v0 = vandermonde_inverse_bjorck({0.0});
  CHECK(v0[0][0] == 1.0);

  auto v1 = vandermonde_inverse_bjorck({0.0, 1.0});
  CHECK(v1[0][0] == doctest::Approx(1.0));
  CHECK(v1[0][1] == doctest::Approx(0.0));
  CHECK(v1[1][0] == doctest::Approx(-1.0));
  CHECK(v1[1][1] == doctest::Approx(1.0));

  CHECK_THROWS_AS(vandermonde_inverse_bjorck({1.0, 1.0}), validation_error);
}

TEST_CASE("bjorck-pereyra multiply-back") {
  std::vector<double> nodes = {-2.0, -1.0, 0.0, 1.0, 2.0};
  auto vi = vandermonde_inverse_bjorck(nodes);
  const int n = 5;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += std::pow(nodes[r], k) * vi[k][c];
      CHECK(std::fabs(acc - (r == c ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("bjorck-pereyra ratio and symmetry properties") {
  for (int k = 1; k <= 8; ++k) {
    std::vector<double> nodes;
    for (int j = -k; j <= k; ++j) nodes.push_back(j);
    auto vi = vandermonde_inverse_bjorck(nodes);
    for (int i = 1; 2 * i <= 2 * k; ++i)
      for (int j = 0; j <= k; ++j) {
        double even = vi[2 * i][k + j];
        if (j > 0 && std::fabs(even) > 1e-13) {
          double ratio = vi[2 * i - 1][k + j] / even;
          CHECK(std::fabs(ratio - j) < 1e-10 * std::max(1.0, double(j)));
        }
        double mirror = vi[2 * i][k - j];
        CHECK(std::fabs(even - mirror) <=
              1e-10 * std::max(1.0, std::fabs(even)));
      }
  }
}

TEST_CASE("specialized vandermonde inverse base case") {
  auto v = vandermonde_inverse_specialized(0);
  CHECK(v.entries.size() == 1);
  CHECK(v.entries[0][0] == 1.0);
  CHECK_THROWS_AS(vandermonde_inverse_specialized(-1), validation_error);
}

TEST_CASE("N=2 filter is the identity") {
  for (double alpha : {0.2, 1.0, 2.0}) {
    Filter f = build_filter(FilterSpec(alpha, 2));
    REQUIRE(f.g.size() == 1);
    CHECK(f.g[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("analytic N=4 filter") {
  Filter f = build_filter(FilterSpec(1.0, 4));
  REQUIRE(f.g.size() == 2);
  CHECK(std::fabs(f.g[0] - (1.0 + 1.0 / 12.0)) < 1e-12);
  CHECK(std::fabs(f.g[1] - (-1.0 / 24.0)) < 1e-12);
}

TEST_CASE("production path vs direct solve across the supported range") {
  for (int N = 4; N <= 16; N += 2)
    for (double alpha : {0.2, 0.7, 1.3, 1.8, 2.0}) {
      Filter a = build_filter(FilterSpec(alpha, N));
      Filter b = build_filter_direct(FilterSpec(alpha, N));
      CHECK(max_rel_diff(a.g, b.g) < 1e-10);
    }
}

TEST_CASE("DC normalization and diagonal dominance sweep") {
  for (int ai = 1; ai <= 19; ++ai)
    for (int N = 2; N <= 16; N += 2) {
      Filter f = build_filter(FilterSpec(ai / 10.0, N));
      double dc = f.g[0], off = 0.0;
      for (size_t m = 1; m < f.g.size(); ++m) {
        dc += 2.0 * f.g[m];
        off += 2.0 * std::fabs(f.g[m]);
      }
      CHECK(std::fabs(dc - 1.0) < 1e-12);
      CHECK(f.g[0] > off);
    }
}
