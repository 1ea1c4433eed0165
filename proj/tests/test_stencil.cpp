#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "riesz/errors.hpp"
#include "riesz/special.hpp"
#include "riesz/stencil.hpp"

using namespace riesz;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridSpec(2), validation_error);
  CHECK(GridSpec(11).spacing() == doctest::Approx(0.1));
}

TEST_CASE("raw kernel at alpha=2 is the classical second difference") {
  auto k = raw_kernel(2.0, GridSpec(3), 6);
  CHECK(k.values[0] == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(k.values[1] == doctest::Approx(-4.0).epsilon(1e-14));
  for (int n = 2; n <= 6; ++n) CHECK(std::fabs(k.values[n]) < 1e-12);
}

TEST_CASE("raw kernel vs gamma-quotient evaluation") {
  const double alpha = 0.2;
  GridSpec grid(11);
  auto k = raw_kernel(alpha, grid, 20);
  const double h = grid.spacing();
  for (int n = 0; n <= 20; ++n) {
    // ((-1)^n / h^alpha) Gamma(alpha+1) / (Gamma(alpha/2+n+1) Gamma(alpha/2-n+1));
    // the second factor needs the reflection form once alpha/2-n+1 <= 0
    double direct = std::pow(h, -alpha) * gamma_fn(alpha + 1.0) *
                    inv_gamma(alpha / 2.0 + n + 1.0) *
                    inv_gamma(alpha / 2.0 - n + 1.0);
    if (n % 2 != 0) direct = -direct;
    CHECK(std::fabs(k.values[n] - direct) <=
          1e-12 * std::max(1.0, std::fabs(direct)));
  }
}

TEST_CASE("N=2 stencil equals the raw kernel") {
  Filter f = build_filter(FilterSpec(1.3, 2));
  GridSpec grid(9);
  auto st = build_stencil(f, grid);
  auto raw = raw_kernel(1.3, grid, 7);
  for (int n = 0; n <= 7; ++n)
    CHECK(st.values[n] == doctest::Approx(raw.values[n]).epsilon(1e-14));
}

TEST_CASE("alpha=2 N=4 stencil equals the hand convolution") {
  Filter f = build_filter(FilterSpec(2.0, 4));
  REQUIRE(f.g.size() == 2);
  CHECK(f.g[0] == doctest::Approx(1.0 + 1.0 / 6.0).epsilon(1e-13));
  CHECK(f.g[1] == doctest::Approx(-1.0 / 12.0).epsilon(1e-13));
  GridSpec grid(5);
  auto st = build_stencil(f, grid);
  auto raw = raw_kernel(2.0, grid, 3);
  for (int n = 0; n <= 3; ++n) {
    double lo = (n >= 1) ? raw.values[n - 1] : raw.values[1];
    double hi = (n + 1 < static_cast<int>(raw.values.size())) ? raw.values[n + 1]
                                                              : 0.0;
    double expect = f.g[0] * raw.values[n] + f.g[1] * (lo + hi);
    CHECK(st.values[n] == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("DC response shrinks as the kernel grows") {
  // |k_0 + 2 sum k_n| decays with truncation length
  const double alpha = 1.3;
  GridSpec grid(11);
  double prev = 1e300;
  for (int M : {20, 80, 320}) {
    auto k = raw_kernel(alpha, grid, M);
    double dc = k.values[0];
    for (int n = 1; n <= M; ++n) dc += 2.0 * k.values[n];
    CHECK(std::fabs(dc) < prev);
    prev = std::fabs(dc);
  }
}

TEST_CASE("extend: no-op returns the identical stencil") {
  Filter f = build_filter(FilterSpec(1.3, 6));
  auto [st, state] = build_stencil_resumable(f, GridSpec(11));
  auto [st2, state2] = extend_stencil(state, GridSpec(11));
  CHECK(st2.values == st.values);
}

TEST_CASE("extend 11 -> 21 matches a fresh build") {
  Filter f = build_filter(FilterSpec(1.3, 6));
  auto [st, state] = build_stencil_resumable(f, GridSpec(11));
  auto [st2, state2] = extend_stencil(state, GridSpec(21));
  auto fresh = build_stencil(f, GridSpec(21));
  REQUIRE(st2.values.size() == fresh.values.size());
  for (size_t n = 0; n < fresh.values.size(); ++n)
    CHECK(std::fabs(st2.values[n] - fresh.values[n]) <=
          1e-14 * std::fabs(fresh.values[n]));
}

TEST_CASE("multi-step extend 11 -> 161") {
  Filter f = build_filter(FilterSpec(1.8, 10));
  auto [st, state] = build_stencil_resumable(f, GridSpec(11));
  for (int nx : {21, 81, 161}) {
    auto next = extend_stencil(state, GridSpec(nx));
    state = next.second;
  }
  auto fresh = build_stencil(f, GridSpec(161));
  for (size_t n = 0; n < fresh.values.size(); ++n)
    CHECK(std::fabs(state.filtered[n] - fresh.values[n]) <=
          2e-14 * std::fabs(fresh.values[n]));
}

TEST_CASE("extend validation") {
  Filter f = build_filter(FilterSpec(1.3, 6));
  auto [st, state] = build_stencil_resumable(f, GridSpec(21));
  CHECK_THROWS_AS(extend_stencil(state, GridSpec(11)), validation_error);
  ResumeState broken = state;
  broken.filtered.pop_back();
  CHECK_THROWS_AS(extend_stencil(broken, GridSpec(41)), validation_error);
}

TEST_CASE("apply: zero input gives zero output") {
  Filter f = build_filter(FilterSpec(0.7, 4));
  auto st = build_stencil(f, GridSpec(9));
  std::vector<double> z(9, 0.0);
  for (double v : apply_operator(st, z, 0.0, 0.0)) CHECK(v == 0.0);
}

TEST_CASE("apply: alpha=2 N=2 reproduces f'' on a quadratic") {
  Filter f = build_filter(FilterSpec(2.0, 2));
  GridSpec grid(5);
  auto st = build_stencil(f, grid);
  std::vector<double> samples(5);
  for (int j = 0; j < 5; ++j) {
    double x = j / 4.0;
    samples[j] = x * (1.0 - x);
  }
  for (double v : apply_operator(st, samples, 0.0, 0.0))
    CHECK(v == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("apply validation") {
  Filter f = build_filter(FilterSpec(0.7, 4));
  auto st = build_stencil(f, GridSpec(9));
  std::vector<double> wrong(8, 0.0);
  CHECK_THROWS_AS(apply_operator(st, wrong, 0.0, 0.0), validation_error);
}

TEST_CASE("operator matrix is symmetric Toeplitz") {
  Filter f = build_filter(FilterSpec(1.3, 8));
  GridSpec grid(13);
  auto st = build_stencil(f, grid);
  // row n of D applied to the unit vector e_m gives D_{n,m} = -k_{|n-m|}
  const int dim = grid.node_count - 2;
  for (int m = 1; m <= dim; ++m) {
    std::vector<double> e(grid.node_count, 0.0);
    e[m] = 1.0;
    auto col = apply_operator(st, e, 0.0, 0.0);
    for (int n = 1; n <= dim; ++n)
      CHECK(col[n - 1] == -st.values[std::abs(n - m)]);
  }
}

TEST_CASE("randomized resume sweep") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> alpha_pick(0.1, 2.0);
  std::uniform_int_distribution<int> order_pick(1, 8);
  std::uniform_int_distribution<int> growth(1, 3);
  for (int trial = 0; trial < 8; ++trial) {
    double alpha = alpha_pick(rng);
    int N = 2 * order_pick(rng);
    Filter f = build_filter(FilterSpec(alpha, N));
    int nx = 11;
    auto [st, state] = build_stencil_resumable(f, GridSpec(nx));
    for (int step = 0; step < 3; ++step) {
      nx = (nx - 1) * (1 << growth(rng)) + 1;
      auto next = extend_stencil(state, GridSpec(nx));
      state = next.second;
    }
    auto fresh = build_stencil(f, GridSpec(nx));
    for (size_t n = 0; n < fresh.values.size(); ++n)
      CHECK(std::fabs(state.filtered[n] - fresh.values[n]) <=
            1e-14 * std::max(1e-300, std::fabs(fresh.values[n])));
  }
}
