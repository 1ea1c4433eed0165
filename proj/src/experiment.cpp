#include "riesz/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "riesz/errors.hpp"
#include "riesz/filter.hpp"
#include "riesz/reference.hpp"
#include "riesz/spectral.hpp"
#include "riesz/stencil.hpp"

namespace riesz {

double ErrorTable::rate(int level, int order) const {
  auto a = E.find({level, order});
  auto b = E.find({level + 1, order});
  if (a == E.end() || b == E.end())
    throw validation_error("ErrorTable::rate: level/order out of range");
  return std::log2(a->second / b->second);
}

ErrorTable run_experiment(const std::function<double(double)>& exact,
                          const std::function<double(double)>& sample,
                          double alpha, const std::vector<int>& orders,
                          const RefinementSchedule& schedule) {
  ErrorTable table{alpha, orders, schedule, {}};
  for (int N : orders) {
    Filter filter = build_filter(FilterSpec(alpha, N));
    for (int i = 0; i <= schedule.i_max; ++i) {
      const int nx = schedule.nodes_at(i);
      GridSpec grid(nx);
      Stencil st = build_stencil(filter, grid);
      std::vector<double> fv(nx);
      for (int j = 0; j < nx; ++j)
        fv[j] = sample(static_cast<double>(j) / (nx - 1));
      auto out = apply_operator(st, fv, fv.front(), fv.back());
      double e = 0.0;
      for (int j = 1; j <= schedule.n_min - 2; ++j) {
        const int idx = j << i;
        const double xj = static_cast<double>(idx) / (nx - 1);
        e += std::fabs(out[idx - 1] - exact(xj));
      }
      table.E[{i, N}] = e;
    }
  }
  return table;
}

ErrorTable run_poly_experiment(int q, double alpha,
                               const std::vector<int>& orders,
                               const RefinementSchedule& schedule) {
  PolynomialCase c(q, alpha);
  return run_experiment(
      [&c](double x) { return poly_riesz_exact(c, x); },
      [q](double x) { return std::pow(x, q) * std::pow(1.0 - x, q); }, alpha,
      orders, schedule);
}

ErrorTable run_cosine_experiment(int f_cycles, double alpha,
                                 const std::vector<int>& orders,
                                 const RefinementSchedule& schedule) {
  CosineCase c(f_cycles, alpha);
  return run_experiment(
      [&c](double x) { return cosine_riesz_exact(c, x); },
      [f_cycles](double x) {
        return std::cos(2.0 * std::numbers::pi * f_cycles * x);
      },
      alpha, orders, schedule);
}

void write_error_table(const ErrorTable& table, std::ostream& out) {
  out << "i,N,E,R\n";
  char buf[64];
  for (int i = 0; i <= table.schedule.i_max; ++i) {
    for (int N : table.orders) {
      std::snprintf(buf, sizeof buf, "%.17g", table.E.at({i, N}));
      out << i << ',' << N << ',' << buf << ',';
      if (i < table.schedule.i_max) {
        std::snprintf(buf, sizeof buf, "%.17g", table.rate(i, N));
        out << buf;
      }
      out << '\n';
    }
  }
}

void emit_spectrum(double alpha, const std::vector<int>& orders, int points,
                   const std::string& out_dir) {
  if (points < 2) throw validation_error("emit_spectrum: points must be >= 2");
  std::filesystem::create_directories(out_dir);
  char buf[64];
  for (int N : orders) {
    Filter filter = build_filter(FilterSpec(alpha, N));
    std::ofstream resp(std::filesystem::path(out_dir) /
                       ("response_" + std::to_string(N) + ".csv"));
    std::ofstream rate(std::filesystem::path(out_dir) /
                       ("rate_" + std::to_string(N) + ".csv"));
    if (!resp || !rate)
      throw validation_error("emit_spectrum: cannot open output files");
    std::snprintf(buf, sizeof buf, "# alpha=%g,N=%d\n", alpha, N);
    resp << buf << "x,F\n";
    rate << buf << "x,r\n";
    for (int k = 1; k <= points; ++k) {
      const double x = std::numbers::pi * k / points;
      std::snprintf(buf, sizeof buf, "%.17g", x);
      resp << buf << ',';
      rate << buf << ',';
      std::snprintf(buf, sizeof buf, "%.17g", relative_response(filter, x));
      resp << buf << '\n';
      std::snprintf(buf, sizeof buf, "%.17g", spectral_rate(filter, x));
      rate << buf << '\n';
    }
  }
}

}  // namespace riesz
