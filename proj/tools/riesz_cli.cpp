#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "riesz/errors.hpp"
#include "riesz/experiment.hpp"
#include "riesz/filter.hpp"
#include "riesz/reference.hpp"
#include "riesz/spectral.hpp"
#include "riesz/stencil.hpp"

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw riesz::validation_error("cannot open output file: " + path);
  return file;
}

std::vector<double> read_samples(const std::string& path) {
  std::ifstream file;
  std::istream& in = (path.empty() || path == "-")
                         ? static_cast<std::istream&>(std::cin)
                         : (file.open(path), file);
  if (!path.empty() && path != "-" && !file)
    throw riesz::validation_error("cannot open input file: " + path);
  std::vector<double> v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      v.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw riesz::validation_error("bad sample value: " + line);
    }
  }
  return v;
}

void run_check(double alpha_rate) {
  using namespace riesz;
  bool all_ok = true;
  std::printf("positivity sweep (alpha 0.1..1.9 step 0.1, N <= 16):\n");
  for (int N = 2; N <= 16; N += 2) {
    double worst = 1e300;
    bool ok = true;
    for (int ai = 1; ai <= 19; ++ai) {
      Filter f = build_filter(FilterSpec(ai / 10.0, N));
      auto rep = positivity_check(f);
      worst = std::min(worst, rep.margin);
      ok = ok && rep.dominant;
    }
    all_ok = all_ok && ok;
    std::printf("  N=%-2d %s  min margin %.6g\n", N, ok ? "ok" : "VIOLATED",
                worst);
  }
  std::printf("eigen bounds (N_x = 21):\n");
  for (double a : {0.5, 1.0, 1.5, 2.0})
    for (int N : {2, 4, 8}) {
      Filter f = build_filter(FilterSpec(a, N));
      Stencil st = build_stencil(f, GridSpec(21));
      auto rep = eigen_bound_estimate(st);
      all_ok = all_ok && rep.within_bound;
      std::printf("  alpha=%-4g N=%-2d max|eig|=%.6g bound=%.6g %s\n", a, N,
                  rep.max_abs_eig, rep.bound, rep.within_bound ? "ok" : "OVER");
    }
  std::printf("flatness r(0.05) at alpha=%g:\n", alpha_rate);
  for (int N = 2; N <= 16; N += 2) {
    Filter f = build_filter(FilterSpec(alpha_rate, N));
    double r = spectral_rate(f, 0.05);
    bool ok = std::fabs(r - N) <= 0.1;
    all_ok = all_ok && ok;
    std::printf("  N=%-2d r=%.6f %s\n", N, r, ok ? "ok" : "OFF");
  }
  if (!all_ok) throw instability_error("check: diagnostics failed");
  std::printf("all checks passed\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz fractional derivative stencils via prefiltered central "
               "Grunwald-Letnikov differences"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--time", timing, "print wall-clock time to stderr");

  double alpha = 1.3;
  int order = 4;
  int nodes = 11;
  int q = 6;
  int freq = 11;
  int levels = 6;
  int points = 512;
  std::string out_path, in_path;
  std::vector<int> orders = {4, 6, 8, 10};

  auto* cmd_filter = app.add_subcommand("filter", "print filter coefficients");
  cmd_filter->add_option("--alpha", alpha)->required();
  cmd_filter->add_option("--order", order)->required();

  auto* cmd_stencil = app.add_subcommand("stencil", "export filtered stencil");
  cmd_stencil->add_option("--alpha", alpha)->required();
  cmd_stencil->add_option("--order", order)->required();
  cmd_stencil->add_option("--nodes", nodes)->required();
  cmd_stencil->add_option("--out", out_path);

  auto* cmd_apply =
      app.add_subcommand("apply", "apply the operator to sampled values");
  cmd_apply->add_option("--alpha", alpha)->required();
  cmd_apply->add_option("--order", order)->required();
  cmd_apply->add_option("--input", in_path, "one sample per line (- = stdin)");
  cmd_apply->add_option("--out", out_path);

  auto* cmd_exp = app.add_subcommand("experiment", "convergence tables");
  cmd_exp->require_subcommand(1);
  auto* cmd_poly = cmd_exp->add_subcommand("poly", "x^q (1-x)^q family");
  cmd_poly->add_option("--q", q);
  cmd_poly->add_option("--alpha", alpha)->required();
  cmd_poly->add_option("--orders", orders)->delimiter(',');
  cmd_poly->add_option("--levels", levels);
  cmd_poly->add_option("--out", out_path);
  auto* cmd_cos = cmd_exp->add_subcommand("cos", "truncated cosine family");
  cmd_cos->add_option("--freq", freq);
  cmd_cos->add_option("--alpha", alpha)->required();
  cmd_cos->add_option("--orders", orders)->delimiter(',');
  cmd_cos->add_option("--levels", levels);
  cmd_cos->add_option("--out", out_path);

  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "response and rate curves");
  cmd_spectrum->add_option("--alpha", alpha);
  cmd_spectrum->add_option("--orders", orders)->delimiter(',');
  cmd_spectrum->add_option("--points", points);
  cmd_spectrum->add_option("--out", out_path, "output directory");

  auto* cmd_check =
      app.add_subcommand("check", "positivity, eigen bound, flatness report");
  cmd_check->add_option("--alpha", alpha, "alpha for the flatness sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 1;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (*cmd_filter) {
      riesz::Filter f = riesz::build_filter(riesz::FilterSpec(alpha, order));
      std::string line;
      for (size_t m = 0; m < f.g.size(); ++m)
        line += (m ? "," : "") + fmt(f.g[m]);
      std::cout << line << "\n";
    } else if (*cmd_stencil) {
      riesz::Filter f = riesz::build_filter(riesz::FilterSpec(alpha, order));
      riesz::Stencil st = riesz::build_stencil(f, riesz::GridSpec(nodes));
      std::ofstream file;
      auto& out = open_out(file, out_path);
      out << "n,k_n\n";
      for (size_t n = 0; n < st.values.size(); ++n)
        out << n << ',' << fmt(st.values[n]) << '\n';
    } else if (*cmd_apply) {
      auto samples = read_samples(in_path);
      riesz::Filter f = riesz::build_filter(riesz::FilterSpec(alpha, order));
      riesz::GridSpec grid(static_cast<int>(samples.size()));
      riesz::Stencil st = riesz::build_stencil(f, grid);
      auto vals =
          riesz::apply_operator(st, samples, samples.front(), samples.back());
      std::ofstream file;
      auto& out = open_out(file, out_path);
      out << "x,value\n";
      for (size_t n = 0; n < vals.size(); ++n) {
        double x = static_cast<double>(n + 1) / (grid.node_count - 1);
        out << fmt(x) << ',' << fmt(vals[n]) << '\n';
      }
    } else if (*cmd_poly || *cmd_cos) {
      if (levels < 1) throw riesz::validation_error("--levels must be >= 1");
      riesz::RefinementSchedule sched{11, levels - 1};
      riesz::ErrorTable table =
          *cmd_poly ? riesz::run_poly_experiment(q, alpha, orders, sched)
                    : riesz::run_cosine_experiment(freq, alpha, orders, sched);
      std::ofstream file;
      auto& out = open_out(file, out_path);
      riesz::write_error_table(table, out);
    } else if (*cmd_spectrum) {
      riesz::emit_spectrum(alpha, orders, points,
                           out_path.empty() ? "." : out_path);
    } else if (*cmd_check) {
      run_check(alpha);
    }
  } catch (const riesz::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 2;
  }
  if (timing) {
    const auto dt = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0);
    std::fprintf(stderr, "elapsed: %.3f s\n", dt.count());
  }
  return rc;
}
