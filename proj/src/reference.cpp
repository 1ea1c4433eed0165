#include "riesz/reference.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/special.hpp"

namespace riesz {

PolynomialCase::PolynomialCase(int q_, double alpha_) : q(q_), alpha(alpha_) {
  if (q < 2) throw validation_error("PolynomialCase: q must be >= 2");
  if (!(alpha > 0.0) || alpha >= 2.0 || alpha == 1.0)
    throw validation_error("PolynomialCase: alpha must lie in (0,1) U (1,2)");
}

CosineCase::CosineCase(int f_cycles_, double alpha_)
    : f_cycles(f_cycles_), alpha(alpha_) {
  if (f_cycles < 1) throw validation_error("CosineCase: f must be >= 1");
  if (!(alpha > 0.0) || alpha >= 2.0 || alpha == 1.0)
    throw validation_error("CosineCase: alpha must lie in (0,1) U (1,2)");
}

double riesz_constant(double alpha) {
  if (alpha == 1.0)
    throw validation_error("riesz_constant: singular at alpha = 1");
  return -1.0 / (2.0 * std::cos(std::numbers::pi * alpha / 2.0));
}

double poly_riesz_exact(const PolynomialCase& c, double x) {
  if (!(x > 0.0) || !(x < 1.0))
    throw validation_error("poly_riesz_exact: x must lie in (0,1)");
  const int q = c.q;
  const double alpha = c.alpha;
  // one pass over n with both mirror arguments folded into each term; the
  // gamma ratio, binomial and powers all advance by running products
  KahanSum s;
  const double y = 1.0 - x;
  double coef = gamma_fn(q + 1.0) / gamma_fn(q + 1.0 - alpha);
  double binc = 1.0;
  double px = std::pow(x, q - alpha);
  double py = std::pow(y, q - alpha);
  double sign = 1.0;
  for (int n = 0; n <= q; ++n) {
    const double tx = sign * binc * coef * px;
    const double ty = sign * binc * coef * py;
    s.add(tx + ty);
    coef *= (q + n + 1.0) / (q + n + 1.0 - alpha);
    binc *= static_cast<double>(q - n) / (n + 1.0);
    px *= x;
    py *= y;
    sign = -sign;
  }
  return riesz_constant(alpha) * s.total();
}

double rl_cos_left(double alpha, double lambda, double x) {
  if (!(x > 0.0)) throw validation_error("rl_cos_left: x must be positive");
  const double w = lambda * x;
  if (w < 17.0) {
    // _0D_x^alpha cos(lambda x) = x^{-alpha} sum_k (-1)^k w^{2k}/Gamma(2k+1-alpha)
    // written over all powers of w so the termination test sees the odd gaps
    KahanSum s;
    double wk = 1.0;  // w^k
    for (int k = 0; k <= 300; ++k) {
      const int r = k % 4;  // Re(i^{-k}) pattern 1,0,-1,0
      double mag = wk * inv_gamma(k + 1.0 - alpha);
      if (r == 0)
        s.add(mag);
      else if (r == 2)
        s.add(-mag);
      if (k > w && std::fabs(mag) < 1e-17 * std::max(1.0, std::fabs(s.total())))
        return std::pow(x, -alpha) * s.total();
      wk *= w;
    }
    throw convergence_error("rl_cos_left: Taylor branch did not converge");
  }
  // asymptotic (Mittag-Leffler) expansion, optimally truncated
  double lead =
      std::pow(lambda, alpha) * std::cos(w + std::numbers::pi * alpha / 2.0);
  KahanSum s;
  double prev = HUGE_VAL;
  double wk = 1.0 / w;  // w^{-k}
  for (int k = 1; k < 170; ++k) {
    double inv = inv_gamma(1.0 - alpha - k);
    double mag = std::fabs(wk * inv);
    if (mag > prev) break;
    prev = mag;
    const int r = ((-k) % 4 + 4) % 4;  // Re(i^{-k})
    if (r == 0)
      s.add(wk * inv);
    else if (r == 2)
      s.add(-wk * inv);
    wk /= w;
  }
  return lead - std::pow(x, -alpha) * s.total();
}

double cosine_riesz_exact(const CosineCase& c, double x) {
  if (!(x > 0.0) || !(x < 1.0))
    throw validation_error("cosine_riesz_exact: x must lie in (0,1)");
  const double lambda = 2.0 * std::numbers::pi * c.f_cycles;
  return riesz_constant(c.alpha) * (rl_cos_left(c.alpha, lambda, x) +
                                    rl_cos_left(c.alpha, lambda, 1.0 - x));
}

double rl_cos_left_closed_form(double alpha, int f_cycles, double x) {
  const double z = std::numbers::pi * f_cycles * x;
  const double zz = -z * z;
  double t1 = (alpha - 2.0) * (alpha - 1.0) *
              hyp1f2_regularized(1.0, (3.0 - alpha) / 2.0, (4.0 - alpha) / 2.0, zz);
  double t2 = (2.0 * z) * (2.0 * z) * (alpha - 2.5) *
              hyp1f2_regularized(2.0, (5.0 - alpha) / 2.0, (6.0 - alpha) / 2.0, zz);
  double t3 = 8.0 * z * z * z * z *
              hyp1f2_regularized(3.0, (7.0 - alpha) / 2.0, (8.0 - alpha) / 2.0, zz);
  return std::pow(x, -alpha) / (std::pow(2.0, 2.0 - alpha) *
                                std::sqrt(std::numbers::pi)) *
         (t1 + t2 + t3);
}

namespace {

struct Gauss20 {
  std::array<double, 20> node, weight;
  Gauss20() {
    // Legendre P20 roots by Newton iteration on [-1,1]
    const int n = 20;
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::fabs(dt) < 1e-16) break;
      }
      node[i] = -t;
      node[n - 1 - i] = t;
      weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

const Gauss20& gauss20() {
  static const Gauss20 g;
  return g;
}

double gl20(const std::function<double(double)>& f, double a, double b) {
  const auto& g = gauss20();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 20; ++i) acc += g.weight[i] * f(mid + half * g.node[i]);
  return acc * half;
}

double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double tol, int depth) {
  double whole = gl20(f, a, b);
  double mid = 0.5 * (a + b);
  double split = gl20(f, a, mid) + gl20(f, mid, b);
  if (std::fabs(whole - split) < tol || depth >= 48) {
    if (depth >= 48 && std::fabs(whole - split) > 1e4 * tol)
      throw convergence_error("rl_quadrature_oracle: quadrature stalled");
    return split;
  }
  return adaptive_gl(f, a, mid, 0.5 * tol, depth + 1) +
         adaptive_gl(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double rl_quadrature_oracle(const std::function<double(double)>& u,
                            const std::function<double(double)>& du,
                            const std::function<double(double)>& d2u,
                            double alpha, double x) {
  if (!(alpha > 0.0) || alpha >= 2.0 || alpha == 1.0)
    throw validation_error("rl_quadrature_oracle: alpha in (0,1) U (1,2)");
  if (!(x > 0.0)) throw validation_error("rl_quadrature_oracle: x > 0");
  const double tol = 1e-10;
  double integral;
  if (alpha <= 1.0) {
    // substitution s = t^r with r = 3/(2-alpha): the weight s^{1-alpha} ds
    // becomes r t^2 dt, so nothing singular is left at the origin (the raw
    // integrand is continuous but its derivative blows up there, which
    // starves the adaptive bisection for oscillatory u)
    const double r = 3.0 / (2.0 - alpha);
    auto f = [&](double t) {
      return t <= 0.0 ? 0.0 : r * t * t * d2u(x - std::pow(t, r));
    };
    integral = adaptive_gl(f, 0.0, std::pow(x, (2.0 - alpha) / 3.0), tol, 0);
  } else {
    // substitution s = t^{1/(2-alpha)} removes the endpoint singularity
    const double p = 1.0 / (2.0 - alpha);
    auto f = [&](double t) {
      return t <= 0.0 ? d2u(x) : d2u(x - std::pow(t, p));
    };
    integral =
        adaptive_gl(f, 0.0, std::pow(x, 2.0 - alpha), tol, 0) / (2.0 - alpha);
  }
  return u(0.0) * std::pow(x, -alpha) * inv_gamma(1.0 - alpha) +
         du(0.0) * std::pow(x, 1.0 - alpha) * inv_gamma(2.0 - alpha) +
         integral * inv_gamma(2.0 - alpha);
}

}  // namespace riesz
