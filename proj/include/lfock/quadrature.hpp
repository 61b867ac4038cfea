#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "lfock/params.hpp"

namespace lfock {

/// Gauss rule for one of the family weights.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  PolyFamily family = PolyFamily::legendre();
  int exactness = 0;  // integrates polynomials of degree <= exactness

  template <class F>
  auto integrate(F&& f) const {
    auto acc = f(nodes[0]) * weights[0];
    for (std::size_t i = 1; i < nodes.size(); ++i) acc += f(nodes[i]) * weights[i];
    return acc;
  }
};

/// N-point Gauss rule by Golub-Welsch, nodes polished with Newton steps and
/// weights recomputed from the Christoffel sum so that tiny Laguerre/Hermite
/// weights keep full relative accuracy.
QuadRule gauss_rule(const PolyFamily& family, int N);

/// V(n, i) = p_n(x_i) sqrt(w_i) for the orthonormal polynomials p_n of the
/// family, n < nbasis. For nbasis = N this is an orthogonal matrix.
Eigen::MatrixXd basis_at_nodes(const QuadRule& rule, int nbasis);

/// Orthonormal polynomial values p_0..p_{n} at x, returned together with a
/// common log-scale: true value = value * exp(log_scale).
struct ScaledValues {
  std::vector<double> values;
  double log_scale = 0.0;
};
ScaledValues orthonormal_values(const PolyFamily& family, int n, double x);

template <class T>
struct Integral {
  T value;
  double error_bound = 0.0;
  int nodes_used = 0;
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const cplx& v) { return std::abs(v); }
template <class Derived>
double magnitude(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Tanh-sinh rule on [a, b] with level halving. The integrand sees abscissae
/// computed from the nearest endpoint, so endpoint singularities of log or
/// power type are resolved. `tol` is relative to the size of the result;
/// `abs_floor` is an absolute error that is always accepted (for integrals
/// that vanish by symmetry).
template <class T, class F>
Integral<T> tanh_sinh(F&& f, double a, double b, double tol, double abs_floor = 0.0, int max_level = 10) {
  constexpr double t_max = 4.0;
  const double half = 0.5 * (b - a);
  int nodes = 0;
  // Adds f(x(t)) x'(t) to acc; the step h is applied by the caller.
  auto add_point = [&](double t, T& acc) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    const double dist = (b - a) * e / (1.0 + e);
    if (dist == 0.0) return;
    const double x = u < 0.0 ? a + dist : b - dist;
    const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    const double w = half * 0.5 * std::numbers::pi * std::cosh(t) * sech2;
    if (w == 0.0) return;
    ++nodes;
    acc += f(x) * w;
  };
  T raw = f(a + half) * 0.0;
  for (int k = -static_cast<int>(t_max); k <= static_cast<int>(t_max); ++k) add_point(static_cast<double>(k), raw);
  double h = 1.0;
  T estimate = raw * h;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    const int kmax = static_cast<int>(t_max / h);
    for (int k = -kmax + 1; k <= kmax; k += 2) add_point(k * h, raw);
    T next = raw * h;
    err = magnitude(T(next - estimate));
    estimate = next;
    if (level >= 3 && err <= std::max(tol * magnitude(estimate), abs_floor)) break;
  }
  return {estimate, err, nodes};
}

/// Radial integral over [0, inf): tanh-sinh on [0, r0] (handles the
/// logarithmic endpoint), then geometric panels [r0 2^k, r0 2^{k+1}] until a
/// panel is negligible and the integrand is decaying.
template <class T, class F>
Integral<T> integrate_radial(F&& g, double tol, double abs_floor = 0.0, double r0 = 1.0, int max_panels = 48) {
  Integral<T> head = tanh_sinh<T>(g, 0.0, r0, 0.1 * tol, 0.1 * abs_floor);
  T total = head.value;
  double err = head.error_bound;
  int nodes = head.nodes_used;
  double lo = r0;
  for (int k = 0; k < max_panels; ++k) {
    const double hi = 2.0 * lo;
    Integral<T> panel = tanh_sinh<T>(g, lo, hi, 0.1 * tol, 0.1 * abs_floor);
    total = total + panel.value;
    err += panel.error_bound;
    nodes += panel.nodes_used;
    const double pmag = magnitude(panel.value);
    const bool decaying = magnitude(g(hi)) <= magnitude(g(0.5 * (lo + hi)));
    lo = hi;
    if (decaying && pmag <= std::max(1e-3 * tol * magnitude(total), 1e-3 * abs_floor)) {
      err += pmag;
      return {total, err, nodes};
    }
  }
  throw ConvergenceError("radial integral: tail did not become negligible");
}

/// Periodic trapezoid of f(theta) over [0, 2 pi), doubling from n0 points
/// until two successive sums agree to `tol` relative. Differences below
/// `floor_ratio` times 2 pi max|f| on the seed points are accepted.
template <class T, class F>
T angular_trapezoid(F&& f, int n0, double tol, double floor_ratio = 0.0, int max_points = 1 << 16) {
  int n = std::max(n0, 4);
  const double two_pi = 2.0 * std::numbers::pi;
  T sum = f(0.0);
  double fmax = magnitude(sum);
  for (int i = 1; i < n; ++i) {
    T v = f(two_pi * i / n);
    fmax = std::max(fmax, magnitude(v));
    sum += v;
  }
  const double floor = floor_ratio * two_pi * fmax;
  T prev = sum * (two_pi / n);
  while (n < max_points) {
    for (int i = 0; i < n; ++i) sum += f(two_pi * (i + 0.5) / n);
    n *= 2;
    T cur = sum * (two_pi / n);
    const double diff = magnitude(T(cur - prev));
    if (diff <= std::max(tol * magnitude(cur), floor)) return cur;
    prev = cur;
  }
  throw ConvergenceError("angular trapezoid did not converge");
}

/// Integral over the plane of f(w) rho(|w|) dA(w), rho radial.
/// `angular_degree` seeds the trapezoid with 4 deg + 4 points. Error is
/// controlled relative to the integral of the envelope r rho(r) max|f|, so
/// integrals that vanish by symmetry terminate.
template <class T, class Rho, class F>
Integral<T> integrate_plane(Rho&& rho, F&& f, double tol, int angular_degree = 0) {
  const int n0 = 4 * angular_degree + 4;
  const double two_pi = 2.0 * std::numbers::pi;
  auto envelope = [&](double r) -> double {
    double m = 0.0;
    for (int i = 0; i < 16; ++i) m = std::max(m, magnitude(f(std::polar(r, two_pi * i / 16))));
    return two_pi * r * rho(r) * m;
  };
  const double scale = integrate_radial<double>(envelope, 1e-4).value;
  auto radial = [&](double r) -> T {
    const double dens = rho(r);
    auto ang = [&](double th) -> T { return f(std::polar(r, th)); };
    T inner = angular_trapezoid<T>(ang, n0, 0.1 * tol, 0.1 * tol);
    return inner * (r * dens);
  };
  return integrate_radial<T>(radial, tol, tol * scale);
}

/// integral_0^inf 2 t^{k + a/2} K_a(scale sqrt(t)) dt, by radial quadrature in r = sqrt(t).
/// The canonical scale 2 gives k! Gamma(k+a+1).
Integral<double> radial_k_moment(double order, double scale, int k, double tol = 1e-12);

/// Closed form of the same integral: (2/scale)^{2k+a+2} k! Gamma(k+a+1).
double radial_k_moment_exact(double order, double scale, int k);

}  // namespace lfock
