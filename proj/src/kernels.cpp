#include "lfock/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lfock/specfun.hpp"

namespace lfock {

namespace {

constexpr double kCramer = 1.086435;

// log of sup_{n > N} tail of sum eps^n g_n r^{-2n} C_x C_y, minimized over r.
double laguerre_log_tail(double eps, double order, int N, double ax, double ay) {
  const double se = std::sqrt(eps);
  double best = std::numeric_limits<double>::infinity();
  const double log_g = log_gamma(N + 2.0) - log_gamma(N + order + 2.0);
  const double rho = std::max(1.0, (N + 2.0) / (N + 2.0 + order));
  for (int j = 1; j < 40; ++j) {
    const double r = se + (1.0 - se) * j / 40.0;
    const double q = eps / (r * r);
    if (q * rho >= 1.0) continue;
    const double log_c = -2.0 * (order + 1.0) * std::log(1.0 - r) + (ax + ay) * r / (1.0 - r);
    const double v = log_c + log_g + (N + 1.0) * std::log(q) - std::log(1.0 - q * rho);
    best = std::min(best, v);
  }
  return best;
}

double legendre_growth(cplx x) {
  if (x.imag() == 0.0 && std::abs(x.real()) <= 1.0) return 1.0;
  const cplx s = std::sqrt(x * x - 1.0);
  return std::max(std::abs(x + s), std::abs(x - s));
}

}  // namespace

cplx laguerre_kernel_closed(const QuantParams& p, double order, cplx x, cplx y) {
  const double eps = p.epsilon();
  const double h = p.hbar();
  const cplx yb = std::conj(y);
  const cplx u = eps * x * yb / (h * h);
  return std::pow(h, -order - 1.0) * std::exp(-p.c() * (x + yb)) * bessel_iota(order, u);
}

KernelValue laguerre_kernel_series(const QuantParams& p, double order, cplx x, cplx y, double tol, int max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const double eps = p.epsilon();
  const cplx yb = std::conj(y);
  const double ax = std::abs(x), ay = std::abs(y);
  cplx lx_prev = 0.0, lx = 1.0, ly_prev = 0.0, ly = 1.0;
  // weight_n = eps^n n! / Gamma(n + a + 1)
  double log_w = -log_gamma(order + 1.0);
  cplx sum = 0.0;
  KernelValue out;
  for (int n = 0; n < max_terms; ++n) {
    sum += std::exp(log_w) * lx * ly;
    if (n % 8 == 7) {
      const double lt = laguerre_log_tail(eps, order, n, ax, ay);
      if (lt < std::log(tol * std::max(1.0, std::abs(sum)))) {
        out.series_value = sum;
        out.tail_bound = std::exp(lt);
        out.terms_used = n + 1;
        out.closed_value = laguerre_kernel_closed(p, order, x, y);
        out.has_closed = true;
        return out;
      }
    }
    const cplx nx = ((2.0 * n + 1.0 + order - x) * lx - (n + order) * lx_prev) / (n + 1.0);
    const cplx ny = ((2.0 * n + 1.0 + order - yb) * ly - (n + order) * ly_prev) / (n + 1.0);
    lx_prev = lx;
    lx = nx;
    ly_prev = ly;
    ly = ny;
    log_w += std::log(eps) + std::log(n + 1.0) - std::log(n + order + 1.0);
  }
  throw ConvergenceError("laguerre_kernel_series: tolerance not reached within term budget");
}

double weighted_laguerre_kernel(const QuantParams& p, double x, double y) {
  if (x < 0.0 || y < 0.0) throw std::invalid_argument("weighted kernel needs x, y >= 0");
  return std::exp(-0.5 * (x + y)) * laguerre_kernel_closed(p, 0.0, x, y).real();
}

KernelValue hermite_kernel_series(double eps, double x, double y, double tol, int max_terms) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  // Orthonormal Hermite polynomials H_n / sqrt(2^n n! sqrt(pi)).
  const double h0 = std::pow(std::numbers::pi, -0.25);
  double hx_prev = 0.0, hx = h0, hy_prev = 0.0, hy = h0;
  const double envelope = kCramer * kCramer / std::sqrt(std::numbers::pi) * std::exp(0.5 * (x * x + y * y));
  double sum = 0.0, epow = 1.0;
  for (int n = 0; n < max_terms; ++n) {
    sum += epow * hx * hy;
    const double tail = envelope * epow * eps / (1.0 - eps);
    if (tail < tol * std::max(1.0, std::abs(sum))) {
      KernelValue out;
      out.series_value = sum;
      out.tail_bound = tail;
      out.terms_used = n + 1;
      return out;
    }
    const double a = std::sqrt(2.0 / (n + 1.0)), b = std::sqrt(n / (n + 1.0));
    const double nx = a * x * hx - b * hx_prev;
    const double ny = a * y * hy - b * hy_prev;
    hx_prev = hx;
    hx = nx;
    hy_prev = hy;
    hy = ny;
    epow *= eps;
  }
  throw ConvergenceError("hermite_kernel_series: tolerance not reached within term budget");
}

bool legendre_domain_contains(double eps, cplx x, cplx y) {
  const double lhs = std::sqrt(std::abs((1.0 - x) * (1.0 - y))) + std::sqrt(std::abs((1.0 + x) * (1.0 + y)));
  return lhs < std::sqrt(eps) + 1.0 / std::sqrt(eps);
}

KernelValue legendre_kernel_series(double eps, cplx x, cplx y, double tol, int max_terms) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!legendre_domain_contains(eps, x, y)) {
    throw std::domain_error("legendre_kernel_series: arguments outside the convergence domain");
  }
  const double q = eps * legendre_growth(x) * legendre_growth(y);
  if (q >= 1.0) throw ConvergenceError("legendre_kernel_series: growth bound cannot certify the tail");
  cplx px_prev = 0.0, px = 1.0, py_prev = 0.0, py = 1.0;
  cplx sum = 0.0;
  double epow = 1.0, qpow = 1.0;
  for (int n = 0; n < max_terms; ++n) {
    sum += epow * (n + 0.5) * px * py;
    qpow *= q;
    const double tail = qpow * ((n + 1.5) / (1.0 - q) + q / ((1.0 - q) * (1.0 - q)));
    if (tail < tol * std::max(1.0, std::abs(sum))) {
      KernelValue out;
      out.series_value = sum;
      out.tail_bound = tail;
      out.terms_used = n + 1;
      return out;
    }
    const cplx nx = ((2.0 * n + 1.0) * x * px - static_cast<double>(n) * px_prev) / (n + 1.0);
    const cplx ny = ((2.0 * n + 1.0) * y * py - static_cast<double>(n) * py_prev) / (n + 1.0);
    px_prev = px;
    px = nx;
    py_prev = py;
    py = ny;
    epow *= eps;
  }
  throw ConvergenceError("legendre_kernel_series: tolerance not reached within term budget");
}

KernelValue legendre_kernel_closed(double eps, double phi, double theta, double tol) {
  if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1)");
  const double d = (1.0 + eps) * (1.0 + eps);
  const double sp = std::sin(phi), st = std::sin(theta), cp = std::cos(phi), ct = std::cos(theta);
  const double a = 4.0 * eps * sp * sp * st * st / d;
  const double b = 4.0 * eps * cp * cp * ct * ct / d;
  const double q = std::pow(std::sqrt(a) + std::sqrt(b), 2);
  if (q >= 1.0) throw ConvergenceError("legendre_kernel_closed: double series diverges");
  const double la = a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity();
  const double lb = b > 0.0 ? std::log(b) : -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  double log_bound = 0.0;  // log of (3/2)_s / s! q^s
  for (int s = 0; s < 100000; ++s) {
    const double lead = log_gamma(s + 1.0) + log_gamma(s + 1.5) - log_gamma(1.5);
    double diag = 0.0;
    if (a == 0.0 || b == 0.0) {
      // only the pure power survives
      if (a == 0.0 && b == 0.0) {
        diag = s == 0 ? 1.0 : 0.0;
      } else {
        diag = std::exp(lead - 2.0 * log_gamma(s + 1.0) + s * (a == 0.0 ? lb : la));
      }
    } else {
      // terms a^m b^{s-m} / (m! (s-m)!)^2 by their ratio, rescaled to stay finite
      double log_ref = lead - 2.0 * log_gamma(s + 1.0) + s * lb;
      const double ab = a / b;
      double v = 1.0, acc = 0.0;
      for (int m = 0; m <= s; ++m) {
        acc += v;
        const double r = static_cast<double>(s - m) / (m + 1.0);
        v *= ab * r * r;
        if (v > 1e200) {
          v *= 1e-200;
          acc *= 1e-200;
          log_ref += 200.0 * std::numbers::ln10;
        }
      }
      diag = std::exp(log_ref + std::log(acc));
    }
    sum += diag;
    log_bound += (s == 0 ? 0.0 : std::log((s + 0.5) / s)) + (q > 0.0 ? std::log(q) : -1e300);
    // tail over s' > s: next term times geometric factor
    const double ratio = (s + 2.5) / (s + 2.0) * q;
    if (ratio < 1.0) {
      const double next = log_bound + std::log((s + 1.5) / (s + 1.0)) + std::log(q);
      const double tail = std::exp(next) / (1.0 - ratio);
      if (tail < tol * sum) {
        const double pre = (1.0 - eps) / (2.0 * d);
        KernelValue out;
        out.series_value = pre * sum;
        out.tail_bound = pre * tail;
        out.terms_used = s + 1;
        return out;
      }
    }
  }
  throw ConvergenceError("legendre_kernel_closed: tolerance not reached");
}

cplx fock_kernel(const QuantParams& p, double order, cplx z, cplx w) {
  const double h = p.hbar();
  return std::pow(h, -order - 1.0) * bessel_iota(order, p.epsilon() * z * std::conj(w) / (h * h));
}

}  // namespace lfock
