#include "lfock/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lfock {

namespace {

template <class T>
std::vector<T> recurrence_values(const PolyFamily& family, int n, T x) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<T> p(static_cast<std::size_t>(n) + 1);
  p[0] = T(1);
  if (n == 0) return p;
  const double a = family.order();
  switch (family.kind()) {
    case FamilyKind::Hermite:
      p[1] = T(2) * x;
      for (int k = 1; k < n; ++k) p[k + 1] = T(2) * x * p[k] - T(2.0 * k) * p[k - 1];
      break;
    case FamilyKind::Laguerre:
      p[1] = T(1.0 + a) - x;
      for (int k = 1; k < n; ++k) {
        p[k + 1] = ((T(2.0 * k + 1.0 + a) - x) * p[k] - T(k + a) * p[k - 1]) / T(k + 1.0);
      }
      break;
    case FamilyKind::Legendre:
      p[1] = x;
      for (int k = 1; k < n; ++k) {
        p[k + 1] = (T(2.0 * k + 1.0) * x * p[k] - T(static_cast<double>(k)) * p[k - 1]) / T(k + 1.0);
      }
      break;
  }
  return p;
}

using lcplx = std::complex<long double>;

cplx bessel_i_series(double nu, cplx z) {
  const lcplx zl(z.real(), z.imag());
  const lcplx q = zl * zl / 4.0L;
  long double kmin = std::abs(z);
  lcplx term = 1.0L / std::tgamma(static_cast<long double>(nu) + 1.0L);
  lcplx sum = term;
  for (int k = 0; k < 400; ++k) {
    term *= q / (static_cast<long double>(k + 1) * (k + 1 + static_cast<long double>(nu)));
    sum += term;
    if (k > kmin && std::abs(term) <= 1e-21L * std::abs(sum)) break;
  }
  lcplx pre = 1.0L;
  if (nu != 0.0) pre = std::pow(zl / 2.0L, static_cast<long double>(nu));
  const lcplx r = pre * sum;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

// Hankel expansion: I_nu(z) ~ e^z/sqrt(2 pi z) sum (-1)^k a_k z^{-k}
//   + e^{+-(nu+1/2) pi i} e^{-z}/sqrt(2 pi z) sum a_k z^{-k}, sign + for Im z >= 0.
cplx bessel_i_hankel(double nu, cplx z) {
  const double mu = 4.0 * nu * nu;
  cplx s_alt = 1.0, s_pos = 1.0;
  cplx t = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    t *= (mu - odd * odd) / (8.0 * k) / z;
    const double mag = std::abs(t);
    if (mag == 0.0) break;
    if (mag > prev) break;
    prev = mag;
    s_pos += t;
    s_alt += (k % 2 == 0) ? t : -t;
    if (mag < 1e-17 * std::abs(s_alt)) break;
  }
  const cplx root = std::sqrt(2.0 * std::numbers::pi * z);
  cplx value = std::exp(z) / root * s_alt;
  const bool positive_real = z.imag() == 0.0 && z.real() > 0.0;
  if (!positive_real) {
    const double sgn = z.imag() >= 0.0 ? 1.0 : -1.0;
    const cplx phase = std::exp(cplx(0.0, sgn * (nu + 0.5) * std::numbers::pi));
    value += phase * std::exp(-z) / root * s_pos;
  }
  return value;
}

}  // namespace

std::vector<cplx> eval_poly_all(const PolyFamily& family, int n, cplx x) {
  return recurrence_values<cplx>(family, n, x);
}

std::vector<double> eval_poly_all(const PolyFamily& family, int n, double x) {
  return recurrence_values<double>(family, n, x);
}

cplx eval_poly(const PolyFamily& family, int n, cplx x) { return eval_poly_all(family, n, x).back(); }

double eval_poly(const PolyFamily& family, int n, double x) { return eval_poly_all(family, n, x).back(); }

double eval_weighted_laguerre(double order, int n, double x) {
  if (x < 0.0) throw std::invalid_argument("weighted Laguerre function needs x >= 0");
  const PolyFamily fam = PolyFamily::laguerre(order);
  const double ln = eval_poly(fam, n, x);
  double w = std::exp(-0.5 * x);
  if (order != 0.0) w *= std::pow(x, 0.5 * order);
  return w * ln / std::sqrt(fam.norm_squared(n));
}

cplx bessel_i(double order, cplx x) {
  if (order < 0.0) throw std::invalid_argument("bessel_i order must be nonnegative");
  if (std::abs(x.real()) > 709.0) throw std::overflow_error("bessel_i: argument too large for double");
  if (std::abs(x) <= kBesselCrossover) return bessel_i_series(order, x);
  return bessel_i_hankel(order, x);
}

double bessel_i(double order, double x) {
  if (x < 0.0 && order != std::floor(order)) {
    throw std::domain_error("bessel_i: negative real argument needs integer order");
  }
  return bessel_i(order, cplx(x, 0.0)).real();
}

double bessel_k(double order, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k needs x > 0");
  return boost::math::cyl_bessel_k(order, x);
}

cplx bessel_iota(double order, cplx u) {
  if (std::abs(u) <= 0.25 * kBesselCrossover * kBesselCrossover) {
    const lcplx ul(u.real(), u.imag());
    lcplx term = 1.0L / std::tgamma(static_cast<long double>(order) + 1.0L);
    lcplx sum = term;
    const long double kmin = std::sqrt(std::abs(ul));
    for (int k = 0; k < 400; ++k) {
      term *= ul / (static_cast<long double>(k + 1) * (k + 1 + static_cast<long double>(order)));
      sum += term;
      if (k > kmin && std::abs(term) <= 1e-21L * std::abs(sum)) break;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
  }
  const cplx root = std::sqrt(u);
  cplx v = bessel_i(order, 2.0 * root);
  if (order != 0.0) v *= std::exp(-0.5 * order * std::log(u));
  return v;
}

cplx laguerre_generating(double order, cplx x, cplx z) {
  if (!(std::abs(z) < 1.0)) throw std::invalid_argument("generating function needs |z| < 1");
  return std::pow(1.0 - z, -order - 1.0) * std::exp(x * z / (z - 1.0));
}

double asym_coeff(int m) {
  if (m < 0) throw std::invalid_argument("asym_coeff needs m >= 0");
  double c = 1.0;
  for (int k = 0; k < m; ++k) c *= (k + 0.5) * (k + 0.5) / (2.0 * (k + 1));
  return c;
}

double log_gamma(double x) { return boost::math::lgamma(x); }

}  // namespace lfock
