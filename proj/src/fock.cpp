#include "lfock/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lfock/kernels.hpp"
#include "lfock/specfun.hpp"

namespace lfock {

namespace {

// log(r^a K_a(kappa r)) + shift r, robust against under/overflow.
double log_radial_bessel(double order, double kappa, double r) {
  const double k = bessel_k(order, kappa * r);
  if (k == 0.0) return -std::numeric_limits<double>::infinity();
  return order * std::log(r) + std::log(k);
}

}  // namespace

FockMeasure::FockMeasure(QuantParams params, double order) : params_(params), order_(order) {
  if (!(order > -0.5)) throw std::invalid_argument("Fock measure order must exceed -1/2");
}

double FockMeasure::prefactor() const {
  const double eps = params_.epsilon();
  return 2.0 * std::pow(eps, 1.0 + 0.5 * order_) / (params_.hbar() * std::numbers::pi);
}

double FockMeasure::radial_density(double r) const {
  if (r == 0.0) {
    if (order_ > 0.0) {
      // r^a K_a(kappa r) -> Gamma(a) 2^{a-1} / kappa^a
      return prefactor() * std::tgamma(order_) * std::pow(2.0, order_ - 1.0) / std::pow(kappa(), order_);
    }
    return std::numeric_limits<double>::infinity();
  }
  return prefactor() * std::exp(log_radial_bessel(order_, kappa(), r));
}

double log_monomial_norm(const FockMeasure& m, int j) {
  if (j < 0) throw std::invalid_argument("monomial index must be nonnegative");
  const double eps = m.params().epsilon();
  const double a = m.order();
  return (2.0 * j + a + kMonomialNormHbarShift) * std::log(m.params().hbar()) - j * std::log(eps) +
         log_gamma(j + 1.0) + log_gamma(j + a + 1.0);
}

double monomial_norm(const FockMeasure& m, int j) { return std::exp(log_monomial_norm(m, j)); }

Integral<double> monomial_norm_quadrature(const FockMeasure& m, int j, double tol) {
  auto rho = [&](double r) { return r == 0.0 ? 0.0 : m.radial_density(r); };
  auto f = [&](cplx w) { return std::pow(std::norm(w), j); };
  return integrate_plane<double>(rho, f, tol, 0);
}

double monomial_norm_from_kernel(const FockMeasure& m, int j) {
  const QuantParams& p = m.params();
  const double eps = p.epsilon();
  // Radius where the j-th term of sum |z|^{2k}/N_k dominates: N_{j+1}/N_j ~ r^2.
  const double r2 = std::max(1e-2, p.hbar() * p.hbar() * (j + 1.0) * (j + 1.0 + m.order()) / eps);
  const double r = std::sqrt(r2);
  const int M = 4 * (j + 1) + 256;
  cplx acc = 0.0;
  for (int i = 0; i < M; ++i) {
    const double th = 2.0 * std::numbers::pi * i / M;
    acc += fock_kernel(p, m.order(), std::polar(r, th), r) * std::polar(1.0, -j * th);
  }
  const double coeff = acc.real() / M / std::pow(r2, j);
  return 1.0 / coeff;
}

double rk_consistency(const QuantParams& p, double order, cplx z, cplx w, int J) {
  if (J < 0) throw std::invalid_argument("J must be nonnegative");
  const FockMeasure m(p, order);
  const cplx u = z * std::conj(w);
  cplx sum = 0.0;
  for (int j = 0; j <= J; ++j) {
    const cplx term = j == 0 ? cplx(1.0) : std::exp(static_cast<double>(j) * std::log(u));
    sum += term * std::exp(-log_monomial_norm(m, j));
  }
  return std::abs(sum - fock_kernel(p, order, z, w));
}

double orthogonality_target(const QuantParams& p, double order, int n) {
  const double eps = p.epsilon();
  return p.hbar() * std::numbers::pi / (2.0 * std::pow(eps, 1.0 + 0.5 * order)) *
         std::exp(log_gamma(n + order + 1.0) - log_gamma(n + 1.0) - n * std::log(eps));
}

Eigen::MatrixXcd ml_gram(const QuantParams& p, double order, int N, double tol) {
  if (N < 1) throw std::invalid_argument("ml_gram needs N >= 1");
  const FockMeasure m(p, order);
  const double c = p.c();
  const double kappa = m.kappa();
  const double pre = m.prefactor();
  const PolyFamily fam = PolyFamily::laguerre(order);
  std::vector<double> scale(N);
  for (int n = 0; n < N; ++n) scale[n] = std::exp(0.5 * n * std::log(p.epsilon())) / std::sqrt(fam.norm_squared(n));
  // e^{2c Re z} = e^{2cr} e^{2c(Re z - r)}: the first factor joins the radial weight.
  auto rho = [&](double r) -> double {
    if (r == 0.0) return 0.0;
    return pre * std::exp(log_radial_bessel(order, kappa, r) + 2.0 * c * r);
  };
  auto f = [&](cplx z) -> Eigen::MatrixXcd {
    const std::vector<cplx> L = eval_poly_all(fam, N - 1, z);
    Eigen::VectorXcd v(N);
    for (int n = 0; n < N; ++n) v(n) = L[n] * scale[n];
    const double e = std::exp(2.0 * c * (z.real() - std::abs(z)));
    return (v * v.adjoint()) * e;
  };
  return integrate_plane<Eigen::MatrixXcd>(rho, f, tol, N).value;
}

Eigen::MatrixXcd orthogonality_matrix(const QuantParams& p, double order, int N, double tol) {
  Eigen::MatrixXcd G = ml_gram(p, order, N, tol);
  const FockMeasure m(p, order);
  const PolyFamily fam = PolyFamily::laguerre(order);
  std::vector<double> unscale(N);
  for (int n = 0; n < N; ++n) {
    unscale[n] = std::exp(-0.5 * n * std::log(p.epsilon())) * std::sqrt(fam.norm_squared(n));
  }
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < N; ++k) G(n, k) *= unscale[n] * unscale[k] / m.prefactor();
  }
  return G;
}

std::function<cplx(cplx)> apply_ML(const QuantParams& p, std::function<cplx(cplx)> f, MLDirection dir) {
  const double c = dir == MLDirection::Forward ? p.c() : -p.c();
  return [c, f = std::move(f)](cplx z) { return std::exp(c * z) * f(z); };
}

Integral<double> fock_norm_squared(const FockMeasure& m, const std::function<cplx(cplx)>& f, double tol,
                                   int angular_degree) {
  auto rho = [&](double r) { return r == 0.0 ? 0.0 : m.radial_density(r); };
  auto g = [&](cplx w) { return std::norm(f(w)); };
  return integrate_plane<double>(rho, g, tol, angular_degree);
}

}  // namespace lfock
