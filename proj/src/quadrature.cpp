#include "lfock/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "lfock/specfun.hpp"

namespace lfock {

namespace {

constexpr double kRescale = 1e150;

// Orthonormal values and first derivatives up to degree n, common scale.
void orthonormal_sweep(const PolyFamily& fam, int n, double x, std::vector<double>& p, std::vector<double>& dp,
                       double& log_scale) {
  p.assign(static_cast<std::size_t>(n) + 1, 0.0);
  dp.assign(static_cast<std::size_t>(n) + 1, 0.0);
  log_scale = 0.0;
  p[0] = 1.0 / std::sqrt(fam.total_mass());
  if (n == 0) return;
  p[1] = (x - fam.monic_a(0)) * p[0] / std::sqrt(fam.monic_b(1));
  dp[1] = p[0] / std::sqrt(fam.monic_b(1));
  for (int k = 1; k < n; ++k) {
    const double sb = std::sqrt(fam.monic_b(k));
    const double sb1 = std::sqrt(fam.monic_b(k + 1));
    const double xa = x - fam.monic_a(k);
    p[k + 1] = (xa * p[k] - sb * p[k - 1]) / sb1;
    dp[k + 1] = (p[k] + xa * dp[k] - sb * dp[k - 1]) / sb1;
    if (std::abs(p[k + 1]) > kRescale || std::abs(dp[k + 1]) > kRescale) {
      for (int j = 0; j <= k + 1; ++j) {
        p[j] /= kRescale;
        dp[j] /= kRescale;
      }
      log_scale += std::log(kRescale);
    }
  }
}

}  // namespace

ScaledValues orthonormal_values(const PolyFamily& family, int n, double x) {
  std::vector<double> p, dp;
  double s = 0.0;
  orthonormal_sweep(family, n, x, p, dp, s);
  return {std::move(p), s};
}

QuadRule gauss_rule(const PolyFamily& family, int N) {
  if (N <= 0) throw std::invalid_argument("gauss_rule needs N >= 1");
  QuadRule rule;
  rule.family = family;
  rule.exactness = 2 * N - 1;
  Eigen::VectorXd diag(N);
  Eigen::VectorXd sub(std::max(N - 1, 0));
  for (int k = 0; k < N; ++k) diag(k) = family.monic_a(k);
  for (int k = 1; k < N; ++k) sub(k - 1) = std::sqrt(family.monic_b(k));
  Eigen::VectorXd x;
  if (N == 1) {
    x = diag;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    x = es.eigenvalues();
  }
  rule.nodes.resize(N);
  rule.weights.resize(N);
  std::vector<double> p, dp;
  for (int i = 0; i < N; ++i) {
    double xi = x(i);
    double s = 0.0;
    for (int it = 0; it < 3 && N > 1; ++it) {
      orthonormal_sweep(family, N, xi, p, dp, s);
      if (dp[N] == 0.0) break;
      const double step = p[N] / dp[N];
      xi -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(xi))) break;
    }
    orthonormal_sweep(family, N - 1, xi, p, dp, s);
    double sum = 0.0;
    for (int k = 0; k < N; ++k) sum += p[k] * p[k];
    rule.nodes[i] = xi;
    rule.weights[i] = std::exp(-2.0 * s) / sum;
  }
  return rule;
}

Eigen::MatrixXd basis_at_nodes(const QuadRule& rule, int nbasis) {
  const int M = static_cast<int>(rule.nodes.size());
  if (nbasis > M) throw std::invalid_argument("basis_at_nodes: more basis functions than nodes");
  Eigen::MatrixXd V(nbasis, M);
  std::vector<double> p, dp;
  for (int i = 0; i < M; ++i) {
    double s = 0.0;
    // sqrt(w_i) = 1/sqrt(sum_k p_k^2) by the Christoffel formula; the
    // common scale cancels, so tiny weights never underflow here.
    orthonormal_sweep(rule.family, M - 1, rule.nodes[i], p, dp, s);
    double sum = 0.0;
    for (int k = 0; k < M; ++k) sum += p[k] * p[k];
    const double factor = 1.0 / std::sqrt(sum);
    for (int n = 0; n < nbasis; ++n) V(n, i) = rule.family.leading_sign(n) * p[n] * factor;
  }
  return V;
}

Integral<double> radial_k_moment(double order, double scale, int k, double tol) {
  if (!(scale > 0.0)) throw std::invalid_argument("radial_k_moment needs scale > 0");
  if (k < 0) throw std::invalid_argument("radial_k_moment needs k >= 0");
  const double power = 2.0 * k + order + 1.0;
  auto g = [&](double r) -> double {
    const double kr = bessel_k(order, scale * r);
    if (kr == 0.0) return 0.0;
    return 4.0 * std::exp(power * std::log(r) + std::log(kr));
  };
  Integral<double> res = integrate_radial<double>(g, tol);
  if (res.error_bound > 10.0 * tol * std::abs(res.value)) {
    throw ConvergenceError("radial_k_moment: tolerance not met");
  }
  return res;
}

double radial_k_moment_exact(double order, double scale, int k) {
  return std::exp((2.0 * k + order + 2.0) * std::log(2.0 / scale) + log_gamma(k + 1.0) +
                  log_gamma(k + order + 1.0));
}

}  // namespace lfock
