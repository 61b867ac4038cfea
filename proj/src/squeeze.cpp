#include "lfock/squeeze.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lfock/params.hpp"
#include "lfock/specfun.hpp"

namespace lfock {

namespace {

long double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  return std::exp(std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L));
}

}  // namespace

SqueezeParams::SqueezeParams(double eps) : epsilon(eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1)");
  const double s = std::sqrt(eps);
  theta = std::log((1.0 + s) / (1.0 - s));
}

SqueezeParams SqueezeParams::from_theta(double theta) {
  const double s = std::tanh(0.5 * theta);
  return SqueezeParams(s * s);
}

Eigen::MatrixXd q_matrix(int N) {
  if (N < 2) throw std::invalid_argument("q_matrix needs N >= 2");
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(N, N);
  for (int n = 0; n + 1 < N; ++n) {
    Q(n + 1, n) = -(n + 1.0);
    Q(n, n + 1) = n + 1.0;
  }
  return Q;
}

Eigen::MatrixXd squeeze_matrix(const SqueezeParams& sq, int N) {
  const Eigen::MatrixXd A = (0.5 * sq.theta) * q_matrix(N);
  return A.exp();
}

Eigen::VectorXd target_coeffs(double epsilon, int n, int N) {
  if (n < 0 || n >= N) throw std::invalid_argument("target_coeffs needs 0 <= n < N");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1)");
  Eigen::VectorXd a(N);
  if (epsilon == 0.0) {
    a.setZero();
    a(n) = 1.0;
    return a;
  }
  const long double se = std::sqrt(static_cast<long double>(epsilon));
  const long double r = -(1.0L - epsilon) / se;
  const long double pre = std::sqrt(1.0L - epsilon) * std::pow(se, static_cast<long double>(n));
  for (int m = 0; m < N; ++m) {
    long double s = 0.0L;
    for (int j = 0; j <= std::min(n, m); ++j) {
      s += binom(n, j) * binom(m, j) * std::pow(r, static_cast<long double>(j)) *
           std::pow(se, static_cast<long double>(m - j));
    }
    a(m) = static_cast<double>(pre * ((m % 2) ? -s : s));
  }
  return a;
}

Eigen::VectorXd laguerre_exp_coeffs(int n, int N) {
  Eigen::VectorXd v(N);
  const long double root = std::sqrt(2.0L * std::numbers::pi_v<long double>);
  for (int m = 0; m < N; ++m) {
    long double s = 0.0L;
    for (int j = 0; j <= std::min(n, m); ++j) s += binom(n, j) * binom(m, j) * std::pow(2.0L, j);
    v(m) = static_cast<double>(root * s);
  }
  return v;
}

std::vector<SqueezeCheck> verify_theorem7_batch(double epsilon, int n_max, int N) {
  if (n_max < 0 || n_max >= N) throw std::invalid_argument("verify_theorem7 needs 0 <= n < N");
  const SqueezeParams sq(epsilon);
  int dim = N;
  Eigen::MatrixXd cols = squeeze_matrix(sq, dim).topLeftCorner(N, n_max + 1);
  for (int it = 0; it < 6; ++it) {
    const int next = 2 * dim;
    const Eigen::MatrixXd c2 = squeeze_matrix(sq, next).topLeftCorner(N, n_max + 1);
    const double change = (c2 - cols).cwiseAbs().maxCoeff();
    dim = next;
    cols = c2;
    if (change < 1e-12) break;
  }
  std::vector<SqueezeCheck> out;
  for (int n = 0; n <= n_max; ++n) {
    const Eigen::VectorXd target = target_coeffs(epsilon, n, N);
    SqueezeCheck c;
    c.target_leakage = 1.0 - target.squaredNorm();
    c.working_dim = dim;
    c.deviation = (cols.col(n) - target).norm();
    out.push_back(c);
  }
  return out;
}

SqueezeCheck verify_theorem7(double epsilon, int n, int N) {
  if (n < 0) throw std::invalid_argument("verify_theorem7 needs n >= 0");
  return verify_theorem7_batch(epsilon, n, N).back();
}

double q_eigen_residual(int n, int N) {
  const Eigen::VectorXd v = laguerre_exp_coeffs(n, N);
  const Eigen::VectorXd r = q_matrix(N) * v - (2.0 * n + 1.0) * v;
  return r.head(N - 1).norm() / v.head(N - 1).norm();
}

}  // namespace lfock
