#pragma once

#include <Eigen/Dense>
#include <vector>

namespace lfock {

/// theta = log((1 + sqrt(eps)) / (1 - sqrt(eps))), so tanh(theta/2) = sqrt(eps).
struct SqueezeParams {
  explicit SqueezeParams(double epsilon);
  static SqueezeParams from_theta(double theta);
  double epsilon;
  double theta;
};

/// Ladder matrix in the basis e_n: Q_{n+1,n} = -(n+1), Q_{n-1,n} = n.
Eigen::MatrixXd q_matrix(int N);

/// exp((theta/2) Q) on the first N basis vectors (plain truncation).
Eigen::MatrixXd squeeze_matrix(const SqueezeParams& sq, int N);

/// Coefficients a_m, m < N, of E_{eps,n} = sum_m a_m e_m:
/// a_m = sqrt(1-eps) eps^{n/2} (-1)^m sum_j C(n,j) C(m,j) (-(1-eps)/sqrt(eps))^j eps^{(m-j)/2}.
Eigen::VectorXd target_coeffs(double epsilon, int n, int N);

/// Coefficients of e^{-z/2} L_n(z) in the e_m basis: sqrt(2 pi) sum_j C(n,j) C(m,j) 2^j.
Eigen::VectorXd laguerre_exp_coeffs(int n, int N);

struct SqueezeCheck {
  double deviation = 0.0;  // || (U e_n)[0:N) - target[0:N) ||
  int working_dim = 0;     // dimension the exponential was taken in
  double target_leakage = 0.0;  // 1 - ||target[0:N)||^2
};

/// Compares U_eps e_n with E_{eps,n} on the first N coordinates. The
/// exponential is taken in a working dimension doubled from N until those
/// coordinates change by less than 1e-12.
SqueezeCheck verify_theorem7(double epsilon, int n, int N);

/// The same check for n = 0..n_max sharing one exponential.
std::vector<SqueezeCheck> verify_theorem7_batch(double epsilon, int n_max, int N);

/// ||(Q v - (2n+1) v)|| / ||v|| over rows 0..N-2 for v = laguerre_exp_coeffs(n, N).
double q_eigen_residual(int n, int N);

}  // namespace lfock
