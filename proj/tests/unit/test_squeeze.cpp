#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "lfock/squeeze.hpp"

using namespace lfock;

TEST_CASE("ladder matrix") {
  Eigen::MatrixXd expect(3, 3);
  expect << 0, 1, 0, -1, 0, 2, 0, -2, 0;
  const auto Q = q_matrix(3);
  CHECK((Q - expect).cwiseAbs().maxCoeff() == 0.0);
  CHECK((Q + Q.transpose()).cwiseAbs().maxCoeff() == 0.0);
  Eigen::Vector3d e0(1, 0, 0);
  CHECK((Q * e0 - Eigen::Vector3d(0, -1, 0)).norm() == 0.0);
}

TEST_CASE("squeeze parameters") {
  const SqueezeParams sq(0.25);
  CHECK(std::tanh(sq.theta / 2) == doctest::Approx(0.5));
  CHECK(SqueezeParams::from_theta(sq.theta).epsilon == doctest::Approx(0.25));
  const auto U = squeeze_matrix(SqueezeParams(1e-16), 10);
  CHECK((U - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("squeeze matrix is orthogonal away from the truncation edge") {
  const int N = 80;
  for (double eps : {0.1, 0.25, 0.5}) {
    const auto U = squeeze_matrix(SqueezeParams(eps), N);
    const int k = N - 10;
    // interior columns have negligible mass beyond the truncation
    const Eigen::MatrixXd G = U.leftCols(k).transpose() * U.leftCols(k);
    const double tol = eps <= 0.25 ? 1e-10 : 1e-6;
    CHECK((G.topLeftCorner(k / 2, k / 2) - Eigen::MatrixXd::Identity(k / 2, k / 2)).cwiseAbs().maxCoeff() < tol);
  }
  const auto U = squeeze_matrix(SqueezeParams(0.25), N);
  for (int m = 0; m < 30; ++m) CHECK(std::abs(U(m, 0) - std::sqrt(0.75) * std::pow(-0.5, m)) < 1e-10);
}

TEST_CASE("group law on the interior block") {
  const int N = 120;
  const double t1 = 0.4, t2 = 0.7;
  const auto A = squeeze_matrix(SqueezeParams::from_theta(t1), N);
  const auto B = squeeze_matrix(SqueezeParams::from_theta(t2), N);
  const auto C = squeeze_matrix(SqueezeParams::from_theta(t1 + t2), N);
  const int k = 30;
  CHECK(((A * B).topLeftCorner(k, k) - C.topLeftCorner(k, k)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("target coefficients") {
  const auto a = target_coeffs(0.25, 0, 80);
  for (int m = 0; m < 80; ++m) CHECK(std::abs(a(m) - std::sqrt(0.75) * std::pow(-0.5, m)) < 1e-14);
  CHECK(a.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  const auto b = target_coeffs(1e-12, 4, 10);
  for (int m = 0; m < 10; ++m) CHECK(std::abs(std::abs(b(m)) - (m == 4 ? 1.0 : 0.0)) < 1e-5);
  for (double eps : {0.1, 0.25})
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(1.0 - target_coeffs(eps, n, 80).squaredNorm()) < 1e-10);
  // at eps = 0.5 the coefficients of high n spread past 80
  CHECK(1.0 - target_coeffs(0.5, 10, 80).squaredNorm() > 1e-5);
  for (int n = 0; n <= 10; ++n) CHECK(std::abs(1.0 - target_coeffs(0.5, n, 160).squaredNorm()) < 1e-10);
  // orthonormal family
  const auto u = target_coeffs(0.3, 2, 100), v = target_coeffs(0.3, 5, 100);
  CHECK(std::abs(u.dot(v)) < 1e-12);
}

TEST_CASE("squeezed basis vectors") {
  CHECK(verify_theorem7(0.25, 0, 80).deviation < 1e-8);
  CHECK(verify_theorem7(0.25, 5, 80).deviation < 1e-6);
  CHECK(verify_theorem7(0.01, 3, 80).deviation < 1e-9);
  const auto batch = verify_theorem7_batch(0.3, 6, 60);
  REQUIRE(batch.size() == 7);
  for (const auto& c : batch) CHECK(c.deviation < 1e-6);
}

TEST_CASE("exponentially weighted Laguerre vectors are eigenvectors of Q") {
  for (int n = 0; n <= 6; ++n) CHECK(q_eigen_residual(n, 120) < 1e-7);
  const auto v = laguerre_exp_coeffs(0, 5);
  CHECK(v(0) > 0.0);
}
