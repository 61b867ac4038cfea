#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "lfock/fock.hpp"
#include "lfock/kernels.hpp"
#include "lfock/quadrature.hpp"
#include "lfock/specfun.hpp"

using namespace lfock;

TEST_CASE("Laguerre kernel closed form") {
  const QuantParams p(0.5);
  CHECK(std::abs(laguerre_kernel_closed(p, 0.0, 0.0, 0.0) - 2.0) < 1e-14);
  // 40 terms of sum eps^n L_n(1)^2 plus a geometric remainder bound
  const auto L = eval_poly_all(PolyFamily::laguerre(), 40, 1.0);
  double s = 0.0;
  for (int n = 0; n <= 40; ++n) s += std::pow(0.5, n) * L[n] * L[n];
  CHECK(std::abs(laguerre_kernel_closed(p, 0.0, 1.0, 1.0) - s) < 1e-10);
  // order 1 at y = 0: iota_1(0) = 1, leaving (1-eps)^{-2} e^{-cx}
  const cplx x(0.7, 0.2);
  const cplx at_origin = laguerre_kernel_closed(p, 1.0, x, 0.0);
  CHECK(std::abs(at_origin - std::exp(-p.c() * x) / 0.25) < 1e-13);
  CHECK(std::abs(at_origin - laguerre_kernel_series(p, 1.0, x, 0.0, 1e-13).series_value) < 1e-11);
}

TEST_CASE("Laguerre kernel series agrees with the closed form") {
  const QuantParams p(0.5);
  const auto at0 = laguerre_kernel_series(p, 0.0, 0.0, 0.0, 1e-12);
  CHECK(std::abs(at0.series_value - 2.0) < 1e-11);
  const auto v = laguerre_kernel_series(p, 0.0, 2.0, 3.0, 1e-9);
  CHECK(std::abs(v.series_value - laguerre_kernel_closed(p, 0.0, 2.0, 3.0)) < 1e-9 * std::abs(v.series_value));
  CHECK(v.tail_bound <= 1e-9 * std::max(1.0, std::abs(v.series_value)));
  const auto c = laguerre_kernel_series(p, 0.0, cplx(1, 1), cplx(1, -1), 1e-10);
  CHECK(std::abs(c.series_value - laguerre_kernel_closed(p, 0.0, cplx(1, 1), cplx(1, -1))) < 1e-9);
  const auto a = laguerre_kernel_series(QuantParams(0.3), 1.5, 0.8, 2.1, 1e-11);
  CHECK(std::abs(a.series_value - laguerre_kernel_closed(QuantParams(0.3), 1.5, 0.8, 2.1)) < 1e-10);
}

TEST_CASE("weighted Laguerre kernel is the kernel of eps^A") {
  const QuantParams p(0.4);
  CHECK(weighted_laguerre_kernel(p, 0.0, 0.0) == doctest::Approx(1.0 / 0.6));
  CHECK(weighted_laguerre_kernel(p, 1.3, 4.2) == doctest::Approx(weighted_laguerre_kernel(p, 4.2, 1.3)));
  const auto rule = gauss_rule(PolyFamily::laguerre(), 120);
  for (int n = 0; n <= 6; ++n)
    for (double x : {0.2, 1.5, 5.0}) {
      // integral over y of K(x, y) l_n(y); the Gauss weight e^{-y} is undone
      const double I = rule.integrate([&](double y) {
        return weighted_laguerre_kernel(p, x, y) * eval_weighted_laguerre(0.0, n, y) * std::exp(y);
      });
      CHECK(std::abs(I - std::pow(0.4, n) * eval_weighted_laguerre(0.0, n, x)) < 1e-8);
    }
}

TEST_CASE("Hermite kernel") {
  const double eps = 0.6;
  const auto v = hermite_kernel_series(eps, 0.0, 0.0, 1e-13);
  CHECK(v.series_value.real() ==
        doctest::Approx(1.0 / std::sqrt(1 - eps * eps) / std::sqrt(std::numbers::pi)).epsilon(1e-12));
  CHECK(hermite_kernel_series(1e-12, 0.3, 0.3, 1e-13).series_value.real() ==
        doctest::Approx(std::exp(-0.0) / std::sqrt(std::numbers::pi)).epsilon(1e-10));
  const auto a = hermite_kernel_series(eps, 0.4, -1.1, 1e-12).series_value;
  const auto b = hermite_kernel_series(eps, -1.1, 0.4, 1e-12).series_value;
  CHECK(std::abs(a - b) < 1e-14);
  // Mehler's formula
  const double x = 0.4, y = -1.1;
  const double mehler = std::exp((2 * eps * x * y - eps * eps * (x * x + y * y)) / (1 - eps * eps)) /
                        std::sqrt(std::numbers::pi * (1 - eps * eps));
  CHECK(a.real() == doctest::Approx(mehler).epsilon(1e-11));
}

TEST_CASE("Legendre kernel values") {
  const double eps = 0.5;
  const auto one = legendre_kernel_series(eps, 1.0, 1.0, 1e-13);
  CHECK(one.series_value.real() == doctest::Approx((1 + eps) / (2 * (1 - eps) * (1 - eps))).epsilon(1e-12));
  const auto alt = legendre_kernel_series(eps, 1.0, -1.0, 1e-13);
  double partial = 0.0;
  for (int n = 0; n < 200; ++n) partial += ((n % 2) ? -1.0 : 1.0) * (n + 0.5) * std::pow(eps, n);
  CHECK(alt.series_value.real() == doctest::Approx(partial).epsilon(1e-12));
  CHECK(alt.series_value.real() == doctest::Approx((1 - eps) / (2 * (1 + eps) * (1 + eps))).epsilon(1e-12));
}

TEST_CASE("Legendre double-series closed form") {
  const double pi = std::numbers::pi;
  CHECK(legendre_kernel_closed(0.5, pi / 4, pi / 4, 1e-12).series_value.real() ==
        doctest::Approx(legendre_kernel_series(0.5, 0.0, 0.0, 1e-13).series_value.real()).epsilon(1e-9));
  CHECK(legendre_kernel_closed(0.3, pi / 4, pi / 4, 1e-12).series_value.real() ==
        doctest::Approx(legendre_kernel_series(0.3, 0.0, 0.0, 1e-13).series_value.real()).epsilon(1e-9));
  CHECK(legendre_kernel_closed(0.4, 0.0, 0.0, 1e-12).series_value.real() ==
        doctest::Approx(1.4 / (2 * 0.36)).epsilon(1e-10));
  CHECK(legendre_kernel_closed(1e-14, 0.3, 1.1, 1e-12).series_value.real() == doctest::Approx(0.5).epsilon(1e-10));
  const double phi = 0.37, theta = 1.02;
  CHECK(legendre_kernel_closed(0.6, phi, theta, 1e-12).series_value.real() ==
        doctest::Approx(legendre_kernel_series(0.6, std::cos(2 * phi), std::cos(2 * theta), 1e-13).series_value.real())
            .epsilon(1e-9));
}

TEST_CASE("Legendre kernel domain") {
  CHECK(legendre_domain_contains(0.5, 0.3, -0.8));
  CHECK(legendre_domain_contains(0.25, 1.2, 1.2));
  CHECK_FALSE(legendre_domain_contains(0.25, 1.3, 1.3));
}

TEST_CASE("Fock kernel") {
  const QuantParams p(0.5);
  CHECK(std::abs(fock_kernel(p, 0.0, 0.0, cplx(2, 3)) - 2.0) < 1e-14);
  CHECK(std::abs(fock_kernel(p, 0.0, cplx(2, 3), 0.0) - 2.0) < 1e-14);
  // monomial expansion at z = 1, w = i
  const FockMeasure m(p);
  const cplx z = 1.0, w(0, 1);
  cplx s = 0.0;
  for (int j = 0; j < 60; ++j) s += std::pow(z * std::conj(w), j) / monomial_norm(m, j);
  CHECK(std::abs(s - fock_kernel(p, 0.0, z, w)) < 1e-9);
  // e^{cz} K_1(z, w) e^{c conj w} with the real-line Laguerre kernel
  for (double a : {0.0, 1.0}) {
    const cplx x(0.6, 0.4), y(1.2, -0.3);
    const cplx lhs = fock_kernel(p, a, x, y);
    const cplx rhs = std::exp(p.c() * x) * laguerre_kernel_closed(p, a, x, y) * std::exp(p.c() * std::conj(y));
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("Hermitian symmetry and positivity") {
  const QuantParams p(0.6);
  const std::vector<cplx> pts = {cplx(0.1, 0.2), cplx(1.0, -0.5), cplx(-0.7, 0.9), cplx(2.0, 0.0), cplx(0.3, -1.4)};
  for (double a : {0.0, 1.5}) {
    Eigen::MatrixXcd G(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) G(i, j) = fock_kernel(p, a, pts[i], pts[j]);
    CHECK((G - G.adjoint()).cwiseAbs().maxCoeff() < 1e-12 * G.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * G.trace().real());
  }
  Eigen::MatrixXd H(5, 5), P(5, 5);
  const std::vector<double> xs = {-1.2, -0.3, 0.1, 0.8, 1.7};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      H(i, j) = hermite_kernel_series(0.6, xs[i], xs[j], 1e-13).series_value.real();
      P(i, j) = legendre_kernel_series(0.6, xs[i] / 2, xs[j] / 2, 1e-13).series_value.real();
    }
  CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H).eigenvalues().minCoeff() >= -1e-10 * H.trace());
  CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(P).eigenvalues().minCoeff() >= -1e-10 * P.trace());
}
