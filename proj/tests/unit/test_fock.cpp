#include "doctest.h"

#include <cmath>
#include <numbers>

#include "lfock/fock.hpp"
#include "lfock/kernels.hpp"
#include "lfock/specfun.hpp"

using namespace lfock;

TEST_CASE("parameter bundle") {
  const QuantParams p(0.5);
  CHECK(p.c() == doctest::Approx(1.0));
  CHECK(p.alpha_scale() == doctest::Approx(2.0 * std::sqrt(0.5) / 0.5));
  CHECK(p.hbar() == doctest::Approx(0.5));
  CHECK(QuantParams::from_alpha_scale(p.alpha_scale()).epsilon() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(QuantParams(0.999).alpha_scale() > 1000.0);
  CHECK_THROWS(QuantParams(0.0));
  CHECK_THROWS(QuantParams(1.0));
}

TEST_CASE("measure density") {
  const FockMeasure m(QuantParams(0.5));
  CHECK(m.density(cplx(0.0, 1.0)) == doctest::Approx(m.density(cplx(1.0, 0.0))));
  CHECK(m.radial_density(1.0) == doctest::Approx(2.0 / std::numbers::pi * std::cyl_bessel_k(0.0, 2.0 * std::sqrt(2.0))));
}

TEST_CASE("monomial norms") {
  const FockMeasure m(QuantParams(0.5));
  CHECK(monomial_norm(m, 0) == doctest::Approx(0.5));
  CHECK(monomial_norm(m, 1) == doctest::Approx(0.25));
  for (int j = 0; j < 8; ++j)
    CHECK(monomial_norm(m, j + 1) / monomial_norm(m, j) == doctest::Approx(0.25 * (j + 1) * (j + 1) / 0.5));
  CHECK(monomial_norm_quadrature(m, 0).value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(monomial_norm_quadrature(m, 1).value == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("closed form, quadrature and kernel agree on the monomial norms") {
  for (double eps : {0.3, 0.5, 0.7})
    for (double a : {0.0, 1.0}) {
      const FockMeasure m(QuantParams(eps), a);
      for (int j = 0; j <= 5; ++j) {
        const double closed = monomial_norm(m, j);
        CHECK(monomial_norm_quadrature(m, j).value == doctest::Approx(closed).epsilon(1e-9));
        CHECK(monomial_norm_from_kernel(m, j) == doctest::Approx(closed).epsilon(1e-9));
      }
    }
}

TEST_CASE("reproducing kernel consistency") {
  const QuantParams p(0.5);
  const FockMeasure m(p);
  CHECK(std::abs(1.0 / monomial_norm(m, 0) - 1.0 / (1.0 - 0.5)) < 1e-14);
  CHECK(rk_consistency(p, 0.0, 1.0, 1.0, 30) < 1e-10);
  CHECK(rk_consistency(p, 0.0, cplx(0, 2), cplx(0, -2), 40) < 1e-9);
}

TEST_CASE("orthogonality of the exponentially weighted Laguerre polynomials") {
  const QuantParams p(0.5);
  const auto G = orthogonality_matrix(p, 0.0, 3);
  CHECK(G(0, 0).real() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-8));
  CHECK(G(2, 2).real() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-8));
  CHECK(std::abs(G(0, 1)) < 1e-9 * std::abs(G(0, 0)));
  CHECK(orthogonality_target(p, 0.0, 2) == doctest::Approx(2.0 * std::numbers::pi));
}

TEST_CASE("orthogonality at several orders") {
  for (double eps : {0.3, 0.6})
    for (double a : {0.0, 1.0, 2.5}) {
      const QuantParams p(eps);
      const int N = 8;
      const auto G = orthogonality_matrix(p, a, N);
      for (int n = 0; n < N; ++n) {
        CHECK(G(n, n).real() == doctest::Approx(orthogonality_target(p, a, n)).epsilon(1e-7));
        for (int k = 0; k < N; ++k)
          if (k != n) CHECK(std::abs(G(n, k)) <= 1e-7 * std::sqrt(std::abs(G(n, n)) * std::abs(G(k, k))));
      }
    }
}

TEST_CASE("the multiplication map is unitary") {
  const auto G = ml_gram(QuantParams(0.4), 0.0, 6);
  CHECK((G - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("multiplication map on functions") {
  const QuantParams p(0.4);
  auto one = [](cplx) { return cplx(1.0); };
  const auto g = apply_ML(p, one, MLDirection::Forward);
  const cplx z(0.3, -1.1);
  CHECK(std::abs(g(z) - std::exp(p.c() * z)) < 1e-14);
  auto f = [](cplx w) { return w * w - 2.0 * w; };
  const auto back = apply_ML(p, apply_ML(p, f, MLDirection::Forward), MLDirection::Inverse);
  for (cplx w : {cplx(0.0), cplx(1.0, 2.0), cplx(-3.0, 0.5)}) CHECK(std::abs(back(w) - f(w)) < 1e-12 * (1 + std::abs(f(w))));

  // ||e^{cz} L_1||^2 = diagonal of the orthogonality matrix times the measure prefactor
  const FockMeasure m(p);
  const auto L1 = [](cplx w) { return 1.0 - w; };
  const double nrm = fock_norm_squared(m, apply_ML(p, L1, MLDirection::Forward)).value;
  CHECK(nrm == doctest::Approx(m.prefactor() * orthogonality_target(p, 0.0, 1)).epsilon(1e-8));
  CHECK(nrm == doctest::Approx(1.0 / 0.4).epsilon(1e-8));
}
