#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "lfock/specfun.hpp"
#include "lfock/toeplitz.hpp"

using namespace lfock;

namespace {

double op_norm(const Eigen::MatrixXcd& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M.adjoint() * M, Eigen::EigenvaluesOnly);
  return std::sqrt(es.eigenvalues().maxCoeff());
}

}  // namespace

TEST_CASE("Gram matrices") {
  const int N = 12;
  for (const auto& fam : {PolyFamily::laguerre(), PolyFamily::legendre(), PolyFamily::hermite()}) {
    const auto G = gram(SymbolFn::polynomial(std::vector<double>{1.0}), fam, N);
    CHECK((G - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff() < 1e-12);
  }
  const auto L = gram(SymbolFn::polynomial(std::vector<double>{0.0, 1.0}), PolyFamily::laguerre(), N);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      double expect = 0.0;
      if (n == m) expect = 2 * n + 1;
      if (std::abs(n - m) == 1) expect = -(std::max(n, m));
      CHECK(std::abs(L(n, m) - expect) < 1e-11);
    }
  const auto P = gram(SymbolFn::polynomial(std::vector<double>{0.0, 1.0}), PolyFamily::legendre(), N);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m)
      if (std::abs(n - m) != 1) CHECK(std::abs(P(n, m)) < 1e-13);
}

TEST_CASE("callable symbols use quadrature") {
  const auto f = SymbolFn::callable([](double x) { return cplx(x * x, 0.0); }, 1.0);
  const auto g = SymbolFn::polynomial(std::vector<double>{0.0, 0.0, 1.0});
  const auto A = gram(f, PolyFamily::legendre(), 10);
  const auto B = gram(g, PolyFamily::legendre(), 10);
  CHECK((A - B).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Toeplitz matrix factorization and contraction") {
  const QuantParams p(0.7);
  const auto one = toeplitz_matrix(p, SymbolFn::polynomial(std::vector<double>{1.0}), PolyFamily::laguerre(), 8);
  for (int n = 0; n < 8; ++n) CHECK(std::abs(one.matrix(n, n) - std::pow(0.7, n)) < 1e-13);

  const auto f = SymbolFn::callable([](double x) { return cplx(std::sin(x) / (1 + x), 0.0); }, 1.0);
  const QuantParams p9(0.9);
  const auto T = toeplitz_matrix(p9, f, PolyFamily::laguerre(), 200);
  CHECK(op_norm(T.matrix) <= 1.0);
  const auto G = gram(f, PolyFamily::laguerre(), 200);
  for (int n : {0, 7, 150}) CHECK((T.matrix.row(n) - std::pow(0.9, n) * G.row(n)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("random bounded symbols give contractions") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = U(rng), b = 3.0 * U(rng), c = U(rng);
    // |f| <= |a| + |c| on the real line
    const auto f = SymbolFn::callable(
        [=](double x) { return cplx(a * std::cos(b * x), c * std::sin(x) / (1 + x * x)); }, std::abs(a) + std::abs(c));
    const int N = (trial % 2) ? 60 : 120;
    const auto fam = (trial % 3 == 0) ? PolyFamily::legendre() : PolyFamily::laguerre();
    for (double eps : {0.5, 0.9, 0.99}) {
      const auto T = toeplitz_matrix(QuantParams(eps), f, fam, N);
      CHECK(op_norm(T.matrix) <= (std::abs(a) + std::abs(c)) * (1 + 1e-10));
    }
  }
}

TEST_CASE("adjoint is conjugation of the symbol in the Gram matrix") {
  const auto f = SymbolFn::polynomial(std::vector<cplx>{cplx(0.5, 1.0), cplx(0.0, -2.0), cplx(1.0, 0.5)});
  const auto G = gram(f, PolyFamily::laguerre(1.0), 10);
  const auto Gc = gram(f.conj(), PolyFamily::laguerre(1.0), 10);
  CHECK((G.adjoint() - Gc).cwiseAbs().maxCoeff() < 1e-10 * G.cwiseAbs().maxCoeff());
}

TEST_CASE("the number operator") {
  Eigen::VectorXcd u(4);
  u << 1.0, 2.0, 3.0, 4.0;
  const auto Au = apply_A(u);
  CHECK(std::abs(Au(0)) == 0.0);
  CHECK(std::abs(Au(3) - 12.0) < 1e-15);
  const auto fam = PolyFamily::laguerre();
  const auto l0 = basis_polynomial(fam, 0);
  for (double c : apply_A_weighted(fam, l0)) CHECK(std::abs(c) < 1e-15);
  const auto l3 = basis_polynomial(fam, 3);
  const auto q = apply_A_weighted(fam, l3);
  double err = 0.0;
  for (double x = 0.0; x <= 20.0; x += 0.25) {
    double qv = 0.0, pv = 0.0;
    for (std::size_t k = q.size(); k-- > 0;) qv = qv * x + q[k];
    for (std::size_t k = l3.size(); k-- > 0;) pv = pv * x + l3[k];
    err = std::max(err, std::abs(qv - 3.0 * pv) * std::exp(-x / 2));
  }
  CHECK(err < 1e-9);
  Eigen::VectorXcd e5 = Eigen::VectorXcd::Zero(8);
  e5(5) = 1.0;
  CHECK(std::abs(apply_A(e5)(5) - 5.0) < 1e-15);
  CHECK_THROWS(apply_A_weighted(PolyFamily::legendre(), l0));
}

TEST_CASE("expansion in powers of log eps") {
  const auto fam = PolyFamily::laguerre();
  Eigen::VectorXcd l0 = Eigen::VectorXcd::Zero(1);
  l0(0) = 1.0;
  const auto r0 = expansion_residual({0.5, 0.9}, SymbolFn::polynomial(std::vector<double>{1.0}), l0, 0, fam);
  for (double r : r0) CHECK(r == 0.0);

  Eigen::VectorXcd l1 = Eigen::VectorXcd::Zero(2);
  l1(1) = 1.0;
  const std::vector<double> eps = {0.9, 0.95, 0.975};
  const auto r1 = expansion_residual(eps, SymbolFn::polynomial(std::vector<double>{0.0, 1.0}), l1, 1, fam);
  const double slope = std::log(r1[2] / r1[0]) / std::log((1 - eps[2]) / (1 - eps[0]));
  CHECK(slope >= 1.9);

  Eigen::VectorXcd u(3);
  u << 0.3, -1.0, 0.5;
  CHECK(spectral_identity_error(0.6, SymbolFn::polynomial(std::vector<double>{1.0, -2.0, 0.5}), u, fam) < 1e-10);
}

TEST_CASE("commutator leading term") {
  const auto x = SymbolFn::polynomial(std::vector<double>{0.0, 1.0});
  const auto x2 = SymbolFn::polynomial(std::vector<double>{0.0, 0.0, 1.0});
  const double h = 0.004;
  const std::vector<double> eps = {1 - h, 1 - h / 2, 1 - h / 4};
  const auto same = commutator_leading(eps, x, x, PolyFamily::laguerre(), 20);
  CHECK(same.extrapolated.cwiseAbs().maxCoeff() < 1e-12);

  const auto r = commutator_leading(eps, x, x2, PolyFamily::laguerre(), 60);
  CHECK(r.sign == -1);
  CHECK(r.max_rel_error < 0.02);
  CHECK(r.other_sign_error > 1.0);
  const auto s = commutator_leading(eps, x2, x, PolyFamily::laguerre(), 60);
  CHECK((r.extrapolated + s.extrapolated).cwiseAbs().maxCoeff() < 1e-8 * r.extrapolated.cwiseAbs().maxCoeff());
}

TEST_CASE("x-space commutator operator matches the coefficient-space form") {
  // f = x, g = x^2: W = f g' - g f' = x^2, and on u = e^{-x/2}: (x W)' = 3x^2
  const auto q = commutator_operator_weighted({0.0, 1.0}, {0.0, 0.0, 1.0}, {1.0});
  REQUIRE(q.size() >= 4);
  CHECK(std::abs(q[0]) < 1e-15);
  CHECK(std::abs(q[1]) < 1e-15);
  CHECK(std::abs(q[2] - 3.0) < 1e-15);
  CHECK(std::abs(q[3] + 1.0) < 1e-15);
}
