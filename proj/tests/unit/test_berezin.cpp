#include "doctest.h"

#include <cmath>
#include <random>

#include "lfock/berezin.hpp"
#include "lfock/specfun.hpp"

using namespace lfock;

TEST_CASE("Berezin transform of simple symbols") {
  for (double eps : {0.3, 0.5, 0.8})
    for (cplx z : {cplx(0.0), cplx(1.0, 0.5), cplx(-2.0, 1.0)}) {
      const auto one = berezin_numeric(QuantParams(eps), SymbolPoly::monomial(0, 0), z);
      CHECK(std::abs(one.value - 1.0) < 1e-10);
      const auto hol = berezin_numeric(QuantParams(eps), SymbolPoly::monomial(2, 0, cplx(1, 1)), z);
      CHECK(std::abs(hol.value - cplx(1, 1) * z * z) < 1e-10 * (1 + std::norm(z)));
    }
  const auto w = berezin_numeric(QuantParams(0.5), SymbolPoly::monomial(1, 0), 1.0);
  CHECK(std::abs(w.value - 1.0) < 1e-10);
  const auto r2 = berezin_numeric(QuantParams(0.5), SymbolPoly::monomial(1, 1), 0.0);
  CHECK(r2.value.real() == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("moment expansion agrees with plane quadrature") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_real_distribution<double> E(0.2, 0.8);
  for (int trial = 0; trial < 12; ++trial) {
    SymbolPoly f;
    for (int k = 0; k < 3; ++k) f.coeffs[{deg(rng), deg(rng)}] += cplx(U(rng), U(rng));
    const cplx z(1.5 * U(rng), 1.5 * U(rng));
    const QuantParams p(E(rng));
    const auto b = berezin_numeric(p, f, z, 1e-12, false);
    const auto q = berezin_quadrature(p, f, z, 1e-12);
    CHECK(std::abs(b.value - q.value) <= 1e-8 * std::max(1.0, std::abs(b.value)));
  }
}

TEST_CASE("origin formula") {
  const QuantParams p(0.5);
  CHECK(berezin_origin(p, SymbolPoly::monomial(1, 1), 5) == doctest::Approx(0.5));
  CHECK(berezin_origin(p, SymbolPoly::monomial(0, 0), 5) == doctest::Approx(1.0));
  // w conj(w)^2 is unbalanced: zero at the origin
  CHECK(std::abs(berezin_origin(p, SymbolPoly::monomial(1, 2), 5)) < 1e-15);
  SymbolPoly f = SymbolPoly::monomial(2, 2, 0.3);
  f.coeffs[{1, 1}] = 2.0;
  f.coeffs[{1, 2}] = 1.0;
  CHECK(berezin_origin(p, f, 5) == doctest::Approx(berezin_numeric(p, f, 0.0).value.real()).epsilon(1e-10));
}

TEST_CASE("asymptotic fit slopes") {
  const SymbolPoly f = SymbolPoly::monomial(1, 1);
  const auto grid = default_alpha_grid();
  const auto s0 = asymptotic_fit(f, 1.0, 0, grid);
  CHECK(s0.slope == doctest::Approx(-1.0).epsilon(0.05));
  const auto s1 = asymptotic_fit(f, 1.0, 1, grid);
  CHECK(s1.slope == doctest::Approx(-2.0).epsilon(0.05));
  CHECK(s1.target == -2.0);
  const auto hol = asymptotic_fit(SymbolPoly::monomial(3, 0), cplx(0.5, 0.5), 1, grid);
  CHECK(hol.exact);
  CHECK_THROWS(asymptotic_fit(f, 0.0, 1, grid));
  CHECK_THROWS(asymptotic_fit(f, 1.0, 1, {20.0, 40.0, 80.0}));
}

TEST_CASE("second-order term against the numerical transform") {
  // (B f - f - Q_1 f / alpha) alpha^2 -> Q_2 f = 2 for f = |w|^2 at z = 1
  const QuantParams p = QuantParams::from_alpha_scale(160.0);
  const SymbolPoly f = SymbolPoly::monomial(1, 1);
  const cplx b = berezin_numeric(p, f, 1.0).value;
  const double a = p.alpha_scale();
  const double rem = (b.real() - 1.0 - 4.0 / a) * a * a;
  CHECK(rem == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("Bessel asymptotics against the R operators") {
  const auto r = i0_asymptotic_check(2, {10, 20, 40, 80, 160});
  CHECK(r.exact_match);
  CHECK(r.next_coeff == doctest::Approx(75.0 / 1024));
  CHECK(r.scaled_residual.back() == doctest::Approx(75.0 / 1024).epsilon(0.05));
}

TEST_CASE("Stokes consistency at the origin") {
  const auto s = stokes_check(QuantParams(0.6), SymbolPoly::monomial(2, 2), 0.0, 2);
  CHECK(s.origin_error < 1e-10);
}
