#include "doctest.h"

#include <cmath>

#include "lfock/berezin.hpp"
#include "lfock/specfun.hpp"
#include "lfock/symbolic.hpp"

using namespace lfock;

namespace {

using D = DiffOpPoly;

SymbolPoly sum(std::initializer_list<SymbolPoly> parts) {
  SymbolPoly out;
  for (const auto& p : parts)
    for (const auto& [k, c] : p.coeffs) out.coeffs[k] += c;
  return out;
}

}  // namespace

TEST_CASE("exact asymptotic coefficients") {
  CHECK(asym_coeff_exact(0) == 1);
  CHECK(asym_coeff_exact(1) == Rational(1, 8));
  CHECK(asym_coeff_exact(2) == Rational(9, 128));
  CHECK(asym_coeff_exact(3) == Rational(75, 1024));
  CHECK(asym_coeff_exact(4) == Rational(3675, 32768));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("R operators") {
  CHECK(r_operator_scaled(0) == D::identity());
  CHECK(r_operator_scaled(1) == D::term(Rational(1, 8), 0, 0, 0, 0, 0) + D::term(4, 0, 0, 2, 1, 1));
  const D r2 = D::term(Rational(9, 128), 0, 0, 0, 0, 0) + D::term(Rational(5, 2), 0, 0, 2, 1, 1) +
               D::term(8, 0, 0, 4, 2, 2) + D::term(4, 0, 1, 2, 1, 2) + D::term(4, 1, 0, 2, 2, 1);
  CHECK(r_operator_scaled(2) == r2);
  for (int m = 0; m <= 4; ++m) {
    const CoeffFn one = r_operator_scaled(m).apply_to_one();
    CHECK(one == CoeffFn::constant(asym_coeff_exact(m)));
  }
  const auto R1 = r_operator(1);
  CHECK(R1.prefactor == doctest::Approx(std::pow(2.0, -1.5)));
  CHECK(R1.apply(SymbolPoly::monomial(0, 0), 0.7).real() == doctest::Approx(std::pow(2.0, -1.5) / 8));
}

TEST_CASE("Q series in powers of 1/alpha") {
  const auto q = q_series(3);
  CHECK(q[0] == D::identity());
  CHECK(q[1] == D::laplacian().times_radial(1));
  const D q2 = D::term(2, 0, 0, 0, 1, 1) + D::term(8, 0, 0, 2, 2, 2) + D::term(4, 0, 1, 0, 1, 2) +
               D::term(4, 1, 0, 0, 2, 1);
  CHECK(q[2] == q2);
  CHECK(q[3].coeff(0, 0, -1, 1, 1) == Rational(-1, 2));
  CHECK(q[3].coeff(0, 0, 3, 3, 3) == Rational(32, 3));
  CHECK(q[3].has_negative_radial_power());
  // every Q_m with m >= 1 annihilates constants and holomorphic monomials
  for (int m = 1; m <= 3; ++m) {
    CHECK(q[m].apply_to_one().is_zero());
    CHECK(q[m].apply_monomial(3, 0).is_zero());
  }
  CHECK(std::abs(q[2].apply(SymbolPoly::monomial(1, 1), cplx(1.0)) - 2.0) < 1e-15);
}

TEST_CASE("composition follows the Leibniz rule") {
  // d o (z f) = f + z df
  const D zmul = D::term(1, 1, 0, 0, 0, 0);
  const D d = D::term(1, 0, 0, 0, 1, 0);
  CHECK(d.compose(zmul) == D::identity() + D::term(1, 1, 0, 0, 1, 0));
  // dbar |z|^2 = z
  const D r2 = D::term(1, 0, 0, 2, 0, 0);
  const D db = D::term(1, 0, 0, 0, 0, 1);
  CHECK(db.compose(r2) == D::term(1, 1, 0, 0, 0, 0) + D::term(1, 0, 0, 2, 0, 1));
  // numerical check of a composed operator on a polynomial symbol
  const D A = D::term(3, 0, 1, 1, 1, 0) + D::term(Rational(1, 2), 0, 0, 2, 1, 1);
  const D B = D::term(2, 1, 0, 0, 0, 1) + D::identity();
  const SymbolPoly f = sum({SymbolPoly::monomial(3, 2), SymbolPoly::monomial(1, 4, cplx(0.0, 2.0))});
  const cplx z(0.6, -0.8);
  // (A o B) f = A (B f), with B f expanded exactly
  SymbolPoly g;
  for (const auto& [key, c] : f.coeffs) {
    const CoeffFn t = B.apply_monomial(key.first, key.second);
    for (const auto& [k, v] : t.terms()) {
      const auto [i, j, r] = k;
      REQUIRE(r % 2 == 0);
      g.coeffs[{i + r / 2, j + r / 2}] += c * v.convert_to<double>();
    }
  }
  CHECK(std::abs(A.compose(B).apply(f, z) - A.apply(g, z)) < 1e-12);
}

TEST_CASE("inverse of a formal series") {
  const auto q = q_series_hbar(3);
  const auto qi = q.inverse();
  const auto prod = q * qi;
  CHECK(prod[0] == D::identity());
  for (int k = 1; k <= 3; ++k) CHECK(prod[k].is_zero());
  const auto back = qi * q;
  for (int k = 1; k <= 3; ++k) CHECK(back[k].is_zero());
}

TEST_CASE("C series and the bracket") {
  const auto c = c_series(2);
  CHECK(c[0] == D::identity());
  CHECK(c[1] == D::term(-2, 0, 0, 1, 1, 1));
  const CoeffFn kappa = bracket_coefficient(c[1]);
  CHECK(kappa == CoeffFn::monomial(0, 0, 1, -2));
  CHECK_THROWS(bracket_coefficient(c[2]));
  // (f, g) = (w, wbar) at z = 1: C_1(f, g) - C_1(g, f) = kappa(1)
  const cplx v = antisymmetric_value(c[1], SymbolPoly::monomial(1, 0), SymbolPoly::monomial(0, 1), 1.0);
  CHECK(std::abs(v - (-2.0)) < 1e-15);
  const D c2 = D::term(Rational(1, 2), 0, 0, 0, 1, 1) + D::term(-1, 0, 0, 1, 1, 1) + D::term(2, 0, 0, 2, 2, 2) +
               D::term(1, 0, 1, 0, 1, 2) + D::term(1, 1, 0, 0, 2, 1);
  CHECK(c[2] == c2);
}

TEST_CASE("C_j vanish on antiholomorphic times holomorphic") {
  const auto c = c_series(3);
  const SymbolPoly f = sum({SymbolPoly::monomial(0, 2), SymbolPoly::monomial(0, 3, 0.5)});
  const SymbolPoly g = sum({SymbolPoly::monomial(1, 0), SymbolPoly::monomial(4, 0, cplx(0, 1))});
  for (int j = 1; j <= 3; ++j) CHECK(std::abs(c[j].apply_bidiff(f, g, cplx(0.4, 0.3))) < 1e-14);
  CHECK(std::abs(c[0].apply_bidiff(f, g, cplx(0.4, 0.3)) - f(cplx(0.4, 0.3)) * g(cplx(0.4, 0.3))) < 1e-14);
}

TEST_CASE("symbols") {
  const SymbolPoly f = SymbolPoly::monomial(2, 1, 3.0);
  const cplx z(1.0, 2.0);
  CHECK(std::abs(f(z) - 3.0 * z * z * std::conj(z)) < 1e-14);
  CHECK(std::abs(f.derivative(1, 1, z) - 6.0 * z) < 1e-14);
  CHECK(std::abs(f.derivative(3, 0, z)) == 0.0);
  CHECK(SymbolPoly::monomial(1, 1).is_real());
  CHECK_FALSE(SymbolPoly::monomial(1, 0).is_real());
  const D q3 = q_series(3)[3];
  CHECK_THROWS(q3.apply(SymbolPoly::monomial(1, 1), 0.0));
}
