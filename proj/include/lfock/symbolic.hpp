#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace lfock {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial symbol sum f_{ab} w^a conj(w)^b with complex coefficients.
struct SymbolPoly {
  std::map<std::pair<int, int>, std::complex<double>> coeffs;

  static SymbolPoly monomial(int a, int b, std::complex<double> c = 1.0);
  std::complex<double> operator()(std::complex<double> w) const;
  /// d^a dbar^b f at z.
  std::complex<double> derivative(int a, int b, std::complex<double> z) const;
  bool is_real() const;
};

/// Coefficient functions sum c z^i conj(z)^j |z|^r, stored with min(i, j) = 0
/// (z conj(z) is folded into |z|^2).
class CoeffFn {
 public:
  using Key = std::tuple<int, int, int>;  // (i, j, r)

  static CoeffFn constant(const Rational& c);
  static CoeffFn monomial(int i, int j, int r, const Rational& c = 1);

  void add(int i, int j, int r, const Rational& c);
  CoeffFn operator+(const CoeffFn& o) const;
  CoeffFn operator*(const CoeffFn& o) const;
  CoeffFn operator*(const Rational& s) const;
  CoeffFn d() const;     // holomorphic derivative
  CoeffFn dbar() const;  // antiholomorphic derivative
  bool is_zero() const { return terms_.empty(); }
  bool has_negative_radial_power() const;
  std::complex<double> operator()(std::complex<double> z) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool operator==(const CoeffFn& o) const { return terms_ == o.terms_; }
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

/// Finite sum of coefficient(z, conj z, |z|) d^a dbar^b with exact rational
/// coefficients.
class DiffOpPoly {
 public:
  using Key = std::tuple<int, int, int, int, int>;  // (i, j, r, a, b)

  static DiffOpPoly identity();
  static DiffOpPoly zero() { return {}; }
  /// c z^i conj(z)^j |z|^r d^a dbar^b
  static DiffOpPoly term(const Rational& c, int i, int j, int r, int a, int b);
  /// The flat Laplacian 4 d dbar.
  static DiffOpPoly laplacian();

  void add(int i, int j, int r, int a, int b, const Rational& c);
  DiffOpPoly operator+(const DiffOpPoly& o) const;
  DiffOpPoly operator-(const DiffOpPoly& o) const;
  DiffOpPoly operator*(const Rational& s) const;
  /// Composition: (this o other) u = this(other(u)).
  DiffOpPoly compose(const DiffOpPoly& other) const;
  /// Left multiplication by |z|^r.
  DiffOpPoly times_radial(int r) const;

  /// The operator applied to the constant function 1.
  CoeffFn apply_to_one() const;
  /// Exact application to w^a conj(w)^b.
  CoeffFn apply_monomial(int a, int b) const;
  /// Numerical value (D f)(z). Refuses z = 0 when negative powers of |z| occur.
  std::complex<double> apply(const SymbolPoly& f, std::complex<double> z) const;
  /// Bidifferential reading sum c(z) (d^a f)(dbar^b g) at z.
  std::complex<double> apply_bidiff(const SymbolPoly& f, const SymbolPoly& g, std::complex<double> z) const;

  bool has_negative_radial_power() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j, int r, int a, int b) const;
  bool operator==(const DiffOpPoly& o) const { return terms_ == o.terms_; }
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

/// Truncated power series sum_k x^k D_k in a formal parameter x with operator
/// coefficients; products compose coefficients in order.
class FormalOpSeries {
 public:
  explicit FormalOpSeries(std::vector<DiffOpPoly> coeffs, std::string variable = "x");

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const DiffOpPoly& operator[](int k) const { return coeffs_.at(k); }
  const std::vector<DiffOpPoly>& coeffs() const { return coeffs_; }
  const std::string& variable() const { return variable_; }

  FormalOpSeries operator*(const FormalOpSeries& o) const;
  /// Inverse under composition; needs coefficient 0 equal to the identity.
  FormalOpSeries inverse() const;
  /// Division by a scalar series sum_k x^k s_k with s_0 != 0.
  FormalOpSeries divide_scalar(const std::vector<Rational>& s) const;

 private:
  std::vector<DiffOpPoly> coeffs_;
  std::string variable_;
};

/// ((1/2)_m)^2 / (m! 2^m) as an exact rational.
Rational asym_coeff_exact(int m);

/// (a)_k for rational a.
Rational pochhammer(const Rational& a, int k);

/// 2 sqrt(2) R_m: sum over j+k+l+n = m of c_j c_k (-1)^l c_l n! times the
/// coefficient of y^n ybar^n in f((1+y)^2 z) / ((1+y)^{j+l} (1+ybar)^{k+l}).
DiffOpPoly r_operator_scaled(int m);

/// Q_0 .. Q_M in powers of 1/alpha, with lambda = alpha |z|:
/// Q_m = |z|^{-m} [y^m] (sum y^m R_m) / (sum y^m R_m(1)).
FormalOpSeries q_series(int M);

/// Q_0 .. Q_M re-expanded in hbar = 1 - eps using
/// 1/alpha = (hbar/2)(1-hbar)^{-1/2}.
FormalOpSeries q_series_hbar(int M);

/// Inverse of q_series_hbar; coefficient j read as the bidifferential C_j(f, g).
FormalOpSeries c_series(int M);

/// kappa(z) with C(f,g) - C(g,f) = kappa(z) (df dbar g - dbar f dg), for a
/// bidifferential C built only from d dbar terms; throws otherwise.
CoeffFn bracket_coefficient(const DiffOpPoly& c);

/// C(f,g) - C(g,f) at z.
std::complex<double> antisymmetric_value(const DiffOpPoly& c, const SymbolPoly& f, const SymbolPoly& g,
                                         std::complex<double> z);

}  // namespace lfock
