#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace lfock {

using cplx = std::complex<double>;

/// Raised when a series or quadrature cannot reach the requested tolerance
/// within its term/node budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Semiclassical parameter bundle derived from epsilon in (0, 1).
///
/// c = eps/(1-eps) is the exponent of the multiplication map between the
/// real-line and Fock-type spaces; alpha_scale = 2 sqrt(eps)/(1-eps) is the
/// large parameter of the Berezin asymptotics; hbar = 1 - eps.
class QuantParams {
 public:
  explicit QuantParams(double epsilon);

  double epsilon() const { return epsilon_; }
  double c() const { return c_; }
  double alpha_scale() const { return alpha_scale_; }
  double hbar() const { return hbar_; }

  /// Inverse of alpha_scale: the epsilon whose alpha_scale equals `alpha`.
  static QuantParams from_alpha_scale(double alpha);

 private:
  double epsilon_;
  double c_;
  double alpha_scale_;
  double hbar_;
};

enum class FamilyKind { Hermite, Laguerre, Legendre };

/// One classical orthogonal system: physicists' Hermite H_n (weight e^{-x^2}
/// on R), generalized Laguerre L_n^a (weight x^a e^{-x} on R+), Legendre P_n
/// (weight 1 on (-1, 1)). Polynomials use their standard normalization;
/// `norm_squared` gives the L^2(weight) norm.
class PolyFamily {
 public:
  static PolyFamily hermite() { return PolyFamily(FamilyKind::Hermite, 0.0); }
  static PolyFamily laguerre(double order = 0.0);
  static PolyFamily legendre() { return PolyFamily(FamilyKind::Legendre, 0.0); }

  FamilyKind kind() const { return kind_; }
  double order() const { return order_; }
  std::string name() const;

  std::pair<double, double> domain() const;
  double weight(double x) const;
  /// Integral of the weight over the domain.
  double total_mass() const;
  double norm_squared(int n) const;
  double a_eigenvalue(int n) const { return static_cast<double>(n); }

  /// Monic three-term recurrence p_{n+1} = (x - a_n) p_n - b_n p_{n-1}.
  double monic_a(int n) const;
  double monic_b(int n) const;
  /// Sign of the leading coefficient of the standard polynomial of degree n.
  int leading_sign(int n) const;

  bool operator==(const PolyFamily&) const = default;

 private:
  PolyFamily(FamilyKind kind, double order) : kind_(kind), order_(order) {}

  FamilyKind kind_;
  double order_;
};

}  // namespace lfock
