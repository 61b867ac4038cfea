#pragma once

#include <Eigen/Dense>
#include <functional>

#include "lfock/params.hpp"
#include "lfock/quadrature.hpp"

namespace lfock {

/// Exponent of (1-eps) in the monomial norms is 2j + a + kMonomialNormHbarShift.
/// Fixed by agreement of plane quadrature, the radial moment identity and the
/// Taylor coefficients of the reproducing kernel (see tests/unit/test_fock.cpp).
inline constexpr int kMonomialNormHbarShift = 1;

/// The radial measure dnu of the Laguerre Fock space of order a > -1/2:
/// 2 eps^{1+a/2} / ((1-eps) pi) |z|^a K_a(2 sqrt(eps) |z| / (1-eps)) dA(z).
class FockMeasure {
 public:
  FockMeasure(QuantParams params, double order = 0.0);

  const QuantParams& params() const { return params_; }
  double order() const { return order_; }

  double density(cplx z) const { return radial_density(std::abs(z)); }
  double radial_density(double r) const;
  /// Constant in front of |z|^a K_a(...).
  double prefactor() const;
  /// Radial exponent 2 sqrt(eps)/(1-eps) of the Bessel factor.
  double kappa() const { return params_.alpha_scale(); }

 private:
  QuantParams params_;
  double order_;
};

/// ||z^j||^2 = (1-eps)^{2j+a+1} eps^{-j} j! Gamma(j+a+1).
double monomial_norm(const FockMeasure& m, int j);
double log_monomial_norm(const FockMeasure& m, int j);

/// integral |w|^{2j} dnu(w) by plane quadrature.
Integral<double> monomial_norm_quadrature(const FockMeasure& m, int j, double tol = 1e-12);

/// 1 / (j-th Taylor coefficient of K(z, w) in z conj(w)), extracted by a
/// Cauchy integral of the closed-form kernel on a circle.
double monomial_norm_from_kernel(const FockMeasure& m, int j);

/// |sum_{j<=J} z^j conj(w)^j / ||z^j||^2 - K(z, w)|.
double rk_consistency(const QuantParams& p, double order, cplx z, cplx w, int J);

/// G_{nm} = integral L_n^a(z) conj(L_m^a(z)) e^{c z + c conj z} |z|^a K_a(kappa |z|) dA(z).
Eigen::MatrixXcd orthogonality_matrix(const QuantParams& p, double order, int N, double tol = 1e-11);

/// Diagonal of the above: (1-eps) pi / (2 eps^{1+a/2}) Gamma(n+a+1)/n! eps^{-n}.
double orthogonality_target(const QuantParams& p, double order, int n);

/// Gram matrix of eps^{n/2} e^{cz} L_n^a / ||L_n^a|| in L^2(dnu): the image of
/// an orthonormal basis under the multiplication map, so it should be I.
Eigen::MatrixXcd ml_gram(const QuantParams& p, double order, int N, double tol = 1e-11);

enum class MLDirection { Forward, Inverse };

/// g(z) = e^{cz} f(z) (forward) or e^{-cz} f(z) (inverse).
std::function<cplx(cplx)> apply_ML(const QuantParams& p, std::function<cplx(cplx)> f, MLDirection dir);

/// integral |f|^2 dnu by plane quadrature.
Integral<double> fock_norm_squared(const FockMeasure& m, const std::function<cplx(cplx)>& f, double tol = 1e-11,
                                   int angular_degree = 8);

}  // namespace lfock
