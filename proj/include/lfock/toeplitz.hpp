#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lfock/params.hpp"

namespace lfock {

/// A symbol on the real domain of a family: either a polynomial in x
/// (monomial coefficients, exact Gram matrices) or a general callable with a
/// user-supplied bound on sup|f|.
class SymbolFn {
 public:
  static SymbolFn polynomial(std::vector<cplx> coeffs);
  static SymbolFn polynomial(const std::vector<double>& coeffs);
  static SymbolFn callable(std::function<cplx(double)> f, double sup_bound);

  cplx operator()(double x) const;
  bool is_polynomial() const { return is_poly_; }
  /// Degree for polynomials, -1 otherwise.
  int degree() const;
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  double sup_bound() const { return sup_bound_; }
  SymbolFn conj() const;

 private:
  bool is_poly_ = false;
  std::vector<cplx> coeffs_;
  std::function<cplx(double)> fn_;
  double sup_bound_ = std::numeric_limits<double>::infinity();
};

/// N x N truncation of an operator in the first N orthonormal basis functions.
struct TruncOp {
  Eigen::MatrixXcd matrix;
  PolyFamily basis = PolyFamily::laguerre();
  double epsilon = 0.0;
  int N() const { return static_cast<int>(matrix.rows()); }
};

/// G_{nm} = <f b_m, b_n>. Polynomial symbols use a Gauss rule exact for the
/// integrand; general symbols use `nodes` points (default 2N + 32).
Eigen::MatrixXcd gram(const SymbolFn& f, const PolyFamily& basis, int N, int nodes = 0);

/// diag(eps^n) gram(f): the compression of eps^A M_f.
TruncOp toeplitz_matrix(const QuantParams& p, const SymbolFn& f, const PolyFamily& basis, int N, int nodes = 0);

/// A in coefficient space: (Au)_n = n u_n.
Eigen::VectorXcd apply_A(const Eigen::VectorXcd& coeffs);

/// Laguerre A on u = e^{-x/2} p(x), returned as the polynomial q with
/// A u = e^{-x/2} q: q = -x p'' + (x - 1) p'. Monomial coefficients.
/// Legendre has no x-space form here and throws.
std::vector<double> apply_A_weighted(const PolyFamily& basis, const std::vector<double>& p);

/// Monomial coefficients of the standard polynomial b_n / ||b_n|| (orthonormal).
std::vector<double> basis_polynomial(const PolyFamily& basis, int n);

/// Coefficients in the orthonormal basis of f u, for u given by coefficients.
/// Polynomial f only; the result has length u.size() + deg f.
Eigen::VectorXcd multiply_coeffs(const SymbolFn& f, const PolyFamily& basis, const Eigen::VectorXcd& u);

enum class ExpansionVariable { LogEps, OneMinusEps };

/// For each eps: || eps^A (f u) - sum_{k<=K} (log eps)^k/k! A^k (f u) || in coefficient
/// space (LogEps), or with the binomial series sum_{j<=K} (-(1-eps))^j C(A, j) (OneMinusEps).
std::vector<double> expansion_residual(const std::vector<double>& eps_list, const SymbolFn& f,
                                       const Eigen::VectorXcd& u, int K, const PolyFamily& basis,
                                       ExpansionVariable var = ExpansionVariable::LogEps);

/// max_n | eps^n - sum_{k<=kmax} (n log eps)^k/k! | |(f u)_n| after summing the
/// exponential series to convergence.
double spectral_identity_error(double eps, const SymbolFn& f, const Eigen::VectorXcd& u, const PolyFamily& basis);

struct CommutatorReport {
  Eigen::MatrixXcd extrapolated;  // lim (T_f T_g - T_g T_f)/(1-eps), N x N
  Eigen::MatrixXcd derived;       // sign * (M_f A M_g - M_g A M_f), N x N
  int sign = 0;                   // sign that best matches the extrapolation
  double max_rel_error = 0.0;     // over entries above mask * max|derived|
  double max_masked_error = 0.0;  // |extrapolated| on masked entries / max|derived|
  double other_sign_error = 0.0;  // same metric for the opposite sign
  std::vector<double> h;          // 1 - eps nodes used
};

/// Richardson-extrapolated leading commutator vs the first-order operator
/// from composing the expansion. eps_list must be 1-h, 1-h/2, 1-h/4.
CommutatorReport commutator_leading(const std::vector<double>& eps_list, const SymbolFn& f, const SymbolFn& g,
                                    const PolyFamily& basis, int N, double mask = 1e-6);

/// Laguerre x-space form of the leading commutator on u = e^{-x/2} p:
/// (x W)' u + 2 x W u' with W = f g' - g f', as the polynomial q with
/// result = e^{-x/2} q. Polynomial symbols only.
std::vector<double> commutator_operator_weighted(const std::vector<double>& f, const std::vector<double>& g,
                                                 const std::vector<double>& p);

}  // namespace lfock
