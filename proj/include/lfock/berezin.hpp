#pragma once

#include <complex>
#include <vector>

#include "lfock/params.hpp"
#include "lfock/quadrature.hpp"
#include "lfock/symbolic.hpp"

namespace lfock {

/// R_m = prefactor * scaled, prefactor = 2^{-3/2}.
struct ROperator {
  DiffOpPoly scaled;
  double prefactor = 0.0;
  cplx apply(const SymbolPoly& f, cplx z) const { return prefactor * scaled.apply(f, z); }
};

ROperator r_operator(int m);

struct BerezinValue {
  cplx value;             // moment expansion
  cplx quadrature_value;  // plane quadrature (NaN when not requested)
  double quadrature_error = 0.0;
  int terms_used = 0;
};

/// B f(z) = (1/K(z,z)) integral f(w) |K(z,w)|^2 dnu(w) on the order-0 Laguerre
/// Fock space, summed term by term against the monomial norms. With
/// `cross_check` the plane quadrature is also run and a ConvergenceError is
/// thrown when the two disagree beyond tol.
BerezinValue berezin_numeric(const QuantParams& p, const SymbolPoly& f, cplx z, double tol = 1e-10,
                             bool cross_check = true);

/// B f(z) by plane quadrature only.
Integral<cplx> berezin_quadrature(const QuantParams& p, const SymbolPoly& f, cplx z, double tol = 1e-10);

/// sum_{j<=J} alpha^{-2j} Delta^j f(0).
double berezin_origin(const QuantParams& p, const SymbolPoly& f, int J);

struct SlopeReport {
  std::vector<double> alpha;
  std::vector<double> error;  // |B f(z) - sum_{m<=M} alpha^{-m} Q_m f(z)|
  double slope = 0.0;
  double target = 0.0;  // -(M+1)
  bool exact = false;   // all errors below roundoff (e.g. holomorphic f)
};

/// Log-log slope of the truncation error of the 1/alpha expansion at z != 0.
SlopeReport asymptotic_fit(const SymbolPoly& f, cplx z, int M, const std::vector<double>& alpha_grid);

/// Default alpha grid for asymptotic_fit.
std::vector<double> default_alpha_grid();

struct StokesReport {
  double numeric = 0.0;
  double origin_error = 0.0;     // |origin formula - B f(z)|
  double expansion_error = 0.0;  // |sum_{m<=M} alpha^{-m} Q_m f(z) - B f(z)|
};

/// Compares the origin formula and the z != 0 expansion against B f at small |z|.
StokesReport stokes_check(const QuantParams& p, const SymbolPoly& f, cplx z, int M);

struct I0Report {
  std::vector<double> lambda;
  std::vector<double> scaled_residual;  // (I_0 sqrt(2 pi lambda) e^{-lambda} - sum_{m<=M} c_m lambda^{-m}) lambda^{M+1}
  double next_coeff = 0.0;              // c_{M+1}
  bool exact_match = false;             // 2 sqrt 2 R_m(1) == c_m for m <= M
};

I0Report i0_asymptotic_check(int M, const std::vector<double>& lambda_grid);

}  // namespace lfock
