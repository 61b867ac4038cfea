#pragma once

#include <vector>

#include "lfock/params.hpp"

namespace lfock {

/// H_n, L_n^a or P_n at x by forward three-term recurrence.
cplx eval_poly(const PolyFamily& family, int n, cplx x);
double eval_poly(const PolyFamily& family, int n, double x);

/// Values p_0(x) .. p_n(x) in one sweep.
std::vector<cplx> eval_poly_all(const PolyFamily& family, int n, cplx x);
std::vector<double> eval_poly_all(const PolyFamily& family, int n, double x);

/// e^{-x/2} x^{a/2} L_n^a(x) / sqrt(Gamma(n+a+1)/n!), orthonormal in L^2(R+).
double eval_weighted_laguerre(double order, int n, double x);

/// Modified Bessel function of the first kind, principal branch.
/// Power series for |x| below `kBesselCrossover`, Hankel expansion above.
/// Throws std::overflow_error once e^{|Re x|} is not representable.
cplx bessel_i(double order, cplx x);
double bessel_i(double order, double x);

inline constexpr double kBesselCrossover = 17.5;

/// Modified Bessel function of the third kind for x > 0.
double bessel_k(double order, double x);

/// iota_a(u) = sum_k u^k / (k! Gamma(k+a+1)) = u^{-a/2} I_a(2 sqrt(u)).
/// Entire in u, so no branch choice is involved.
cplx bessel_iota(double order, cplx u);

/// (1-z)^{-a-1} exp(xz/(z-1)), the generating function of L_n^a.
cplx laguerre_generating(double order, cplx x, cplx z);

/// c_m = ((1/2)_m)^2 / (m! 2^m): coefficients of I_0(x) sqrt(2 pi x) e^{-x} ~ sum c_m x^{-m}.
double asym_coeff(int m);

/// log Gamma for real arguments (sign ignored).
double log_gamma(double x);

}  // namespace lfock
