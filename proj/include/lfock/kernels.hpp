#pragma once

#include "lfock/params.hpp"

namespace lfock {

/// A series evaluation with a certified bound on the discarded tail.
struct KernelValue {
  cplx series_value;
  cplx closed_value;
  bool has_closed = false;
  double tail_bound = 0.0;
  int terms_used = 0;
};

/// (1-eps)^{-a-1} e^{-c(x + conj y)} iota_a(eps x conj(y) / (1-eps)^2).
/// For a = 0 this is e^{-c(x+y)} I_0(2 sqrt(eps x y)/(1-eps)) / (1-eps).
cplx laguerre_kernel_closed(const QuantParams& p, double order, cplx x, cplx y);

/// Partial sums of sum_n eps^n n!/Gamma(n+a+1) L_n^a(x) L_n^a(conj y), stopped
/// once the Cauchy-estimate tail bound drops below tol * max(1, |sum|).
KernelValue laguerre_kernel_series(const QuantParams& p, double order, cplx x, cplx y, double tol,
                                   int max_terms = 20000);

/// e^{-(x+y)/2} times the order-zero kernel: the kernel of eps^A on L^2(R+).
double weighted_laguerre_kernel(const QuantParams& p, double x, double y);

/// sum_n eps^n H_n(x) H_n(y) / (n! 2^n sqrt(pi)), tail certified by Cramer's
/// bound |H_n(x)| e^{-x^2/2} / sqrt(2^n n! sqrt(pi)) <= 1.0865 pi^{-1/4}.
/// At x = y = 0 the sum is (1 - eps^2)^{-1/2} / sqrt(pi).
KernelValue hermite_kernel_series(double eps, double x, double y, double tol, int max_terms = 20000);

/// True when |(1-x)(1-y)|^{1/2} + |(1+x)(1+y)|^{1/2} < eps^{1/2} + eps^{-1/2}.
bool legendre_domain_contains(double eps, cplx x, cplx y);

/// sum_n eps^n (n + 1/2) P_n(x) P_n(y), tail from |P_n(x)| <= R(x)^n with
/// R(x) = max |x +- sqrt(x^2 - 1)|.
KernelValue legendre_kernel_series(double eps, cplx x, cplx y, double tol, int max_terms = 200000);

/// The same kernel at (cos 2 phi, cos 2 theta) summed as the double series
/// (1-eps)/(2(1+eps)^2) sum_{m,n} (m+n)! (3/2)_{m+n} / (m! n!)^2 a^m b^n with
/// a = 4 eps sin^2 phi sin^2 theta / (1+eps)^2, b = 4 eps cos^2 phi cos^2 theta / (1+eps)^2.
KernelValue legendre_kernel_closed(double eps, double phi, double theta, double tol);

/// Reproducing kernel of the Laguerre Fock space of order a:
/// (1-eps)^{-a-1} iota_a(eps z conj(w) / (1-eps)^2).
cplx fock_kernel(const QuantParams& p, double order, cplx z, cplx w);

}  // namespace lfock
