#include "lfock/berezin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lfock/fock.hpp"
#include "lfock/kernels.hpp"
#include "lfock/numerics.hpp"
#include "lfock/quadrature.hpp"
#include "lfock/specfun.hpp"

namespace lfock {

namespace {

// log sum_j exp(term(j)) for a unimodal term sequence starting at j0.
template <class Term>
double log_series(Term&& term, int j0, int& used) {
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> t;
  for (int j = j0;; ++j) {
    const double v = term(j);
    t.push_back(v);
    peak = std::max(peak, v);
    if (v < peak - 50.0 && j > j0 + 4) break;
    if (j - j0 > 200000) throw ConvergenceError("Berezin moment series did not converge");
  }
  used = static_cast<int>(t.size());
  double s = 0.0;
  for (double v : t) s += std::exp(v - peak);
  return peak + std::log(s);
}

}  // namespace

ROperator r_operator(int m) {
  if (m > 6) throw std::invalid_argument("r_operator supports m <= 6");
  return {r_operator_scaled(m), 1.0 / std::sqrt(8.0)};
}

BerezinValue berezin_numeric(const QuantParams& p, const SymbolPoly& f, cplx z, double tol, bool cross_check) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const FockMeasure m(p, 0.0);
  BerezinValue out;
  out.quadrature_value = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  const double r = std::abs(z);
  if (r == 0.0) {
    // K(0, w) = 1/N_0: only balanced monomials survive.
    cplx s = 0.0;
    for (const auto& [k, c] : f.coeffs)
      if (k.first == k.second) s += c * std::exp(log_monomial_norm(m, k.first) - log_monomial_norm(m, 0));
    out.value = s;
    out.terms_used = 1;
  } else {
    const double lr = std::log(r), th = std::arg(z);
    int used = 0;
    const double logK = log_series([&](int j) { return 2.0 * j * lr - log_monomial_norm(m, j); }, 0, used);
    cplx s = 0.0;
    for (const auto& [key, c] : f.coeffs) {
      const auto [a, b] = key;
      const int j0 = std::max(0, a - b);
      int u = 0;
      const double ls = log_series(
          [&](int j) {
            const int k = j + b - a;
            return log_monomial_norm(m, a + k) - log_monomial_norm(m, j) - log_monomial_norm(m, k) +
                   (j + k) * lr;
          },
          j0, u);
      used = std::max(used, u);
      s += c * std::exp(ls - logK) * std::polar(1.0, (a - b) * th);
    }
    out.value = s;
    out.terms_used = used;
  }
  if (cross_check) {
    const Integral<cplx> q = berezin_quadrature(p, f, z, tol);
    out.quadrature_value = q.value;
    out.quadrature_error = q.error_bound;
    double scale = 0.0;
    for (const auto& [k, c] : f.coeffs) scale += std::abs(c) * std::pow(std::max(1.0, r), k.first + k.second);
    if (std::abs(q.value - out.value) > 100.0 * tol * std::max(1.0, scale) + 10.0 * q.error_bound)
      throw ConvergenceError("Berezin moment expansion and quadrature disagree");
  }
  return out;
}

Integral<cplx> berezin_quadrature(const QuantParams& p, const SymbolPoly& f, cplx z, double tol) {
  const FockMeasure m(p, 0.0);
  const double kzz = std::real(fock_kernel(p, 0.0, z, z));
  auto rho = [&](double r) { return m.radial_density(r); };
  auto g = [&](cplx w) -> cplx { return f(w) * std::norm(fock_kernel(p, 0.0, z, w)) / kzz; };
  int deg = 0;
  for (const auto& [k, c] : f.coeffs) deg = std::max(deg, k.first + k.second);
  const int spread = static_cast<int>(std::ceil(4.0 * p.alpha_scale() * std::abs(z)));
  return integrate_plane<cplx>(rho, g, tol, deg + spread);
}

double berezin_origin(const QuantParams& p, const SymbolPoly& f, int J) {
  // Delta^j = 4^j d^j dbar^j; at 0 only f_{jj} contributes 4^j (j!)^2.
  const double a = p.alpha_scale();
  double s = 0.0;
  for (int j = 0; j <= J; ++j) {
    const double d = std::real(f.derivative(j, j, 0.0)) * std::pow(4.0, j);
    if (d != 0.0) s += d * std::pow(a, -2.0 * j);
  }
  return s;
}

std::vector<double> default_alpha_grid() { return {20.0, 28.0, 40.0, 56.0, 80.0, 113.0, 160.0}; }

SlopeReport asymptotic_fit(const SymbolPoly& f, cplx z, int M, const std::vector<double>& alpha_grid) {
  if (z == cplx(0.0)) throw std::domain_error("asymptotic_fit needs z != 0");
  if (alpha_grid.size() < 4 || !std::is_sorted(alpha_grid.begin(), alpha_grid.end()))
    throw std::invalid_argument("alpha_grid must be increasing with at least 4 points");
  const FormalOpSeries q = q_series(M);
  std::vector<cplx> qf;
  for (int k = 0; k <= M; ++k) qf.push_back(q[k].apply(f, z));
  SlopeReport rep;
  rep.target = -(M + 1.0);
  rep.alpha = alpha_grid;
  double scale = 0.0;
  for (int k = 0; k <= M; ++k) scale = std::max(scale, std::abs(qf[k]));
  bool exact = true;
  for (double a : alpha_grid) {
    const QuantParams p = QuantParams::from_alpha_scale(a);
    const cplx b = berezin_numeric(p, f, z, 1e-12, false).value;
    cplx s = 0.0;
    for (int k = 0; k <= M; ++k) s += qf[k] * std::pow(a, -k);
    const double e = std::abs(b - s);
    rep.error.push_back(e);
    if (e > 1e-12 * std::max(1.0, scale)) exact = false;
  }
  rep.exact = exact;
  if (!exact) {
    try {
      rep.slope = loglog_slope(rep.alpha, rep.error);
    } catch (const std::domain_error&) {
      throw ConvergenceError("asymptotic_fit: zero residual on part of the grid");
    }
  }
  return rep;
}

StokesReport stokes_check(const QuantParams& p, const SymbolPoly& f, cplx z, int M) {
  StokesReport rep;
  const cplx b = berezin_numeric(p, f, z, 1e-12, false).value;
  rep.numeric = std::real(b);
  int deg = 0;
  for (const auto& [k, c] : f.coeffs) deg = std::max(deg, k.first + k.second);
  rep.origin_error = std::abs(berezin_origin(p, f, deg) - b);
  const FormalOpSeries q = q_series(M);
  cplx s = 0.0;
  for (int k = 0; k <= M; ++k) s += q[k].apply(f, z) * std::pow(p.alpha_scale(), -k);
  rep.expansion_error = std::abs(s - b);
  return rep;
}

I0Report i0_asymptotic_check(int M, const std::vector<double>& lambda_grid) {
  I0Report rep;
  rep.lambda = lambda_grid;
  rep.next_coeff = asym_coeff_exact(M + 1).convert_to<double>();
  rep.exact_match = true;
  for (int m = 0; m <= M; ++m) {
    const CoeffFn one = r_operator_scaled(m).apply_to_one();
    if (!(one == CoeffFn::constant(asym_coeff_exact(m)))) rep.exact_match = false;
  }
  for (double lam : lambda_grid) {
    if (lam < 10.0 || lam > 200.0) throw std::invalid_argument("lambda must lie in [10, 200]");
    // I_0(lam) e^{-lam} through the series / Hankel evaluation in long double headroom.
    const double v = bessel_i(0.0, lam) * std::exp(-lam) * std::sqrt(2.0 * std::numbers::pi * lam);
    double s = 0.0;
    for (int m = 0; m <= M; ++m) s += asym_coeff_exact(m).convert_to<double>() * std::pow(lam, -m);
    rep.scaled_residual.push_back((v - s) * std::pow(lam, M + 1));
  }
  return rep;
}

}  // namespace lfock
