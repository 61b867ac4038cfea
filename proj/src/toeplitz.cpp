#include "lfock/toeplitz.hpp"

#include <cmath>
#include <stdexcept>

#include "lfock/numerics.hpp"
#include "lfock/quadrature.hpp"
#include "lfock/specfun.hpp"

namespace lfock {

namespace {

using Poly = std::vector<double>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_scale(const Poly& a, double s) {
  Poly r(a);
  for (double& v : r) v *= s;
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_deriv(const Poly& a) {
  if (a.size() <= 1) return {0.0};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<double>(i) * a[i];
  return r;
}

const Poly kX = {0.0, 1.0};

Eigen::MatrixXcd gram_with_rule(const SymbolFn& f, const PolyFamily& basis, int N, int nodes) {
  const QuadRule rule = gauss_rule(basis, nodes);
  const Eigen::MatrixXd V = basis_at_nodes(rule, N);
  Eigen::VectorXcd fv(nodes);
  for (int i = 0; i < nodes; ++i) fv(i) = f(rule.nodes[i]);
  const Eigen::MatrixXcd Vc = V.cast<cplx>();
  return Vc * fv.asDiagonal() * Vc.transpose();
}

int exact_nodes(const SymbolFn& f, int N) { return N + f.degree() / 2 + 1; }

}  // namespace

SymbolFn SymbolFn::polynomial(std::vector<cplx> coeffs) {
  SymbolFn s;
  s.is_poly_ = true;
  if (coeffs.empty()) coeffs.push_back(0.0);
  s.coeffs_ = std::move(coeffs);
  return s;
}

SymbolFn SymbolFn::polynomial(const std::vector<double>& coeffs) {
  return polynomial(std::vector<cplx>(coeffs.begin(), coeffs.end()));
}

SymbolFn SymbolFn::callable(std::function<cplx(double)> f, double sup_bound) {
  SymbolFn s;
  s.fn_ = std::move(f);
  s.sup_bound_ = sup_bound;
  return s;
}

cplx SymbolFn::operator()(double x) const {
  if (!is_poly_) return fn_(x);
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int SymbolFn::degree() const { return is_poly_ ? static_cast<int>(coeffs_.size()) - 1 : -1; }

SymbolFn SymbolFn::conj() const {
  if (is_poly_) {
    std::vector<cplx> c(coeffs_);
    for (cplx& v : c) v = std::conj(v);
    return polynomial(std::move(c));
  }
  auto f = fn_;
  return callable([f](double x) { return std::conj(f(x)); }, sup_bound_);
}

Eigen::MatrixXcd gram(const SymbolFn& f, const PolyFamily& basis, int N, int nodes) {
  if (N < 1) throw std::invalid_argument("gram needs N >= 1");
  if (f.is_polynomial()) {
    const int need = exact_nodes(f, N);
    if (nodes > 0 && nodes < need) throw std::invalid_argument("gram: quadrature too small for polynomial symbol");
    return gram_with_rule(f, basis, N, std::max(nodes, need));
  }
  return gram_with_rule(f, basis, N, nodes > 0 ? nodes : 2 * N + 32);
}

TruncOp toeplitz_matrix(const QuantParams& p, const SymbolFn& f, const PolyFamily& basis, int N, int nodes) {
  TruncOp op;
  op.basis = basis;
  op.epsilon = p.epsilon();
  op.matrix = gram(f, basis, N, nodes);
  double e = 1.0;
  for (int n = 0; n < N; ++n) {
    op.matrix.row(n) *= e;
    e *= p.epsilon();
  }
  return op;
}

Eigen::VectorXcd apply_A(const Eigen::VectorXcd& coeffs) {
  Eigen::VectorXcd r(coeffs.size());
  for (Eigen::Index n = 0; n < coeffs.size(); ++n) r(n) = static_cast<double>(n) * coeffs(n);
  return r;
}

std::vector<double> apply_A_weighted(const PolyFamily& basis, const std::vector<double>& p) {
  if (basis.kind() != FamilyKind::Laguerre || basis.order() != 0.0) {
    throw std::invalid_argument("x-space form of A is available for the order-zero Laguerre basis only");
  }
  const Poly d1 = poly_deriv(p);
  const Poly d2 = poly_deriv(d1);
  return poly_add(poly_scale(poly_mul(kX, d2), -1.0), poly_mul(Poly{-1.0, 1.0}, d1));
}

std::vector<double> basis_polynomial(const PolyFamily& basis, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  // Monomial coefficients of the standard polynomials via their recurrences.
  std::vector<Poly> P(static_cast<std::size_t>(n) + 1);
  P[0] = {1.0};
  const double a = basis.order();
  for (int k = 0; k < n; ++k) {
    const Poly& pk = P[k];
    const Poly pk1 = k > 0 ? P[k - 1] : Poly{0.0};
    Poly next;
    switch (basis.kind()) {
      case FamilyKind::Hermite:
        next = poly_add(poly_scale(poly_mul(kX, pk), 2.0), poly_scale(pk1, -2.0 * k));
        break;
      case FamilyKind::Laguerre:
        next = poly_scale(poly_add(poly_mul(Poly{2.0 * k + 1.0 + a, -1.0}, pk), poly_scale(pk1, -(k + a))),
                          1.0 / (k + 1.0));
        break;
      case FamilyKind::Legendre:
        next = poly_scale(poly_add(poly_scale(poly_mul(kX, pk), 2.0 * k + 1.0), poly_scale(pk1, -1.0 * k)),
                          1.0 / (k + 1.0));
        break;
    }
    P[k + 1] = next;
  }
  return poly_scale(P[n], 1.0 / std::sqrt(basis.norm_squared(n)));
}

Eigen::VectorXcd multiply_coeffs(const SymbolFn& f, const PolyFamily& basis, const Eigen::VectorXcd& u) {
  if (!f.is_polynomial()) throw std::invalid_argument("multiply_coeffs needs a polynomial symbol");
  const int M = static_cast<int>(u.size()) + f.degree();
  Eigen::VectorXcd ext = Eigen::VectorXcd::Zero(M);
  ext.head(u.size()) = u;
  return gram(f, basis, M) * ext;
}

std::vector<double> expansion_residual(const std::vector<double>& eps_list, const SymbolFn& f,
                                       const Eigen::VectorXcd& u, int K, const PolyFamily& basis,
                                       ExpansionVariable var) {
  if (K < 0) throw std::invalid_argument("expansion order must be nonnegative");
  const Eigen::VectorXcd fu = multiply_coeffs(f, basis, u);
  std::vector<double> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    const QuantParams p(eps);
    double acc = 0.0;
    for (Eigen::Index n = 0; n < fu.size(); ++n) {
      const double exact = std::pow(eps, static_cast<double>(n));
      double partial = 0.0;
      if (var == ExpansionVariable::LogEps) {
        const double t = n * std::log(eps);
        double term = 1.0;
        for (int k = 0; k <= K; ++k) {
          if (k > 0) term *= t / k;
          partial += term;
        }
      } else {
        const double h = p.hbar();
        double term = 1.0;  // C(n, j) (-h)^j
        for (int j = 0; j <= K; ++j) {
          if (j > 0) term *= (static_cast<double>(n) - (j - 1)) / j * (-h);
          partial += term;
        }
      }
      acc += std::norm((exact - partial) * fu(n));
    }
    out.push_back(std::sqrt(acc));
  }
  return out;
}

double spectral_identity_error(double eps, const SymbolFn& f, const Eigen::VectorXcd& u, const PolyFamily& basis) {
  const QuantParams p(eps);
  const Eigen::VectorXcd fu = multiply_coeffs(f, basis, u);
  const int M = static_cast<int>(fu.size());
  // Left side through the quadrature-built operator.
  Eigen::VectorXcd ext = Eigen::VectorXcd::Zero(M);
  ext.head(u.size()) = u;
  const Eigen::VectorXcd lhs = toeplitz_matrix(p, f, basis, M).matrix * ext;
  // Right side: sum_k (log eps)^k / k! A^k (f u).
  Eigen::VectorXcd rhs = fu;
  Eigen::VectorXcd term = fu;
  const double le = std::log(eps);
  for (int k = 1; k < 2000; ++k) {
    term = apply_A(term) * (le / k);
    rhs += term;
    if (term.norm() <= 1e-18 * rhs.norm()) break;
  }
  return (lhs - rhs).norm() / std::max(1.0, fu.norm());
}

CommutatorReport commutator_leading(const std::vector<double>& eps_list, const SymbolFn& f, const SymbolFn& g,
                                    const PolyFamily& basis, int N, double mask) {
  if (!f.is_polynomial() || !g.is_polynomial()) throw std::invalid_argument("commutator_leading needs polynomial symbols");
  if (eps_list.size() != 3) throw std::invalid_argument("commutator_leading needs three eps values");
  const double h = 1.0 - eps_list[0];
  for (int i = 1; i < 3; ++i) {
    if (std::abs((1.0 - eps_list[i]) - h / std::pow(2.0, i)) > 1e-12) {
      throw std::invalid_argument("commutator_leading needs eps = 1-h, 1-h/2, 1-h/4");
    }
  }
  const int big = N + 2 * (f.degree() + g.degree()) + 2;
  const Eigen::MatrixXcd Gf = gram(f, basis, big);
  const Eigen::MatrixXcd Gg = gram(g, basis, big);
  std::vector<Eigen::MatrixXcd> scaled;
  CommutatorReport rep;
  for (double eps : eps_list) {
    const QuantParams p(eps);
    Eigen::VectorXd d(big);
    for (int n = 0; n < big; ++n) d(n) = std::pow(eps, static_cast<double>(n));
    const Eigen::MatrixXcd Tf = d.cast<cplx>().asDiagonal() * Gf;
    const Eigen::MatrixXcd Tg = d.cast<cplx>().asDiagonal() * Gg;
    const Eigen::MatrixXcd C = (Tf * Tg - Tg * Tf) / p.hbar();
    scaled.push_back(C.topLeftCorner(N, N));
    rep.h.push_back(p.hbar());
  }
  rep.extrapolated = richardson3(scaled[0], scaled[1], scaled[2]);
  Eigen::VectorXd a(big);
  for (int n = 0; n < big; ++n) a(n) = n;
  const Eigen::MatrixXcd A = a.cast<cplx>().asDiagonal();
  const Eigen::MatrixXcd D = (Gf * A * Gg - Gg * A * Gf).topLeftCorner(N, N);
  auto compare = [&](int s, double& masked) {
    const Eigen::MatrixXcd Ds = D * static_cast<double>(s);
    const double dmax = Ds.cwiseAbs().maxCoeff();
    double worst = 0.0;
    masked = 0.0;
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        const double dij = std::abs(Ds(i, j));
        const double diff = std::abs(rep.extrapolated(i, j) - Ds(i, j));
        if (dij >= mask * dmax) {
          worst = std::max(worst, diff / dij);
        } else {
          masked = std::max(masked, diff / dmax);
        }
      }
    }
    return worst;
  };
  double mp = 0.0, mm = 0.0;
  const double ep = compare(+1, mp);
  const double em = compare(-1, mm);
  rep.sign = ep <= em ? +1 : -1;
  rep.max_rel_error = std::min(ep, em);
  rep.max_masked_error = ep <= em ? mp : mm;
  rep.other_sign_error = std::max(ep, em);
  rep.derived = D * static_cast<double>(rep.sign);
  return rep;
}

std::vector<double> commutator_operator_weighted(const std::vector<double>& f, const std::vector<double>& g,
                                                 const std::vector<double>& p) {
  const Poly W = poly_add(poly_mul(f, poly_deriv(g)), poly_scale(poly_mul(g, poly_deriv(f)), -1.0));
  const Poly xW = poly_mul(kX, W);
  // u = e^{-x/2} p  =>  u' = e^{-x/2} (p' - p/2)
  const Poly du = poly_add(poly_deriv(p), poly_scale(p, -0.5));
  return poly_add(poly_mul(poly_deriv(xW), p), poly_scale(poly_mul(xW, du), 2.0));
}

}  // namespace lfock
