#include "lfock/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lfock {

namespace {

using cd = std::complex<double>;

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// binom(-p, s) = (-1)^s C(p+s-1, s)
Rational neg_binom(int p, int s) {
  if (s == 0) return 1;
  if (p == 0) return 0;
  Rational c = binom(p + s - 1, s);
  return (s % 2) ? Rational(-c) : c;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int t = 2; t <= n; ++t) r *= t;
  return r;
}

double falling(int p, int a) {
  double r = 1.0;
  for (int t = 0; t < a; ++t) r *= (p - t);
  return r;
}

cd coeff_value(int i, int j, int r, cd z) {
  const double rz = std::abs(z);
  if (rz == 0.0 && r < 0) throw std::domain_error("negative power of |z| at z = 0");
  cd v = std::pow(z, i) * std::pow(std::conj(z), j);
  if (r != 0) v *= std::pow(rz, r);
  return v;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

// [Y^n] (2Y + Y^2)^a (1+Y)^{-p}
Rational alpha_coeff(int n, int a, int p) {
  Rational s = 0;
  for (int t = 0; t <= a && a + t <= n; ++t) {
    const int rest = n - a - t;
    s += binom(a, t) * Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), a - t)) *
         neg_binom(p, rest);
  }
  return s;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- SymbolPoly

SymbolPoly SymbolPoly::monomial(int a, int b, cd c) {
  SymbolPoly f;
  f.coeffs[{a, b}] = c;
  return f;
}

cd SymbolPoly::operator()(cd w) const { return derivative(0, 0, w); }

cd SymbolPoly::derivative(int a, int b, cd z) const {
  cd s = 0.0;
  for (const auto& [k, c] : coeffs) {
    const auto [p, q] = k;
    if (p < a || q < b) continue;
    s += c * falling(p, a) * falling(q, b) * std::pow(z, p - a) * std::pow(std::conj(z), q - b);
  }
  return s;
}

bool SymbolPoly::is_real() const {
  for (const auto& [k, c] : coeffs) {
    auto it = coeffs.find({k.second, k.first});
    const cd other = it == coeffs.end() ? cd(0.0) : it->second;
    if (std::abs(c - std::conj(other)) > 1e-15 * std::max(1.0, std::abs(c))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- CoeffFn

CoeffFn CoeffFn::constant(const Rational& c) { return monomial(0, 0, 0, c); }

CoeffFn CoeffFn::monomial(int i, int j, int r, const Rational& c) {
  CoeffFn f;
  f.add(i, j, r, c);
  return f;
}

void CoeffFn::add(int i, int j, int r, const Rational& c) {
  if (c == 0) return;
  const int m = std::min(i, j);
  const Key k{i - m, j - m, r + 2 * m};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoeffFn CoeffFn::operator+(const CoeffFn& o) const {
  CoeffFn r = *this;
  for (const auto& [k, c] : o.terms_) r.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
  return r;
}

CoeffFn CoeffFn::operator*(const CoeffFn& o) const {
  CoeffFn r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add(std::get<0>(k1) + std::get<0>(k2), std::get<1>(k1) + std::get<1>(k2),
            std::get<2>(k1) + std::get<2>(k2), c1 * c2);
  return r;
}

CoeffFn CoeffFn::operator*(const Rational& s) const {
  CoeffFn r;
  for (const auto& [k, c] : terms_) r.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c * s);
  return r;
}

// d(z^i zb^j |z|^r) = i z^{i-1} zb^j |z|^r + (r/2) z^i zb^{j+1} |z|^{r-2}
CoeffFn CoeffFn::d() const {
  CoeffFn out;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, r] = k;
    if (i > 0) out.add(i - 1, j, r, c * i);
    if (r != 0) out.add(i, j + 1, r - 2, c * Rational(r, 2));
  }
  return out;
}

CoeffFn CoeffFn::dbar() const {
  CoeffFn out;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, r] = k;
    if (j > 0) out.add(i, j - 1, r, c * j);
    if (r != 0) out.add(i + 1, j, r - 2, c * Rational(r, 2));
  }
  return out;
}

bool CoeffFn::has_negative_radial_power() const {
  for (const auto& [k, c] : terms_)
    if (std::get<2>(k) < 0) return true;
  return false;
}

cd CoeffFn::operator()(cd z) const {
  cd s = 0.0;
  for (const auto& [k, c] : terms_) s += to_double(c) * coeff_value(std::get<0>(k), std::get<1>(k), std::get<2>(k), z);
  return s;
}

std::string CoeffFn::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    const auto [i, j, r] = k;
    if (i) os << " z^" << i;
    if (j) os << " zb^" << j;
    if (r) os << " |z|^" << r;
  }
  return os.str();
}

// ---------------------------------------------------------------- DiffOpPoly

DiffOpPoly DiffOpPoly::identity() { return term(1, 0, 0, 0, 0, 0); }

DiffOpPoly DiffOpPoly::term(const Rational& c, int i, int j, int r, int a, int b) {
  DiffOpPoly d;
  d.add(i, j, r, a, b, c);
  return d;
}

DiffOpPoly DiffOpPoly::laplacian() { return term(4, 0, 0, 0, 1, 1); }

void DiffOpPoly::add(int i, int j, int r, int a, int b, const Rational& c) {
  if (c == 0) return;
  if (a < 0 || b < 0) throw std::invalid_argument("negative derivative order");
  const int m = std::min(i, j);
  const Key k{i - m, j - m, r + 2 * m, a, b};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffOpPoly DiffOpPoly::operator+(const DiffOpPoly& o) const {
  DiffOpPoly r = *this;
  for (const auto& [k, c] : o.terms_) {
    const auto [i, j, rr, a, b] = k;
    r.add(i, j, rr, a, b, c);
  }
  return r;
}

DiffOpPoly DiffOpPoly::operator-(const DiffOpPoly& o) const { return *this + o * Rational(-1); }

DiffOpPoly DiffOpPoly::operator*(const Rational& s) const {
  DiffOpPoly r;
  if (s == 0) return r;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, rr, a, b] = k;
    r.add(i, j, rr, a, b, c * s);
  }
  return r;
}

// d^a dbar^b (beta d^e dbar^f u) = sum C(a,p) C(b,q) (d^p dbar^q beta) d^{a-p+e} dbar^{b-q+f} u
DiffOpPoly DiffOpPoly::compose(const DiffOpPoly& other) const {
  DiffOpPoly out;
  for (const auto& [k1, c1] : terms_) {
    const auto [i1, j1, r1, a, b] = k1;
    const CoeffFn alpha = CoeffFn::monomial(i1, j1, r1, c1);
    for (const auto& [k2, c2] : other.terms_) {
      const auto [i2, j2, r2, e, f] = k2;
      CoeffFn beta_p = CoeffFn::monomial(i2, j2, r2, c2);
      for (int p = 0; p <= a; ++p) {
        CoeffFn beta_pq = beta_p;
        for (int q = 0; q <= b; ++q) {
          if (beta_pq.is_zero()) break;
          const CoeffFn prod = (alpha * beta_pq) * (binom(a, p) * binom(b, q));
          for (const auto& [kk, cc] : prod.terms())
            out.add(std::get<0>(kk), std::get<1>(kk), std::get<2>(kk), a - p + e, b - q + f, cc);
          beta_pq = beta_pq.dbar();
        }
        beta_p = beta_p.d();
        if (beta_p.is_zero()) break;
      }
    }
  }
  return out;
}

DiffOpPoly DiffOpPoly::times_radial(int r) const {
  DiffOpPoly out;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, rr, a, b] = k;
    out.add(i, j, rr + r, a, b, c);
  }
  return out;
}

CoeffFn DiffOpPoly::apply_to_one() const {
  CoeffFn out;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, r, a, b] = k;
    if (a == 0 && b == 0) out.add(i, j, r, c);
  }
  return out;
}

CoeffFn DiffOpPoly::apply_monomial(int p, int q) const {
  CoeffFn out;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, r, a, b] = k;
    if (a > p || b > q) continue;
    Rational f = c;
    for (int t = 0; t < a; ++t) f *= (p - t);
    for (int t = 0; t < b; ++t) f *= (q - t);
    out.add(i + p - a, j + q - b, r, f);
  }
  return out;
}

cd DiffOpPoly::apply(const SymbolPoly& f, cd z) const {
  if (z == cd(0.0) && has_negative_radial_power())
    throw std::domain_error("operator has negative powers of |z|; not defined at z = 0");
  cd s = 0.0;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, r, a, b] = k;
    s += to_double(c) * coeff_value(i, j, r, z) * f.derivative(a, b, z);
  }
  return s;
}

cd DiffOpPoly::apply_bidiff(const SymbolPoly& f, const SymbolPoly& g, cd z) const {
  if (z == cd(0.0) && has_negative_radial_power())
    throw std::domain_error("operator has negative powers of |z|; not defined at z = 0");
  cd s = 0.0;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, r, a, b] = k;
    s += to_double(c) * coeff_value(i, j, r, z) * f.derivative(a, 0, z) * g.derivative(0, b, z);
  }
  return s;
}

bool DiffOpPoly::has_negative_radial_power() const {
  for (const auto& [k, c] : terms_)
    if (std::get<2>(k) < 0) return true;
  return false;
}

Rational DiffOpPoly::coeff(int i, int j, int r, int a, int b) const {
  const int m = std::min(i, j);
  auto it = terms_.find(Key{i - m, j - m, r + 2 * m, a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string DiffOpPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto [i, j, r, a, b] = k;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational m = c < 0 ? Rational(-c) : c;
    os << rational_str(m);
    if (i) os << " z" << (i > 1 ? "^" + std::to_string(i) : "");
    if (j) os << " zb" << (j > 1 ? "^" + std::to_string(j) : "");
    if (r) os << " |z|^" << r;
    if (a) os << " d" << (a > 1 ? "^" + std::to_string(a) : "");
    if (b) os << " db" << (b > 1 ? "^" + std::to_string(b) : "");
  }
  return os.str();
}

// ---------------------------------------------------------------- FormalOpSeries

FormalOpSeries::FormalOpSeries(std::vector<DiffOpPoly> coeffs, std::string variable)
    : coeffs_(std::move(coeffs)), variable_(std::move(variable)) {
  if (coeffs_.empty()) throw std::invalid_argument("FormalOpSeries needs at least one coefficient");
}

FormalOpSeries FormalOpSeries::operator*(const FormalOpSeries& o) const {
  const int M = std::min(order(), o.order());
  std::vector<DiffOpPoly> out(M + 1);
  for (int m = 0; m <= M; ++m)
    for (int i = 0; i <= m; ++i) out[m] = out[m] + coeffs_[i].compose(o.coeffs_[m - i]);
  return FormalOpSeries(std::move(out), variable_);
}

FormalOpSeries FormalOpSeries::inverse() const {
  if (!(coeffs_[0] == DiffOpPoly::identity()))
    throw std::invalid_argument("inverse needs the identity as leading coefficient");
  std::vector<DiffOpPoly> r(coeffs_.size());
  r[0] = DiffOpPoly::identity();
  for (int j = 1; j <= order(); ++j) {
    DiffOpPoly s;
    for (int i = 1; i <= j; ++i) s = s + coeffs_[i].compose(r[j - i]);
    r[j] = s * Rational(-1);
  }
  return FormalOpSeries(std::move(r), variable_);
}

FormalOpSeries FormalOpSeries::divide_scalar(const std::vector<Rational>& s) const {
  if (s.empty() || s[0] == 0) throw std::invalid_argument("divide_scalar needs a nonzero constant term");
  const int M = order();
  std::vector<Rational> inv(M + 1, Rational(0));
  inv[0] = 1 / s[0];
  for (int m = 1; m <= M; ++m) {
    Rational acc = 0;
    for (int i = 1; i <= m && i < static_cast<int>(s.size()); ++i) acc += s[i] * inv[m - i];
    inv[m] = -acc / s[0];
  }
  std::vector<DiffOpPoly> out(M + 1);
  for (int m = 0; m <= M; ++m)
    for (int i = 0; i <= m; ++i) out[m] = out[m] + coeffs_[m - i] * inv[i];
  return FormalOpSeries(std::move(out), variable_);
}

// ---------------------------------------------------------------- operator families

Rational pochhammer(const Rational& a, int k) {
  Rational r = 1;
  for (int t = 0; t < k; ++t) r *= (a + t);
  return r;
}

Rational asym_coeff_exact(int m) {
  if (m < 0) throw std::invalid_argument("asym_coeff_exact needs m >= 0");
  const Rational h = pochhammer(Rational(1, 2), m);
  return h * h / (factorial(m) * Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), m)));
}

DiffOpPoly r_operator_scaled(int m) {
  if (m < 0) throw std::invalid_argument("r_operator_scaled needs m >= 0");
  DiffOpPoly out;
  for (int j = 0; j <= m; ++j)
    for (int k = 0; j + k <= m; ++k)
      for (int l = 0; j + k + l <= m; ++l) {
        const int n = m - j - k - l;
        Rational pre = asym_coeff_exact(j) * asym_coeff_exact(k) * asym_coeff_exact(l) * factorial(n);
        if (l % 2) pre = -pre;
        for (int a = 0; a <= n; ++a) {
          const Rational ca = alpha_coeff(n, a, j + l);
          if (ca == 0) continue;
          for (int b = 0; b <= n; ++b) {
            const Rational cb = alpha_coeff(n, b, k + l);
            if (cb == 0) continue;
            out.add(a, b, 0, a, b, pre * ca * cb / (factorial(a) * factorial(b)));
          }
        }
      }
  return out;
}

FormalOpSeries q_series(int M) {
  if (M < 0) throw std::invalid_argument("q_series needs M >= 0");
  std::vector<DiffOpPoly> r;
  std::vector<Rational> ones;
  for (int m = 0; m <= M; ++m) {
    r.push_back(r_operator_scaled(m));
    const CoeffFn one = r.back().apply_to_one();
    Rational c = 0;
    for (const auto& [k, v] : one.terms()) {
      if (k != CoeffFn::Key{0, 0, 0}) throw std::logic_error("R_m(1) is not constant");
      c = v;
    }
    ones.push_back(c);
  }
  FormalOpSeries qt = FormalOpSeries(std::move(r), "1/lambda").divide_scalar(ones);
  std::vector<DiffOpPoly> q;
  for (int m = 0; m <= M; ++m) q.push_back(qt[m].times_radial(-m));
  return FormalOpSeries(std::move(q), "1/alpha");
}

// alpha^{-m} = 2^{-m} hbar^m (1-hbar)^{-m/2} = 2^{-m} sum_t (m/2)_t / t! hbar^{m+t}
FormalOpSeries q_series_hbar(int M) {
  const FormalOpSeries q = q_series(M);
  std::vector<DiffOpPoly> out(M + 1);
  for (int j = 0; j <= M; ++j)
    for (int m = 0; m <= j; ++m) {
      const Rational c = pochhammer(Rational(m, 2), j - m) / factorial(j - m) /
                         Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), m));
      out[j] = out[j] + q[m] * c;
    }
  return FormalOpSeries(std::move(out), "hbar");
}

FormalOpSeries c_series(int M) { return q_series_hbar(M).inverse(); }

CoeffFn bracket_coefficient(const DiffOpPoly& c) {
  CoeffFn out;
  for (const auto& [k, v] : c.terms()) {
    const auto [i, j, r, a, b] = k;
    if (a != 1 || b != 1) throw std::invalid_argument("bracket_coefficient needs pure d dbar terms");
    out.add(i, j, r, v);
  }
  return out;
}

cd antisymmetric_value(const DiffOpPoly& c, const SymbolPoly& f, const SymbolPoly& g, cd z) {
  return c.apply_bidiff(f, g, z) - c.apply_bidiff(g, f, z);
}

}  // namespace lfock
