#include "lfock/convergence.hpp"

#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lfock/quadrature.hpp"

namespace lfock {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Incremental log|P_n(x)| for complex x with rescaling so large n cannot overflow.
class LegendreLogAbs {
 public:
  explicit LegendreLogAbs(cplx x) : x_(x) { logs_.push_back(0.0); }

  double operator()(long n) {
    while (static_cast<long>(logs_.size()) <= n) step();
    return logs_[n];
  }

 private:
  void step() {
    const long n = static_cast<long>(logs_.size()) - 1;  // have P_n, want P_{n+1}
    cplx next;
    if (n == 0) {
      next = x_;
    } else {
      next = ((2.0 * n + 1.0) * x_ * cur_ - static_cast<double>(n) * prev_) / (n + 1.0);
    }
    prev_ = cur_;
    cur_ = next;
    const double m = std::abs(cur_);
    logs_.push_back(m == 0.0 ? kNegInf : std::log(m) + scale_);
    if (m > 1e100 || (m < 1e-100 && m > 0.0)) {
      const double s = std::log(m);
      cur_ /= m;
      prev_ /= m;
      scale_ += s;
    }
  }

  cplx x_;
  cplx prev_ = 0.0, cur_ = 1.0;
  double scale_ = 0.0;
  std::vector<double> logs_;
};

// Sum of the tail sum_{n > N} exp(log_term(n)); inf unless certified convergent.
template <class F>
double tail_sum(F&& log_term, int N) {
  const SeriesTest t = doubling_test([&](double m) { return log_term(N + 1 + m); });
  if (t.converges != Tri::True) return std::numeric_limits<double>::infinity();
  double extra = 0.0;
  if (!t.ratios.empty() && t.log_increments.back() > kNegInf) {
    const double r = *std::max_element(t.ratios.end() - std::min<std::size_t>(4, t.ratios.size()), t.ratios.end());
    if (r < 1.0) extra = std::exp(t.log_increments.back()) * r / (1.0 - r);
  }
  return t.partial_sum + extra;
}

// Root-type quantity s_k = log c(n) / g(n) at n = 2^k, and the verdict that it tends to -inf.
Tri root_test(const std::function<double(double)>& log_c, bool legendre, std::vector<double>& evidence) {
  static const int ks[] = {8, 16, 32, 64, 128, 256, 512, 1000};
  evidence.clear();
  for (int k : ks) {
    const double n = std::ldexp(1.0, k);
    const double lc = log_c(n);
    evidence.push_back(lc / (legendre ? n : std::sqrt(n)));
  }
  // log c_n overflowing to -inf means the decay outran every power of n.
  for (double e : evidence)
    if (e == kNegInf) return Tri::True;
  const std::size_t m = evidence.size();
  for (std::size_t i = m - 4; i + 1 < m; ++i) {
    if (!(evidence[i] < 0.0)) return Tri::False;
    if (evidence[i + 1] / evidence[i] < 1.05) return Tri::False;
  }
  return Tri::True;
}

double log_weight(const PolyFamily& family, double n) {
  return family.kind() == FamilyKind::Hermite ? -0.5 * std::log(n + 1.0) : 0.0;
}

}  // namespace

// ---------------------------------------------------------------- CoeffSeq

CoeffSeq CoeffSeq::geometric(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("geometric ratio must lie in (0, 1)");
  CoeffSeq c;
  c.form_ = Form::Geometric;
  c.p0_ = eps;
  return c;
}

CoeffSeq CoeffSeq::power_law(double p) {
  CoeffSeq c;
  c.form_ = Form::PowerLaw;
  c.p0_ = p;
  return c;
}

CoeffSeq CoeffSeq::stretched_exp(double a, double beta) {
  if (!(a > 0.0 && beta > 0.0)) throw std::invalid_argument("stretched_exp needs a, beta > 0");
  CoeffSeq c;
  c.form_ = Form::StretchedExp;
  c.p0_ = a;
  c.p1_ = beta;
  return c;
}

CoeffSeq CoeffSeq::exp_over_log() {
  CoeffSeq c;
  c.form_ = Form::ExpOverLog;
  return c;
}

CoeffSeq CoeffSeq::inverse_factorial() {
  CoeffSeq c;
  c.form_ = Form::InverseFactorial;
  return c;
}

CoeffSeq CoeffSeq::tabulated(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("tabulated sequence needs values");
  for (double v : values)
    if (!(v > 0.0)) throw std::invalid_argument("coefficients must be positive");
  CoeffSeq c;
  c.form_ = Form::Tabulated;
  c.table_ = std::move(values);
  return c;
}

CoeffSeq CoeffSeq::tabulated(std::vector<double> values, const CoeffSeq& envelope, EnvelopeKind kind) {
  CoeffSeq c = tabulated(std::move(values));
  c.envelope_ = std::make_shared<const CoeffSeq>(envelope);
  c.envelope_kind_ = kind;
  return c;
}

CoeffSeq CoeffSeq::interleaved(const CoeffSeq& even, const CoeffSeq& odd) {
  CoeffSeq c;
  c.form_ = Form::Interleaved;
  c.envelope_ = std::make_shared<const CoeffSeq>(even);
  c.odd_ = std::make_shared<const CoeffSeq>(odd);
  return c;
}

CoeffSeq CoeffSeq::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad number in sequence spec: " + item);
      args.push_back(v);
    }
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw std::invalid_argument("sequence '" + kind + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "geometric" || kind == "geo") {
    need(1);
    return geometric(args[0]);
  }
  if (kind == "power") {
    need(1);
    return power_law(args[0]);
  }
  if (kind == "sexp") {
    need(2);
    return stretched_exp(args[0], args[1]);
  }
  if (kind == "exp-log") {
    need(0);
    return exp_over_log();
  }
  if (kind == "inv-factorial") {
    need(0);
    return inverse_factorial();
  }
  throw std::invalid_argument("unknown sequence kind: " + kind);
}

double CoeffSeq::log_value(double n) const {
  if (n < 0.0) throw std::invalid_argument("sequence index must be >= 0");
  switch (form_) {
    case Form::Geometric:
      return n * std::log(p0_);
    case Form::PowerLaw:
      return p0_ * std::log(n + 1.0);
    case Form::StretchedExp:
      return -p0_ * std::pow(n, p1_);
    case Form::ExpOverLog:
      return -n / std::log(n + 2.0);
    case Form::InverseFactorial:
      return -std::lgamma(n + 1.0);
    case Form::Tabulated: {
      if (n < static_cast<double>(table_.size())) return std::log(table_[static_cast<std::size_t>(n)]);
      if (!envelope_) throw std::out_of_range("tabulated sequence has no envelope beyond its table");
      return envelope_->log_value(n);
    }
    case Form::Interleaved:
      return std::fmod(n, 2.0) == 0.0 ? envelope_->log_value(n) : odd_->log_value(n);
  }
  return 0.0;
}

double CoeffSeq::value(double n) const { return std::exp(log_value(n)); }

bool CoeffSeq::closed_form() const {
  if (form_ == Form::Tabulated) return false;
  if (form_ == Form::Interleaved) return envelope_->closed_form() && odd_->closed_form();
  return true;
}

std::size_t CoeffSeq::horizon() const { return form_ == Form::Tabulated ? table_.size() : 0; }

std::string CoeffSeq::describe() const {
  std::ostringstream os;
  switch (form_) {
    case Form::Geometric:
      os << "geometric:" << p0_;
      break;
    case Form::PowerLaw:
      os << "power:" << p0_;
      break;
    case Form::StretchedExp:
      os << "sexp:" << p0_ << "," << p1_;
      break;
    case Form::ExpOverLog:
      os << "exp-log";
      break;
    case Form::InverseFactorial:
      os << "inv-factorial";
      break;
    case Form::Tabulated:
      os << "tabulated[" << table_.size() << "]";
      if (envelope_)
        os << (envelope_kind_ == EnvelopeKind::Upper ? " <= " : " >= ") << envelope_->describe();
      break;
    case Form::Interleaved:
      os << "interleaved(" << envelope_->describe() << " | " << odd_->describe() << ")";
      break;
  }
  return os.str();
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

// ---------------------------------------------------------------- classify

Verdict classify(const PolyFamily& family, const CoeffSeq& c) {
  Verdict v;
  const bool legendre = family.kind() == FamilyKind::Legendre;
  if (c.closed_form()) {
    v.sum_evidence = doubling_test([&](double n) { return c.log_value(n) + log_weight(family, n); });
    v.rkhs = v.sum_evidence.converges;
    v.entire_extension = root_test([&](double n) { return c.log_value(n); }, legendre, v.root_evidence);
  } else if (!c.envelope()) {
    v.note = "tabulated sequence without tail envelope";
    v.rkhs = Tri::Indeterminate;
    v.entire_extension = Tri::Indeterminate;
  } else {
    // The table fixes finitely many terms; the tail behaves like the envelope
    // in the direction the envelope bounds it.
    const bool upper = c.envelope_kind() == CoeffSeq::EnvelopeKind::Upper;
    v.sum_evidence = doubling_test([&](double n) { return c.log_value(n) + log_weight(family, n); });
    const Tri s = v.sum_evidence.converges;
    v.rkhs = (upper && s == Tri::True) || (!upper && s == Tri::False) ? s : Tri::Indeterminate;
    const Tri e = root_test([&](double n) { return c.envelope()->log_value(n); }, legendre, v.root_evidence);
    v.entire_extension = (upper && e == Tri::True) || (!upper && e == Tri::False) ? e : Tri::Indeterminate;
    v.note = "tail decided by " + std::string(upper ? "upper" : "lower") + " envelope " + c.envelope()->describe();
  }
  if (v.entire_extension == Tri::True && v.rkhs == Tri::Indeterminate) v.rkhs = Tri::True;
  return v;
}

HermiteSplit hermite_two_series(const CoeffSeq& c) {
  // h_n(0)^2 for orthonormal Hermite: (2m)! / (4^m (m!)^2 sqrt(pi)) at n = 2m, 0 for odd n.
  auto log_h0_sq = [](double n) {
    if (std::fmod(n, 2.0) != 0.0) return kNegInf;
    const double m = 0.5 * n;
    return std::lgamma(n + 1.0) - 2.0 * std::lgamma(m + 1.0) - n * std::numbers::ln2 - 0.5 * std::log(std::numbers::pi);
  };
  HermiteSplit s;
  s.origin_sum = doubling_test([&](double n) { return c.log_value(n) + log_h0_sq(n); }).converges;
  s.shifted_origin_sum = doubling_test([&](double n) { return c.log_value(n + 1.0) + log_h0_sq(n); }).converges;
  s.rkhs = classify(PolyFamily::hermite(), c).rkhs;
  return s;
}

// ---------------------------------------------------------------- kernel sums

double envelope_constant(const PolyFamily& family, double x, int n_max) {
  if (family.kind() == FamilyKind::Legendre) return 1.0;
  if (family.kind() == FamilyKind::Laguerre && !(x > 0.0))
    throw std::domain_error("Laguerre envelope n^{-1/4} needs x > 0");
  const ScaledValues v = orthonormal_values(family, n_max, x);
  double m = 0.0;
  for (int n = 1; n <= n_max; ++n) m = std::max(m, std::pow(n, 0.25) * std::abs(v.values[n]) * std::exp(v.log_scale));
  return 1.05 * m;
}

KernelSum kernel_partial_sum(const PolyFamily& family, const CoeffSeq& c, double x, double y, int N) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  const auto [lo, hi] = family.domain();
  if (x < lo || x > hi || y < lo || y > hi) throw std::domain_error("x, y must lie in the family's domain");
  const ScaledValues bx = orthonormal_values(family, N, x);
  const ScaledValues by = orthonormal_values(family, N, y);
  KernelSum out;
  const double sc = std::exp(bx.log_scale + by.log_scale);
  for (int n = 0; n <= N; ++n) out.value += c.value(n) * bx.values[n] * by.values[n] * sc;
  if (family.kind() == FamilyKind::Legendre) {
    out.envelope_x = out.envelope_y = 1.0;
    out.tail_bound = tail_sum([&](double n) { return c.log_value(n) + std::log(n + 0.5); }, N);
  } else {
    out.envelope_x = envelope_constant(family, x);
    out.envelope_y = envelope_constant(family, y);
    out.tail_bound = out.envelope_x * out.envelope_y *
                     tail_sum([&](double n) { return c.log_value(n) - 0.5 * std::log(n); }, N);
  }
  return out;
}

// ---------------------------------------------------------------- Legendre domains

double legendre_radius(cplx x) {
  const cplx s = std::sqrt(x * x - 1.0);
  return std::min(std::abs(x + s), std::abs(x - s));
}

double legendre_radius_empirical(cplx x, int n, int window) {
  if (window < 1 || window >= n) throw std::invalid_argument("need 1 <= window < n");
  LegendreLogAbs lp(x);
  double best = kNegInf;
  for (int k = n - window; k <= n; ++k) best = std::max(best, lp(k) / k);
  return std::exp(-best);
}

bool ellipse_contains(double eps, cplx x) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  return std::abs(1.0 - x) + std::abs(1.0 + x) < (1.0 + eps) / std::sqrt(eps);
}

bool kernel_domain_inequality(double eps, cplx x, cplx y) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  return std::sqrt(std::abs((1.0 - x) * (1.0 - y))) + std::sqrt(std::abs((1.0 + x) * (1.0 + y))) <
         std::sqrt(eps) + 1.0 / std::sqrt(eps);
}

SeriesTest legendre_diagonal_test(double eps, cplx x) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  LegendreLogAbs lp(x);
  const double le = std::log(eps);
  return doubling_test(
      [&](double n) { return std::log(n + 0.5) + n * le + 2.0 * lp(static_cast<long>(n)); });
}

std::vector<NonextensionRow> nonextension_witness(const std::vector<double>& eps_grid, cplx x) {
  std::vector<NonextensionRow> rows;
  const double r = legendre_radius(x);
  for (double eps : eps_grid) {
    const SeriesTest t = legendre_diagonal_test(eps, x);
    rows.push_back({eps, t.converges, r * r, t.ratios});
  }
  return rows;
}

}  // namespace lfock
