#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "lfock/params.hpp"

namespace lfock {

/// A positive coefficient sequence c_0, c_1, ... known through log c_n.
class CoeffSeq {
 public:
  enum class EnvelopeKind { Upper, Lower };

  static CoeffSeq geometric(double eps);
  /// c_n = (n+1)^p
  static CoeffSeq power_law(double p);
  /// c_n = exp(-a n^beta)
  static CoeffSeq stretched_exp(double a, double beta);
  /// c_n = exp(-n / log(n+2))
  static CoeffSeq exp_over_log();
  /// c_n = 1/n!
  static CoeffSeq inverse_factorial();
  /// Finite table; beyond it the sequence is only known through `envelope`
  /// (an upper or lower bound), if given.
  static CoeffSeq tabulated(std::vector<double> values);
  static CoeffSeq tabulated(std::vector<double> values, const CoeffSeq& envelope, EnvelopeKind kind);
  /// c_n from `even` for even n and from `odd` for odd n.
  static CoeffSeq interleaved(const CoeffSeq& even, const CoeffSeq& odd);
  /// Parses "geometric:0.5", "power:-0.5", "sexp:1,0.5", "exp-log", "inv-factorial".
  static CoeffSeq parse(const std::string& spec);

  /// log c_n; n may exceed the int range for closed forms.
  double log_value(double n) const;
  double value(double n) const;
  /// Known for every n (closed form or interleaving of closed forms).
  bool closed_form() const;
  /// Table length for tabulated sequences, 0 otherwise.
  std::size_t horizon() const;
  const CoeffSeq* envelope() const { return envelope_.get(); }
  EnvelopeKind envelope_kind() const { return envelope_kind_; }
  std::string describe() const;

 private:
  enum class Form { Geometric, PowerLaw, StretchedExp, ExpOverLog, InverseFactorial, Tabulated, Interleaved };
  Form form_ = Form::Geometric;
  double p0_ = 0.0, p1_ = 0.0;
  std::vector<double> table_;
  std::shared_ptr<const CoeffSeq> envelope_, odd_;
  EnvelopeKind envelope_kind_ = EnvelopeKind::Upper;
};

enum class Tri { False, True, Indeterminate };
std::string to_string(Tri t);

struct SeriesTest {
  Tri converges = Tri::Indeterminate;
  std::vector<double> log_increments;  // log D_k, D_k = sum over [2^k, 2^{k+1})
  std::vector<double> ratios;          // D_{k+1} / D_k
  double partial_sum = 0.0;            // sum up to the last window (inf if it overflowed)
};

/// Convergence of sum_n exp(log_term(n)) from doubling increments: divergent
/// when the last 4 increment ratios are >= 0.98, convergent when they are
/// <= 0.95 or the increments become negligible, indeterminate otherwise.
template <class F>
SeriesTest doubling_test(F&& log_term, int k_max = 20);

struct Verdict {
  Tri rkhs = Tri::Indeterminate;
  Tri entire_extension = Tri::Indeterminate;
  SeriesTest sum_evidence;
  std::vector<double> root_evidence;  // log c_n / sqrt(n) (or / n for Legendre) at n = 2^k
  std::string note;
};

/// rkhs: sum w_n c_n < inf with w_n = 1 (Legendre, Laguerre) or (n+1)^{-1/2}
/// (Hermite). entire_extension: c_n^{1/sqrt n} -> 0 (Laguerre, Hermite),
/// c_n^{1/n} -> 0 (Legendre).
Verdict classify(const PolyFamily& family, const CoeffSeq& c);

struct HermiteSplit {
  Tri origin_sum = Tri::Indeterminate;        // H_c(0,0) = sum c_n h_n(0)^2
  Tri shifted_origin_sum = Tri::Indeterminate;  // the same with c_{n+1}
  Tri rkhs = Tri::Indeterminate;
};

/// Checks the two-series condition for the Hermite family at the origin,
/// where only even indices contribute.
HermiteSplit hermite_two_series(const CoeffSeq& c);

struct KernelSum {
  double value = 0.0;
  double tail_bound = 0.0;  // inf when the envelope tail diverges
  double envelope_x = 0.0, envelope_y = 0.0;
};

/// sum_{n<=N} c_n b_n(x) b_n(y) over orthonormal b_n (Legendre: sqrt(n+1/2) P_n)
/// with a tail bounded through the family envelope: |b_n| <= sqrt(n+1/2) for
/// Legendre, C_x n^{-1/4} for Laguerre and Hermite with C_x fitted.
KernelSum kernel_partial_sum(const PolyFamily& family, const CoeffSeq& c, double x, double y, int N);

/// C_x = 1.05 max_{1<=n<=n_max} n^{1/4} |b_n(x)| for the orthonormal Laguerre or
/// Hermite polynomials.
double envelope_constant(const PolyFamily& family, double x, int n_max = 1000);

/// Radius of convergence in eps of sum eps^n P_n(x)^2-type series:
/// min |x +- sqrt(x^2-1)| (the generating-function radius).
double legendre_radius(cplx x);

/// The same radius from |P_n(x)|^{-1/n} over n in [n-window, n].
double legendre_radius_empirical(cplx x, int n = 4000, int window = 100);

/// |1-x| + |1+x| < (1+eps)/sqrt(eps).
bool ellipse_contains(double eps, cplx x);

/// |(1-x)(1-y)|^{1/2} + |(1+x)(1+y)|^{1/2} < eps^{1/2} + eps^{-1/2}.
bool kernel_domain_inequality(double eps, cplx x, cplx y);

struct NonextensionRow {
  double epsilon = 0.0;
  Tri converges = Tri::Indeterminate;
  double threshold = 0.0;  // radius(x)^2
  std::vector<double> ratios;
};

/// sum (n+1/2) eps^n |P_n(x)|^2 for each eps in the grid.
std::vector<NonextensionRow> nonextension_witness(const std::vector<double>& eps_grid, cplx x);

/// The doubling test on sum (n+1/2) eps^n |P_n(x)|^2.
SeriesTest legendre_diagonal_test(double eps, cplx x);

// ---------------------------------------------------------------- template definitions
namespace detail {
inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}
}  // namespace detail

template <class F>
SeriesTest doubling_test(F&& log_term, int k_max) {
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  SeriesTest t;
  double log_total = ninf;
  for (int k = 0; k <= k_max; ++k) {
    const long lo = (k == 0) ? 0 : (1L << k);
    const long hi = 1L << (k + 1);
    double ld = ninf;
    for (long n = lo; n < hi; ++n) ld = detail::log_add(ld, log_term(static_cast<double>(n)));
    t.log_increments.push_back(ld);
    log_total = detail::log_add(log_total, ld);
    if (ld == ninf && k > 0) {
      // The whole window underflowed.
      t.converges = Tri::True;
      t.partial_sum = std::exp(log_total);
      return t;
    }
    if (k > 0) t.ratios.push_back(std::exp(ld - t.log_increments[k - 1]));
    // Negligible increments: the remaining doubling windows cannot matter
    // unless they grow again, which the ratio history rules out.
    if (k >= 4 && ld < log_total - 40.0) {
      const auto r = t.ratios.end();
      if (std::all_of(r - 3, r, [](double q) { return q <= 0.95; })) {
        t.converges = Tri::True;
        t.partial_sum = std::exp(log_total);
        return t;
      }
    }
  }
  t.partial_sum = std::exp(log_total);
  const auto r = t.ratios.end();
  if (t.ratios.size() >= 4 && std::all_of(r - 4, r, [](double q) { return q >= 0.98; }))
    t.converges = Tri::False;
  else if (t.ratios.size() >= 4 && std::all_of(r - 4, r, [](double q) { return q <= 0.95; }))
    t.converges = Tri::True;
  else
    t.converges = Tri::Indeterminate;
  return t;
}

}  // namespace lfock
