#include "lfock/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace lfock {

QuantParams::QuantParams(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  hbar_ = 1.0 - epsilon;
  c_ = epsilon / hbar_;
  alpha_scale_ = 2.0 * std::sqrt(epsilon) / hbar_;
}

QuantParams QuantParams::from_alpha_scale(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha_scale must be positive and finite");
  }
  // alpha (1 - eps) = 2 sqrt(eps): quadratic in s = sqrt(eps).
  const double s = (std::sqrt(1.0 + alpha * alpha) - 1.0) / alpha;
  return QuantParams(s * s);
}

PolyFamily PolyFamily::laguerre(double order) {
  if (!(order > -1.0)) {
    throw std::invalid_argument("Laguerre order must exceed -1");
  }
  return PolyFamily(FamilyKind::Laguerre, order);
}

std::string PolyFamily::name() const {
  switch (kind_) {
    case FamilyKind::Hermite:
      return "hermite";
    case FamilyKind::Laguerre:
      return "laguerre";
    case FamilyKind::Legendre:
      return "legendre";
  }
  return "unknown";
}

std::pair<double, double> PolyFamily::domain() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind_) {
    case FamilyKind::Hermite:
      return {-inf, inf};
    case FamilyKind::Laguerre:
      return {0.0, inf};
    case FamilyKind::Legendre:
      return {-1.0, 1.0};
  }
  return {0.0, 0.0};
}

double PolyFamily::weight(double x) const {
  switch (kind_) {
    case FamilyKind::Hermite:
      return std::exp(-x * x);
    case FamilyKind::Laguerre:
      return x < 0.0 ? 0.0 : std::pow(x, order_) * std::exp(-x);
    case FamilyKind::Legendre:
      return std::abs(x) <= 1.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

double PolyFamily::total_mass() const {
  switch (kind_) {
    case FamilyKind::Hermite:
      return std::sqrt(std::numbers::pi);
    case FamilyKind::Laguerre:
      return std::tgamma(order_ + 1.0);
    case FamilyKind::Legendre:
      return 2.0;
  }
  return 0.0;
}

double PolyFamily::norm_squared(int n) const {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  switch (kind_) {
    case FamilyKind::Hermite:
      return std::sqrt(std::numbers::pi) * std::exp(n * std::log(2.0) + std::lgamma(n + 1.0));
    case FamilyKind::Laguerre:
      return std::exp(std::lgamma(n + order_ + 1.0) - std::lgamma(n + 1.0));
    case FamilyKind::Legendre:
      return 1.0 / (n + 0.5);
  }
  return 0.0;
}

double PolyFamily::monic_a(int n) const {
  switch (kind_) {
    case FamilyKind::Laguerre:
      return 2.0 * n + order_ + 1.0;
    case FamilyKind::Hermite:
    case FamilyKind::Legendre:
      return 0.0;
  }
  return 0.0;
}

double PolyFamily::monic_b(int n) const {
  if (n <= 0) return 0.0;
  switch (kind_) {
    case FamilyKind::Hermite:
      return 0.5 * n;
    case FamilyKind::Laguerre:
      return n * (n + order_);
    case FamilyKind::Legendre:
      return static_cast<double>(n) * n / (4.0 * n * n - 1.0);
  }
  return 0.0;
}

int PolyFamily::leading_sign(int n) const {
  if (kind_ == FamilyKind::Laguerre && (n % 2 != 0)) return -1;
  return 1;
}

}  // namespace lfock
