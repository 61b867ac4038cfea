#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lfock {

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope needs >= 2 matching points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::domain_error("loglog_slope needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Two Richardson steps for a quantity with an expansion in integer powers of
/// h, sampled at h, h/2, h/4.
template <class T>
T richardson3(const T& at_h, const T& at_h2, const T& at_h4) {
  const T r1a = at_h2 * 2.0 - at_h;
  const T r1b = at_h4 * 2.0 - at_h2;
  return (r1b * 4.0 - r1a) * (1.0 / 3.0);
}

}  // namespace lfock
