// Runs every acceptance criterion at its pinned parameters and prints one
// line per criterion. Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <exception>

#include "lfock/suites.hpp"

int main() {
  int failed = 0;
  for (const auto& suite : lfock::verify_suites()) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::size_t n_rows = 0, n_fail = 0;
    std::string error;
    try {
      const auto rows = suite.run({});
      n_rows = rows.size();
      for (const auto& r : rows) {
        if (r.pass) continue;
        ++n_fail;
        std::fprintf(stderr, "  [%s] FAIL %s: computed %.17g target %.17g tol %g\n", r.suite.c_str(),
                     r.quantity.c_str(), r.computed, r.target, r.tolerance);
      }
      pass = n_rows > 0 && n_fail == 0;
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %-12s %s  (%zu rows, %zu failed, %.2f s)%s%s\n", suite.criterion, suite.id.c_str(),
                pass ? "PASS" : "FAIL", n_rows, n_fail, dt, error.empty() ? "" : "  error: ", error.c_str());
    std::fflush(stdout);
    if (!pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
