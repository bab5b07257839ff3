// Times the parallel check kernels against the single-threaded reference on
// growing oscillator instances. The reports must agree exactly; a mismatch
// makes the run exit nonzero, so this doubles as a stress test.
//
// Usage: oscalg_bench [max_modes]   (default 10)

#include "oscalg/checks.hpp"
#include "oscalg/oscillator.hpp"
#include "oscalg/serial_ref.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

using namespace oscalg;

namespace {

double best_ms(const std::function<CheckReport()>& body, CheckReport& out, int reps = 3) {
  double best = 0.0;
  for (int k = 0; k < reps; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = body();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (k == 0 || ms < best) {
      best = ms;
      out = std::move(rep);
    }
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_modes = argc > 1 ? std::atoi(argv[1]) : 10;
  bool all_equal = true;

  std::printf("%6s %5s %-18s %12s %12s %9s\n", "modes", "dim", "check", "serial ms",
              "parallel ms", "speedup");
  for (int n = 2; n <= max_modes; n += 2) {
    std::vector<Rat> values;
    for (int i = 1; i <= n; ++i) values.push_back(Rat(i) + Rat(1, i + 1));
    const Lambda lambda = make_lambda(values);
    const BilinearMap bracket = build_oscillator(lambda);
    const BilinearMap product = leibniz_product(lambda, Poly(Rat(1, 2)));
    const int d = bracket.dim();

    struct Row {
      const char* name;
      std::function<CheckReport()> serial;
      std::function<CheckReport()> parallel;
    };
    const std::vector<Row> rows = {
        {"jacobi", [&] { return serial::check_jacobi(bracket); },
         [&] { return check_jacobi(bracket); }},
        {"symmetric-leibniz", [&] { return serial::check_symmetric_leibniz(product); },
         [&] { return check_symmetric_leibniz(product); }},
    };

    for (const Row& row : rows) {
      CheckReport s, p;
      const double ms_s = best_ms(row.serial, s);
      const double ms_p = best_ms(row.parallel, p);
      if (!(s == p)) {
        all_equal = false;
        std::printf("REPORT MISMATCH at %d modes, %s\n", n, row.name);
      }
      std::printf("%6d %5d %-18s %12.2f %12.2f %8.2fx\n", n, d, row.name, ms_s, ms_p,
                  ms_p > 0 ? ms_s / ms_p : 0.0);
    }
  }
  return all_equal ? 0 : 1;
}
