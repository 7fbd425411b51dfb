// Timing comparison of the serial and OpenMP tuple-scan kernels behind
// image() and admits(), plus the brute-force oracle at a size it can still
// handle.  Build target: bench_image.

#include <chrono>
#include <cstdio>
#include <vector>

#include "sgp/image.hpp"
#include "sgp/oracle.hpp"

using namespace sgp;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

struct Case {
  const char* name;
  NumericalSemigroup s;
  LinearPattern p;
};

}  // namespace

int main() {
  std::vector<Case> cases = {
      {"n=3 |a|<=2, S=<11,13>", NumericalSemigroup::from_generators({11, 13}),
       LinearPattern({2, 1, -2}, 0)},
      {"n=4 arf-like, S=<11,13>", NumericalSemigroup::from_generators({11, 13}),
       LinearPattern({1, 1, 1, -2}, 0)},
      {"n=4 wide, S=<23,29,31>", NumericalSemigroup::from_generators({23, 29, 31}),
       LinearPattern({2, 1, -1, -1}, 0)},
  };

  std::printf("%-28s %12s %12s %10s %8s\n", "case", "serial (ms)", "openmp (ms)", "speedup",
              "equal");
  for (const Case& c : cases) {
    RelativeIdeal ideal = c.s.maximal_ideal();

    auto t0 = std::chrono::steady_clock::now();
    TailSet serial = image(c.p, ideal, Exec::Serial);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    TailSet parallel = image(c.p, ideal, Exec::Parallel);
    double parallel_ms = ms_since(t0);

    std::printf("%-28s %12.2f %12.2f %9.2fx %8s\n", c.name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, serial == parallel ? "yes" : "NO");
  }

  // Oracle at desk scale for reference.
  NumericalSemigroup small = NumericalSemigroup::from_generators({5, 7, 9});
  LinearPattern arf = LinearPattern::arf();
  RelativeIdeal m = small.maximal_ideal();

  auto t0 = std::chrono::steady_clock::now();
  TailSet fast = image(arf, m, Exec::Serial);
  double fast_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto brute = oracle::brute_image(arf, m.set(), *fast.set.tail() + 10);
  double brute_ms = ms_since(t0);

  std::printf("%-28s %12.2f %12.2f   (oracle vs fast, S=<5,7,9>)\n", "oracle reference",
              fast_ms, brute_ms);
  return 0;
}
