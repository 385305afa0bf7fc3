// Wall-clock comparison of the serial reference path (jobs=1) against the
// OpenMP path on the heavier sweeps. Both paths produce identical results;
// a mismatch here is reported as a failure, not timed away.

#include <chrono>
#include <cstdio>
#include <string>

#include "fibotomic/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fb = fibotomic;

namespace {

int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

using SuiteFn = fb::SuiteResult (*)(int, const fb::VerifyOptions&,
                                    fb::FamilyCache&);

struct Timing {
  double seconds = 0;
  std::size_t checks = 0;
  std::size_t failed = 0;
};

template <class Fn>
Timing timed(Fn&& fn, int jobs) {
  fb::VerifyOptions opts;
  opts.jobs = jobs;
  fb::FamilyCache cache;  // fresh cache per run: identical work on both paths
  const auto start = std::chrono::steady_clock::now();
  fb::SuiteResult result = fn(opts, cache);
  const auto stop = std::chrono::steady_clock::now();
  Timing t;
  t.seconds = std::chrono::duration<double>(stop - start).count();
  t.checks = result.checks.size();
  t.failed = result.failed();
  return t;
}

template <class Fn>
void report(const char* name, Fn&& fn) {
  const int jobs = hardware_jobs();
  const Timing serial = timed(fn, 1);
  const Timing parallel = timed(fn, jobs);
  std::printf("%-28s %6zu checks  serial %7.2fs  jobs=%d %7.2fs  speedup %.2fx",
              name, serial.checks, serial.seconds, jobs, parallel.seconds,
              serial.seconds / (parallel.seconds > 0 ? parallel.seconds : 1));
  if (serial.failed || parallel.failed) std::printf("  [FAILURES]");
  std::printf("\n");
}

}  // namespace

int main() {
  std::printf("sweep benchmark: serial reference vs OpenMP (%d threads)\n",
              hardware_jobs());
  report("disc sweep (n <= 60)", [](const fb::VerifyOptions& o,
                                    fb::FamilyCache& c) {
    return fb::run_disc_suite(60, o, c);
  });
  report("res sweep (pairs <= 50)", [](const fb::VerifyOptions& o,
                                       fb::FamilyCache& c) {
    return fb::run_res_suite(50, 50, o, c);
  });
  report("modp sweep (n <= 60)", [](const fb::VerifyOptions& o,
                                    fb::FamilyCache& c) {
    return fb::run_modp_suite(60, {2, 3, 5, 7, 11, 13, 101}, o, c);
  });
  report("product sweep (n <= 200)", [](const fb::VerifyOptions& o,
                                        fb::FamilyCache& c) {
    return fb::run_product_suite(200, o, c);
  });
  return 0;
}
