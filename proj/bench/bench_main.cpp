// Copyright 2026 lctlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Wall-clock comparison of the OpenMP kernels against the serial reference
// implementations. Both paths must produce bitwise-identical output; the
// benchmark asserts that before reporting timings.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lctlab/bprofile.hpp"
#include "lctlab/engine.hpp"
#include "lctlab/fixtures.hpp"
#include "lctlab/fourier.hpp"
#include "lctlab/lct_params.hpp"
#include "lctlab/reference.hpp"

using namespace lctlab;

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

bool bitwise_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real() || a[i].imag() != b[i].imag()) return false;
  }
  return true;
}

template <typename ParallelFn, typename SerialFn>
void run_case(const char* name, ParallelFn parallel, SerialFn serial) {
  // warm both paths once, then time the faster-converging median of 3
  std::vector<cplx> out_p = parallel();
  std::vector<cplx> out_s = serial();
  if (!bitwise_equal(out_p, out_s)) {
    std::fprintf(stderr, "FAIL %s: serial and parallel outputs differ\n",
                 name);
    std::exit(1);
  }
  double best_p = 1e300, best_s = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    double t0 = now_seconds();
    out_p = parallel();
    double t1 = now_seconds();
    out_s = serial();
    double t2 = now_seconds();
    best_p = std::min(best_p, t1 - t0);
    best_s = std::min(best_s, t2 - t1);
  }
  std::printf("%-18s parallel %8.4f s   serial %8.4f s   speedup %5.2fx\n",
              name, best_p, best_s, best_s / best_p);
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);

  const Grid grid = make_grid(20.0, 8192);
  const SampledSignal f = fixtures::hermite4_gaussian(grid);
  const SampledSignal fhat = fourier(f);
  std::vector<double> u_points(2048);
  for (std::size_t i = 0; i < u_points.size(); ++i) {
    u_points[i] = -10.0 + 20.0 * static_cast<double>(i) /
                              static_cast<double>(u_points.size() - 1);
  }

  const LCTParams p = frft_params(0.7);
  run_case(
      "lct_direct",
      [&] { return lct_direct(p, f, u_points); },
      [&] { return serial::lct_direct(p, f, u_points); });

  run_case(
      "g_alpha_spectral",
      [&] { return g_alpha_spectral(0.3, 1.2, cplx(1.0, 0.0), fhat,
                                    u_points); },
      [&] {
        return serial::g_alpha_spectral(0.3, 1.2, cplx(1.0, 0.0), fhat,
                                        u_points);
      });

  const BProfile profile = sqrt_1p4a2_profile(1.0);
  run_case(
      "l_a_time",
      [&] { return l_a_time(0.25, profile, f, u_points); },
      [&] { return serial::l_a_time(0.25, profile, f, u_points); });

  std::printf("all kernels bitwise-identical to the serial reference\n");
  return 0;
}
