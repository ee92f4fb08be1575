// Compares the serial reference sweep with the OpenMP kernel on the
// differential-growth measurement and checks they agree bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "isoperim/torus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace isoperim;

namespace {

double time_seconds(const std::function<double()>& f, double* result) {
  const auto start = std::chrono::steady_clock::now();
  *result = f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 100;
  const int res = argc > 2 ? std::atoi(argv[2]) : 512;

  const TorusMapExpr map({HorizontalShear{TrigPoly({TrigTerm{0.5, 1, 0.0}})},
                          VerticalShear{TrigPoly({TrigTerm{1.0, 1, 0.0}})}});

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("map: standard-like shear composition, n = %d, grid %d x %d\n", n, res, res);

  double serial_norm = 0.0, parallel_norm = 0.0;
  const double t_serial =
      time_seconds([&] { return jacobian_norm_serial(map, n, res); }, &serial_norm);
  const double t_parallel = time_seconds([&] { return jacobian_norm(map, n, res); }, &parallel_norm);

  std::printf("serial:   %.3f s  norm %.12g\n", t_serial, serial_norm);
  std::printf("parallel: %.3f s  norm %.12g\n", t_parallel, parallel_norm);
  std::printf("speedup:  %.2fx\n", t_serial / t_parallel);
  if (serial_norm != parallel_norm) {
    std::printf("MISMATCH between serial and parallel results\n");
    return 1;
  }
  std::printf("results identical\n");
  return 0;
}
