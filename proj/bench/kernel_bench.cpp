// Serial-vs-OpenMP throughput comparison for the dense kernels. The two
// variants compute bit-identical results (checked here as well); the point
// of this binary is the speedup column.
//
//   kernel_bench [--sizes 256,512,1024,2048] [--reps 5]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "farkas/kernels.hpp"
#include "farkas/random_instances.hpp"

using namespace farkas;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool identical(const Vector& a, const Vector& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

void bench_size(std::size_t n, int reps) {
  Rng rng(20240901u + n);
  DenseMatrix A(n, n);
  for (double& v : A.a) v = rng.normal();
  Vector x(n), u(n);
  for (double& v : x) v = rng.normal();
  for (double& v : u) v = rng.normal();
  Vector y1(n), y2(n);

  struct Row {
    const char* name;
    double serial_ms;
    double parallel_ms;
    bool exact;
  };
  std::vector<Row> rows;

  {
    double ts = time_ms([&] { kernels::serial::matvec(A, x.data(), y1.data()); }, reps);
    double tp = time_ms([&] { kernels::parallel::matvec(A, x.data(), y2.data()); }, reps);
    rows.push_back({"matvec", ts, tp, identical(y1, y2)});
  }
  {
    double ts = time_ms([&] { kernels::serial::matvec_transpose(A, u.data(), y1.data()); }, reps);
    double tp = time_ms([&] { kernels::parallel::matvec_transpose(A, u.data(), y2.data()); }, reps);
    rows.push_back({"matvec_transpose", ts, tp, identical(y1, y2)});
  }
  {
    double ts = time_ms([&] { kernels::serial::positive_part(A.a.data(), y1.data(), n); }, reps);
    double tp = time_ms([&] { kernels::parallel::positive_part(A.a.data(), y2.data(), n); }, reps);
    rows.push_back({"positive_part", ts, tp, identical(y1, y2)});
  }
  {
    DenseMatrix M1 = A, M2 = A;
    double ts = time_ms([&] { kernels::serial::eliminate_rows(M1, 0, 0); }, 1);
    double tp = time_ms([&] { kernels::parallel::eliminate_rows(M2, 0, 0); }, 1);
    rows.push_back({"eliminate_rows", ts, tp,
                    std::memcmp(M1.a.data(), M2.a.data(), M1.a.size() * sizeof(double)) == 0});
  }
  {
    DenseMatrix M1 = A, M2 = A;
    std::vector<double> v(n);
    for (double& t : v) t = rng.normal();
    double beta = 2.0 / kernels::serial::dot(v.data(), v.data(), n);
    double ts =
        time_ms([&] { kernels::serial::apply_reflector_cols(M1, v.data(), n, beta, 0, 0); }, 1);
    double tp =
        time_ms([&] { kernels::parallel::apply_reflector_cols(M2, v.data(), n, beta, 0, 0); }, 1);
    rows.push_back({"apply_reflector_cols", ts, tp,
                    std::memcmp(M1.a.data(), M2.a.data(), M1.a.size() * sizeof(double)) == 0});
  }

  for (const Row& r : rows)
    std::printf("%6zu  %-22s %10.3f %10.3f %8.2fx   %s\n", n, r.name, r.serial_ms, r.parallel_ms,
                r.serial_ms / std::max(r.parallel_ms, 1e-9), r.exact ? "bit-exact" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> sizes = {256, 512, 1024, 2048};
  int reps = 5;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--sizes") == 0 && i + 1 < argc) {
      sizes.clear();
      std::string s = argv[++i];
      std::size_t pos = 0;
      while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        sizes.push_back(std::stoul(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) {
      reps = std::stoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: kernel_bench [--sizes a,b,c] [--reps k]\n");
      return 2;
    }
  }

#ifdef _OPENMP
  std::printf("# OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("# built without OpenMP, parallel variants run serially\n");
#endif
  std::printf("%6s  %-22s %10s %10s %9s\n", "n", "kernel", "serial_ms", "omp_ms", "speedup");
  for (std::size_t n : sizes) bench_size(n, reps);
  return 0;
}
