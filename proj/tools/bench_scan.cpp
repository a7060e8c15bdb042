// Benchmark comparing the serial and OpenMP ray-scan kernels on the
// certification workloads. Build and run:
//   cmake --build build && ./build/tools/sqz-bench [boundary_samples]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sqz/certify.hpp"
#include "sqz/maps.hpp"
#include "sqz/ray_scan.hpp"

using namespace sqz;

namespace {

double time_scan(const HoloMap& f, const RaySet& rs,
                 const std::vector<double>& radii, bool parallel,
                 std::ptrdiff_t& checksum) {
  const auto t0 = std::chrono::steady_clock::now();
  checksum = 0;
  for (double r : radii) {
    checksum += parallel ? scan_first_failure_parallel(f, rs, r)
                         : scan_first_failure_serial(f, rs, r);
  }
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench_case(const char* name, const HoloMap& f, const CertifyConfig& cfg) {
  RaySet rs = build_rays(f.target.dimension(), cfg);
  add_puncture_probes(f, rs);
  std::vector<double> radii;
  for (int i = 1; i <= 12; ++i) radii.push_back(i / 13.0);

  const double total_samples =
      static_cast<double>(radii.size()) *
      static_cast<double>(rs.rays.size() + rs.probes.size());

  std::ptrdiff_t chk_serial = 0, chk_parallel = 0;
  const double ts = time_scan(f, rs, radii, false, chk_serial);
  const double tp = time_scan(f, rs, radii, true, chk_parallel);

  std::printf("%-28s %10.0f samples   serial %8.1f ms (%6.2f Ms/s)   "
              "parallel %8.1f ms (%6.2f Ms/s)   speedup %5.2fx   %s\n",
              name, total_samples, ts * 1e3, total_samples / ts / 1e6, tp * 1e3,
              total_samples / tp / 1e6, ts / tp,
              chk_serial == chk_parallel ? "results match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CertifyConfig cfg;
  if (argc > 1) cfg.boundary_samples = std::atoi(argv[1]);
  cfg.interior_samples = std::max(100, cfg.boundary_samples / 4);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel kernel falls back to serial\n");
#endif
  std::printf("boundary_samples=%d interior_samples=%d\n\n",
              cfg.boundary_samples, cfg.interior_samples);

  const DomainSpec ball2 = DomainSpec::ball(2);
  const DomainSpec ball3 = DomainSpec::ball(3);
  const DomainSpec punctured =
      DomainSpec::puncture(ball2, {zero_vector(2)});
  CVector z = zero_vector(2);
  z[0] = 0.3;

  bench_case("identity on D^2", identity_map(DomainSpec::polydisk(2)), cfg);
  bench_case("ball automorphism B^2", candidate_embedding(ball2, zero_vector(2)),
             cfg);
  bench_case("ball automorphism B^3", candidate_embedding(ball3, zero_vector(3)),
             cfg);
  bench_case("punctured ball B^2\\{0}", candidate_embedding(punctured, z), cfg);
  bench_case("product B^3 x B^2",
             candidate_embedding(
                 DomainSpec::product({ball3, ball2}), zero_vector(5)),
             cfg);
  return 0;
}
