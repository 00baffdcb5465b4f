// Benchmark for the induced-subcomplex scan: runs the serial reference and
// the OpenMP kernel on the same inputs, checks that they agree exactly, and
// prints both timings.  Control the thread count with OMP_NUM_THREADS.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/corpus.hpp"
#include "chordal/field.hpp"
#include "chordal/scan.hpp"

using namespace chordal;

namespace {

double run_ms(const FieldSpec& fs, const SimplicialComplex& c, bool parallel, SubsetScan& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = scan_subsets(fs, c, parallel);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  struct Probe {
    std::string name;
    FieldSpec fs;
    SimplicialComplex c;
  };
  std::vector<Probe> probes;
  probes.push_back({"octahedron", FieldSpec::rational(), octahedron()});
  probes.push_back({"rp2_6", FieldSpec::rational(), rp2_6()});
  probes.push_back({"rp2_6", FieldSpec::prime(2), rp2_6()});
  probes.push_back({"jk(2)", FieldSpec::rational(), make_jk(2)});
  probes.push_back({"flag(12,450,7)", FieldSpec::rational(), random_flag(12, 450, 7)});
  probes.push_back({"flag(16,320,7)", FieldSpec::prime(2), random_flag(16, 320, 7)});
  probes.push_back({"pure(2,15,240,9)", FieldSpec::prime(3), random_pure(2, 15, 240, 9)});

  std::printf("subset scan, serial reference vs OpenMP kernel (max threads: %d)\n",
              omp_get_max_threads());
  int bad = 0;
  for (const Probe& p : probes) {
    SubsetScan a, b;
    double ts = run_ms(p.fs, p.c, false, a);
    double tp = run_ms(p.fs, p.c, true, b);
    bool same = a.masks == b.masks && a.betti == b.betti;
    if (!same) ++bad;
    std::printf("%-18s %-4s %8zu masks  serial %9.1f ms  parallel %9.1f ms  %5.2fx  %s\n",
                p.name.c_str(), p.fs.to_string().c_str(), a.masks.size(), ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "agree" : "MISMATCH");
    std::fflush(stdout);
  }
  return bad;
}
