// Benchmark of the OpenMP kernels against their serial reference
// implementations. Each kernel is run in both modes, timed, and the results
// compared for equality.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "multfree/catalog.hpp"
#include "multfree/characters.hpp"
#include "multfree/induction.hpp"
#include "multfree/qi.hpp"

using namespace multfree;

namespace {

double time_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void line(const char* kernel, double serial, double parallel, bool equal) {
  printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", kernel, serial, parallel,
         serial / parallel, equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
  printf("threads: %d\n", omp_get_max_threads());
  printf("%-34s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

  const Catalog& cat = Catalog::instance();

  {
    PermGroup g = GroupSpec::parse("wr(S5,S3)").build(cat);
    CycleTypeCensus a, b;
    double ts = time_of([&] { a = g.census(kDefaultCensusCap, Exec::serial); });
    double tp =
        time_of([&] { b = g.census(kDefaultCensusCap, Exec::parallel); });
    line("census: S_5 wr S_3 (1.04e7)", ts, tp, a.counts == b.counts);
  }

  {
    PermGroup g = GroupSpec::parse("wr(S2,S8)").build(cat);
    CharacterTable::for_degree(g.degree());  // table cached outside the timing
    Decomposition a, b;
    double ts = time_of([&] {
      a = induced_trivial(g.census(kDefaultCensusCap, Exec::serial),
                          Exec::serial);
    });
    double tp = time_of([&] {
      b = induced_trivial(g.census(kDefaultCensusCap, Exec::parallel),
                          Exec::parallel);
    });
    line("census+decompose: S_2 wr S_8 (1e7)", ts, tp, a.mv == b.mv);
  }

  {
    std::vector<qi::SchemeMatrix> a, b;
    double ts =
        time_of([&] { a = qi::scheme_matrices(9, 3, 10000, Exec::serial); });
    double tp =
        time_of([&] { b = qi::scheme_matrices(9, 3, 10000, Exec::parallel); });
    bool equal = a.size() == b.size();
    for (size_t i = 0; equal && i < a.size(); ++i)
      equal = a[i].table == b[i].table &&
              a[i].adjacency.bits == b[i].adjacency.bits;
    line("scheme build: (9,3), 280 vertices", ts, tp, equal);
  }

  {
    auto mats = qi::scheme_matrices(9, 3);
    bool ra = false, rb = false;
    double ts =
        time_of([&] { ra = qi::commuting_check(mats, nullptr, Exec::serial); });
    double tp = time_of(
        [&] { rb = qi::commuting_check(mats, nullptr, Exec::parallel); });
    line("commuting check: (9,3)", ts, tp, ra == rb);
  }

  {
    std::vector<qi::SchemeMatrix> a, b;
    double ts =
        time_of([&] { a = qi::scheme_matrices(12, 3, 10000, Exec::serial); });
    double tp =
        time_of([&] { b = qi::scheme_matrices(12, 3, 10000, Exec::parallel); });
    bool equal = a.size() == b.size();
    for (size_t i = 0; equal && i < a.size(); ++i)
      equal = a[i].table == b[i].table &&
              a[i].adjacency.bits == b[i].adjacency.bits;
    line("scheme build: (12,3), 5775 vertices", ts, tp, equal);
  }

  return 0;
}
