#include "rht/linalg.hpp"

#include <omp.h>

#include <cstdio>
#include <random>

using namespace rht;

namespace {

MatrixQ random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> zero(0, 2);
  MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (zero(rng) != 0) m.at(i, j) = Scalar(num(rng), den(rng));
  return m;
}

double time_once(const MatrixQ& m, bool parallel, std::size_t& rank_out) {
  const double t0 = omp_get_wtime();
  auto rr = parallel ? rref(m) : reference::rref_serial(m);
  const double t1 = omp_get_wtime();
  rank_out = rr.pivots.size();
  return t1 - t0;
}

}  // namespace

int main() {
  std::printf("exact rref: serial reference vs OpenMP kernel (%d threads)\n",
              omp_get_max_threads());
  std::printf("%8s %8s %12s %12s %9s\n", "rows", "cols", "serial[s]",
              "openmp[s]", "speedup");
  std::fflush(stdout);
  // exact rational elimination suffers coefficient growth, so the sizes
  // stay modest; they already separate the two code paths clearly
  std::mt19937 rng(2718);
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{40, 80},
                      {80, 160},
                      {120, 240}}) {
    MatrixQ m = random_matrix(rng, r, c);
    std::size_t rank_s = 0, rank_p = 0;
    const double ts = time_once(m, false, rank_s);
    const double tp = time_once(m, true, rank_p);
    if (rank_s != rank_p) {
      std::printf("MISMATCH at %zux%zu\n", r, c);
      return 1;
    }
    std::printf("%8zu %8zu %12.4f %12.4f %8.2fx\n", r, c, ts, tp, ts / tp);
    std::fflush(stdout);
  }
  return 0;
}
