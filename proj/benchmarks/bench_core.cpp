#include <benchmark/benchmark.h>

#include "csh/chain_complex.hpp"
#include "csh/csf.hpp"
#include "csh/homology.hpp"
#include "csh/scan.hpp"
#include "csh/snf.hpp"
#include "csh/straighten.hpp"

using namespace csh;

static void BM_straighten_233(benchmark::State& state) {
  // straighten all numberings of shape (2,2,2); cold cache each batch would
  // dominate with allocation, so this measures the memoized steady state
  std::vector<numbering> worst;
  std::vector<int> vals{6, 5, 4, 3, 2, 1};
  do {
    worst.push_back(numbering({{vals[0], vals[1]}, {vals[2], vals[3]}, {vals[4], vals[5]}}));
  } while (std::next_permutation(vals.begin(), vals.end()) && worst.size() < 64);
  for (auto _ : state) {
    for (const numbering& s : worst) benchmark::DoNotOptimize(straighten(s));
  }
}
BENCHMARK(BM_straighten_233);

static void BM_restricted_complex_G1(benchmark::State& state) {
  graph g = builtin_graph("G1");
  for (auto _ : state)
    benchmark::DoNotOptimize(build_restricted_complex(g, partition({2, 2, 2})));
}
BENCHMARK(BM_restricted_complex_G1);

static void BM_full_complex_K5(benchmark::State& state) {
  graph g = builtin_graph("K5");
  for (auto _ : state) benchmark::DoNotOptimize(build_full_complex(g, 2));
}
BENCHMARK(BM_full_complex_K5);

static void BM_snf_K5_d2(benchmark::State& state) {
  full_complex fc = build_full_complex(builtin_graph("K5"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(fc.cc.boundaries[2]));
}
BENCHMARK(BM_snf_K5_d2);

static void BM_rank_mod2_star6_d2(benchmark::State& state) {
  full_complex fc = build_full_complex(builtin_graph("star6"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(fc.cc.boundaries[2], 2));
}
BENCHMARK(BM_rank_mod2_star6_d2);

static void BM_csf_schur_G6(benchmark::State& state) {
  graph g = builtin_graph("G6");
  for (auto _ : state) benchmark::DoNotOptimize(csf_schur(g));
}
BENCHMARK(BM_csf_schur_G6);

static void BM_kostka_2211(benchmark::State& state) {
  partition lam({2, 2, 1, 1}), mu({2, 1, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(kostka(lam, mu));
}
BENCHMARK(BM_kostka_2211);

static void BM_scan_K33(benchmark::State& state) {
  graph g = builtin_graph("K33");
  for (auto _ : state) benchmark::DoNotOptimize(scan_graph(g));
}
BENCHMARK(BM_scan_K33);

BENCHMARK_MAIN();
