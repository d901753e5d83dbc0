#include <random>

#include <benchmark/benchmark.h>

#include "pstab/constructions.hpp"
#include "pstab/fusion.hpp"
#include "pstab/involvement.hpp"
#include "pstab/iso.hpp"
#include "pstab/lattice.hpp"
#include "pstab/lie.hpp"
#include "pstab/stability.hpp"

using namespace pstab;

static void BM_BuildQdp(benchmark::State& st) {
  const auto p = std::uint32_t(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(qdp(p).group->order());
}
BENCHMARK(BM_BuildQdp)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BuildPSL33(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(classical_group(Family::PSL, 3, 3).group->order());
}
BENCHMARK(BM_BuildPSL33)->Unit(benchmark::kMillisecond);

static void BM_SubgroupClasses(benchmark::State& st) {
  const GroupPtr G = qdp(3).group;
  for (auto _ : st) benchmark::DoNotOptimize(subgroups_up_to_conjugacy(*G).size());
}
BENCHMARK(BM_SubgroupClasses)->Unit(benchmark::kMillisecond);

static void BM_Sylow(benchmark::State& st) {
  const GroupPtr G = classical_group(Family::PSL, 3, 4).group;
  for (auto _ : st) benchmark::DoNotOptimize(sylow(*G, 3).order());
}
BENCHMARK(BM_Sylow)->Unit(benchmark::kMillisecond);

static void BM_IsIsomorphic(benchmark::State& st) {
  const GroupPtr a = qdp(3).group, b = qdp_sl3(3).group;
  for (auto _ : st) benchmark::DoNotOptimize(is_isomorphic(a, b).has_value());
}
BENCHMARK(BM_IsIsomorphic)->Unit(benchmark::kMillisecond);

static void BM_PStable(benchmark::State& st) {
  const GroupPtr G = tilde_qdp(3, 13).group;
  for (auto _ : st) benchmark::DoNotOptimize(is_p_stable(*G, 3).stable);
}
BENCHMARK(BM_PStable)->Unit(benchmark::kMillisecond);

static void BM_SectionPStable(benchmark::State& st) {
  const GroupPtr G = classical_group(Family::PSL, 3, 3).group;
  for (auto _ : st) benchmark::DoNotOptimize(is_section_p_stable(*G, 3).stable);
}
BENCHMARK(BM_SectionPStable)->Unit(benchmark::kMillisecond);

static void BM_InvolvesQdp(benchmark::State& st) {
  const GroupPtr G = tilde_qdp(3, 13).group;
  for (auto _ : st) benchmark::DoNotOptimize(involves_qdp(G, 3).has_value());
}
BENCHMARK(BM_InvolvesQdp)->Unit(benchmark::kMillisecond);

static void BM_FusionFreeness(benchmark::State& st) {
  const GroupPtr G = classical_group(Family::PSL, 3, 3).group;
  for (auto _ : st) {
    const FusionSystem F = fusion_system(G, 3);
    benchmark::DoNotOptimize(is_qdp_free(F).free);
  }
}
BENCHMARK(BM_FusionFreeness)->Unit(benchmark::kMillisecond);

static void BM_ClassifierQueries(benchmark::State& st) {
  std::mt19937_64 rng(1);
  for (auto _ : st) benchmark::DoNotOptimize(lie::qdp_verdict(lie::random_query(rng)).p_stable);
}
BENCHMARK(BM_ClassifierQueries);

static void BM_IdentityGrid(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(lie::identity_grid().ok());
}
BENCHMARK(BM_IdentityGrid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
