#include <benchmark/benchmark.h>

#include <qeccf/codes.hpp>
#include <qeccf/scenario.hpp>
#include <qeccf/tablegen.hpp>

using namespace qeccf;

namespace {

Scenario five_qubit() {
  Scenario s;
  s.group = "pauli:5";
  s.subgroup = "centralizer";
  s.stabilizer = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  return s;
}

const Prepared& prepared() {
  static const Prepared p = prepare(five_qubit());
  return p;
}

}  // namespace

static void BM_PauliGroup(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(pauli_group(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_PauliGroup)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_LoadedBasisClosure(benchmark::State& st) {
  const std::string path = std::string(QECCF_DATA_DIR) + "/bases/d8_translates.basis";
  for (auto _ : st) benchmark::DoNotOptimize(load_error_basis(path));
}
BENCHMARK(BM_LoadedBasisClosure)->Unit(benchmark::kMillisecond);

static void BM_DecomposeCentralizer(benchmark::State& st) {
  const auto& p = prepared();
  for (auto _ : st) benchmark::DoNotOptimize(decompose_natural(p.e, p.sub));
}
BENCHMARK(BM_DecomposeCentralizer)->Unit(benchmark::kMillisecond);

static void BM_Invert(benchmark::State& st) {
  const auto& p = prepared();
  const auto a = make_assignment(p, {0, 5}, {"PZ-", "I2"});
  for (auto _ : st) benchmark::DoNotOptimize(invert(a, p.cs));
}
BENCHMARK(BM_Invert)->Unit(benchmark::kMicrosecond);

static void BM_DetectableSet(benchmark::State& st) {
  const auto& p = prepared();
  const CMat proj = invert(make_assignment(p, {0, 5}, {"PZ-", "I2"}), p.cs).projector;
  for (auto _ : st) benchmark::DoNotOptimize(detectable_set(proj, p.e));
}
BENCHMARK(BM_DetectableSet)->Unit(benchmark::kMillisecond);

static void BM_LiteralDetectionAllElements(benchmark::State& st) {
  const auto& p = prepared();
  const CMat proj = invert(make_assignment(p, {0, 5}, {"PZ-", "I2"}), p.cs).projector;
  for (auto _ : st) {
    int n = 0;
    for (const auto& g : p.e.group->elements()) n += is_detectable(proj, g).detectable;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_LiteralDetectionAllElements)->Unit(benchmark::kMillisecond);

static void BM_ShorDistance(benchmark::State& st) {
  const CMat p = stabilizer_projector(StabilizerSpec::load(std::string(QECCF_DATA_DIR) + "/codes/shor.stab"));
  for (auto _ : st) benchmark::DoNotOptimize(pauli_min_distance(p, 9));
}
BENCHMARK(BM_ShorDistance)->Unit(benchmark::kMillisecond);

static void BM_FiveQubitTable(benchmark::State& st) {
  const Scenario s = load_scenario(std::string(QECCF_DATA_DIR) + "/scenarios/table4_1.scn");
  const Prepared p = prepare(s);
  for (auto _ : st) benchmark::DoNotOptimize(run_prepared(p, s, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_FiveQubitTable)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
