#include <benchmark/benchmark.h>

#include "qlink/diagram/build.hpp"
#include "qlink/diagram/corpus.hpp"
#include "qlink/engine/bracket.hpp"
#include "qlink/engine/colored_jones.hpp"
#include "qlink/engine/kauffman.hpp"
#include "qlink/graphmodel/graph_io.hpp"

using namespace qlink;

namespace {

const LinkDiagram& fig1() {
  static const LinkDiagram d = build_diagram(read_graph_file(std::string(QLINK_DATA_DIR) + "/fig1.json"));
  return d;
}

LinkDiagram twist_knot(int half_twists) {
  std::vector<int> word(half_twists, 1);
  return braid_closure(2, word);
}

void BM_BracketBrute(benchmark::State& state) {
  const LinkDiagram d = twist_knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_bruteforce(d));
}
BENCHMARK(BM_BracketBrute)->Arg(7)->Arg(11)->Arg(15);

void BM_BracketSweep(benchmark::State& state) {
  const LinkDiagram d = twist_knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_sweep(d));
}
BENCHMARK(BM_BracketSweep)->Arg(7)->Arg(11)->Arg(15)->Arg(41);

void BM_BracketSweepNoSquaring(benchmark::State& state) {
  const LinkDiagram d = fig1();
  EngineConfig cfg;
  cfg.twist_squaring = false;
  for (auto _ : state) benchmark::DoNotOptimize(bracket_sweep(d, cfg));
}
BENCHMARK(BM_BracketSweepNoSquaring);

void BM_ColoredJonesFig1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(colored_jones(fig1(), n));
}
BENCHMARK(BM_ColoredJonesFig1)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_KauffmanLambda(benchmark::State& state) {
  const LinkDiagram d = twist_knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_lambda(d));
}
BENCHMARK(BM_KauffmanLambda)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
