#include <random>

#include <benchmark/benchmark.h>

#include <cotrace/engines.hpp>
#include <cotrace/laws.hpp>

using namespace cotrace;

namespace {

/// A Moore machine where each transition hits each state with probability 1/3.
MooreCoalgebra random_nda(std::size_t states, std::size_t letters, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OmegaValue> out;
  std::vector<std::vector<MonadValue<StateId>>> next(states);
  for (std::size_t x = 0; x < states; ++x) {
    out.push_back(rng() % 2 == 0);
    for (std::size_t a = 0; a < letters; ++a) {
      std::vector<StateId> ys;
      for (StateId y = 0; y < states; ++y)
        if (rng() % 3 == 0) ys.push_back(y);
      next[x].push_back(MonadValue<StateId>::pow(ys));
    }
  }
  return MooreCoalgebra(ElemUniverse::indexed("x", states), ElemUniverse::indexed("a", letters), Modality::Join,
                        std::move(out), std::move(next));
}

GenerativeCoalgebra random_generative(std::size_t states, std::size_t labels, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MonadValue<Move<StateId>>> c;
  for (std::size_t x = 0; x < states; ++x) {
    std::vector<Move<StateId>> moves;
    if (rng() % 2 == 0) moves.push_back(Terminal{0});
    for (LetterId a = 0; a < labels; ++a)
      for (StateId y = 0; y < states; ++y)
        if (rng() % 4 == 0) moves.push_back(Emit<StateId>{a, y});
    c.push_back(MonadValue<Move<StateId>>::pow(moves));
  }
  return GenerativeCoalgebra(ElemUniverse::indexed("x", states), ElemUniverse::indexed("a", labels),
                             ElemUniverse({"✓"}), MonadKind::Pow, std::move(c));
}

void BM_EmLanguage(benchmark::State& state) {
  const auto m = random_nda(8, 2, 1);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(em_language_bt(m, 0, depth));
}
BENCHMARK(BM_EmLanguage)->DenseRange(4, 10, 2);

void BM_LogicLanguage(benchmark::State& state) {
  const auto m = random_nda(8, 2, 1);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(logic_language_word(m, 0, depth));
}
BENCHMARK(BM_LogicLanguage)->DenseRange(4, 10, 2);

void BM_Determinise(benchmark::State& state) {
  const auto m = random_nda(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(determinise_bt(m, 0));
}
BENCHMARK(BM_Determinise)->RangeMultiplier(2)->Range(4, 16);

void BM_KleisliTraces(benchmark::State& state) {
  const auto g = random_generative(6, 2, 3);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kleisli_traces(g, 0, depth));
}
BENCHMARK(BM_KleisliTraces)->DenseRange(2, 8, 2);

void BM_EmLaw(benchmark::State& state) {
  const LawOptions opt;
  for (auto _ : state)
    benchmark::DoNotOptimize(check_em_law(Modality::Join, 2, {1, 2, 3}, opt, CanonicalKappa{Modality::Join}));
}
BENCHMARK(BM_EmLaw)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
