#include <benchmark/benchmark.h>

#include <random>

#include "tf/qforms/isotropy.hpp"
#include "tf/qforms/witt.hpp"

using namespace tf::qf;

namespace {

std::vector<QuadraticForm> random_forms(int dim, int count, long bound) {
  std::mt19937_64 g(17);
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<QuadraticForm> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> e;
    while (static_cast<int>(e.size()) < dim) {
      const long v = d(g);
      if (v != 0) e.push_back(v);
    }
    out.push_back(QuadraticForm::diagonal(e));
  }
  return out;
}

}  // namespace

static void Invariants(benchmark::State& state) {
  const auto forms = random_forms(static_cast<int>(state.range(0)), 64, 1000);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invariants(forms[i++ % forms.size()]));
}
BENCHMARK(Invariants)->Arg(4)->Arg(22);

static void DiagonalizeGram(benchmark::State& state) {
  const Matrix k3 = block_sum({hyperbolic_gram(), hyperbolic_gram(), hyperbolic_gram(), negative_e8_gram(),
                               negative_e8_gram()});
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(k3));
}
BENCHMARK(DiagonalizeGram);

static void RepresentsZero(benchmark::State& state) {
  const auto forms = random_forms(static_cast<int>(state.range(0)), 64, 30);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(represents_zero(forms[i++ % forms.size()]));
}
BENCHMARK(RepresentsZero)->DenseRange(2, 5);

static void FormFromInvariants(benchmark::State& state) {
  const auto forms = random_forms(static_cast<int>(state.range(0)), 64, 500);
  std::vector<FormInvariants> targets;
  for (const auto& f : forms) targets.push_back(invariants(f));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(form_from_invariants(targets[i++ % targets.size()]));
}
BENCHMARK(FormFromInvariants)->Arg(3)->Arg(8);

static void SplitComplement(benchmark::State& state) {
  const QuadraticForm v = direct_sum(hyperbolic(3), negative_unit(16));
  const auto parts = random_forms(static_cast<int>(state.range(0)), 64, 50);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(split_complement(v, parts[i++ % parts.size()]));
}
BENCHMARK(SplitComplement)->Arg(2)->Arg(6);

static void WittReduce(benchmark::State& state) {
  const auto forms = random_forms(8, 64, 100);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(witt_reduce(forms[i++ % forms.size()]));
}
BENCHMARK(WittReduce);
