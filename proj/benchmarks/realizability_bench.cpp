#include <benchmark/benchmark.h>

#include "tf/k3hk/realizability.hpp"

using namespace tf;

static void K3RealQuadratic(benchmark::State& state) {
  const auto E = nf::NumberField::real_quadratic(5);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k3::k3_realizable(E, m, tr::Mode::RM));
}
BENCHMARK(K3RealQuadratic)->Arg(3)->Arg(9)->Arg(10);

static void K3Cyclotomic(benchmark::State& state) {
  const auto E = nf::NumberField::cyclotomic(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(k3::k3_realizable(E, 1, tr::Mode::CM));
}
BENCHMARK(K3Cyclotomic)->Arg(25)->Arg(44)->Arg(66);

static void HyperkaehlerForced(benchmark::State& state) {
  const auto E = nf::NumberField::imag_quadratic(7);
  for (auto _ : state) benchmark::DoNotOptimize(k3::hk_realizable(k3::Family::Kummer, 2, E, 3, tr::Mode::CM));
}
BENCHMARK(HyperkaehlerForced);

static void CmTransferCheck(benchmark::State& state) {
  const auto U = tr::transfer_hermitian_imagquad(7, {1, -1, -1, 3, -5});
  const auto F = nf::NumberField::imag_quadratic(7);
  for (auto _ : state) benchmark::DoNotOptimize(tr::cm_transfer_feasible(F, U));
}
BENCHMARK(CmTransferCheck);

static void WitnessSearch(benchmark::State& state) {
  const auto U = tr::transfer_quadratic(5, {{1, 1}, {1, -1}, {-1, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(tr::construct_witness_quadratic(U, 5));
}
BENCHMARK(WitnessSearch);
