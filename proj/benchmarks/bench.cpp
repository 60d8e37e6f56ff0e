#include <eiskern/conj_bernoulli.hpp>
#include <eiskern/eisenstein.hpp>
#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/omega.hpp>

#include <benchmark/benchmark.h>

namespace {

using eiskern::Complex;

void BM_digamma(benchmark::State& st) {
  const Complex z{0.37, 1.9};
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::numkern::digamma(z));
}
BENCHMARK(BM_digamma);

void BM_polygamma(benchmark::State& st) {
  const Complex z{0.37, 1.9};
  const int r = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::numkern::polygamma(r, z));
}
BENCHMARK(BM_polygamma)->Arg(1)->Arg(3)->Arg(5);

void BM_eisenstein_direct(benchmark::State& st) {
  const Complex z{0.37, 1.9};
  const int r = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::eisenstein::eisenstein_direct(r, z));
}
BENCHMARK(BM_eisenstein_direct)->Arg(1)->Arg(2)->Arg(6);

void BM_eisenstein_integral(benchmark::State& st) {
  const Complex z{0.37, 1.9};
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::eisenstein::eisenstein_integral(3, z));
}
BENCHMARK(BM_eisenstein_integral);

void BM_he_direct(benchmark::State& st) {
  const Complex z{0.4, 0.3};
  const int r = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::hilbert::he_direct(r, z));
}
BENCHMARK(BM_he_direct)->Arg(1)->Arg(3);

void BM_he_closed(benchmark::State& st) {
  const Complex z{0.4, 0.3};
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::hilbert::he_closed(3, z));
}
BENCHMARK(BM_he_closed);

void BM_omega_quadrature(benchmark::State& st) {
  const Complex z{1.0, 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::omega::omega_quadrature(z));
}
BENCHMARK(BM_omega_quadrature);

void BM_omega_digamma(benchmark::State& st) {
  const Complex z{1.0, 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::omega::omega_digamma(z));
}
BENCHMARK(BM_omega_digamma);

void BM_omega_partial_fraction(benchmark::State& st) {
  const Complex z{1.0, 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::omega::omega_partial_fraction(z));
}
BENCHMARK(BM_omega_partial_fraction);

void BM_fractional_bernoulli(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::conj::fractional_bernoulli(2.5, 0.3));
}
BENCHMARK(BM_fractional_bernoulli);

void BM_conj_bernoulli_periodic(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eiskern::conj::conj_bernoulli_periodic(1, 0.3));
}
BENCHMARK(BM_conj_bernoulli_periodic);

}  // namespace

BENCHMARK_MAIN();
