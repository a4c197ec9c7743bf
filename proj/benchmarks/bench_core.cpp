#include <benchmark/benchmark.h>

#include "recop/catalog.hpp"
#include "recop/moser.hpp"
#include "recop/recursion.hpp"
#include "recop/triples.hpp"

#include <random>

namespace {

using namespace recop;

RForm random_nondegenerate(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  for (;;) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = Rational(num(rng));
        m(j, i) = -m(i, j);
      }
    if (pfaffian(m) != 0) return matrix_form(SkewMatrix<Rational>(m));
  }
}

void BM_RecursionOperator8(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const RForm w = random_nondegenerate(8, rng);
  const RForm h = random_nondegenerate(8, rng);
  for (auto _ : state) {
    auto a = recursion_operator(w, h);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_RecursionOperator8);

void BM_Pfaffian8(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const RMatrix m = form_matrix(random_nondegenerate(8, rng)).get();
  for (auto _ : state) {
    auto pf = pfaffian(m);
    benchmark::DoNotOptimize(pf);
  }
}
BENCHMARK(BM_Pfaffian8);

void BM_ClassifyTripleDottiFino(benchmark::State& state) {
  const auto entry = builtin_example("dotti-fino-8");
  for (auto _ : state) {
    auto cls = classify_triple(entry.forms[0], entry.forms[1], entry.forms[2]);
    benchmark::DoNotOptimize(cls);
  }
}
BENCHMARK(BM_ClassifyTripleDottiFino);

void BM_SignatureDottiFino(benchmark::State& state) {
  const auto entry = builtin_example("dotti-fino-8");
  const auto cls = classify_triple(entry.forms[0], entry.forms[1], entry.forms[2]);
  const RMatrix g = cls.hyper_metric->g;
  for (auto _ : state) {
    auto sig = signature(g);
    benchmark::DoNotOptimize(sig);
  }
}
BENCHMARK(BM_SignatureDottiFino);

flow::FlowFamily t2_family() {
  KForm<double> base(2, 2);
  base.add_term({1, 2}, 1.0);
  flow::OneFormField alpha(2);
  flow::TrigPoly wave(2);
  wave.add_term({1, 0}, 0.0, 0.05);
  flow::TimePoly tp(2);
  tp.add(0, wave);
  alpha.component(1) = alpha.component(1) + tp;
  flow::FormFamily fam(base, alpha);
  return flow::FlowFamily{fam, fam, {}};
}

void BM_MoserFlowT2(benchmark::State& state) {
  const auto family = t2_family();
  const auto samples = flow::sample_points(2, 8, 1);
  for (auto _ : state) {
    auto result = flow::integrate_flow(family, samples, 40, 1e-9);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_MoserFlowT2);

}  // namespace

BENCHMARK_MAIN();
