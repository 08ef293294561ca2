#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcert/classical.hpp"
#include "qcert/classifier.hpp"
#include "qcert/oracle.hpp"
#include "qcert/positivity.hpp"

namespace {

std::vector<qcert::MonicQuartic> random_forms(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    const auto r = [&] { return qcert::Rational(num(rng), den(rng)); };
    std::vector<qcert::MonicQuartic> forms;
    for (std::size_t i = 0; i < n; ++i) {
        forms.push_back({r(), r(), r(), r()});
    }
    return forms;
}

const std::vector<qcert::MonicQuartic>& forms() {
    static const auto f = random_forms(256);
    return f;
}

// (x^2 + xy + y^2)^2: a boundary form where lambda0 = a3^2/4.
const qcert::MonicQuartic kSquare{2, 3, 2, 1};

void BM_DecideMonic(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcert::decide_monic(forms()[i++ % forms().size()]));
    }
}
BENCHMARK(BM_DecideMonic);

void BM_DecideBoundary(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcert::decide_monic(kSquare));
    }
}
BENCHMARK(BM_DecideBoundary);

void BM_ClassicalIsPd(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcert::classical_is_pd(qcert::to_weighted(forms()[i++ % forms().size()])));
    }
}
BENCHMARK(BM_ClassicalIsPd);

void BM_ClassifyCase(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcert::classify_case(forms()[i++ % forms().size()]));
    }
}
BENCHMARK(BM_ClassifyCase);

void BM_QuarticRootNature(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcert::quartic_root_nature(forms()[i++ % forms().size()]));
    }
}
BENCHMARK(BM_QuarticRootNature);

void BM_CircleMin(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcert::circle_min_estimate(forms()[i++ % forms().size()], samples));
    }
}
BENCHMARK(BM_CircleMin)->Arg(256)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
