#include <benchmark/benchmark.h>

#include "bakergamma/algebraic.hpp"
#include "bakergamma/gamma_eval.hpp"
#include "bakergamma/periods.hpp"
#include "bakergamma/scan.hpp"

using namespace bakergamma;

static void LogGamma(benchmark::State& state) {
    const Rational x(1, 3);
    const auto prec = static_cast<mpfr_prec_t>(state.range(0));
    log_gamma(x, prec); // warm the Bernoulli cache outside the loop
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma(x, prec));
    }
}
BENCHMARK(LogGamma)->Arg(256)->Arg(1024)->Arg(3456);

static void FEvalFast(benchmark::State& state) {
    const Rational x(121, 509); // direct-sine route
    const auto prec = static_cast<mpfr_prec_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_eval(x, prec));
    }
}
BENCHMARK(FEvalFast)->Arg(256)->Arg(3456);

static void FEvalVerify(benchmark::State& state) {
    const Rational x(121, 509);
    const auto prec = static_cast<mpfr_prec_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_eval(x, prec, FEvalMode::Verify));
    }
}
BENCHMARK(FEvalVerify)->Arg(256)->Arg(3456);

static void MinpolySin(benchmark::State& state) {
    const long q = state.range(0);
    for (auto _ : state) {
        // distinct numerators defeat the memo cache enough to time the fold
        for (long p = 1; p < q; p += 2) {
            benchmark::DoNotOptimize(minpoly_sin(Rational(p, q)));
        }
    }
}
BENCHMARK(MinpolySin)->Arg(12)->Arg(24)->Arg(60);

static void RefineRoot(benchmark::State& state) {
    const AlgebraicNumber a = minpoly_sin(Rational(5, 12));
    const auto prec = static_cast<mpfr_prec_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(refine(a, prec));
    }
}
BENCHMARK(RefineRoot)->Arg(256)->Arg(3456);

static void NullityPair(benchmark::State& state) {
    const Rational a(5, 17), b(3, 23);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nullity(f_difference(a, b), 256));
    }
}
BENCHMARK(NullityPair);

static void Scan50(benchmark::State& state) {
    ScanRequest req;
    req.from = Rational(1, 52);
    req.to = Rational(51, 52);
    req.steps = 50;
    req.prec = 512;
    req.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_values(req));
    }
}
BENCHMARK(Scan50);

BENCHMARK_MAIN();
