#include <random>

#include <benchmark/benchmark.h>

#include <ncopuc/orthopoly.hpp>
#include <ncopuc/verblunsky.hpp>
#include <ncopuc/zeros.hpp>

using namespace ncopuc;

namespace {

VerblunskyFamily random_family(const Word& top, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.0, 0.8), arg(0.0, 6.283185307179586);
    std::vector<Complex> v(shortlex_index(top) + 1);
    for (std::size_t i = 1; i < v.size(); ++i) {
        v[i] = std::polar<Real>(mag(rng), arg(rng));
    }
    return VerblunskyFamily(top, v);
}

// args: alphabet size, word length
Word top_of(const benchmark::State& st) { return sigma_n(static_cast<int>(st.range(1)), static_cast<int>(st.range(0))); }

void BM_Synthesize(benchmark::State& st) {
    const Word top = top_of(st);
    const VerblunskyFamily g = random_family(top, 1);
    for (auto _ : st) {
        benchmark::DoNotOptimize(synthesize(g, top));
    }
    st.counters["N"] = static_cast<double>(shortlex_index(top) + 1);
}

void BM_GramSchmidt(benchmark::State& st) {
    const Word top = top_of(st);
    const MomentFamily m = moments_from_polys(synthesize(random_family(top, 2), top));
    for (auto _ : st) {
        benchmark::DoNotOptimize(gram_schmidt(m, top));
    }
    st.counters["N"] = static_cast<double>(shortlex_index(top) + 1);
}

void BM_Extract(benchmark::State& st) {
    const Word top = top_of(st);
    const MomentFamily m = moments_from_polys(synthesize(random_family(top, 3), top));
    for (auto _ : st) {
        benchmark::DoNotOptimize(extract(m, top));
    }
    st.counters["N"] = static_cast<double>(shortlex_index(top) + 1);
}

// args: matrix level k, degree n (d = 2)
void BM_ReverseForm(benchmark::State& st) {
    const int k = static_cast<int>(st.range(0));
    const int n = static_cast<int>(st.range(1));
    const Word top = sigma_n(n, 2);
    const RecurrencePair pair = synthesize(random_family(top, 4), top);
    const MatrixTuple z = sample_tuple(SampleKind::Interior, 0.9L, k, 2, 5);
    for (auto _ : st) {
        benchmark::DoNotOptimize(reverse_form(pair, n, z));
    }
}

}  // namespace

BENCHMARK(BM_Synthesize)->Args({2, 4})->Args({2, 6})->Args({3, 4});
BENCHMARK(BM_GramSchmidt)->Args({2, 4})->Args({2, 6})->Args({3, 4});
BENCHMARK(BM_Extract)->Args({2, 4})->Args({2, 6})->Args({3, 4});
BENCHMARK(BM_ReverseForm)->Args({1, 3})->Args({2, 3})->Args({3, 3});
BENCHMARK_MAIN();
