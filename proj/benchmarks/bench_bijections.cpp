#include <benchmark/benchmark.h>

#include <random>

#include "wilf/matching.hpp"
#include "wilf/pipeline.hpp"

using namespace wilf;

namespace {

// A fixed random bilaterally symmetric 321-avoiding involution word per size,
// built by scanning involutions and keeping the k-th avoider.
Permutation sample_avoider(int n, int skip) {
    std::vector<Permutation> found;
    std::vector<int> word(static_cast<size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    const Permutation bad = Permutation::parse("321");
    std::function<bool(int)> rec = [&](int from) {
        int i = from;
        while (i <= n && word[static_cast<size_t>(i)]) ++i;
        if (i > n) {
            Permutation p(std::vector<int>(word.begin() + 1, word.end()));
            if (!p.contains(bad)) found.push_back(p);
            return static_cast<int>(found.size()) > skip;
        }
        for (int v = i; v <= n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            word[static_cast<size_t>(i)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (v != i) {
                word[static_cast<size_t>(v)] = i;
                used[static_cast<size_t>(i)] = 1;
            }
            bool done = rec(i + 1);
            if (v != i) {
                word[static_cast<size_t>(v)] = 0;
                used[static_cast<size_t>(i)] = 0;
            }
            word[static_cast<size_t>(i)] = 0;
            used[static_cast<size_t>(v)] = 0;
            if (done) return true;
        }
        return false;
    };
    rec(1);
    return found.back();
}

void BM_SevenStageMap(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Transversal t = Transversal::from_permutation(sample_avoider(n, n));
    for (auto _ : state) benchmark::DoNotOptimize(psi_cap(t));
}

void BM_InsertionCorrespondence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::vector<int> pts(static_cast<size_t>(2 * n));
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
        int a = pts[static_cast<size_t>(2 * i)], b = pts[static_cast<size_t>(2 * i) + 1];
        arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
    Matching m(arcs);
    for (auto _ : state) {
        OscillatingTableau o = phi(m);
        benchmark::DoNotOptimize(phi_inv(o));
    }
}

void BM_CrossingNesting(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i) arcs.emplace_back(i, 2 * n + 1 - i);
    Matching m(arcs);
    for (auto _ : state) benchmark::DoNotOptimize(crossing_nesting(m));
}

}  // namespace

BENCHMARK(BM_SevenStageMap)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_InsertionCorrespondence)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_CrossingNesting)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
