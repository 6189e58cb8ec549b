#include "nanoword/jones.hpp"
#include "nanoword/moves.hpp"
#include "nanoword/phrase.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace nanoword;

namespace {

// (2, n) torus-like word: X1 X2 ... Xn X1 X2 ... Xn, all projections +1.
Phrase torus_word(int n) {
    std::vector<std::string> names;
    std::vector<Symbol> proj;
    std::vector<LetterIdx> word;
    for (int i = 0; i < n; ++i) {
        names.push_back("X" + std::to_string(i + 1));
        proj.push_back(0);
    }
    for (int rep = 0; rep < 2; ++rep)
        for (int i = 0; i < n; ++i) word.push_back(i);
    return Phrase(Alphabet::alpha1(), std::move(names), std::move(proj), {word});
}

void BM_reduce_state(benchmark::State& state) {
    const Phrase p = torus_word(static_cast<int>(state.range(0)));
    nanoword::State marks;
    marks.mark.assign(static_cast<size_t>(p.letter_count()), 1);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_state(p, marks));
}
BENCHMARK(BM_reduce_state)->Arg(6)->Arg(10)->Arg(14);

void BM_bracket_generic(benchmark::State& state) {
    const Phrase p = torus_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_generic(p));
}
BENCHMARK(BM_bracket_generic)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_jones(benchmark::State& state) {
    const Phrase p = torus_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(jones(p));
}
BENCHMARK(BM_jones)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_turaev_bracket(benchmark::State& state) {
    const Phrase p = lift_to_star(torus_word(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(turaev_bracket(p));
}
BENCHMARK(BM_turaev_bracket)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_enumerate_moves(benchmark::State& state) {
    const Phrase p = torus_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_moves(p, true, 2));
}
BENCHMARK(BM_enumerate_moves)->Arg(6)->Arg(10);

void BM_canonicalize(benchmark::State& state) {
    const Phrase p = torus_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(p).key());
}
BENCHMARK(BM_canonicalize)->Arg(10);

void BM_equiv_search(benchmark::State& state) {
    // Certify one Lemma 1(i) instance by raw homotopy search.
    const Phrase p = [] {
        std::vector<std::string> names{"A", "B", "C"};
        std::vector<Symbol> proj{0, 1, 0};  // (1, -1, 1)
        return Phrase(Alphabet::alpha1(), names, proj, {{0, 1, 2, 0, 1, 2}});
    }();
    const Phrase q = apply_lemma1(p, Lemma1Variant::I, {0, 2, 4});
    EquivOptions opt;
    opt.max_letters = 6;
    opt.max_depth = 12;
    for (auto _ : state) benchmark::DoNotOptimize(equiv_search(p, q, opt));
}
BENCHMARK(BM_equiv_search)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
