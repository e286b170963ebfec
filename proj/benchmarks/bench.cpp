#include <benchmark/benchmark.h>

#include "k4/braid3.hpp"
#include "k4/coloring.hpp"
#include "k4/corpus.hpp"
#include "k4/polynomials.hpp"
#include "k4/search.hpp"
#include "k4/skein.hpp"
#include "k4/tangle.hpp"

using namespace k4;

namespace {

LinkDiagram corpus_pd(const std::string& name) {
    return load_corpus_entry(std::string(K4_SOURCE_DIR) + "/corpus/" + name + ".pd").diagram;
}

void bm_bracket(benchmark::State& st) {
    const char* names[] = {"trefoil", "borromean", "9_34", "12jab"};
    LinkDiagram d = corpus_pd(names[st.range(0)]);
    for (auto _ : st) benchmark::DoNotOptimize(bracket(d));
    st.SetLabel(std::to_string(d.size()) + " crossings");
}
BENCHMARK(bm_bracket)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void bm_col4(benchmark::State& st) {
    LinkDiagram d = corpus_pd("trefoil_2cable");
    for (auto _ : st) benchmark::DoNotOptimize(col_group(d, 4));
}
BENCHMARK(bm_col4)->Unit(benchmark::kMicrosecond);

void bm_coset_enumeration(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(coset_enumeration());
}
BENCHMARK(bm_coset_enumeration)->Unit(benchmark::kMicrosecond);

void bm_reduce_trefoil(benchmark::State& st) {
    LinkDiagram d = corpus_pd("trefoil");
    SearchBudget b;
    b.max_crossings = 8;
    SearchOptions o;
    o.jobs = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(reduce_to_trivial(d, b, o));
}
BENCHMARK(bm_reduce_trefoil)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_table_verify(benchmark::State& st) {
    std::string dir = std::string(K4_SOURCE_DIR) + "/tables/";
    TangleTable t = load_table(dir + "fig32.table", dir + "fig32_scripts.json");
    for (auto _ : st)
        for (const auto& e : t.entries) benchmark::DoNotOptimize(verify_entry(e));
}
BENCHMARK(bm_table_verify)->Unit(benchmark::kMillisecond);

void bm_skein_rational(benchmark::State& st) {
    // memoized after the first call; measures the cached lookups plus the top resolution
    for (auto _ : st)
        for (long long p = 1; p <= 40; ++p) benchmark::DoNotOptimize(reduce_rational(Fraction(p, 7)));
}
BENCHMARK(bm_skein_rational)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
