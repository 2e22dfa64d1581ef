#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "xppkit/analysis.hpp"
#include "xppkit/autorepo.hpp"
#include "xppkit/model.hpp"
#include "xppkit/plots.hpp"

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(XPPKIT_FIXTURES) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const xpp::Model& ck_model() {
    static xpp::Model m = xpp::parse_model(slurp("ck.ode"));
    return m;
}

const std::string& ck_source() {
    static std::string s = slurp("ck.auto");
    return s;
}

void BM_ParseAuto(benchmark::State& state) {
    const auto& model = ck_model();
    const auto& source = ck_source();
    for (auto _ : state) {
        auto repo = xpp::parse_auto(model, source);
        benchmark::DoNotOptimize(repo);
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_ParseAuto);

void BM_ParseAutoNoTrajectories(benchmark::State& state) {
    const auto& model = ck_model();
    const auto& source = ck_source();
    for (auto _ : state) {
        auto repo = xpp::parse_auto(model, source, {true, false});
        benchmark::DoNotOptimize(repo);
    }
}
BENCHMARK(BM_ParseAutoNoTrajectories);

void BM_GetEig(benchmark::State& state) {
    auto repo = xpp::parse_auto(ck_model(), ck_source());
    for (auto _ : state) {
        auto eig = xpp::get_eig(repo.diagrams.back());
        benchmark::DoNotOptimize(eig);
    }
}
BENCHMARK(BM_GetEig);

void BM_AverageAllOrbits(benchmark::State& state) {
    auto repo = xpp::parse_auto(ck_model(), ck_source());
    auto trjs = xpp::get_trj(repo.diagrams.back());
    auto integrand = xpp::Expression::parse(
        "-(alpha*(gca*0.5*(1+tanh((v-vm)/sm))*(v-vca)) + kpmca*c)");
    xpp::Env extra{{"kpmca", 0.32}};
    for (auto _ : state) {
        auto result = xpp::find_zero_average(trjs, "c", integrand, extra);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * trjs.size()));
}
BENCHMARK(BM_AverageAllOrbits);

void BM_EmitDiagramPlot(benchmark::State& state) {
    static xpp::Model hh = xpp::parse_model(slurp("hh.ode"));
    auto repo = xpp::parse_auto(hh, slurp("hh_1p.auto"));
    for (auto _ : state) {
        auto svg = xpp::emit_diagram_plot(hh, repo.diagrams[0]);
        benchmark::DoNotOptimize(svg);
    }
}
BENCHMARK(BM_EmitDiagramPlot);

} // namespace

BENCHMARK_MAIN();
