#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <string>

#include "onto2cdm/metrics.hpp"
#include "onto2cdm/ontoclean.hpp"
#include "onto2cdm/owl_reader.hpp"
#include "onto2cdm/transform.hpp"

using namespace onto2cdm;

namespace {

// random tree with one mutual and one intrinsic property per few classes
Ontology synthetic(int n) {
    std::mt19937_64 rng(static_cast<unsigned>(n));
    Ontology o;
    o.iri = "urn:bench";
    for (int i = 0; i < n; ++i) {
        const std::string c = "c" + std::to_string(i);
        o.classes[c] = {c, ClassKind::Named, {}, {}, {}};
        if (i > 0) {
            const int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
            o.subsumptions.emplace(c, "c" + std::to_string(parent));
        }
        if (i % 3 == 0 && i > 0) {
            OntoProperty p;
            p.name = "r" + std::to_string(i);
            p.domain = c;
            p.range = "c" + std::to_string(std::uniform_int_distribution<int>(0, i - 1)(rng));
            p.functional = i % 2 == 0;
            o.properties[p.name] = p;
        }
        if (i % 4 == 1) {
            OntoProperty p;
            p.name = "v" + std::to_string(i);
            p.kind = PropertyKind::Intrinsic;
            p.domain = c;
            p.range = "xsd:string";
            o.properties[p.name] = p;
        }
    }
    return o;
}

void BM_Transform(benchmark::State& state) {
    const Ontology o = synthetic(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(transform(o));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Transform)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Refine(benchmark::State& state) {
    const auto model = transform(synthetic(static_cast<int>(state.range(0)))).model;
    for (auto _ : state) benchmark::DoNotOptimize(refine(model));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Refine)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Validate(benchmark::State& state) {
    const auto model = transform(synthetic(static_cast<int>(state.range(0)))).model;
    ontoclean::Annotations ann;
    int i = 0;
    for (const auto& [name, _] : model.entity_types) {
        ontoclean::MetaAnnotation a;
        a.concept_name = name;
        a.rigidity = i % 5 == 0 ? ontoclean::Rigidity::AntiRigid : ontoclean::Rigidity::Rigid;
        a.identity = true;
        a.dependence = i % 5 == 0;
        ann[name] = a;
        ++i;
    }
    for (auto _ : state) benchmark::DoNotOptimize(ontoclean::validate_model(model, ann));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Validate)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ReadJson(benchmark::State& state) {
    const std::string text = write_json(synthetic(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        std::istringstream in(text);
        benchmark::DoNotOptimize(read_json(in));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ReadJson)->Arg(256)->Arg(4096);

void BM_Regression(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> v(0, 1000);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < state.range(0); ++i) pts.emplace_back(v(rng), v(rng));
    for (auto _ : state) benchmark::DoNotOptimize(fit_regression(pts));
}
BENCHMARK(BM_Regression)->Arg(50)->Arg(5000);

void BM_Tokenize(benchmark::State& state) {
    const std::string name = "HTTPServerAccessNumber2ndHalf_of-protein";
    for (auto _ : state) benchmark::DoNotOptimize(tokenize_name(name));
}
BENCHMARK(BM_Tokenize);

}  // namespace

BENCHMARK_MAIN();
