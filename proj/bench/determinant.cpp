#include <benchmark/benchmark.h>

#include <iostream>

#include "talex/groups.hpp"
#include "talex/homsearch.hpp"
#include "talex/knots.hpp"
#include "talex/matrix.hpp"
#include "talex/twisted.hpp"

using namespace talex;

namespace {

struct Workload {
    std::string label;
    PolyMatrix matrix;
};

// Twisted Jacobians of bundled knots for regular representations.
const std::vector<Workload>& workloads()
{
    static const auto out = [] {
        const auto table = load_knot_table(TALEX_DEFAULT_TABLE);
        std::vector<Workload> w;
        auto add = [&](const std::string& knot, FiniteGroup group, CoefficientDomain domain) {
            const auto p = simplify_presentation(table.at(knot));
            const auto g = std::make_shared<const FiniteGroup>(std::move(group));
            const auto f = find_meridional_surjections(p, *g, true).at(0);
            const Homomorphism h { g, f.images };
            w.push_back({ knot + "/" + g->name() + "/" + domain.to_string(),
                twisted_jacobian(p, h, regular_representation(*g), domain, p.generator_count) });
        };
        add("3_1", alternating4(), CoefficientDomain::integers());
        add("8_18", d3_semidirect_c3(), CoefficientDomain::prime_field(3));
        add("6_1", metacyclic(3, 7, 2), CoefficientDomain::prime_field(7));
        add("9_40", dp_semidirect_cp(5), CoefficientDomain::prime_field(5));
        return w;
    }();
    return out;
}

void parallel(benchmark::State& state)
{
    const auto& w = workloads()[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(w.label + " " + std::to_string(w.matrix.rows()) + "x" + std::to_string(w.matrix.rows()));
    for (auto _ : state)
        benchmark::DoNotOptimize(determinant(w.matrix));
}

void serial(benchmark::State& state)
{
    const auto& w = workloads()[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(w.label + " " + std::to_string(w.matrix.rows()) + "x" + std::to_string(w.matrix.rows()));
    for (auto _ : state)
        benchmark::DoNotOptimize(determinant_serial(w.matrix));
}

BENCHMARK(parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

int main(int argc, char** argv)
{
    for (const auto& w : workloads())
        if (!(determinant(w.matrix) == determinant_serial(w.matrix))) {
            std::cerr << "parallel and serial determinants differ on " << w.label << "\n";
            return 1;
        }
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
}
