// Compares the OpenMP kernels against their serial reference implementations
// on the workloads that dominate the larger runs: exact row reduction of the
// cohomology relation matrices and lattice-point counting for Ehrhart data.

#include <benchmark/benchmark.h>

#include <map>

#include "reflex/cohom.hpp"
#include "reflex/geom.hpp"
#include "reflex/linalg.hpp"
#include "reflex/tri.hpp"

using namespace reflex;

namespace {

QMatrix relation_matrix(unsigned n) {
    // Top-degree relation rows of the appendix fan, the largest dense block
    // the materialized ring eliminates.
    static std::map<unsigned, QMatrix> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Fan f = fan_from_triangulation(appendix_triangulation(n));
    auto cones = cones_by_dimension(f);
    size_t k = n;
    std::map<Cone, size_t> index;
    for (size_t i = 0; i < cones[k].size(); ++i) index[cones[k][i]] = i;
    std::vector<std::vector<std::pair<size_t, Rat>>> rows;
    for (const Cone& tau : cones[k - 1]) {
        std::vector<std::vector<Int>> m;
        for (size_t r : tau) m.push_back(f.rays[r]);
        for (const LatticeVec& mv : zkernel(m)) {
            std::vector<std::pair<size_t, Rat>> row;
            for (size_t r = 0; r < f.rays.size(); ++r) {
                if (std::binary_search(tau.begin(), tau.end(), r)) continue;
                Cone c = tau;
                c.push_back(r);
                std::sort(c.begin(), c.end());
                auto jt = index.find(c);
                if (jt == index.end()) continue;
                Int coeff = dot(mv, f.rays[r]);
                if (coeff != 0) row.push_back({jt->second, Rat(coeff)});
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    QMatrix mat(rows.size(), cones[k].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) mat[i][j] = v;
    cache[n] = mat;
    return mat;
}

void bm_rref_parallel(benchmark::State& state) {
    QMatrix m = relation_matrix(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rref_parallel(m).rank());
}

void bm_rref_serial(benchmark::State& state) {
    QMatrix m = relation_matrix(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rref_serial(m).rank());
}

void bm_count_parallel(benchmark::State& state) {
    Polytope p = pn_polytope(static_cast<unsigned>(state.range(0))).dilate(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(p));
}

void bm_count_serial(benchmark::State& state) {
    Polytope p = pn_polytope(static_cast<unsigned>(state.range(0))).dilate(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points_serial(p));
}

void bm_sparse_cup_rank(benchmark::State& state) {
    Fan f = fan_from_triangulation(appendix_triangulation(static_cast<unsigned>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(anticanonical_cup_rank_sparse(f).total);
}

}  // namespace

BENCHMARK(bm_rref_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rref_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_count_parallel)->Args({4, 5})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_count_serial)->Args({4, 5})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sparse_cup_rank)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
