// Microbenchmarks for the OpenMP-parallel quadrature kernels against the
// serial reference path, plus the end-to-end polynomial assembly. Useful for
// judging whether parallel overheads pay off at a given level/dimension.

#include <benchmark/benchmark.h>

#include "steiner/body.hpp"
#include "steiner/quadrature.hpp"
#include "steiner/steiner_polynomial.hpp"

using namespace steiner;

namespace {

ConvexBody bench_body(int dim) {
    switch (dim) {
        case 2: return ConvexBody::ellipsoid({2.0, 1.0});
        case 3: return ConvexBody::ellipsoid({2.0, 1.5, 1.0});
        case 4: return ConvexBody::ellipsoid({1.8, 1.4, 1.1, 0.9});
        case 5: return ConvexBody::ellipsoid({1.8, 1.4, 1.2, 1.0, 0.9});
        default: return ConvexBody::ellipsoid({1.3, 1.2, 1.1, 1.0, 1.0, 0.9});
    }
}

// The hot integrand of the mixed-volume pass: one restricted Hessian
// eigendecomposition per node.
double curvature_integrand(const ConvexBody& body, const Vec& w) {
    const PrincipalRadii radii = body.principal_radii(Direction::normalized(w));
    double prod = 1.0;
    for (Eigen::Index i = 0; i < radii.values().size(); ++i) prod *= radii.values()(i);
    return prod;
}

void bm_integrate_parallel(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ConvexBody body = bench_body(dim);
    const QuadratureRule rule = QuadratureRule::build(dim, QuadratureRule::default_level(dim));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            rule.integrate([&](const Vec& w) { return curvature_integrand(body, w); }));
    }
    state.counters["nodes"] = static_cast<double>(rule.node_count());
}

void bm_integrate_serial(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ConvexBody body = bench_body(dim);
    const QuadratureRule rule = QuadratureRule::build(dim, QuadratureRule::default_level(dim));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            rule.integrate_serial([&](const Vec& w) { return curvature_integrand(body, w); }));
    }
    state.counters["nodes"] = static_cast<double>(rule.node_count());
}

void bm_steiner_polynomial(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ConvexBody body = bench_body(dim);
    const QuadratureRule rule = QuadratureRule::build(dim, QuadratureRule::default_level(dim));
    for (auto _ : state) {
        benchmark::DoNotOptimize(steiner_polynomial(body, rule));
    }
}

void bm_radii_extrema(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ConvexBody body = bench_body(dim);
    const QuadratureRule rule = QuadratureRule::build(dim, QuadratureRule::default_level(dim));
    for (auto _ : state) {
        benchmark::DoNotOptimize(radii_extrema(body, rule));
    }
}

} // namespace

BENCHMARK(bm_integrate_parallel)->DenseRange(2, 6);
BENCHMARK(bm_integrate_serial)->DenseRange(2, 6);
BENCHMARK(bm_steiner_polynomial)->DenseRange(2, 6);
BENCHMARK(bm_radii_extrema)->DenseRange(2, 4);

BENCHMARK_MAIN();
