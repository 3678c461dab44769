#pragma once

#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "steiner/errors.hpp"
#include "steiner/numeric.hpp"
#include "steiner/types.hpp"

namespace steiner {

/// Product quadrature rule on the unit sphere S^{n-1}.
///
/// Construction: spherical coordinates x1 = cos t1, x2 = sin t1 cos t2, ...,
/// with each polar angle t_j handled as a Gauss rule in u = cos t_j against
/// its surface-measure weight (1-u^2)^((k-1)/2), and the final azimuth as a
/// uniform (trapezoid) rule with 2*level points. Gauss rules get `level`
/// points each. Weight sums equal the sphere surface area to rounding at
/// every level, and the rule is exactly antipodally balanced, so odd
/// monomials integrate to ~machine zero.
///
/// Integration happens in fixed chunks with a fixed-shape pairwise reduction
/// per chunk; the parallel path only fills per-node terms concurrently, so
/// results are bit-identical regardless of thread count and identical to the
/// serial reference path.
class QuadratureRule {
public:
    /// Build the rule for S^{dim-1}; level >= 2 controls points per angle.
    static QuadratureRule build(int dim, int level);

    /// Default level per dimension: enough for curvature integrals of the
    /// supported body families to reach ~1e-8 relative accuracy.
    static int default_level(int dim);

    int dimension() const { return dim_; }
    int level() const { return level_; }
    std::size_t node_count() const { return weights_.size(); }

    Vec node(std::size_t i) const {
        Vec v(dim_);
        for (int k = 0; k < dim_; ++k) v(k) = nodes_[i * static_cast<std::size_t>(dim_) + k];
        return v;
    }
    double weight(std::size_t i) const { return weights_[i]; }

    /// Sum of all weights (pairwise); equals sphere_surface_area(dim) to
    /// rounding by construction.
    double weight_sum() const { return pairwise_sum(weights_.data(), weights_.size()); }

    /// Integral of f over S^{n-1}; f is called once per node with the unit
    /// node vector. Parallel fill, deterministic reduction.
    template <class F>
    double integrate(F&& f) const {
        double out = 0.0;
        accumulate(1, [&](std::size_t, const Vec& w, double* cols) { cols[0] = f(w); },
                   std::span<double>(&out, 1), true);
        return out;
    }

    /// Serial reference implementation; bit-identical to integrate().
    template <class F>
    double integrate_serial(F&& f) const {
        double out = 0.0;
        accumulate(1, [&](std::size_t, const Vec& w, double* cols) { cols[0] = f(w); },
                   std::span<double>(&out, 1), false);
        return out;
    }

    /// Integrate several functionals that share per-node work: eval is
    /// called as eval(i, node, cols) and must write out.size() values to
    /// cols. Each output column gets the same reduction tree as the scalar
    /// paths.
    template <class F>
    void integrate_many(F&& eval, std::span<double> out, bool run_parallel = true) const {
        accumulate(static_cast<int>(out.size()), eval, out, run_parallel);
    }

private:
    QuadratureRule() = default;

    // eval(i, node, cols): fill cols[0..ncols) with integrand values at node
    // i; weights are applied here. Chunked so that memory stays bounded and
    // the reduction shape is fixed.
    template <class F>
    void accumulate(int ncols, F&& eval, std::span<double> out, bool run_parallel) const {
        const std::size_t n = node_count();
        const std::size_t chunk = 1u << 14;
        const std::size_t nchunks = (n + chunk - 1) / chunk;
        std::vector<double> buffer(chunk * static_cast<std::size_t>(ncols));
        std::vector<double> partials(nchunks * static_cast<std::size_t>(ncols));

        std::atomic<long> fail_index{-1};
        std::string fail_what;

        for (std::size_t c = 0; c < nchunks; ++c) {
            const std::size_t begin = c * chunk;
            const long len = static_cast<long>(std::min(chunk, n - begin));
#pragma omp parallel for schedule(static) if (run_parallel)
            for (long k = 0; k < len; ++k) {
                const std::size_t i = begin + static_cast<std::size_t>(k);
                double* cols = &buffer[static_cast<std::size_t>(k) * static_cast<std::size_t>(ncols)];
                bool failed = false;
                try {
                    eval(i, node(i), cols);
                } catch (const std::exception& e) {
                    long expect = -1;
                    if (fail_index.compare_exchange_strong(expect, static_cast<long>(i))) {
#pragma omp critical(steiner_quadrature_fail)
                        fail_what = e.what();
                    }
                    for (int j = 0; j < ncols; ++j) cols[j] = 0.0;
                    failed = true;
                }
                if (!failed) {
                    const double w = weights_[i];
                    for (int j = 0; j < ncols; ++j) cols[j] *= w;
                }
            }
            if (fail_index.load() >= 0) {
                throw NumericError("integrand evaluation failed at node " +
                                   std::to_string(fail_index.load()) + ": " + fail_what);
            }
            for (int j = 0; j < ncols; ++j) {
                partials[c * static_cast<std::size_t>(ncols) + static_cast<std::size_t>(j)] =
                    pairwise_sum(buffer.data() + j, static_cast<std::size_t>(len),
                                 static_cast<std::size_t>(ncols));
            }
        }
        for (int j = 0; j < ncols; ++j) {
            out[static_cast<std::size_t>(j)] =
                pairwise_sum(partials.data() + j, nchunks, static_cast<std::size_t>(ncols));
        }
    }

    int dim_ = 0;
    int level_ = 0;
    std::vector<double> nodes_;   // row-major, dim_ doubles per node
    std::vector<double> weights_;
};

} // namespace steiner
