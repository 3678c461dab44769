#include "steiner/body.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>

#include "steiner/detail/body_nodes.hpp"
#include "steiner/numeric.hpp"
#include "steiner/quadrature.hpp"

namespace steiner {

// ---------------------------------------------------------------------------
// Direction and tangent frames

Direction::Direction(Vec v) : v_(std::move(v)) {
    const int n = static_cast<int>(v_.size());
    if (n < kMinDim || n > kMaxDim)
        throw PreconditionError("direction: dimension must be in [2,6]");
    if (std::abs(v_.norm() - 1.0) > 1e-12)
        throw PreconditionError("direction: vector is not unit length");
}

Direction Direction::normalized(Vec v) {
    const double n = v.norm();
    if (!(n > 1e-300)) throw PreconditionError("direction: cannot normalize zero vector");
    return Direction(Vec(v / n));
}

TangentFrame tangent_frame(const Direction& w) {
    const int n = w.dim();
    const Vec& u = w.vec();
    // Householder vector mapping e_n to -sign(u_n) * u; choosing the sign
    // away from cancellation keeps |h| >= sqrt(2). The first n-1 columns of
    // the reflection are then an orthonormal basis orthogonal to u.
    Vec h = u;
    if (u(n - 1) >= 0.0)
        h(n - 1) += 1.0;
    else
        h(n - 1) -= 1.0;
    const double inv = 2.0 / h.squaredNorm();
    Mat basis(n, n - 1);
    for (int j = 0; j < n - 1; ++j) {
        for (int i = 0; i < n; ++i)
            basis(i, j) = (i == j ? 1.0 : 0.0) - inv * h(i) * h(j);
    }
    return TangentFrame{w, std::move(basis)};
}

PrincipalRadii::PrincipalRadii(Vec sorted_values) : values_(std::move(sorted_values)) {
    if (values_(0) < -1e-9)
        throw NumericError("principal radii: negative curvature radius " +
                           std::to_string(values_(0)) + "; body is not convex");
}

// ---------------------------------------------------------------------------
// ConvexBody factories

namespace {

void check_dim(int dim) {
    if (dim < kMinDim || dim > kMaxDim)
        throw InvalidBodyError("body dimension must be in [2,6]");
}

} // namespace

ConvexBody ConvexBody::ball(int dim, double radius) {
    check_dim(dim);
    if (!(radius > 0.0)) throw InvalidBodyError("ball: radius must be positive");
    return ConvexBody(std::make_shared<detail::BallNode>(dim, radius));
}

ConvexBody ConvexBody::ellipsoid(std::vector<double> semi_axes) {
    check_dim(static_cast<int>(semi_axes.size()));
    for (double a : semi_axes)
        if (!(a > 0.0)) throw InvalidBodyError("ellipsoid: semi-axes must be positive");
    return ConvexBody(std::make_shared<detail::EllipsoidNode>(std::move(semi_axes)));
}

ConvexBody ConvexBody::sum(std::vector<ConvexBody> parts) {
    if (parts.empty()) throw InvalidBodyError("sum: needs at least one part");
    const int dim = parts.front().dimension();
    std::vector<std::shared_ptr<const BodyNode>> nodes;
    nodes.reserve(parts.size());
    for (const auto& p : parts) {
        if (p.dimension() != dim) throw InvalidBodyError("sum: mixed dimensions");
        nodes.push_back(p.share());
    }
    return ConvexBody(std::make_shared<detail::SumNode>(dim, std::move(nodes)));
}

ConvexBody ConvexBody::translated(ConvexBody inner, Vec v) {
    if (static_cast<int>(v.size()) != inner.dimension())
        throw InvalidBodyError("translate: vector dimension mismatch");
    return ConvexBody(std::make_shared<detail::TranslateNode>(inner.share(), std::move(v)));
}

ConvexBody ConvexBody::offset(ConvexBody inner, double shift) {
    // Outer offsets are Minkowski sums with a ball and always valid; inner
    // ones stay uncertified until a summand check blesses them.
    return ConvexBody(std::make_shared<detail::OffsetNode>(inner.share(), shift, shift >= 0.0));
}

ConvexBody ConvexBody::offset(ConvexBody inner, double shift, Certified) {
    return ConvexBody(std::make_shared<detail::OffsetNode>(inner.share(), shift, true));
}

ConvexBody ConvexBody::complement(ConvexBody inner, double c) {
    if (!(c > 0.0)) throw InvalidBodyError("complement: ball radius must be positive");
    return ConvexBody(std::make_shared<detail::ComplementNode>(inner.share(), c, false));
}

ConvexBody ConvexBody::complement(ConvexBody inner, double c, Certified) {
    if (!(c > 0.0)) throw InvalidBodyError("complement: ball radius must be positive");
    return ConvexBody(std::make_shared<detail::ComplementNode>(inner.share(), c, true));
}

double ConvexBody::support(const Vec& x) const { return node_->support(x); }
Vec ConvexBody::support_gradient(const Vec& x) const { return node_->gradient(x); }
Mat ConvexBody::hessian(const Vec& x) const { return node_->hessian(x); }

Mat ConvexBody::restricted_hessian(const Direction& w) const {
    const TangentFrame frame = tangent_frame(w);
    const Mat h = node_->hessian(w.vec());
    Mat r = frame.basis.transpose() * h * frame.basis;
    // Symmetrize: h is symmetric up to rounding, keep the restriction exact.
    r = 0.5 * (r + Mat(r.transpose()));
    return r;
}

PrincipalRadii ConvexBody::principal_radii(const Direction& w) const {
    return PrincipalRadii(sym_eigenvalues(restricted_hessian(w)));
}

// ---------------------------------------------------------------------------
// Radii extrema scan

namespace {

// Deterministic standard normal from raw mt19937 output (Box-Muller on
// 53-bit uniforms); avoids the library-defined std::normal_distribution so
// runs are reproducible byte for byte across standard libraries.
double draw_normal(std::mt19937_64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double radii_objective(const ConvexBody& body, const Vec& dir, bool want_max) {
    const PrincipalRadii r = body.principal_radii(Direction::normalized(dir));
    return want_max ? -r.max() : r.min();
}

// Nelder-Mead over a tangent chart u -> normalize(w0 + B u) around the best
// grid candidate.
Vec refine_extremum(const ConvexBody& body, Vec w0, bool want_max, double refine_tol) {
    const TangentFrame frame = tangent_frame(Direction::normalized(w0));
    const int n = body.dimension();
    auto objective = [&](const Eigen::VectorXd& u) {
        Vec x = w0;
        for (int j = 0; j < n - 1; ++j) x += u(j) * frame.basis.col(j);
        return radii_objective(body, x, want_max);
    };
    Eigen::VectorXd best;
    nelder_mead(objective, Eigen::VectorXd::Zero(n - 1), 0.05, refine_tol, 400, &best);
    Vec x = w0;
    for (int j = 0; j < n - 1; ++j) x += best(j) * frame.basis.col(j);
    return Vec(x / x.norm());
}

} // namespace

RadiiExtrema radii_extrema(const ConvexBody& body, const QuadratureRule& rule,
                           double refine_tol) {
    if (body.dimension() != rule.dimension())
        throw PreconditionError("radii_extrema: body and rule dimensions differ");
    const int n = body.dimension();
    const std::size_t grid = rule.node_count();
    const std::size_t extra = 10 * grid;
    const std::size_t total = grid + extra;

    std::vector<double> dirs(total * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < grid; ++i) {
        const Vec w = rule.node(i);
        for (int k = 0; k < n; ++k)
            dirs[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = w(k);
    }
    std::mt19937_64 rng(0x53746e72u); // fixed seed: the scan is part of the spec'd output
    for (std::size_t i = grid; i < total; ++i) {
        Vec w(n);
        double norm2 = 0.0;
        do {
            for (int k = 0; k < n; ++k) w(k) = draw_normal(rng);
            norm2 = w.squaredNorm();
        } while (norm2 < 1e-12);
        w /= std::sqrt(norm2);
        for (int k = 0; k < n; ++k)
            dirs[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = w(k);
    }

    std::vector<double> lo(total), hi(total);
    std::atomic<bool> failed{false};
    std::string fail_what;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(total); ++i) {
        Vec w(n);
        for (int k = 0; k < n; ++k)
            w(k) = dirs[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(k)];
        try {
            const PrincipalRadii r = body.principal_radii(Direction::normalized(w));
            lo[static_cast<std::size_t>(i)] = r.min();
            hi[static_cast<std::size_t>(i)] = r.max();
        } catch (const std::exception& e) {
            bool expect = false;
            if (failed.compare_exchange_strong(expect, true)) {
#pragma omp critical(steiner_radii_fail)
                fail_what = e.what();
            }
            lo[static_cast<std::size_t>(i)] = 0.0;
            hi[static_cast<std::size_t>(i)] = 0.0;
        }
    }
    if (failed.load()) throw NumericError("radii scan failed: " + fail_what);

    // Serial scan keeps the winning index (and thus the report) deterministic.
    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 1; i < total; ++i) {
        if (lo[i] < lo[imin]) imin = i;
        if (hi[i] > hi[imax]) imax = i;
    }
    auto dir_at = [&](std::size_t i) {
        Vec w(n);
        for (int k = 0; k < n; ++k)
            w(k) = dirs[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)];
        return w;
    };

    RadiiExtrema out;
    out.argmin = refine_extremum(body, dir_at(imin), false, refine_tol);
    out.argmax = refine_extremum(body, dir_at(imax), true, refine_tol);
    const PrincipalRadii rmin = body.principal_radii(Direction(out.argmin));
    const PrincipalRadii rmax = body.principal_radii(Direction(out.argmax));
    // Refinement may only improve on the scan; keep the better of the two.
    out.rho_min = std::min(rmin.min(), lo[imin]);
    out.rho_max = std::max(rmax.max(), hi[imax]);
    out.directions_scanned = static_cast<long>(total);
    return out;
}

} // namespace steiner
