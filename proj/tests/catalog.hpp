#pragma once

// Shared test bodies. Aspect ratios are capped per dimension so that the
// dual-route mixed-volume agreement stays below 1e-6 at the default
// quadrature levels (the curvature integrands get stiffer with dimension).

#include <vector>

#include "steiner/body.hpp"

namespace catalog {

using steiner::ConvexBody;

inline ConvexBody ell(std::vector<double> axes) { return ConvexBody::ellipsoid(std::move(axes)); }

inline std::vector<ConvexBody> bodies(int dim) {
    switch (dim) {
        case 2:
            return {ConvexBody::ball(2, 1.0),
                    ConvexBody::ball(2, 0.5),
                    ConvexBody::ball(2, 2.5),
                    ell({2.0, 1.0}),
                    ell({3.0, 1.0}),
                    ell({1.5, 1.0}),
                    ell({1.1, 1.0}),
                    ell({1.25, 0.75}),
                    ConvexBody::sum({ell({2.0, 1.0}), ConvexBody::ball(2, 0.5)}),
                    ConvexBody::sum({ell({1.5, 1.0}), ConvexBody::ball(2, 1.0)})};
        case 3:
            return {ConvexBody::ball(3, 1.0),
                    ConvexBody::ball(3, 3.0),
                    ConvexBody::ball(3, 0.7),
                    ell({3.0, 2.0, 1.0}),
                    ell({2.0, 1.5, 1.0}),
                    ell({1.5, 1.2, 1.0}),
                    ell({1.2, 1.0, 0.9}),
                    ell({2.0, 2.0, 1.0}),
                    ConvexBody::sum({ell({2.0, 1.5, 1.0}), ConvexBody::ball(3, 0.5)}),
                    ConvexBody::sum({ell({1.5, 1.0, 0.8}), ConvexBody::ball(3, 1.0)})};
        case 4:
            return {ConvexBody::ball(4, 1.0),
                    ConvexBody::ball(4, 1.5),
                    ConvexBody::ball(4, 0.6),
                    ell({1.8, 1.4, 1.1, 0.9}),
                    ell({2.0, 1.2, 1.0, 1.0}),
                    ell({1.5, 1.2, 1.0, 0.9}),
                    ell({1.3, 1.1, 1.0, 0.95}),
                    ell({1.6, 1.3, 1.0, 0.9}),
                    ConvexBody::sum({ell({1.5, 1.2, 1.0, 0.9}), ConvexBody::ball(4, 0.5)}),
                    ConvexBody::sum({ell({1.8, 1.4, 1.1, 0.9}), ConvexBody::ball(4, 1.0)})};
        case 5:
            return {ConvexBody::ball(5, 1.0),
                    ConvexBody::ball(5, 2.0),
                    ConvexBody::ball(5, 0.8),
                    ell({1.8, 1.4, 1.2, 1.0, 0.9}),
                    ell({1.5, 1.3, 1.2, 1.0, 0.9}),
                    ell({1.6, 1.2, 1.0, 0.9, 0.8}),
                    ell({1.2, 1.1, 1.0, 1.0, 0.9}),
                    ell({1.4, 1.2, 1.1, 1.0, 0.95}),
                    ConvexBody::sum({ell({1.5, 1.3, 1.2, 1.0, 0.9}), ConvexBody::ball(5, 0.5)}),
                    ConvexBody::sum({ell({1.2, 1.1, 1.0, 1.0, 0.9}), ConvexBody::ball(5, 1.0)})};
        case 6:
            return {ConvexBody::ball(6, 1.0),
                    ConvexBody::ball(6, 1.7),
                    ell({1.3, 1.2, 1.1, 1.0, 1.0, 0.9}),
                    ell({1.4, 1.2, 1.1, 1.0, 0.95, 0.9}),
                    ConvexBody::sum({ell({1.3, 1.2, 1.1, 1.0, 1.0, 0.9}),
                                     steiner::ConvexBody::ball(6, 0.5)})};
        default:
            return {};
    }
}

// Exact principal-radius extrema for an ellipsoid: radii at the axis normals
// are a_j^2 / a_i, so the global extrema are a_min^2/a_max and a_max^2/a_min.
inline double ellipsoid_rho_min(const std::vector<double>& axes) {
    double amin = axes[0], amax = axes[0];
    for (double a : axes) {
        amin = std::min(amin, a);
        amax = std::max(amax, a);
    }
    return amin * amin / amax;
}

inline double ellipsoid_rho_max(const std::vector<double>& axes) {
    double amin = axes[0], amax = axes[0];
    for (double a : axes) {
        amin = std::min(amin, a);
        amax = std::max(amax, a);
    }
    return amax * amax / amin;
}

} // namespace catalog
