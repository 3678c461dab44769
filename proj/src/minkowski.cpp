#include "steiner/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steiner {

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
    return ConvexBody::sum({a, b});
}

SummandCertificate summand_condition(const ConvexBody& l, const ConvexBody& k,
                                     const QuadratureRule& rule) {
    if (l.dimension() != k.dimension())
        throw PreconditionError("summand_condition: dimension mismatch");
    const RadiiExtrema el = radii_extrema(l, rule);
    const RadiiExtrema ek = radii_extrema(k, rule);
    SummandCertificate cert;
    cert.margin = ek.rho_min - el.rho_max;
    cert.holds = cert.margin >= 0.0;
    cert.directions_checked = el.directions_scanned + ek.directions_scanned;
    return cert;
}

ConvexBody inner_parallel(const ConvexBody& k, double c, const QuadratureRule& rule) {
    if (c <= 0.0) return ConvexBody::offset(k, -c); // outer offset, always a body
    const RadiiExtrema ek = radii_extrema(k, rule);
    // Shrinking by the ball cB requires cB to be a summand of K: c, the
    // largest (indeed only) radius of cB, must not exceed rho_min(K). A
    // rounding-level grace keeps the extreme choice c = rho_min usable.
    const double margin = ek.rho_min - c;
    if (margin < -1e-9 * std::max(1.0, std::abs(ek.rho_min)))
        throw SummandViolationError(
            "inner parallel body: c = " + std::to_string(c) +
                " exceeds the minimal principal radius " + std::to_string(ek.rho_min),
            margin);
    return ConvexBody::offset(k, -c, ConvexBody::Certified{});
}

ConvexBody ball_complement(const ConvexBody& k, double c, const QuadratureRule& rule) {
    const RadiiExtrema ek = radii_extrema(k, rule);
    // K must be a summand of cB: every principal radius of K has to stay
    // below c, the radius of curvature of the ball.
    const double margin = c - ek.rho_max;
    if (margin < -1e-9 * std::max(1.0, std::abs(ek.rho_max)))
        throw SummandViolationError(
            "ball complement: c = " + std::to_string(c) +
                " is below the maximal principal radius " + std::to_string(ek.rho_max),
            margin);
    return ConvexBody::complement(k, c, ConvexBody::Certified{});
}

} // namespace steiner
