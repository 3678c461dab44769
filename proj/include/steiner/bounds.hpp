#pragma once

#include <array>

#include "steiner/body.hpp"
#include "steiner/minkowski.hpp"
#include "steiner/quadrature.hpp"
#include "steiner/roots.hpp"
#include "steiner/steiner_polynomial.hpp"

namespace steiner {

/// Largest ball fitting inside the body: max over centers x of the minimal
/// support gap p(w) - x.w. A grid LP over the rule's directions supplies the
/// starting center; the concave clearance is then polished by Nelder-Mead,
/// with the inner sphere minimum located by a node scan plus a tangent-chart
/// refinement, so the result does not inherit the grid resolution.
double inradius(const ConvexBody& body, const QuadratureRule& rule);

/// Smallest ball containing the body: min over centers x of the maximal
/// support gap p(w) - x.w. Starts from the enclosing-ball center of the
/// sampled boundary cloud and polishes the convex objective the same way.
double outradius(const ConvexBody& body, const QuadratureRule& rule);

/// Verdict on the root-location bounds: every root of the volume polynomial
/// must have its real part in [-rho_max, -rho_min]. Margins are signed
/// distances to the interval ends (negative = violated); `pass` allows the
/// numerical tolerance. For n <= 5 the bound is unconditional; for n = 6 it
/// is proved only under Hurwitz stability, so when the Routh test cannot
/// certify stability the report flags the hypothesis as unverified.
struct BoundsReport {
    int dim = 0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    std::vector<double> real_parts; // sorted ascending
    double lower_margin = 0.0;      // min Re + rho_max
    double upper_margin = 0.0;      // -rho_min - max Re
    bool pass = false;
    double tolerance = 0.0;
    StabilityReport stability;
    bool stability_hypothesis_unverified = false;
};

BoundsReport root_bounds_check(const ConvexBody& body, const QuadratureRule& rule, double tol);

/// The ordered planar chain
///   -rho_max <= t_1 <= -R_out <= -L/(2 pi) <= -R_in <= t_2 <= -rho_min
/// with t_1 <= t_2 the roots of the planar volume polynomial. For a disc
/// all seven values coincide (equality_mode); otherwise every inequality is
/// strict and `strict` demands each consecutive gap exceed tol.
struct PlanarChainReport {
    std::array<double, 7> values{}; // chain members, left to right
    bool strict = false;
    bool equality_mode = false;
    bool pass = false;
    double min_gap = 0.0; // smallest consecutive gap (spread in equality mode)
    double tolerance = 0.0;
};

PlanarChainReport planar_chain_check(const ConvexBody& body, const QuadratureRule& rule,
                                     double tol);

/// Volume-polynomial identity for the inner parallel body K ~ cB
/// (0 < c <= rho_min): its polynomial must equal the original precomposed
/// with t -> t - c. Returns the worst relative coefficient gap.
double shift_identity_check(const ConvexBody& body, double c, const QuadratureRule& rule);

/// Volume-polynomial identity for the reflected complement cB ~ K
/// (c >= rho_max): its polynomial must equal t -> (-1)^n S(-t - c), built by
/// reflecting and then shifting the original. For n = 3 the same target is
/// also assembled directly from the expanded cubic form as a second route;
/// the return value is the worst relative coefficient gap over both routes.
double reflection_identity_check(const ConvexBody& body, double c, const QuadratureRule& rule);

/// Planar observation: the larger root t_2 always sits at or above the
/// negated inradius. slack = t_2 + R_in (nonnegative when it holds).
struct InradiusRootReport {
    bool holds = false;
    double slack = 0.0;
};

InradiusRootReport inradius_root_check(const ConvexBody& body, const QuadratureRule& rule);

} // namespace steiner
