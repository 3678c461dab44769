#pragma once

#include <span>
#include <utility>
#include <vector>

#include "steiner/body.hpp"
#include "steiner/quadrature.hpp"

namespace steiner {

/// The volume polynomial t -> vol(K + tB), t >= 0, stored by ascending
/// power: coeffs[i] = C(n,i) V(K,...,K,B,...,B) with i copies of the unit
/// ball B. coeffs[0] is the volume of K, coeffs[n] the unit ball volume.
struct SteinerPolynomial {
    int dim = 0;
    std::vector<double> coeffs;

    int degree() const { return dim; }
    double evaluate(double t) const;
};

/// The mixed volumes V_i = V(K[n-i], B[i]) for i = 0..n, each computed by
/// both quadrature routes where available: the curvature route integrates
/// the normalized elementary symmetric functions of the principal radii,
/// the support route weighs them by the support function. `values` keeps
/// the support route where defined (i <= n-1) and the curvature route for
/// i = n; `discrepancy` is the relative gap between routes for
/// 1 <= i <= n-1 (NaN outside), a free error estimate.
struct MixedVolumeTable {
    int dim = 0;
    std::vector<double> values;
    std::vector<double> discrepancy;

    /// Checks the Alexandrov-Fenchel consequence V_i^2 >= V_{i-1} V_{i+1}
    /// up to a relative slack; reports the worst signed slack if asked.
    bool log_concave(double rel_tol, double* worst_slack = nullptr) const;
};

/// Normalized elementary symmetric function s_j = e_j(values) / C(m, j)
/// for m = values.size(); s_0 = 1. Computed by the stable ascending
/// recurrence on e_0..e_j.
double elementary_symmetric_normalized(std::span<const double> values, int j);

struct MixedVolumeResult {
    double value;
    double discrepancy; // relative gap between the two quadrature routes; NaN if only one applies
};

/// Single mixed volume V(K[n-i], B[i]) by spherical quadrature.
MixedVolumeResult mixed_volume(const ConvexBody& body, int i, const QuadratureRule& rule);

/// Full Steiner polynomial and mixed-volume table in one pass over the
/// rule's nodes (one eigen decomposition per node feeds every coefficient).
std::pair<SteinerPolynomial, MixedVolumeTable> steiner_polynomial(const ConvexBody& body,
                                                                  const QuadratureRule& rule);

/// Coefficients of t -> p(t + s): precomposition with a shift.
SteinerPolynomial shifted(const SteinerPolynomial& p, double s);

/// Coefficients of t -> (-1)^n p(-t): the reflection that carries the
/// volume polynomial of K to that of a reflected complement body.
SteinerPolynomial reflected(const SteinerPolynomial& p);

} // namespace steiner
