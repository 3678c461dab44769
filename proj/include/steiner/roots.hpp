#pragma once

#include <complex>
#include <span>
#include <vector>

#include "steiner/steiner_polynomial.hpp"

namespace steiner {

/// Roots of a real polynomial, with multiplicity. Nearby numerical roots
/// are clustered: a group of m roots scattered around an m-fold root (by
/// eps^(1/m), far beyond the centroid's own accuracy) collapses to its
/// centroid repeated m times. Candidate merges are gathered within a radius
/// sized for the worst-case multiplicity (cluster_tol as its floor) and each
/// merge must pass a residual test at the merged centroid, which keeps
/// genuinely distinct roots apart even when they fall inside the radius.
struct RootSet {
    std::vector<std::complex<double>> roots; // length = degree, conjugate-closed
    std::vector<double> real_parts;          // sorted ascending, length = degree
    double cluster_tol = 0.0;
};

/// Companion-matrix eigenvalues polished by Newton iteration, then
/// clustered. coeffs is ascending; the leading coefficient must be nonzero.
RootSet polynomial_roots(std::span<const double> coeffs, double cluster_tol = 1e-5);

inline RootSet polynomial_roots(const SteinerPolynomial& p, double cluster_tol = 1e-5) {
    return polynomial_roots(std::span<const double>(p.coeffs), cluster_tol);
}

/// Routh-Hurwitz verdict, computed from the coefficients alone (no root
/// finding): after normalizing the leading coefficient positive, the
/// polynomial is stable iff every first-column entry of the Routh array is
/// positive. A pivot within 1e-12 of zero makes the test inconclusive:
/// `marginal` is set and `stable` conservatively cleared.
struct StabilityReport {
    bool stable = false;
    bool marginal = false;
    double margin = 0.0; // smallest first-column entry after normalization
};

StabilityReport hurwitz_stable(std::span<const double> coeffs);

inline StabilityReport hurwitz_stable(const SteinerPolynomial& p) {
    return hurwitz_stable(std::span<const double>(p.coeffs));
}

} // namespace steiner
