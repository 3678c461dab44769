#pragma once

#include "steiner/body.hpp"
#include "steiner/quadrature.hpp"

namespace steiner {

/// Outcome of the summand check for L against K: L is accepted as a
/// Minkowski summand when its largest principal radius stays below K's
/// smallest, uniformly over the sphere. margin = rho_min(K) - rho_max(L);
/// nonnegative means the condition holds.
struct SummandCertificate {
    bool holds = false;
    double margin = 0.0;
    long directions_checked = 0;
};

/// K + L as a new body; support functions and Hessians add.
ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

/// Check the summand condition for L against K over the rule's directions
/// (plus refinement of both extrema). Never throws on failure; see
/// inner_parallel / ball_complement for the throwing constructors.
SummandCertificate summand_condition(const ConvexBody& l, const ConvexBody& k,
                                     const QuadratureRule& rule);

/// The inner parallel body K ~ cB (support p_K - c), certified against the
/// rule; throws SummandViolationError if c exceeds the minimal principal
/// radius of K. c = 0 returns K itself; c < 0 is an outer offset and is
/// always valid.
ConvexBody inner_parallel(const ConvexBody& k, double c, const QuadratureRule& rule);

/// The reflected complement body cB ~ K (support c|x| - p_K), certified;
/// throws SummandViolationError if c is below the maximal principal radius
/// of K.
ConvexBody ball_complement(const ConvexBody& k, double c, const QuadratureRule& rule);

} // namespace steiner
