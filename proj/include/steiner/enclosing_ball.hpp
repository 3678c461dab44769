#pragma once

#include <span>

#include "steiner/types.hpp"

namespace steiner {

struct EnclosingBall {
    Vec center;
    double radius = 0.0;
    int support_size = 0; // points pinned on the boundary (<= dim + 1)
};

/// Smallest ball containing all points: Welzl's randomized recursion with
/// move-to-front heuristic, support sets of at most dim + 1 points, and the
/// circumcenter of a support set from its Gram system. Deterministic (the
/// point order is fixed by the caller; no internal randomness).
EnclosingBall min_enclosing_ball(std::span<const Vec> points);

} // namespace steiner
