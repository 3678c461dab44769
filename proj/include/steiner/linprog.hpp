#pragma once

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <vector>

namespace steiner {

/// maximize c.z subject to a[i].z <= b[i] and lo <= z <= hi (componentwise).
/// Box bounds must be finite: they bound the recursion and make the optimum
/// well defined even when the inequality constraints leave a direction free.
struct LpProblem {
    std::vector<Eigen::VectorXd> a;
    std::vector<double> b;
    Eigen::VectorXd c;
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
};

/// Seidel's randomized incremental algorithm; intended for a handful of
/// variables (here <= 7) and a few hundred thousand constraints. The
/// constraint insertion order comes from `rng`, so a fixed seed gives a
/// fully deterministic run. Returns nullopt when infeasible.
std::optional<Eigen::VectorXd> solve_lp(const LpProblem& lp, std::mt19937& rng);

} // namespace steiner
