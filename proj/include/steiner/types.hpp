#pragma once

#include <Eigen/Dense>

namespace steiner {

/// Ambient dimensions handled by the engine. Everything is stack-allocated
/// up to kMaxDim, so there are no heap round-trips in the quadrature loops.
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 6;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

/// Volume of the unit ball in R^n (kappa_n).
double unit_ball_volume(int n);

/// Surface measure of the unit sphere S^{n-1}, i.e. n * kappa_n.
double sphere_surface_area(int n);

/// Binomial coefficient as a double; exact for the small arguments used here.
double binomial(int n, int k);

} // namespace steiner
