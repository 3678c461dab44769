#pragma once

#include <functional>
#include <span>
#include <vector>

#include "steiner/types.hpp"

namespace steiner {

/// Sum of values[0..count) with a fixed-shape pairwise (tree) reduction.
/// The summation order depends only on `count`, never on threading or
/// chunking, which is what makes integral results reproducible bit for bit.
/// `stride` walks strided columns of row-major multi-column buffers.
double pairwise_sum(const double* values, std::size_t count, std::size_t stride = 1);

/// Eigenvalues of a symmetric matrix (size <= kMaxDim), sorted ascending.
/// Closed form for 1x1/2x2, cyclic Jacobi sweeps above that. Deterministic.
Vec sym_eigenvalues(Mat a);

/// Full symmetric eigendecomposition via cyclic Jacobi with eigenvector
/// accumulation; used for Golub-Welsch quadrature construction where the
/// first row of the eigenvector matrix supplies the weights. Any size.
void sym_eigen_full(Eigen::MatrixXd a, Eigen::VectorXd& values, Eigen::MatrixXd& vectors);

/// One-dimensional Gauss rule: integrates f against a weight on [-1, 1].
struct Gauss1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss nodes/weights for the weight (1 - u^2)^alpha on [-1, 1]
/// (alpha = 0 gives Gauss-Legendre). Exact for polynomials of degree
/// <= 2m - 1 against that weight; nodes symmetrized about 0.
Gauss1D gauss_gegenbauer(int m, double alpha);

/// Nelder-Mead minimization of f starting from x0 with initial simplex edge
/// `step`. Stops when the simplex diameter falls below xtol or after
/// max_iter reflections. Returns the best value; best point in *xmin.
double nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                   const Eigen::VectorXd& x0, double step, double xtol,
                   int max_iter, Eigen::VectorXd* xmin);

/// Evaluate a polynomial sum c[i] t^i by Horner's scheme.
double horner(std::span<const double> coeffs, double t);

} // namespace steiner
