#include "steiner/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steiner/errors.hpp"

namespace steiner {

double pairwise_sum(const double* values, std::size_t count, std::size_t stride) {
    // Base case small enough to be cheap, large enough to keep recursion
    // shallow. The split point depends only on `count`, so the reduction
    // tree is a pure function of the length.
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) s += values[i * stride];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(values, half, stride) +
           pairwise_sum(values + half * stride, count - half, stride);
}

namespace {

// One cyclic Jacobi sweep over the strict upper triangle of `a`, rotating
// pairs (p,q) to zero a(p,q); accumulates rotations into `v` when given.
// Returns the off-diagonal Frobenius norm squared after the sweep.
template <class Matrix>
double jacobi_sweep(Matrix& a, Eigen::MatrixXd* v) {
    const Eigen::Index m = a.rows();
    for (Eigen::Index p = 0; p < m - 1; ++p) {
        for (Eigen::Index q = p + 1; q < m; ++q) {
            const double apq = a(p, q);
            if (apq == 0.0) continue;
            const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            const double tau = s / (1.0 + c);
            const double h = t * apq;
            a(p, p) -= h;
            a(q, q) += h;
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            for (Eigen::Index k = 0; k < m; ++k) {
                if (k == p || k == q) continue;
                const double akp = a(k, p);
                const double akq = a(k, q);
                a(k, p) = akp - s * (akq + tau * akp);
                a(p, k) = a(k, p);
                a(k, q) = akq + s * (akp - tau * akq);
                a(q, k) = a(k, q);
            }
            if (v) {
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double vkp = (*v)(k, p);
                    const double vkq = (*v)(k, q);
                    (*v)(k, p) = vkp - s * (vkq + tau * vkp);
                    (*v)(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
    double off = 0.0;
    for (Eigen::Index p = 0; p < m - 1; ++p)
        for (Eigen::Index q = p + 1; q < m; ++q) off += a(p, q) * a(p, q);
    return off;
}

template <class Matrix>
void jacobi_iterate(Matrix& a, Eigen::MatrixXd* v) {
    const double scale = std::max(1e-300, a.cwiseAbs().maxCoeff());
    const double tol = (1e-15 * scale) * (1e-15 * scale) * double(a.rows());
    for (int sweep = 0; sweep < 64; ++sweep) {
        if (jacobi_sweep(a, v) <= tol) return;
    }
    throw NumericError("jacobi eigen iteration did not converge");
}

} // namespace

Vec sym_eigenvalues(Mat a) {
    const Eigen::Index m = a.rows();
    Vec out(m);
    if (m == 1) {
        out(0) = a(0, 0);
        return out;
    }
    if (m == 2) {
        const double mean = 0.5 * (a(0, 0) + a(1, 1));
        const double r = std::hypot(0.5 * (a(0, 0) - a(1, 1)), a(0, 1));
        out(0) = mean - r;
        out(1) = mean + r;
        return out;
    }
    jacobi_iterate(a, nullptr);
    for (Eigen::Index i = 0; i < m; ++i) out(i) = a(i, i);
    std::sort(out.data(), out.data() + m);
    return out;
}

void sym_eigen_full(Eigen::MatrixXd a, Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
    const Eigen::Index m = a.rows();
    vectors = Eigen::MatrixXd::Identity(m, m);
    jacobi_iterate(a, &vectors);
    values.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) values(i) = a(i, i);
    // Sort ascending, carrying eigenvectors along.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });
    Eigen::VectorXd sv(m);
    Eigen::MatrixXd svec(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        sv(i) = values(order[static_cast<std::size_t>(i)]);
        svec.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
    }
    values = std::move(sv);
    vectors = std::move(svec);
}

Gauss1D gauss_gegenbauer(int m, double alpha) {
    if (m < 1) throw PreconditionError("gauss rule needs at least one node");
    // Monic Jacobi recurrence for the weight (1-u^2)^alpha: all a_k = 0,
    //   b_k = k (k + 2 alpha) / ((2k + 2 alpha + 1)(2k + 2 alpha - 1)),
    // total mass mu0 = sqrt(pi) Gamma(alpha+1) / Gamma(alpha+3/2).
    const double mu0 =
        std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma(alpha + 1.0) -
                 std::lgamma(alpha + 1.5));
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
        const double kk = static_cast<double>(k);
        const double beta = kk * (kk + 2.0 * alpha) /
                            ((2.0 * kk + 2.0 * alpha + 1.0) * (2.0 * kk + 2.0 * alpha - 1.0));
        jac(k, k - 1) = jac(k - 1, k) = std::sqrt(beta);
    }
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    sym_eigen_full(jac, values, vectors);

    Gauss1D rule;
    rule.nodes.resize(static_cast<std::size_t>(m));
    rule.weights.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = values(i);
        const double v0 = vectors(0, i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    // The weight is even, so the exact rule is symmetric about 0; enforce
    // that exactly so odd moments cancel to rounding, not to iteration
    // accuracy.
    for (int i = 0, j = m - 1; i < j; ++i, --j) {
        const double u = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] -
                                rule.nodes[static_cast<std::size_t>(i)]);
        rule.nodes[static_cast<std::size_t>(i)] = -u;
        rule.nodes[static_cast<std::size_t>(j)] = u;
        const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                                rule.weights[static_cast<std::size_t>(j)]);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(j)] = w;
    }
    if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
    return rule;
}

double nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                   const Eigen::VectorXd& x0, double step, double xtol,
                   int max_iter, Eigen::VectorXd* xmin) {
    const Eigen::Index d = x0.size();
    const std::size_t np = static_cast<std::size_t>(d) + 1;
    std::vector<Eigen::VectorXd> pts(np, x0);
    std::vector<double> val(np);
    for (std::size_t i = 1; i < np; ++i) pts[i](static_cast<Eigen::Index>(i) - 1) += step;
    for (std::size_t i = 0; i < np; ++i) val[i] = f(pts[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(np);
        for (std::size_t i = 0; i < np; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return val[a] < val[b] || (val[a] == val[b] && a < b);
        });
        std::vector<Eigen::VectorXd> p2(np);
        std::vector<double> v2(np);
        for (std::size_t i = 0; i < np; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = val[idx[i]];
        }
        pts = std::move(p2);
        val = std::move(v2);
    };

    order();
    for (int iter = 0; iter < max_iter; ++iter) {
        double diam = 0.0;
        for (std::size_t i = 1; i < np; ++i) diam = std::max(diam, (pts[i] - pts[0]).norm());
        if (diam < xtol) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
        for (std::size_t i = 0; i + 1 < np; ++i) centroid += pts[i];
        centroid /= static_cast<double>(np - 1);

        const Eigen::VectorXd xr = centroid + (centroid - pts[np - 1]);
        const double fr = f(xr);
        if (fr < val[0]) {
            const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[np - 1]);
            const double fe = f(xe);
            if (fe < fr) {
                pts[np - 1] = xe;
                val[np - 1] = fe;
            } else {
                pts[np - 1] = xr;
                val[np - 1] = fr;
            }
        } else if (fr < val[np - 2]) {
            pts[np - 1] = xr;
            val[np - 1] = fr;
        } else {
            const Eigen::VectorXd xc = centroid + 0.5 * (pts[np - 1] - centroid);
            const double fc = f(xc);
            if (fc < val[np - 1]) {
                pts[np - 1] = xc;
                val[np - 1] = fc;
            } else {
                for (std::size_t i = 1; i < np; ++i) {
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
                    val[i] = f(pts[i]);
                }
            }
        }
        order();
    }
    if (xmin) *xmin = pts[0];
    return val[0];
}

double horner(std::span<const double> coeffs, double t) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

double unit_ball_volume(int n) {
    if (n < 0) throw PreconditionError("unit_ball_volume: negative dimension");
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double sphere_surface_area(int n) {
    return static_cast<double>(n) * unit_ball_volume(n);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(r);
}

} // namespace steiner
