#pragma once

// Independent oracles used to pin expected values in tests: finite
// differences for derivatives, composite Simpson for the ellipse perimeter,
// naive left-to-right summation, polynomial assembly from known roots, and
// brute-force reference solvers for the LP and enclosing-ball modules.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "steiner/body.hpp"

namespace oracle {

using steiner::ConvexBody;
using steiner::Mat;
using steiner::Vec;

inline Vec fd_gradient(const ConvexBody& body, const Vec& x, double h = 1e-6) {
    const int n = static_cast<int>(x.size());
    Vec g(n);
    for (int i = 0; i < n; ++i) {
        Vec xp = x, xm = x;
        xp(i) += h;
        xm(i) -= h;
        g(i) = (body.support(xp) - body.support(xm)) / (2.0 * h);
    }
    return g;
}

inline Mat fd_hessian(const ConvexBody& body, const Vec& x, double h = 1e-5) {
    const int n = static_cast<int>(x.size());
    Mat hess(n, n);
    const double p0 = body.support(x);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double v;
            if (i == j) {
                Vec xp = x, xm = x;
                xp(i) += h;
                xm(i) -= h;
                v = (body.support(xp) - 2.0 * p0 + body.support(xm)) / (h * h);
            } else {
                Vec xpp = x, xpm = x, xmp = x, xmm = x;
                xpp(i) += h;
                xpp(j) += h;
                xpm(i) += h;
                xpm(j) -= h;
                xmp(i) -= h;
                xmp(j) += h;
                xmm(i) -= h;
                xmm(j) -= h;
                v = (body.support(xpp) - body.support(xpm) - body.support(xmp) +
                     body.support(xmm)) /
                    (4.0 * h * h);
            }
            hess(i, j) = v;
            hess(j, i) = v;
        }
    }
    return hess;
}

// Ellipse arc length by composite Simpson; panel count high enough that the
// error is far below every tolerance used against it.
inline double ellipse_perimeter(double a, double b) {
    const auto f = [&](double t) {
        const double s = std::sin(t), c = std::cos(t);
        return std::sqrt(a * a * s * s + b * b * c * c);
    };
    const int panels = 1 << 15;
    const double h = 2.0 * std::numbers::pi / panels;
    double sum = f(0.0) + f(2.0 * std::numbers::pi);
    for (int i = 1; i < panels; ++i) sum += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

inline double naive_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

// Coefficients (ascending) of prod (t - r_i) for real or conjugate-closed
// root lists; imaginary residue is dropped at the end.
inline std::vector<double> poly_from_roots(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
    return out;
}

// Reference LP solver: enumerate all bases (subsets of d constraints,
// including box faces), solve, keep the best feasible vertex. Exponential;
// only for small test problems.
struct RefLp {
    std::vector<Eigen::VectorXd> a;
    std::vector<double> b;
    Eigen::VectorXd c;
    Eigen::VectorXd lo, hi;
};

inline std::optional<Eigen::VectorXd> brute_force_lp(const RefLp& lp) {
    const int d = static_cast<int>(lp.c.size());
    std::vector<Eigen::VectorXd> rows = lp.a;
    std::vector<double> rhs = lp.b;
    for (int j = 0; j < d; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
        e(j) = 1.0;
        rows.push_back(e);
        rhs.push_back(lp.hi(j));
        rows.push_back(-e);
        rhs.push_back(-lp.lo(j));
    }
    const int m = static_cast<int>(rows.size());
    const auto feasible = [&](const Eigen::VectorXd& z) {
        for (int i = 0; i < m; ++i)
            if (rows[static_cast<std::size_t>(i)].dot(z) > rhs[static_cast<std::size_t>(i)] + 1e-7)
                return false;
        return true;
    };

    std::optional<Eigen::VectorXd> best;
    std::vector<int> pick(static_cast<std::size_t>(d));
    const auto consider = [&](const Eigen::VectorXd& z) {
        if (!feasible(z)) return;
        if (!best || lp.c.dot(z) > lp.c.dot(*best)) best = z;
    };
    // Iterate over all d-subsets of the constraint set.
    std::vector<int> idx(static_cast<std::size_t>(d));
    const std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == d) {
            Eigen::MatrixXd mat(d, d);
            Eigen::VectorXd v(d);
            for (int i = 0; i < d; ++i) {
                mat.row(i) = rows[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                v(i) = rhs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            }
            const Eigen::FullPivLU<Eigen::MatrixXd> lu(mat);
            if (lu.rank() < d) return;
            consider(lu.solve(v));
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[static_cast<std::size_t>(k)] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return best;
}

// Reference enclosing ball: try every support subset of size <= dim+1, take
// the smallest circumball that contains all points. Exponential; test-only.
struct RefBall {
    Vec center;
    double radius;
};

inline RefBall circumball_of(const std::vector<Vec>& pts, const std::vector<int>& subset) {
    const int dim = static_cast<int>(pts[0].size());
    const Vec& q0 = pts[static_cast<std::size_t>(subset[0])];
    const int m = static_cast<int>(subset.size()) - 1;
    if (m == 0) return {q0, 0.0};
    Eigen::MatrixXd v(dim, m);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) {
        const Vec e = pts[static_cast<std::size_t>(subset[static_cast<std::size_t>(i) + 1])] - q0;
        v.col(i) = e;
        rhs(i) = e.squaredNorm();
    }
    const Eigen::MatrixXd gram = 2.0 * v.transpose() * v;
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    if (lu.rank() < m) return {q0, std::numeric_limits<double>::infinity()};
    const Eigen::VectorXd y = lu.solve(rhs);
    const Eigen::VectorXd off = v * y;
    RefBall ball{q0, off.norm()};
    for (int k = 0; k < dim; ++k) ball.center(k) += off(k);
    return ball;
}

inline RefBall brute_force_meb(const std::vector<Vec>& pts) {
    const int dim = static_cast<int>(pts[0].size());
    const int n = static_cast<int>(pts.size());
    RefBall best{pts[0], std::numeric_limits<double>::infinity()};
    std::vector<int> subset;
    const std::function<void(int)> rec = [&](int start) {
        if (!subset.empty()) {
            const RefBall ball = circumball_of(pts, subset);
            if (ball.radius < best.radius) {
                bool contains = true;
                for (const Vec& p : pts) {
                    if ((p - ball.center).norm() > ball.radius + 1e-9) {
                        contains = false;
                        break;
                    }
                }
                if (contains) best = ball;
            }
        }
        if (static_cast<int>(subset.size()) == dim + 1) return;
        for (int i = start; i < n; ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(0);
    return best;
}

} // namespace oracle
