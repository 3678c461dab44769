#include "steiner/linprog.hpp"

#include <cmath>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

constexpr double kFeasTol = 1e-9;

// Fisher-Yates with raw generator output: deterministic for a fixed seed
// independent of standard-library distribution internals.
void shuffle_indices(std::vector<std::size_t>& idx, std::mt19937& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(idx[i - 1], idx[j]);
    }
}

std::optional<Eigen::VectorXd> seidel(const std::vector<Eigen::VectorXd>& a,
                                      const std::vector<double>& b, const Eigen::VectorXd& c,
                                      const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                      std::mt19937& rng) {
    const Eigen::Index d = c.size();
    if (d == 1) {
        double l = lo(0), h = hi(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double ai = a[i](0);
            const double scale = 1.0 + std::abs(b[i]);
            if (ai > kFeasTol) {
                h = std::min(h, b[i] / ai);
            } else if (ai < -kFeasTol) {
                l = std::max(l, b[i] / ai);
            } else if (b[i] < -kFeasTol * scale) {
                return std::nullopt; // 0 <= negative: empty
            }
        }
        if (l > h + kFeasTol) return std::nullopt;
        Eigen::VectorXd z(1);
        z(0) = (c(0) >= 0.0) ? std::max(l, h) : std::min(l, h);
        return z;
    }

    // Start at the box corner optimal without inequality constraints.
    Eigen::VectorXd z(d);
    for (Eigen::Index j = 0; j < d; ++j)
        z(j) = c(j) > 0.0 ? hi(j) : (c(j) < 0.0 ? lo(j) : 0.5 * (lo(j) + hi(j)));

    std::vector<std::size_t> order(a.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    shuffle_indices(order, rng);

    std::vector<std::size_t> active; // constraints already satisfied/enforced
    active.reserve(a.size());
    for (const std::size_t k : order) {
        const double scale = 1.0 + std::abs(b[k]);
        if (a[k].dot(z) <= b[k] + kFeasTol * scale) {
            active.push_back(k);
            continue;
        }
        // The optimum of the prefix moved: it now lies on this hyperplane.
        // Substitute the hyperplane's largest-coefficient variable out and
        // recurse in dimension d-1 over the active prefix plus the two box
        // faces of the eliminated variable.
        Eigen::Index piv = 0;
        a[k].cwiseAbs().maxCoeff(&piv);
        const double apiv = a[k](piv);
        if (std::abs(apiv) < 1e-13) {
            if (b[k] < -kFeasTol * scale) return std::nullopt; // 0 <= negative
            active.push_back(k);
            continue;
        }

        auto drop = [piv, d](const Eigen::VectorXd& v) {
            Eigen::VectorXd r(d - 1);
            Eigen::Index o = 0;
            for (Eigen::Index j = 0; j < d; ++j)
                if (j != piv) r(o++) = v(j);
            return r;
        };
        auto reduce_row = [&](const Eigen::VectorXd& ai, double bi, std::vector<Eigen::VectorXd>* ra,
                              std::vector<double>* rb) {
            const double alpha = ai(piv) / apiv;
            ra->push_back(drop(Eigen::VectorXd(ai - alpha * a[k])));
            rb->push_back(bi - alpha * b[k]);
        };

        std::vector<Eigen::VectorXd> ra;
        std::vector<double> rb;
        ra.reserve(active.size() + 2);
        rb.reserve(active.size() + 2);
        for (const std::size_t i : active) reduce_row(a[i], b[i], &ra, &rb);
        Eigen::VectorXd box = Eigen::VectorXd::Zero(d);
        box(piv) = 1.0;
        reduce_row(box, hi(piv), &ra, &rb);
        box(piv) = -1.0;
        reduce_row(box, -lo(piv), &ra, &rb);

        const Eigen::VectorXd rc = drop(Eigen::VectorXd(c - (c(piv) / apiv) * a[k]));
        const auto sub = seidel(ra, rb, rc, drop(lo), drop(hi), rng);
        if (!sub) return std::nullopt;

        Eigen::Index o = 0;
        for (Eigen::Index j = 0; j < d; ++j)
            if (j != piv) z(j) = (*sub)(o++);
        double dot = 0.0;
        for (Eigen::Index j = 0; j < d; ++j)
            if (j != piv) dot += a[k](j) * z(j);
        z(piv) = (b[k] - dot) / apiv;
        active.push_back(k);
    }
    return z;
}

} // namespace

std::optional<Eigen::VectorXd> solve_lp(const LpProblem& lp, std::mt19937& rng) {
    const Eigen::Index d = lp.c.size();
    if (d < 1) throw PreconditionError("lp: needs at least one variable");
    if (lp.lo.size() != d || lp.hi.size() != d)
        throw PreconditionError("lp: box bounds must match the variable count");
    for (Eigen::Index j = 0; j < d; ++j) {
        if (!(lp.lo(j) <= lp.hi(j)) || !std::isfinite(lp.lo(j)) || !std::isfinite(lp.hi(j)))
            throw PreconditionError("lp: box bounds must be finite and ordered");
    }
    if (lp.a.size() != lp.b.size()) throw PreconditionError("lp: constraint arrays disagree");
    for (const auto& row : lp.a)
        if (row.size() != d) throw PreconditionError("lp: constraint dimension mismatch");
    return seidel(lp.a, lp.b, lp.c, lp.lo, lp.hi, rng);
}

} // namespace steiner
