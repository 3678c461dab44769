#include "steiner/enclosing_ball.hpp"

#include <cmath>
#include <list>
#include <vector>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

// Smallest ball with all support points on its boundary: center = q0 + V y
// where V collects the edge vectors q_i - q0 and (2 V^T V) y = |q_i - q0|^2.
// Support sets come from Welzl's recursion, so they are affinely
// independent up to rounding; solve with full pivoting as a backstop.
EnclosingBall circumball(const std::vector<const Vec*>& support, int dim) {
    EnclosingBall ball;
    ball.support_size = static_cast<int>(support.size());
    if (support.empty()) {
        ball.center = Vec::Zero(dim);
        ball.radius = -1.0; // contains nothing
        return ball;
    }
    const Vec& q0 = *support[0];
    const int m = static_cast<int>(support.size()) - 1;
    if (m == 0) {
        ball.center = q0;
        ball.radius = 0.0;
        return ball;
    }
    Eigen::MatrixXd v(dim, m);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) {
        const Vec e = *support[static_cast<std::size_t>(i) + 1] - q0;
        v.col(i) = e;
        rhs(i) = e.squaredNorm();
    }
    const Eigen::MatrixXd gram = 2.0 * v.transpose() * v;
    const Eigen::VectorXd y = gram.fullPivLu().solve(rhs);
    const Eigen::VectorXd offset = v * y;
    ball.center = q0;
    for (int k = 0; k < dim; ++k) ball.center(k) += offset(k);
    ball.radius = offset.norm();
    return ball;
}

struct WelzlState {
    std::list<std::size_t> order;
    std::span<const Vec> points;
    std::vector<const Vec*> support;
    int dim;

    EnclosingBall run(std::list<std::size_t>::iterator end) {
        EnclosingBall ball = circumball(support, dim);
        if (static_cast<int>(support.size()) == dim + 1) return ball;
        for (auto it = order.begin(); it != end;) {
            auto cur = it++;
            const Vec& p = points[*cur];
            const double excess = (p - ball.center).norm() - ball.radius;
            if (excess > 1e-12 * (1.0 + ball.radius)) {
                support.push_back(&p);
                ball = run(cur);
                support.pop_back();
                // Move-to-front: points that forced a rebuild are likely to
                // do so again, so test them early next time.
                order.splice(order.begin(), order, cur);
            }
        }
        return ball;
    }
};

} // namespace

EnclosingBall min_enclosing_ball(std::span<const Vec> points) {
    if (points.empty()) throw PreconditionError("enclosing ball: no points");
    const int dim = static_cast<int>(points.front().size());
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw PreconditionError("enclosing ball: mixed dimensions");

    WelzlState state;
    state.points = points;
    state.dim = dim;
    for (std::size_t i = 0; i < points.size(); ++i) state.order.push_back(i);
    EnclosingBall ball = state.run(state.order.end());

    // The recursion guarantees containment up to rounding; widen to cover
    // the worst straggler so the result is a true enclosing ball.
    double worst = ball.radius;
    for (const Vec& p : points) worst = std::max(worst, (p - ball.center).norm());
    ball.radius = worst;
    return ball;
}

} // namespace steiner
