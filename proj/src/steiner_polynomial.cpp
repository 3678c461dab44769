#include "steiner/steiner_polynomial.hpp"

#include <cmath>
#include <limits>

#include "steiner/numeric.hpp"

namespace steiner {

double SteinerPolynomial::evaluate(double t) const { return horner(coeffs, t); }

double elementary_symmetric_normalized(std::span<const double> values, int j) {
    const int m = static_cast<int>(values.size());
    if (j < 0 || j > m) throw PreconditionError("elementary symmetric: index out of range");
    // Ascending recurrence over e_0..e_j; every intermediate is a sum of
    // products of nonnegative radii, so there is no cancellation.
    std::vector<double> e(static_cast<std::size_t>(j) + 1, 0.0);
    e[0] = 1.0;
    for (int k = 0; k < m; ++k) {
        const double v = values[static_cast<std::size_t>(k)];
        for (int i = std::min(j, k + 1); i >= 1; --i)
            e[static_cast<std::size_t>(i)] += v * e[static_cast<std::size_t>(i) - 1];
    }
    return e[static_cast<std::size_t>(j)] / binomial(m, j);
}

namespace {

constexpr double kTiny = 1e-300;

// Per-node work shared by every mixed volume: one restricted Hessian, one
// symmetric eigensolve, the normalized symmetric functions s_0..s_{n-1} of
// the principal radii, and the support value.
struct NodeKernel {
    const ConvexBody& body;
    int n;
    double binom[kMaxDim]; // C(n-1, j) for j = 0..n-1

    explicit NodeKernel(const ConvexBody& b) : body(b), n(b.dimension()) {
        for (int j = 0; j < n; ++j) binom[j] = binomial(n - 1, j);
    }

    void operator()(const Vec& w, double* s, double* support) const {
        const PrincipalRadii radii = body.principal_radii(Direction(w));
        double e[kMaxDim] = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
        for (int k = 0; k < n - 1; ++k) {
            const double v = radii.values()(k);
            for (int i = std::min(n - 1, k + 1); i >= 1; --i) e[i] += v * e[i - 1];
        }
        for (int j = 0; j < n; ++j) s[j] = e[j] / binom[j];
        *support = body.support(w);
    }
};

double relative_gap(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), kTiny});
}

} // namespace

MixedVolumeResult mixed_volume(const ConvexBody& body, int i, const QuadratureRule& rule) {
    const int n = body.dimension();
    if (rule.dimension() != n) throw PreconditionError("mixed_volume: rule dimension mismatch");
    if (i < 0 || i > n) throw PreconditionError("mixed_volume: index out of range");

    const NodeKernel kernel(body);
    const bool have_curvature = i >= 1;     // integrates s_{n-i}
    const bool have_support = i <= n - 1;   // integrates p * s_{n-i-1}

    double sums[2] = {0.0, 0.0};
    rule.integrate_many(
        [&](std::size_t, const Vec& w, double* cols) {
            double s[kMaxDim];
            double p;
            kernel(w, s, &p);
            int c = 0;
            if (have_curvature) cols[c++] = s[n - i];
            if (have_support) cols[c++] = p * s[n - i - 1];
        },
        std::span<double>(sums, static_cast<std::size_t>(have_curvature) +
                                    static_cast<std::size_t>(have_support)));

    const double inv_n = 1.0 / static_cast<double>(n);
    MixedVolumeResult out{};
    if (have_curvature && have_support) {
        const double va = sums[0] * inv_n;
        const double vb = sums[1] * inv_n;
        out.value = vb;
        out.discrepancy = relative_gap(va, vb);
    } else {
        out.value = sums[0] * inv_n;
        out.discrepancy = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

std::pair<SteinerPolynomial, MixedVolumeTable> steiner_polynomial(const ConvexBody& body,
                                                                  const QuadratureRule& rule) {
    const int n = body.dimension();
    if (rule.dimension() != n) throw PreconditionError("steiner_polynomial: rule dimension mismatch");

    // Columns 0..n-1: s_j; columns n..2n-1: p * s_j. The single pass shares
    // the eigensolve across all coefficients.
    const NodeKernel kernel(body);
    std::vector<double> sums(2 * static_cast<std::size_t>(n));
    rule.integrate_many(
        [&](std::size_t, const Vec& w, double* cols) {
            double s[kMaxDim];
            double p;
            kernel(w, s, &p);
            for (int j = 0; j < n; ++j) {
                cols[j] = s[j];
                cols[n + j] = p * s[j];
            }
        },
        std::span<double>(sums));

    const double inv_n = 1.0 / static_cast<double>(n);
    MixedVolumeTable table;
    table.dim = n;
    table.values.resize(static_cast<std::size_t>(n) + 1);
    table.discrepancy.assign(static_cast<std::size_t>(n) + 1,
                             std::numeric_limits<double>::quiet_NaN());
    for (int i = 0; i <= n; ++i) {
        const bool have_curvature = i >= 1;
        const bool have_support = i <= n - 1;
        const double va = have_curvature ? sums[static_cast<std::size_t>(n - i)] * inv_n : 0.0;
        const double vb =
            have_support ? sums[static_cast<std::size_t>(n + n - i - 1)] * inv_n : 0.0;
        if (have_support)
            table.values[static_cast<std::size_t>(i)] = vb;
        else
            table.values[static_cast<std::size_t>(i)] = va;
        if (have_curvature && have_support)
            table.discrepancy[static_cast<std::size_t>(i)] = relative_gap(va, vb);
    }

    SteinerPolynomial poly;
    poly.dim = n;
    poly.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        poly.coeffs[static_cast<std::size_t>(i)] =
            binomial(n, i) * table.values[static_cast<std::size_t>(i)];
    return {std::move(poly), std::move(table)};
}

bool MixedVolumeTable::log_concave(double rel_tol, double* worst_slack) const {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 1; i < dim; ++i) {
        const double vi = values[static_cast<std::size_t>(i)];
        const double slack =
            (vi * vi - values[static_cast<std::size_t>(i) - 1] * values[static_cast<std::size_t>(i) + 1]) /
            std::max(vi * vi, kTiny);
        worst = std::min(worst, slack);
    }
    if (worst_slack) *worst_slack = worst;
    return worst >= -rel_tol;
}

SteinerPolynomial shifted(const SteinerPolynomial& p, double s) {
    const int n = static_cast<int>(p.coeffs.size()) - 1;
    SteinerPolynomial out;
    out.dim = p.dim;
    out.coeffs.assign(p.coeffs.size(), 0.0);
    // p(t+s) = sum_i c_i (t+s)^i expanded by the binomial theorem.
    for (int i = 0; i <= n; ++i) {
        double pw = 1.0;
        for (int k = i; k >= 0; --k) {
            out.coeffs[static_cast<std::size_t>(k)] +=
                p.coeffs[static_cast<std::size_t>(i)] * binomial(i, k) * pw;
            pw *= s;
        }
    }
    return out;
}

SteinerPolynomial reflected(const SteinerPolynomial& p) {
    const int n = static_cast<int>(p.coeffs.size()) - 1;
    SteinerPolynomial out;
    out.dim = p.dim;
    out.coeffs.resize(p.coeffs.size());
    for (int i = 0; i <= n; ++i) {
        const double sign = ((n + i) % 2 == 0) ? 1.0 : -1.0;
        out.coeffs[static_cast<std::size_t>(i)] = sign * p.coeffs[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace steiner
