#include "steiner/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

using cdouble = std::complex<double>;

// Horner evaluation of p and p' at z (monic-normalized coefficients).
void eval_poly(std::span<const double> c, cdouble z, cdouble* p, cdouble* dp) {
    cdouble v = 0.0, d = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        d = d * z + v;
        v = v * z + c[i];
    }
    *p = v;
    *dp = d;
}

// A few Newton steps tighten the companion eigenvalues; for simple roots
// this reaches residuals near machine precision. Steps that do not improve
// the residual are rejected, so multiple roots cannot be made worse.
cdouble polish(std::span<const double> c, cdouble z) {
    cdouble p, dp;
    eval_poly(c, z, &p, &dp);
    double best = std::abs(p);
    for (int it = 0; it < 20 && best > 0.0; ++it) {
        if (std::abs(dp) == 0.0) break;
        const cdouble step = p / dp;
        const cdouble zn = z - step;
        cdouble pn, dpn;
        eval_poly(c, zn, &pn, &dpn);
        if (std::abs(pn) >= best) break;
        z = zn;
        p = pn;
        dp = dpn;
        best = std::abs(pn);
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

// Agglomerative clustering with residual validation. An m-fold root
// scatters the companion eigenvalues by about |r| eps^(1/m), so the
// candidate radius is sized for the worst case m = deg (a pair radius sized
// for m = 2 could never start merging a high-multiplicity cluster). A
// candidate merge is accepted only when the merged centroid evaluates to
// rounding noise: the midpoint of two distinct roots a distance d apart has
// |p| ~ (d/2)^2, orders above the noise floor, so distinct roots that merely
// fall inside the generous radius are kept apart.
//
// Geometry runs on the polished roots, but a multi-cluster's emitted
// centroid is the mean of its members' unpolished eigenvalues: the raw
// cluster is symmetric around the true root (its mean inherits the
// near-exact trace), while Newton polish drags each member along its own
// path and would bias the mean.
void cluster_roots(std::vector<cdouble> roots, std::vector<cdouble> raw, double cluster_tol,
                   std::span<const double> monic, std::vector<cdouble>* centers,
                   std::vector<int>* sizes) {
    constexpr double kEps = 1e-14;
    const double deg = static_cast<double>(roots.size());
    const auto radius = [&](const cdouble& center) {
        const double scatter = 8.0 * (1.0 + std::abs(center)) * std::pow(kEps, 1.0 / deg);
        return std::max(cluster_tol, scatter);
    };
    const auto residual_ok = [&](const cdouble& center) {
        cdouble p, dp;
        eval_poly(monic, center, &p, &dp);
        double scale = 0.0, pw = 1.0;
        for (const double c : monic) {
            scale += std::abs(c) * pw;
            pw *= std::abs(center);
        }
        return std::abs(p) <=
               512.0 * deg * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
    };

    // Start with singleton clusters, then repeatedly merge the closest pair
    // that fits the radius and passes the residual test.
    std::vector<cdouble> cen = std::move(roots);
    std::vector<cdouble> raw_sum = std::move(raw);
    std::vector<int> cnt(cen.size(), 1);
    for (;;) {
        double best_gap = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        bool found = false;
        for (std::size_t i = 0; i < cen.size(); ++i) {
            for (std::size_t j = i + 1; j < cen.size(); ++j) {
                const int m = cnt[i] + cnt[j];
                const cdouble merged =
                    (cen[i] * static_cast<double>(cnt[i]) + cen[j] * static_cast<double>(cnt[j])) /
                    static_cast<double>(m);
                const double gap = std::abs(cen[i] - cen[j]);
                if (gap <= radius(merged) && gap < best_gap && residual_ok(merged)) {
                    best_gap = gap;
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        const int m = cnt[bi] + cnt[bj];
        cen[bi] = (cen[bi] * static_cast<double>(cnt[bi]) + cen[bj] * static_cast<double>(cnt[bj])) /
                  static_cast<double>(m);
        raw_sum[bi] += raw_sum[bj];
        cnt[bi] = m;
        cen.erase(cen.begin() + static_cast<std::ptrdiff_t>(bj));
        raw_sum.erase(raw_sum.begin() + static_cast<std::ptrdiff_t>(bj));
        cnt.erase(cnt.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    for (std::size_t i = 0; i < cen.size(); ++i)
        if (cnt[i] >= 2) cen[i] = raw_sum[i] / static_cast<double>(cnt[i]);
    *centers = std::move(cen);
    *sizes = std::move(cnt);
}

} // namespace

RootSet polynomial_roots(std::span<const double> coeffs, double cluster_tol) {
    if (coeffs.size() < 2) throw PreconditionError("roots: polynomial degree must be >= 1");
    const int deg = static_cast<int>(coeffs.size()) - 1;
    const double lead = coeffs[static_cast<std::size_t>(deg)];
    if (lead == 0.0 || !std::isfinite(lead))
        throw PreconditionError("roots: leading coefficient must be nonzero and finite");

    std::vector<double> monic(coeffs.begin(), coeffs.end());
    for (double& c : monic) c /= lead;

    // Companion matrix of the monic polynomial; its eigenvalues are the roots.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -monic[static_cast<std::size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("roots: companion eigenvalue iteration failed");

    std::vector<cdouble> raw(static_cast<std::size_t>(deg));
    std::vector<cdouble> polished(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        raw[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        polished[static_cast<std::size_t>(i)] = polish(monic, solver.eigenvalues()(i));
    }

    std::vector<cdouble> centers;
    std::vector<int> sizes;
    cluster_roots(std::move(polished), std::move(raw), cluster_tol, monic, &centers, &sizes);

    // Snap near-real centroids onto the axis, then pair the rest into exact
    // conjugates (real coefficients force conjugate symmetry; rounding may
    // have broken it slightly).
    constexpr double kEps = 1e-14;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double snap = std::max(cluster_tol, 8.0 * (1.0 + std::abs(centers[i])) *
                                                      std::pow(kEps, 1.0 / sizes[i]));
        if (std::abs(centers[i].imag()) <= snap) centers[i] = cdouble(centers[i].real(), 0.0);
    }
    std::vector<bool> used(centers.size(), false);
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (used[i] || centers[i].imag() == 0.0) continue;
        std::size_t best = i;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            if (used[j] || centers[j].imag() == 0.0) continue;
            const double gap = std::abs(centers[j] - std::conj(centers[i]));
            if (gap < best_gap) {
                best_gap = gap;
                best = j;
            }
        }
        if (best != i) {
            const cdouble avg = 0.5 * (centers[i] + std::conj(centers[best]));
            centers[i] = avg;
            centers[best] = std::conj(avg);
            used[i] = used[best] = true;
        }
    }

    // Canonical emission order: ascending real part, then imaginary part.
    std::vector<std::size_t> order(centers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (centers[a].real() != centers[b].real()) return centers[a].real() < centers[b].real();
        return centers[a].imag() < centers[b].imag();
    });

    RootSet out;
    out.cluster_tol = cluster_tol;
    for (std::size_t oi : order)
        for (int k = 0; k < sizes[oi]; ++k) out.roots.push_back(centers[oi]);
    for (const cdouble& z : out.roots) out.real_parts.push_back(z.real());
    std::sort(out.real_parts.begin(), out.real_parts.end());
    return out;
}

StabilityReport hurwitz_stable(std::span<const double> coeffs) {
    if (coeffs.size() < 2) throw PreconditionError("hurwitz: polynomial degree must be >= 1");
    const int deg = static_cast<int>(coeffs.size()) - 1;
    const double lead = coeffs[static_cast<std::size_t>(deg)];
    if (lead == 0.0 || !std::isfinite(lead))
        throw PreconditionError("hurwitz: leading coefficient must be nonzero and finite");

    // Routh array rows, highest power first, leading coefficient
    // normalized positive.
    const double sign = lead > 0.0 ? 1.0 : -1.0;
    std::vector<double> r0, r1;
    for (int k = deg; k >= 0; k -= 2) r0.push_back(sign * coeffs[static_cast<std::size_t>(k)]);
    for (int k = deg - 1; k >= 0; k -= 2) r1.push_back(sign * coeffs[static_cast<std::size_t>(k)]);

    StabilityReport rep;
    rep.margin = r0[0];
    constexpr double kPivotTol = 1e-12;
    while (!r1.empty()) {
        rep.margin = std::min(rep.margin, r1[0]);
        if (std::abs(r1[0]) <= kPivotTol) {
            // A vanishing pivot means roots on or straddling the imaginary
            // axis; the plain array cannot decide, so report marginal.
            rep.marginal = true;
            rep.stable = false;
            return rep;
        }
        std::vector<double> next;
        const std::size_t len = (r0.size() >= 2) ? r0.size() - 1 : 0;
        for (std::size_t i = 0; i < len; ++i) {
            const double a = r0[i + 1];
            const double b = (i + 1 < r1.size()) ? r1[i + 1] : 0.0;
            next.push_back(a - r0[0] / r1[0] * b);
        }
        r0 = std::move(r1);
        r1 = std::move(next);
    }
    if (rep.margin > kPivotTol) {
        rep.stable = true;
    } else if (rep.margin >= -kPivotTol) {
        rep.marginal = true; // sits on the boundary of the stability region
    }
    return rep;
}

} // namespace steiner
