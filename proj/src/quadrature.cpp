#include "steiner/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace steiner {

int QuadratureRule::default_level(int dim) {
    switch (dim) {
        case 2:
        case 3: return 32;
        case 4:
        case 5: return 16;
        case 6: return 12;
        default: throw PreconditionError("quadrature: dimension must be in [2,6]");
    }
}

QuadratureRule QuadratureRule::build(int dim, int level) {
    if (dim < kMinDim || dim > kMaxDim)
        throw PreconditionError("quadrature: dimension must be in [2,6]");
    if (level < 2) throw PreconditionError("quadrature: level must be >= 2");

    QuadratureRule rule;
    rule.dim_ = dim;
    rule.level_ = level;

    // Azimuth: 2*level uniform angles. Build the second half as the exact
    // negation of the first so the rule is antipodally balanced to the bit.
    const int ma = 2 * level;
    std::vector<double> az_cos(static_cast<std::size_t>(ma));
    std::vector<double> az_sin(static_cast<std::size_t>(ma));
    const double az_weight = std::numbers::pi / static_cast<double>(level);
    for (int k = 0; k < level; ++k) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ma);
        az_cos[static_cast<std::size_t>(k)] = std::cos(phi);
        az_sin[static_cast<std::size_t>(k)] = std::sin(phi);
        az_cos[static_cast<std::size_t>(k + level)] = -az_cos[static_cast<std::size_t>(k)];
        az_sin[static_cast<std::size_t>(k + level)] = -az_sin[static_cast<std::size_t>(k)];
    }

    // Polar angle j (1-based) carries the surface-measure factor
    // sin^(dim-1-j) t dt, i.e. weight (1-u^2)^((dim-2-j)/2) in u = cos t.
    std::vector<Gauss1D> polar;
    for (int j = 1; j <= dim - 2; ++j)
        polar.push_back(gauss_gegenbauer(level, 0.5 * static_cast<double>(dim - 2 - j)));

    std::size_t count = static_cast<std::size_t>(ma);
    for (int j = 0; j < dim - 2; ++j) count *= static_cast<std::size_t>(level);
    rule.nodes_.resize(count * static_cast<std::size_t>(dim));
    rule.weights_.resize(count);

    std::vector<int> idx(polar.size(), 0); // odometer over the polar rules
    std::size_t out = 0;
    for (;;) {
        // Shared prefix over the polar angles of this odometer state.
        Vec x(dim);
        double sin_product = 1.0;
        double wpolar = 1.0;
        for (std::size_t j = 0; j < polar.size(); ++j) {
            const double u = polar[j].nodes[static_cast<std::size_t>(idx[j])];
            x(static_cast<int>(j)) = sin_product * u;
            sin_product *= std::sqrt(1.0 - u * u);
            wpolar *= polar[j].weights[static_cast<std::size_t>(idx[j])];
        }
        for (int k = 0; k < ma; ++k) {
            x(dim - 2) = sin_product * az_cos[static_cast<std::size_t>(k)];
            x(dim - 1) = sin_product * az_sin[static_cast<std::size_t>(k)];
            for (int c = 0; c < dim; ++c)
                rule.nodes_[out * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)] = x(c);
            rule.weights_[out] = wpolar * az_weight;
            ++out;
        }
        // Advance the odometer; innermost polar angle spins fastest.
        std::size_t j = polar.size();
        while (j > 0) {
            --j;
            if (++idx[j] < level) break;
            idx[j] = 0;
            if (j == 0) {
                if (out != count) throw NumericError("quadrature: node count mismatch");
                return rule;
            }
        }
        if (polar.empty()) {
            if (out != count) throw NumericError("quadrature: node count mismatch");
            return rule;
        }
    }
}

} // namespace steiner
