#include "circumnav/params.hpp"

#include <cmath>

namespace circumnav {

RadiiTriple validate_radii(double r_d, double r_a, double r_s) {
    if (!std::isfinite(r_d) || !std::isfinite(r_a) || !std::isfinite(r_s)) {
        throw RadiiError(RadiiViolation::Ordering, "radii must be finite", r_d, r_a);
    }
    if (!(r_s > 0.0)) {
        throw RadiiError(RadiiViolation::Ordering, "r_s > 0", r_s, 0.0);
    }
    if (!(r_a > r_s)) {
        throw RadiiError(RadiiViolation::Ordering, "r_a > r_s", r_a, r_s);
    }
    if (!(r_d > r_a)) {
        throw RadiiError(RadiiViolation::Ordering, "r_d > r_a", r_d, r_a);
    }
    if (!(r_a * r_a > r_d * r_s)) {
        throw RadiiError(RadiiViolation::GeometricMean, "r_a^2 > r_d*r_s", r_a * r_a, r_d * r_s);
    }
    if (!(r_d < r_s + r_a)) {
        throw RadiiError(RadiiViolation::Triangle, "r_d < r_s + r_a", r_d, r_s + r_a);
    }
    return RadiiTriple{r_d, r_a, r_s};
}

double compute_gain_k(const RadiiTriple& radii) {
    return 1.0 / std::sqrt(radii.r_d * radii.r_d - radii.r_a * radii.r_a);
}

double compute_beta(const RadiiTriple& radii) {
    return std::sqrt(radii.r_d * radii.r_d - radii.r_a * radii.r_a) / radii.r_a;
}

double compute_delta_bound(const RadiiTriple& radii) {
    const double beta = compute_beta(radii);
    return std::atan(beta) / beta + std::log(radii.r_d / radii.r_a) - radii.r_s / radii.r_a;
}

double min_safe_bearing(const RadiiTriple& radii) {
    return std::asin(radii.r_s / radii.r_a);
}

double kappa_threshold(double k, double v, double delta, double w0) {
    if (!(k > 0.0) || !(v > 0.0) || !(delta > 0.0) || !(w0 >= 0.0)) {
        throw DomainError("kappa_threshold: k, V, delta must be positive and W0 >= 0");
    }
    return k * v * delta * delta * std::exp(-2.0 * w0);
}

DesignParams make_design_params(const RadiiTriple& radii, double v,
                                std::optional<double> delta, double kappa) {
    if (!(v > 0.0)) {
        throw DomainError("speed V must be positive");
    }
    if (!(kappa > 0.0)) {
        throw DomainError("gain kappa must be positive");
    }
    const double bound = compute_delta_bound(radii);
    const double d = delta.value_or(0.9 * bound);
    if (!(d > 0.0) || d > bound) {
        throw DeltaBoundError(d, bound);
    }
    return DesignParams{radii, v, compute_gain_k(radii), compute_beta(radii), d, kappa};
}

}  // namespace circumnav
