#pragma once

#include <stdexcept>
#include <string>

namespace circumnav {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which of the three radii inequalities was violated.
enum class RadiiViolation {
    Ordering,       // r_d > r_a > r_s > 0
    Triangle,       // r_d < r_s + r_a
    GeometricMean,  // r_a^2 > r_d * r_s
};

/// One of the radii inequalities failed. Carries both sides of the violated
/// inequality so callers can print a useful diagnostic.
class RadiiError : public Error {
public:
    RadiiError(RadiiViolation which, std::string condition, double lhs, double rhs)
        : Error("radii geometry violated: " + condition + " (lhs=" + std::to_string(lhs) +
                ", rhs=" + std::to_string(rhs) + ")"),
          violation(which),
          condition(std::move(condition)),
          lhs(lhs),
          rhs(rhs) {}

    RadiiViolation violation;
    std::string condition;
    double lhs;
    double rhs;
};

/// The barrier half-width delta is outside the admissible interval (0, Delta].
class DeltaBoundError : public Error {
public:
    DeltaBoundError(double delta, double bound)
        : Error("delta = " + std::to_string(delta) + " exceeds admissible bound Delta = " +
                std::to_string(bound)),
          delta(delta),
          bound(bound) {}

    double delta;
    double bound;
};

/// eta reached or crossed the barrier delta at runtime. From an admissible
/// initial condition the theory rules this out, so it signals a bug or an
/// invalid start; it is never clamped away.
class BarrierBreach : public Error {
public:
    BarrierBreach(double eta, double delta, double t)
        : Error("barrier breach: eta = " + std::to_string(eta) + " >= delta = " +
                std::to_string(delta) + " at t = " + std::to_string(t)),
          eta(eta),
          delta(delta),
          time(t) {}

    double eta;
    double delta;
    double time;  // NaN when thrown outside a simulation
};

/// Precondition violation on a pure function (r < r_a for phi, zero range,
/// |rdot| > V, nonpositive step, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Initial condition rejected by the simulator (outside the admissible set,
/// or the excluded doomed start inside the auxiliary circle).
class InitialConditionError : public Error {
public:
    using Error::Error;
};

}  // namespace circumnav
