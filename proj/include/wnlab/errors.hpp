#pragma once

#include <stdexcept>
#include <string>

namespace wnlab {

// Invalid user-supplied parameters (bad grid, out-of-range tolerance, ...).
// The CLI maps these to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation could not be completed at the requested accuracy or ran
// into a numerical degeneracy. The CLI maps these to exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature/bisection did not reach the requested tolerance within its
// subdivision budget; carries the error estimate that was achieved.
struct accuracy_error : numeric_error {
    accuracy_error(const std::string& msg, double achieved_)
        : numeric_error(msg), achieved(achieved_) {}
    double achieved;
};

// Linear (y, p) propagation exceeded the magnitude cap. The caller is
// expected to switch to the log-stabilized representation.
struct overflow_signal : numeric_error {
    using numeric_error::numeric_error;
};

// Weyl-circle extrapolation: the circle radius at b_max exceeds the
// requested tolerance; carries the rigorous bound that was reached.
struct insufficient_horizon : numeric_error {
    insufficient_horizon(const std::string& msg, double bound_)
        : numeric_error(msg), bound(bound_) {}
    double bound;
};

// Decay-rate fit rejected (window too short, degenerate data).
struct fit_error : numeric_error {
    using numeric_error::numeric_error;
};

} // namespace wnlab
