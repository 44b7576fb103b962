#pragma once

#include <array>
#include <cmath>

#include "nsbox/behavior.hpp"

namespace nsbox {

/// Maximum Hardy success probability reachable by quantum boxes, (5*sqrt(5)-11)/2.
inline double hardy_quantum_bound() {
    static const double v = (5.0 * std::sqrt(5.0) - 11.0) / 2.0;
    return v;
}

/// Hardy test outcome: success p(00|00) plus the three probabilities that a
/// Hardy box must drive to zero, p(00|01), p(00|10) and p(11|11).
struct HardyCertificate {
    double success = 0.0;
    std::array<double, 3> zero_residuals{};
    bool is_hardy = false;
};

/// A passing certificate (success > tol, residuals <= tol) witnesses
/// nonlocality of the behavior.
inline HardyCertificate hardy_test(const Behavior& b, double tol = 1e-9) {
    HardyCertificate cert;
    cert.success = b.at(0, 0, 0, 0);
    cert.zero_residuals = {b.at(0, 1, 0, 0), b.at(1, 0, 0, 0), b.at(1, 1, 1, 1)};
    cert.is_hardy = cert.success > tol && cert.zero_residuals[0] <= tol &&
                    cert.zero_residuals[1] <= tol && cert.zero_residuals[2] <= tol;
    return cert;
}

}  // namespace nsbox
