#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nsbox/behavior.hpp"
#include "nsbox/hardy.hpp"
#include "nsbox/relabel.hpp"
#include "nsbox/wiring.hpp"

namespace nsbox::detect {

/// CHSH threshold above which isotropic boxes collapse communication
/// complexity: 4 sqrt(2/3).
inline double ntcc_threshold() {
    static const double v = 4.0 * std::sqrt(2.0 / 3.0);
    return v;
}

struct DetectionVerdict {
    std::string detector;
    double quantity = 0.0;
    double threshold = 0.0;
    bool positive = false;
    std::optional<long long> witness;  // copy count, distillation detector only
    std::optional<std::string> caveat;
};

/// Distill-then-test detector. Runs the OR-AND wiring in every relabeled
/// frame (relabel parents, wire n copies, undo the relabeling on the child)
/// for n = 1..max_copies and keeps the best genuine Hardy certificate. Any
/// certified success beyond the quantum Hardy bound proves the input box
/// admits no quantum realization, since wirings and relabelings preserve the
/// quantum set.
inline DetectionVerdict hardy_bound_detector(const Behavior& b, long long max_copies,
                                             double tol = 1e-9) {
    if (max_copies < 1) throw DomainError("hardy_bound_detector: max_copies must be >= 1");
    DetectionVerdict v;
    v.detector = "hardy_bound";
    v.threshold = hardy_quantum_bound();
    double best = 0.0;
    std::optional<long long> witness;
    for (int code = 0; code < 128; ++code) {
        const Relabeling r = Relabeling::decode(code);
        const Relabeling rinv = r.inverse();
        const Behavior framed = apply_relabeling(b, r);
        for (long long n = 1; n <= max_copies; ++n) {
            const Behavior child =
                apply_relabeling(wiring::wire_n_closed(framed, n), rinv);
            const HardyCertificate cert = hardy_test(child, tol);
            if (!cert.is_hardy) continue;
            best = std::max(best, cert.success);
            if (cert.success > v.threshold + 1e-9 && (!witness || n < *witness)) witness = n;
        }
    }
    v.quantity = best;
    v.positive = witness.has_value();
    v.witness = witness;
    return v;
}

/// Canonicalized CHSH value against the communication-complexity threshold.
/// The threshold is derived for isotropic boxes; on general boxes this is a
/// necessary-condition screen, flagged in the caveat.
inline DetectionVerdict ntcc_check(const Behavior& b) {
    DetectionVerdict v;
    v.detector = "ntcc";
    v.threshold = ntcc_threshold();
    v.quantity = canonicalize(b).chsh_max;
    v.positive = v.quantity > v.threshold + 1e-9;
    v.caveat = "threshold derived for isotropic boxes; applied as a necessary-condition screen";
    return v;
}

/// Information-causality screen: with
///   P1 = [p(a+b=0|00) + p(a+b=1|10)] / 2,  P2 = [p(a+b=1|01) + p(a+b=1|11)] / 2,
///   E_i = 2 P_i - 1,
/// the quantity E1^2 + E2^2 exceeds 1 only for boxes violating information
/// causality. Expects the box in the standard CHSH symmetry; canonicalize first
/// if needed.
inline DetectionVerdict ic_check(const Behavior& b) {
    auto p_same = [&](int x, int y) { return b.at(x, y, 0, 0) + b.at(x, y, 1, 1); };
    auto p_diff = [&](int x, int y) { return b.at(x, y, 0, 1) + b.at(x, y, 1, 0); };
    const double p1 = (p_same(0, 0) + p_diff(1, 0)) / 2.0;
    const double p2 = (p_diff(0, 1) + p_diff(1, 1)) / 2.0;
    const double e1 = 2.0 * p1 - 1.0;
    const double e2 = 2.0 * p2 - 1.0;
    DetectionVerdict v;
    v.detector = "ic";
    v.threshold = 1.0;
    v.quantity = e1 * e1 + e2 * e2;
    v.positive = v.quantity > 1.0 + 1e-12;
    return v;
}

/// Arcsine criterion on the correlator tuple: quantum-realizable correlators
/// satisfy |sum_xy asin<xy> - 2 asin<x*y*>| <= pi for every setting pair.
/// A positive verdict certifies the correlators lie outside the quantum set;
/// a negative one decides nothing about full behavior-level membership.
inline DetectionVerdict quantum_boundary_check(const Behavior& b) {
    const double pi = std::acos(-1.0);
    double asins[2][2];
    double total = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const double e = std::clamp(correlator(b, x, y), -1.0, 1.0);
            asins[x][y] = std::asin(e);
            total += asins[x][y];
        }
    double worst = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) worst = std::max(worst, std::abs(total - 2.0 * asins[x][y]));
    DetectionVerdict v;
    v.detector = "quantum_boundary";
    v.threshold = pi;
    v.quantity = worst;
    v.positive = worst > pi + 1e-9;
    v.caveat = "correlator-space criterion; certifies non-membership only";
    return v;
}

/// Full battery in fixed order: hardy_bound, ntcc, ic, quantum_boundary.
inline std::vector<DetectionVerdict> detect_all(const Behavior& b, long long max_copies) {
    return {hardy_bound_detector(b, max_copies), ntcc_check(b), ic_check(b),
            quantum_boundary_check(b)};
}

}  // namespace nsbox::detect
