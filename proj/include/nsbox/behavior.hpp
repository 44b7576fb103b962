#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "nsbox/errors.hpp"

namespace nsbox {

// Structural tolerance for normalization / no-signaling checks.
inline constexpr double kStructuralTol = 1e-12;

/// Joint input-output distribution p(ab|xy) of a bipartite 2-2-2 box.
///
/// Rows are setting pairs (x,y) in order 00,01,10,11; columns are outcome
/// pairs (a,b) in order 00,01,10,11.
struct Behavior {
    std::array<std::array<double, 4>, 4> p{};

    static constexpr int setting(int x, int y) { return 2 * x + y; }
    static constexpr int outcome(int a, int b) { return 2 * a + b; }

    double at(int x, int y, int a, int b) const { return p[setting(x, y)][outcome(a, b)]; }
    double& at(int x, int y, int a, int b) { return p[setting(x, y)][outcome(a, b)]; }

    // Alice's outcome marginal p(a|x), evaluated from row (x,y).
    double marginal_a(int a, int x, int y) const {
        return at(x, y, a, 0) + at(x, y, a, 1);
    }
    // Bob's outcome marginal p(b|y), evaluated from row (x,y).
    double marginal_b(int b, int x, int y) const {
        return at(x, y, 0, b) + at(x, y, 1, b);
    }
};

inline double max_abs_diff(const Behavior& a, const Behavior& b) {
    double m = 0.0;
    for (int s = 0; s < 4; ++s)
        for (int o = 0; o < 4; ++o) m = std::max(m, std::abs(a.p[s][o] - b.p[s][o]));
    return m;
}

struct ValidationIssue {
    enum class Kind { EntryRange, Normalization, NoSignaling };
    Kind kind;
    double magnitude;     // size of the worst offense for this issue
    std::string detail;   // names the invariant and the offending indices
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks entry range, row normalization and both no-signaling conditions.
/// Reporting only; an empty report means every Behavior invariant holds.
inline ValidationReport validate(const Behavior& b, double tol = kStructuralTol) {
    ValidationReport report;
    char buf[160];

    double worst_range = 0.0;
    int wr_s = 0, wr_o = 0;
    for (int s = 0; s < 4; ++s) {
        for (int o = 0; o < 4; ++o) {
            const double v = b.p[s][o];
            const double excess = std::max(-v, v - 1.0);
            if (excess > worst_range) {
                worst_range = excess;
                wr_s = s;
                wr_o = o;
            }
        }
    }
    if (worst_range > tol) {
        std::snprintf(buf, sizeof buf, "EntryRangeViolation(row=%d, col=%d, excess=%.3e)", wr_s,
                      wr_o, worst_range);
        report.issues.push_back({ValidationIssue::Kind::EntryRange, worst_range, buf});
    }

    for (int s = 0; s < 4; ++s) {
        double sum = 0.0;
        for (int o = 0; o < 4; ++o) sum += b.p[s][o];
        if (std::abs(sum - 1.0) > tol) {
            std::snprintf(buf, sizeof buf, "NormalizationViolation(row=%d, deficit=%.12g)", s,
                          1.0 - sum);
            report.issues.push_back({ValidationIssue::Kind::Normalization, std::abs(sum - 1.0), buf});
        }
    }

    // p(a|x) must not depend on y, p(b|y) must not depend on x.
    double worst_a = 0.0;
    int wa_a = 0, wa_x = 0;
    for (int x = 0; x < 2; ++x)
        for (int a = 0; a < 2; ++a) {
            const double d = std::abs(b.marginal_a(a, x, 0) - b.marginal_a(a, x, 1));
            if (d > worst_a) {
                worst_a = d;
                wa_a = a;
                wa_x = x;
            }
        }
    if (worst_a > tol) {
        std::snprintf(buf, sizeof buf, "NoSignalingViolation(party=A, a=%d, x=%d, gap=%.3e)", wa_a,
                      wa_x, worst_a);
        report.issues.push_back({ValidationIssue::Kind::NoSignaling, worst_a, buf});
    }
    double worst_b = 0.0;
    int wb_b = 0, wb_y = 0;
    for (int y = 0; y < 2; ++y)
        for (int bb = 0; bb < 2; ++bb) {
            const double d = std::abs(b.marginal_b(bb, 0, y) - b.marginal_b(bb, 1, y));
            if (d > worst_b) {
                worst_b = d;
                wb_b = bb;
                wb_y = y;
            }
        }
    if (worst_b > tol) {
        std::snprintf(buf, sizeof buf, "NoSignalingViolation(party=B, b=%d, y=%d, gap=%.3e)", wb_b,
                      wb_y, worst_b);
        report.issues.push_back({ValidationIssue::Kind::NoSignaling, worst_b, buf});
    }
    return report;
}

inline bool is_valid(const Behavior& b, double tol = kStructuralTol) {
    return validate(b, tol).ok();
}

/// <xy> = sum_ab (-1)^(a xor b) p(ab|xy).
inline double correlator(const Behavior& b, int x, int y) {
    return b.at(x, y, 0, 0) - b.at(x, y, 0, 1) - b.at(x, y, 1, 0) + b.at(x, y, 1, 1);
}

/// CHSH functional <00> - <01> - <10> - <11>; range [-4, 4].
inline double chsh(const Behavior& b) {
    return correlator(b, 0, 0) - correlator(b, 0, 1) - correlator(b, 1, 0) - correlator(b, 1, 1);
}

/// Entrywise convex combination of boxes.
inline Behavior mix(std::span<const double> weights, std::span<const Behavior> boxes) {
    if (weights.size() != boxes.size())
        throw WeightError("mix: weights and boxes differ in length");
    if (weights.empty()) throw WeightError("mix: empty input");
    double sum = 0.0;
    for (double w : weights) {
        if (w < -kStructuralTol) throw WeightError("mix: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kStructuralTol) throw WeightError("mix: weights do not sum to 1");
    Behavior out{};
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (int s = 0; s < 4; ++s)
            for (int o = 0; o < 4; ++o) out.p[s][o] += weights[i] * boxes[i].p[s][o];
    return out;
}

inline Behavior mix(std::initializer_list<double> weights, std::initializer_list<Behavior> boxes) {
    return mix(std::span<const double>(weights.begin(), weights.size()),
               std::span<const Behavior>(boxes.begin(), boxes.size()));
}

}  // namespace nsbox
