#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "nsbox/behavior.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/vertices.hpp"

namespace nsbox {

/// Quantum box with maximal Hardy success (5*sqrt(5)-11)/2:
/// (5*sqrt(5)-11) P_NL + (7-3*sqrt(5))/2 (P_L1+..+P_L4) + (sqrt(5)-2) P_L5.
inline Behavior h_q_max() {
    const double s5 = std::sqrt(5.0);
    const double c0 = 5.0 * s5 - 11.0;
    const double c14 = (7.0 - 3.0 * s5) / 2.0;
    const double c5 = s5 - 2.0;
    const auto& v = simplex_basis();
    const double w[6] = {c0, c14, c14, c14, c14, c5};
    const Behavior boxes[6] = {v[0], v[1], v[2], v[3], v[4], v[5]};
    return mix(std::span<const double>(w, 6), std::span<const Behavior>(boxes, 6));
}

/// Quantum box saturating the Tsirelson bound 2*sqrt(2):
/// (sqrt(2)-1) P_NL + (1-1/sqrt(2))/4 (P_L1+..+P_L8).
inline Behavior b_q_max() {
    const double c0 = std::sqrt(2.0) - 1.0;
    const double cl = (1.0 - 1.0 / std::sqrt(2.0)) / 4.0;
    const auto& v = simplex_basis();
    std::array<double, 9> w{c0, cl, cl, cl, cl, cl, cl, cl, cl};
    return mix(std::span<const double>(w.data(), 9),
               std::span<const Behavior>(v.data(), 9));
}

/// Post-quantum no-signaling Hardy box with success 0.05:
/// 0.1 P_NL + 0.85 P_L1 + 0.01 P_L2 + 0.01 P_L3 + 0.02 P_L4 + 0.01 P_L5.
inline Behavior h_ns() {
    const auto& v = simplex_basis();
    const double w[6] = {0.1, 0.85, 0.01, 0.01, 0.02, 0.01};
    const Behavior boxes[6] = {v[0], v[1], v[2], v[3], v[4], v[5]};
    return mix(std::span<const double>(w, 6), std::span<const Behavior>(boxes, 6));
}

/// Post-quantum no-signaling Hardy box with success 0.0773, concentrated near
/// P_L2; certified post-quantum only by distillation (or deeper hierarchy tests).
inline Behavior h_ns_prime() {
    Behavior b{};
    b.p = {{{0.0773, 0.0256, 0.5599, 0.3372},
            {0.0, 0.1029, 0.7804, 0.1167},
            {0.0, 0.3374, 0.6372, 0.0254},
            {0.1178, 0.2196, 0.6626, 0.0}}};
    return b;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names = {"H_Q_max", "B_Q_max", "H_NS", "H_NS_prime", "P_NL"};
    for (int i = 1; i <= 8; ++i) names.push_back("P_L" + std::to_string(i));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g)
                names.push_back("PR_" + std::to_string(a) + std::to_string(b) + std::to_string(g));
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2)
                    names.push_back("L_" + std::to_string(a1) + std::to_string(a2) +
                                    std::to_string(b1) + std::to_string(b2));
    return names;
}

/// Catalog lookup. Knows the named boxes above, the aliases P_NL and
/// P_L1..P_L8, and all 24 vertices as PR_abg / L_a1a2b1b2.
inline Behavior named_box(const std::string& name) {
    if (name == "H_Q_max") return h_q_max();
    if (name == "B_Q_max") return b_q_max();
    if (name == "H_NS") return h_ns();
    if (name == "H_NS_prime") return h_ns_prime();
    if (name == "P_NL") return pr_box();
    if (name.size() == 4 && name.rfind("P_L", 0) == 0 && name[3] >= '1' && name[3] <= '8')
        return local_box(name[3] - '0');
    auto bit = [&](char c) -> int {
        if (c != '0' && c != '1') throw UnknownNameError("unknown box name: " + name);
        return c - '0';
    };
    if (name.size() == 6 && name.rfind("PR_", 0) == 0)
        return vertex(VertexId::pr(bit(name[3]), bit(name[4]), bit(name[5])));
    if (name.size() == 6 && name.rfind("L_", 0) == 0)
        return vertex(VertexId::local(bit(name[2]), bit(name[3]), bit(name[4]), bit(name[5])));
    throw UnknownNameError("unknown box name: " + name);
}

}  // namespace nsbox
