#pragma once

#include <array>
#include <cstdio>

#include "nsbox/behavior.hpp"
#include "nsbox/errors.hpp"

namespace nsbox {

enum class VertexKind { PR, LocalDeterministic };

/// One of the 24 extreme points of the no-signaling polytope:
/// 8 PR boxes PR(alpha,beta,gamma) and 16 local deterministic boxes
/// Local(alpha1,alpha2,beta1,beta2).
struct VertexId {
    VertexKind kind;
    std::array<int, 4> bits{};  // PR uses bits[0..2]

    static VertexId pr(int alpha, int beta, int gamma) {
        return {VertexKind::PR, {alpha & 1, beta & 1, gamma & 1, 0}};
    }
    static VertexId local(int a1, int a2, int b1, int b2) {
        return {VertexKind::LocalDeterministic, {a1 & 1, a2 & 1, b1 & 1, b2 & 1}};
    }
};

/// PR(alpha,beta,gamma): p(ab|xy) = 1/2 if a xor b = xy + alpha x + beta y + gamma (mod 2).
/// Local(a1,a2,b1,b2):   a = a1 x + a2, b = b1 y + b2 (mod 2), deterministically.
inline Behavior vertex(const VertexId& id) {
    Behavior out{};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    if (id.kind == VertexKind::PR) {
                        const int target =
                            ((x & y) ^ (id.bits[0] & x) ^ (id.bits[1] & y) ^ id.bits[2]) & 1;
                        out.at(x, y, a, b) = ((a ^ b) == target) ? 0.5 : 0.0;
                    } else {
                        const int da = ((id.bits[0] & x) ^ id.bits[1]) & 1;
                        const int db = ((id.bits[2] & y) ^ id.bits[3]) & 1;
                        out.at(x, y, a, b) = (a == da && b == db) ? 1.0 : 0.0;
                    }
                }
    return out;
}

/// Vertex ids of the nine-box simplex basis, in order P_NL, P_L1..P_L8.
/// These are the boxes reaching CHSH value 4 (P_NL) or saturating 2 (the rest).
inline const std::array<VertexId, 9>& simplex_vertex_ids() {
    static const std::array<VertexId, 9> ids = {
        VertexId::pr(1, 1, 0),           // P_NL
        VertexId::local(0, 0, 0, 1),     // P_L1
        VertexId::local(0, 1, 0, 0),     // P_L2
        VertexId::local(0, 1, 1, 1),     // P_L3
        VertexId::local(1, 1, 0, 1),     // P_L4
        VertexId::local(1, 1, 1, 1),     // P_L5
        VertexId::local(1, 0, 0, 0),     // P_L6
        VertexId::local(0, 0, 1, 0),     // P_L7
        VertexId::local(1, 0, 1, 0),     // P_L8
    };
    return ids;
}

/// Simplex basis tables (P_NL, P_L1..P_L8).
inline const std::array<Behavior, 9>& simplex_basis() {
    static const std::array<Behavior, 9> basis = [] {
        std::array<Behavior, 9> out;
        for (int i = 0; i < 9; ++i) out[i] = vertex(simplex_vertex_ids()[i]);
        return out;
    }();
    return basis;
}

inline Behavior pr_box() { return simplex_basis()[0]; }

/// P_Li for i in 1..8.
inline Behavior local_box(int i) {
    if (i < 1 || i > 8) throw DomainError("local_box: index must be in 1..8");
    return simplex_basis()[i];
}

/// All 24 extreme points: PR(a,b,g) in lexicographic bit order, then the
/// 16 local deterministic boxes.
inline const std::array<VertexId, 24>& all_vertex_ids() {
    static const std::array<VertexId, 24> ids = [] {
        std::array<VertexId, 24> out{};
        int k = 0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) out[k++] = VertexId::pr(a, b, g);
        for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b2 = 0; b2 < 2; ++b2) out[k++] = VertexId::local(a1, a2, b1, b2);
        return out;
    }();
    return ids;
}

}  // namespace nsbox
