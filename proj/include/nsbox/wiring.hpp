#pragma once

#include <cmath>
#include <span>

#include "nsbox/behavior.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/errors.hpp"

namespace nsbox::wiring {

namespace detail {

// Children are valid by construction for valid NS parents; reject anything
// beyond representation noise instead of masking it, then clamp that noise.
inline Behavior checked(Behavior child) {
    for (int s = 0; s < 4; ++s)
        for (int o = 0; o < 4; ++o) {
            double& v = child.p[s][o];
            if (v < -kStructuralTol || v > 1.0 + kStructuralTol)
                throw Error("wiring produced an out-of-range child probability");
            if (v < 0.0) v = 0.0;
            if (v > 1.0) v = 1.0;
        }
    return child;
}

}  // namespace detail

/// OR-AND wiring of two parents sharing the same inputs: a = a1 OR a2,
/// b = b1 AND b2. Per setting,
///   p(00) = p1(00) (p2(00)+p2(01)) + p1(01) p2(00)
///   p(01) = p1(01) p2(01)
///   p(11) = p1(01) p2(11) + p1(11) (p2(01)+p2(11))
///   p(10) = remainder.
inline Behavior wire_pair(const Behavior& b1, const Behavior& b2) {
    Behavior child{};
    for (int s = 0; s < 4; ++s) {
        const auto& p = b1.p[s];
        const auto& q = b2.p[s];
        const double c00 = p[0] * (q[0] + q[1]) + p[1] * q[0];
        const double c01 = p[1] * q[1];
        const double c11 = p[1] * q[3] + p[3] * (q[1] + q[3]);
        child.p[s] = {c00, c01, 1.0 - c00 - c01 - c11, c11};
    }
    return detail::checked(child);
}

/// n identical parents under the OR-AND wiring, in closed form:
///   p(00) -> (p00+p01)^n - p01^n
///   p(01) -> p01^n
///   p(11) -> (p11+p01)^n - p01^n
///   p(10) -> remainder.
inline Behavior wire_n_closed(const Behavior& b, long long n) {
    if (n < 1) throw DomainError("wire_n_closed: copy count must be >= 1");
    Behavior child{};
    for (int s = 0; s < 4; ++s) {
        const auto& p = b.p[s];
        const double e = double(n);
        const double c01 = std::pow(p[1], e);
        const double c00 = std::pow(p[0] + p[1], e) - c01;
        const double c11 = std::pow(p[3] + p[1], e) - c01;
        child.p[s] = {c00, c01, 1.0 - c00 - c01 - c11, c11};
    }
    return detail::checked(child);
}

/// Left fold of wire_pair over a nonempty parent list.
inline Behavior wire_chain(std::span<const Behavior> parents) {
    if (parents.empty()) throw EmptyListError("wire_chain: empty parent list");
    Behavior acc = parents[0];
    for (std::size_t i = 1; i < parents.size(); ++i) acc = wire_pair(acc, parents[i]);
    return acc;
}

/// Two-copy image of a Hardy-form decomposition (c6 = c7 = c8 = 0):
///   c0' = 2((c0/2+c1)^2 - c1^2)
///   c1' = c1^2
///   c2' = c0(1-c0/2) + 2 c2(1-c2/2) - c0(c1+c2)
///   c3' = c3(2-c0-c3-2c2)
///   c4' = c4(c0+2c1+c4)
///   c5' = c5(c0+2c1+2c4+c5)
inline SimplexDecomposition two_copy_hardy_coeffs(const SimplexDecomposition& d) {
    for (int i = 6; i < 9; ++i)
        if (std::abs(d.c[i]) > 1e-12)
            throw ShapeError("two_copy_hardy_coeffs: weights c6,c7,c8 must vanish");
    const double c0 = d.c[0], c1 = d.c[1], c2 = d.c[2], c3 = d.c[3], c4 = d.c[4], c5 = d.c[5];
    SimplexDecomposition out;
    const double half = c0 / 2.0 + c1;
    out.c[0] = 2.0 * (half * half - c1 * c1);
    out.c[1] = c1 * c1;
    out.c[2] = c0 * (1.0 - c0 / 2.0) + 2.0 * c2 * (1.0 - c2 / 2.0) - c0 * (c1 + c2);
    out.c[3] = c3 * (2.0 - c0 - c3 - 2.0 * c2);
    out.c[4] = c4 * (c0 + 2.0 * c1 + c4);
    out.c[5] = c5 * (c0 + 2.0 * c1 + 2.0 * c4 + c5);
    out.residual = 0.0;
    return out;
}

/// CHSH value of the two-copy OR-AND child of a full 9-weight decomposition
/// (c8 is eliminated through normalization):
///   K2 = 2 + c0^2 + 4c0(c1+2c4) + 8c4(c1+c2+c3+c5+c6-1) + 8c4^2 - 8c5c7.
inline double chsh_after_two_copy(const SimplexDecomposition& d) {
    double sum = 0.0;
    for (double w : d.c) {
        if (w < -1e-10) throw WeightError("chsh_after_two_copy: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw WeightError("chsh_after_two_copy: weights do not sum to 1");
    const double c0 = d.c[0], c1 = d.c[1], c2 = d.c[2], c3 = d.c[3], c4 = d.c[4], c5 = d.c[5],
                 c6 = d.c[6], c7 = d.c[7];
    return 2.0 + c0 * c0 + 4.0 * c0 * (c1 + 2.0 * c4) +
           8.0 * c4 * (c1 + c2 + c3 + c5 + c6 - 1.0) + 8.0 * c4 * c4 - 8.0 * c5 * c7;
}

}  // namespace nsbox::wiring
