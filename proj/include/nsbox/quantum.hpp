#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "nsbox/behavior.hpp"
#include "nsbox/errors.hpp"

namespace nsbox::quantum {

using cd = std::complex<double>;
using Vec2 = std::array<cd, 2>;
using Mat2 = std::array<cd, 4>;   // row-major 2x2
using State4 = std::array<cd, 4>; // product basis |ab>, index 2a+b

inline Mat2 projector(const Vec2& v) {
    return {v[0] * std::conj(v[0]), v[0] * std::conj(v[1]), v[1] * std::conj(v[0]),
            v[1] * std::conj(v[1])};
}

/// Two-qubit realization of the Hardy family: setting 0 measures the
/// computational basis on both sides, setting 1 measures the tilted bases
/// u0/u1 (Alice) and v0/v1 (Bob); the shared state is the unit vector
/// proportional to |u0 v0> + cot(alpha/2)|u1 v0> + cot(beta/2)|u0 v1>.
struct QuantumRealization {
    double alpha = 0.0, beta = 0.0;  // in [0, pi]
    double phi = 0.0, xi = 0.0;      // in [0, 2pi)
    State4 state{};
    std::array<std::array<Mat2, 2>, 2> proj_a{};  // [setting][outcome]
    std::array<std::array<Mat2, 2>, 2> proj_b{};
};

/// Builds the basis vectors u0 = C|0> + e^{i phi} S|1>, u1 = -S|0> + e^{i phi} C|1>
/// (C = cos(alpha/2), S = sin(alpha/2)) and likewise v0/v1 from beta, xi.
inline QuantumRealization realization_from_angles(double alpha, double beta, double phi,
                                                  double xi) {
    const double pi = std::acos(-1.0);
    if (!(alpha >= 0.0 && alpha <= pi && beta >= 0.0 && beta <= pi))
        throw DomainError("realization_from_angles: alpha, beta must lie in [0, pi]");
    if (!(std::isfinite(phi) && std::isfinite(xi)))
        throw DomainError("realization_from_angles: phases must be finite");
    const double sa = std::sin(alpha / 2.0), ca = std::cos(alpha / 2.0);
    const double sb = std::sin(beta / 2.0), cb = std::cos(beta / 2.0);
    if (sa == 0.0 || sb == 0.0)
        throw DegenerateAngleError("realization_from_angles: alpha or beta is 0");

    QuantumRealization re;
    re.alpha = alpha;
    re.beta = beta;
    re.phi = phi;
    re.xi = xi;

    const cd ephi = std::polar(1.0, phi);
    const cd exi = std::polar(1.0, xi);
    const Vec2 u0 = {ca, ephi * sa};
    const Vec2 u1 = {-sa, ephi * ca};
    const Vec2 v0 = {cb, exi * sb};
    const Vec2 v1 = {-sb, exi * cb};

    re.proj_a[0] = {projector(Vec2{1.0, 0.0}), projector(Vec2{0.0, 1.0})};
    re.proj_a[1] = {projector(u0), projector(u1)};
    re.proj_b[0] = {projector(Vec2{1.0, 0.0}), projector(Vec2{0.0, 1.0})};
    re.proj_b[1] = {projector(v0), projector(v1)};

    const double wa = ca / sa;  // cot(alpha/2)
    const double wb = cb / sb;
    const double norm = std::sqrt(1.0 + wa * wa + wb * wb);
    State4 psi{};
    auto add = [&psi](const Vec2& a, const Vec2& b, double w) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) psi[2 * i + j] += w * a[i] * b[j];
    };
    add(u0, v0, 1.0);
    add(u1, v0, wa);
    add(u0, v1, wb);
    for (cd& c : psi) c /= norm;
    re.state = psi;
    return re;
}

/// Family coordinates of a realization:
/// r = 1 - sin^2(alpha/2) sin^2(beta/2), s = cos^2(alpha/2) / r.
inline std::pair<double, double> rs_of(const QuantumRealization& re) {
    const double sa2 = std::sin(re.alpha / 2.0) * std::sin(re.alpha / 2.0);
    const double sb2 = std::sin(re.beta / 2.0) * std::sin(re.beta / 2.0);
    const double r = 1.0 - sa2 * sb2;
    if (r <= 0.0) throw DomainError("rs_of: r = 0 (alpha = beta = pi) excluded");
    const double ca2 = std::cos(re.alpha / 2.0) * std::cos(re.alpha / 2.0);
    return {r, ca2 / r};
}

/// Inverse map with phases fixed to zero (the table is phase independent):
/// alpha = 2 acos(sqrt(rs)), sin^2(beta/2) = (1-r)/(1-rs).
inline QuantumRealization realization_from_rs(double r, double s) {
    if (!(r > 0.0 && r < 1.0 && s > 0.0 && s < 1.0))
        throw DomainError("realization_from_rs: need r, s in (0,1)");
    const double alpha = 2.0 * std::acos(std::sqrt(r * s));
    const double beta = 2.0 * std::asin(std::sqrt((1.0 - r) / (1.0 - r * s)));
    return realization_from_angles(alpha, beta, 0.0, 0.0);
}

/// Born-rule table p(ab|xy) = <psi| Proj_A(x,a) (x) Proj_B(y,b) |psi>.
inline Behavior born_behavior(const QuantumRealization& re) {
    Behavior out{};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const Mat2& A = re.proj_a[x][a];
                    const Mat2& B = re.proj_b[y][b];
                    State4 w{};
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            for (int k = 0; k < 2; ++k)
                                for (int l = 0; l < 2; ++l)
                                    w[2 * i + j] +=
                                        A[2 * i + k] * B[2 * j + l] * re.state[2 * k + l];
                    cd ip = 0.0;
                    for (int i = 0; i < 4; ++i) ip += std::conj(re.state[i]) * w[i];
                    out.at(x, y, a, b) = std::max(0.0, ip.real());
                }
    return out;
}

}  // namespace nsbox::quantum
