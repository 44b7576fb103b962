#pragma once

#include <array>
#include <cmath>
#include <cstdio>

#include "nsbox/behavior.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/vertices.hpp"

namespace nsbox {

/// Convex weights of a behavior over the ordered basis (P_NL, P_L1..P_L8).
/// residual is the max absolute reconstruction error of the least-squares fit.
struct SimplexDecomposition {
    std::array<double, 9> c{};
    double residual = 0.0;
};

inline Behavior reconstruct(const SimplexDecomposition& d) {
    Behavior out{};
    const auto& basis = simplex_basis();
    for (int i = 0; i < 9; ++i)
        for (int s = 0; s < 4; ++s)
            for (int o = 0; o < 4; ++o) out.p[s][o] += d.c[i] * basis[i].p[s][o];
    return out;
}

namespace detail {

// Solves the 9x9 system M x = y by Gaussian elimination with partial pivoting.
inline std::array<double, 9> solve9(std::array<std::array<double, 9>, 9> m,
                                    std::array<double, 9> y) {
    for (int col = 0; col < 9; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 9; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        std::swap(m[col], m[pivot]);
        std::swap(y[col], y[pivot]);
        const double diag = m[col][col];
        for (int row = col + 1; row < 9; ++row) {
            const double f = m[row][col] / diag;
            if (f == 0.0) continue;
            for (int k = col; k < 9; ++k) m[row][k] -= f * m[col][k];
            y[row] -= f * y[col];
        }
    }
    std::array<double, 9> x{};
    for (int row = 8; row >= 0; --row) {
        double acc = y[row];
        for (int k = row + 1; k < 9; ++k) acc -= m[row][k] * x[k];
        x[row] = acc / m[row][row];
    }
    return x;
}

}  // namespace detail

/// Affine coordinates of b in the 9-vertex basis, via least squares over the
/// 16 table entries. The basis tables are linearly independent, so the fit is
/// unique; membership in the simplex shows up as nonnegative weights together
/// with a negligible residual.
inline SimplexDecomposition decompose_simplex(const Behavior& b, double residual_tol = 1e-9,
                                              double weight_tol = 1e-10) {
    const auto& basis = simplex_basis();

    // Normal equations A^T A c = A^T b with A the 16x9 matrix of basis tables.
    static const std::array<std::array<double, 9>, 9> gram = [] {
        std::array<std::array<double, 9>, 9> g{};
        const auto& bs = simplex_basis();
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                double acc = 0.0;
                for (int s = 0; s < 4; ++s)
                    for (int o = 0; o < 4; ++o) acc += bs[i].p[s][o] * bs[j].p[s][o];
                g[i][j] = acc;
            }
        return g;
    }();

    std::array<double, 9> rhs{};
    for (int i = 0; i < 9; ++i) {
        double acc = 0.0;
        for (int s = 0; s < 4; ++s)
            for (int o = 0; o < 4; ++o) acc += basis[i].p[s][o] * b.p[s][o];
        rhs[i] = acc;
    }

    SimplexDecomposition dec;
    dec.c = detail::solve9(gram, rhs);

    double residual = 0.0;
    {
        const Behavior back = reconstruct(dec);
        residual = max_abs_diff(back, b);
    }
    dec.residual = residual;

    double min_weight = dec.c[0];
    for (double w : dec.c) min_weight = std::min(min_weight, w);

    if (residual > residual_tol || min_weight < -weight_tol) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "NotInSimplex(residual=%.3e, min_weight=%.6g)", residual,
                      min_weight);
        throw NotInSimplexError(buf, residual, min_weight);
    }

    // Clamp representation noise; weights stay normalized within 1e-10.
    for (double& w : dec.c)
        if (w < 0.0) w = 0.0;
    return dec;
}

}  // namespace nsbox
