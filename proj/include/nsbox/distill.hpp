#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <thread>
#include <vector>

#include "nsbox/behavior.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/errors.hpp"

namespace nsbox::distill {

/// Lambda threshold below which the two-copy OR-AND wiring amplifies the CHSH
/// value of lambda*B_Q_max + (1-lambda)*P_L1: 8(13-sqrt(2))/167.
inline double two_copy_chsh_lambda_threshold() {
    static const double v = 8.0 * (13.0 - std::sqrt(2.0)) / 167.0;
    return v;
}

/// Small-lambda ansatz coefficient: the optimal copy count for the CHSH
/// mixture family scales as alpha/lambda with alpha below.
inline constexpr double kPeakCopiesCoefficient = 1.047391;

/// Hardy success of the n-copy OR-AND child of a Hardy-form box with P_NL
/// weight c0 and P_L1 weight c1: (c0/2 + c1)^n - c1^n.
inline double hardy_success_n(double c0, double c1, long long n) {
    if (!(c0 > 0.0) || c1 < 0.0 || c0 + c1 > 1.0 + 1e-12)
        throw DomainError("hardy_success_n: need c0 > 0, c1 >= 0, c0 + c1 <= 1");
    if (n < 1) throw DomainError("hardy_success_n: copy count must be >= 1");
    const double e = double(n);
    return std::pow(c0 / 2.0 + c1, e) - std::pow(c1, e);
}

/// Copy-count optimum of the n-copy Hardy success.
struct CopyOptimum {
    double n_star = std::numeric_limits<double>::quiet_NaN();  // real critical point
    long long n_opt = 1;
    double value_opt = 0.0;
};

/// Critical point x* = log(log c1 / log(c0/2+c1)) / log((c0/2+c1)/c1); the
/// integer optimum is whichever of floor(x*), floor(x*)+1 scores higher.
/// When c1 = 0 or the success sequence is decreasing from the start, the
/// optimum is a single copy.
inline CopyOptimum optimal_copies(double c0, double c1) {
    if (!(c0 > 0.0) || c1 < 0.0 || c0 + c1 > 1.0 + 1e-12)
        throw DomainError("optimal_copies: need c0 > 0, c1 >= 0, c0 + c1 <= 1");
    CopyOptimum out;
    if (c1 == 0.0) {
        out.n_opt = 1;
        out.value_opt = c0 / 2.0;
        return out;
    }
    const double u = c0 / 2.0 + c1;
    out.n_star = std::log(std::log(c1) / std::log(u)) / std::log(u / c1);
    const long long n_lo = std::max<long long>(1, (long long)std::floor(out.n_star));
    const double v_lo = hardy_success_n(c0, c1, n_lo);
    const double v_hi = hardy_success_n(c0, c1, n_lo + 1);
    if (v_hi > v_lo) {
        out.n_opt = n_lo + 1;
        out.value_opt = v_hi;
    } else {
        out.n_opt = n_lo;
        out.value_opt = v_lo;
    }
    return out;
}

/// Child-minus-parent CHSH gain normalized by 2(sqrt(2)-1), in percent.
inline double tsirelson_gain(double chsh_parent, double chsh_child) {
    return (chsh_child - chsh_parent) / (2.0 * (std::sqrt(2.0) - 1.0)) * 100.0;
}

/// Two-parameter quantum Hardy family; p(00|00) = (1-r)r(1-s)s/(1-rs).
inline Behavior hardy_family(double r, double s) {
    if (!(r >= 0.0 && r <= 1.0 && s >= 0.0 && s <= 1.0) || r * s >= 1.0)
        throw DomainError("hardy_family: need r, s in [0,1] with r*s < 1");
    const double d = 1.0 - r * s;
    Behavior b{};
    b.p[0] = {(1.0 - r) * r * (1.0 - s) * s / d, (1.0 - r) * (1.0 - r) * s / d,
              (1.0 - r) * (1.0 - s), r};
    b.p[1] = {0.0, (1.0 - r) * s, (1.0 - s) / d, (1.0 - r) * r * s * s / d};
    b.p[2] = {0.0, s, (1.0 - r) * (1.0 - s) / d, r * (1.0 - s) * (1.0 - s) / d};
    b.p[3] = {r * (1.0 - s) * s / d, (1.0 - r) * s / d, 1.0 - s, 0.0};
    return b;
}

/// Simplex weights of hardy_family(r,s), read off the closed-form table.
inline SimplexDecomposition hardy_family_coeffs(double r, double s) {
    const Behavior b = hardy_family(r, s);
    SimplexDecomposition d;
    d.c = {2.0 * b.at(0, 0, 0, 0),  // P_NL
           b.at(0, 0, 0, 1),        // P_L1
           b.at(0, 0, 1, 0),        // P_L2
           b.at(1, 0, 1, 1),        // P_L3
           b.at(0, 1, 1, 1),        // P_L4
           b.at(1, 1, 0, 0),        // P_L5
           0.0, 0.0, 0.0};
    d.residual = 0.0;
    return d;
}

/// True iff hardy_family(r,s) is distillable by the OR-AND wiring:
/// r^2(s+s^2) - r(s^2+2s) + (2s-1) > 0.
inline bool distillable_region(double r, double s) {
    return r * r * (s + s * s) - r * (s * s + 2.0 * s) + (2.0 * s - 1.0) > 0.0;
}

struct GapResult {
    double gap = 0.0;
    long long n_opt = 1;
};

/// Optimal multi-copy Hardy-success gain of hardy_family(r,s) over its parent
/// value; zero with n_opt = 1 outside the distillable region.
inline GapResult distillation_gap(double r, double s) {
    if (!(r > 0.0 && r < 1.0 && s > 0.0 && s < 1.0))
        throw DomainError("distillation_gap: need r, s in (0,1)");
    if (!distillable_region(r, s)) return {0.0, 1};
    const SimplexDecomposition d = hardy_family_coeffs(r, s);
    const CopyOptimum opt = optimal_copies(d.c[0], d.c[1]);
    return {opt.value_opt - d.c[0] / 2.0, opt.n_opt};
}

/// Optimally distilled Hardy success of lambda*hardy_family(r,s)+(1-lambda)*P_L1
/// in the lambda -> 0 limit, in closed form.
inline double limit_distilled_hardy(double r, double s) {
    if (!(r > 0.0 && r < 1.0 && s > 0.0 && s < 1.0))
        throw DomainError("limit_distilled_hardy: need r, s in (0,1)");
    const double num = (1.0 - r) * r * (1.0 - s) * s;
    const double d1 = 1.0 - s + (1.0 - r) * r * s;
    const double d2 = 1.0 - s + (1.0 - r) * r * s * s;
    const double expo = 1.0 - 1.0 / ((1.0 - r) * r * s) - 1.0 / (1.0 - s);
    return num * std::pow(d1 / d2, expo) / d1;
}

namespace detail {

// Continuous-n relaxation of the n-copy CHSH law for the B_Q_max mixture.
inline double chsh_copies_real(double lambda, double x) {
    const double root2 = std::sqrt(2.0);
    const double a1 = std::log1p(-lambda / 2.0);
    const double a2 = std::log1p(-(6.0 - root2) / 8.0 * lambda);
    const double a3 = std::log1p(-(6.0 + root2) / 8.0 * lambda);
    return 2.0 - 8.0 * std::exp(x * a1) + 12.0 * std::exp(x * a2) - 4.0 * std::exp(x * a3);
}

}  // namespace detail

/// CHSH value after wiring n copies of lambda*B_Q_max + (1-lambda)*P_L1:
/// 2 - 8(1-l/2)^n + 12(1-(6-sqrt2)l/8)^n - 4(1-(6+sqrt2)l/8)^n.
inline double chsh_n_lambda(double lambda, long long n) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("chsh_n_lambda: lambda in [0,1]");
    if (n < 1) throw DomainError("chsh_n_lambda: copy count must be >= 1");
    return detail::chsh_copies_real(lambda, double(n));
}

struct ChshPeak {
    long long n_opt = 1;
    double value = 0.0;
};

/// Integer copy count maximizing chsh_n_lambda(lambda, .). Small lambda uses a
/// golden-section search on the continuous relaxation around the alpha/lambda
/// ansatz; otherwise a direct scan up to ceil(10/lambda) suffices.
inline ChshPeak peak_chsh_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("peak_chsh_lambda: lambda in (0,1]");
    if (lambda >= 1e-5) {
        const long long n_max = (long long)std::ceil(10.0 / lambda);
        const double root2 = std::sqrt(2.0);
        const double b1 = 1.0 - lambda / 2.0;
        const double b2 = 1.0 - (6.0 - root2) / 8.0 * lambda;
        const double b3 = 1.0 - (6.0 + root2) / 8.0 * lambda;
        double t1 = 1.0, t2 = 1.0, t3 = 1.0;
        ChshPeak best{1, -4.0};
        for (long long n = 1; n <= n_max; ++n) {
            t1 *= b1;
            t2 *= b2;
            t3 *= b3;
            const double v = 2.0 - 8.0 * t1 + 12.0 * t2 - 4.0 * t3;
            if (v > best.value) best = {n, v};
        }
        return best;
    }
    double lo = 0.5 * kPeakCopiesCoefficient / lambda;
    double hi = 2.0 * kPeakCopiesCoefficient / lambda;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = detail::chsh_copies_real(lambda, x1);
    double f2 = detail::chsh_copies_real(lambda, x2);
    for (int it = 0; it < 200 && hi - lo > 0.25; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = detail::chsh_copies_real(lambda, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = detail::chsh_copies_real(lambda, x1);
        }
    }
    const double xhat = (lo + hi) / 2.0;
    ChshPeak best{1, chsh_n_lambda(lambda, 1)};
    for (long long n : {(long long)std::floor(xhat), (long long)std::ceil(xhat)}) {
        if (n < 1) continue;
        const double v = chsh_n_lambda(lambda, n);
        if (v > best.value) best = {n, v};
    }
    return best;
}

/// Sufficient mixing bound for two-copy distillation of lambda*C+(1-lambda)*P_L1,
/// where c0 is the P_NL fraction of C: lambda < (2/3) c0.
inline double two_copy_ball_radius(double c0) {
    if (!(c0 >= 0.0 && c0 <= 1.0)) throw DomainError("two_copy_ball_radius: c0 in [0,1]");
    return 2.0 / 3.0 * c0;
}

// ---------------------------------------------------------------------------
// Grid sweeps

/// Half-open axis [lo, hi) sampled at `count` cell midpoints lo + (i+1/2)*step.
/// The interior offset keeps boundary singularities (s = 1, rs = 1) out of
/// every sweep. A single-cell axis with lo == hi degenerates to that point.
struct AxisSpec {
    double lo = 0.0;
    double hi = 0.0;
    long long count = 1;
};

inline std::vector<double> axis_points(const AxisSpec& a) {
    if (!(std::isfinite(a.lo) && std::isfinite(a.hi)) || a.hi < a.lo || a.count < 1)
        throw GridError("axis_points: need finite lo <= hi and count >= 1");
    const double step = (a.hi - a.lo) / double(a.count);
    std::vector<double> pts(std::size_t(a.count));
    for (long long i = 0; i < a.count; ++i) pts[std::size_t(i)] = a.lo + (double(i) + 0.5) * step;
    return pts;
}

struct SweepRecord {
    std::optional<double> r, s, lambda;
    std::optional<long long> n_opt;
    double parent_value = 0.0;
    double distilled_value = 0.0;
    double gap = 0.0;
};

inline int default_thread_count() {
    if (const char* env = std::getenv("NSBOX_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return int(std::min<long>(v, 256));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(std::min(hc, 16u)) : 1;
}

namespace detail {

// Each cell is pure and writes its own slot, so results do not depend on the
// thread count.
template <typename F>
inline void parallel_for(std::size_t n, F&& body) {
    const int threads = default_thread_count();
    if (threads <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    const std::size_t chunk = (n + std::size_t(threads) - 1) / std::size_t(threads);
    for (int t = 0; t < threads; ++t) {
        const std::size_t begin = std::size_t(t) * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &body] {
            for (std::size_t i = begin; i < end; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Distillation gap of hardy_family over an (r,s) grid, row-major in r then s.
inline std::vector<SweepRecord> sweep_hardy_gap(const AxisSpec& r_axis, const AxisSpec& s_axis) {
    const auto rs = axis_points(r_axis);
    const auto ss = axis_points(s_axis);
    std::vector<SweepRecord> records(rs.size() * ss.size());
    detail::parallel_for(records.size(), [&](std::size_t k) {
        const double r = rs[k / ss.size()];
        const double s = ss[k % ss.size()];
        const SimplexDecomposition d = hardy_family_coeffs(r, s);
        const GapResult g = distillation_gap(r, s);
        SweepRecord& rec = records[k];
        rec.r = r;
        rec.s = s;
        rec.n_opt = g.n_opt;
        rec.parent_value = d.c[0] / 2.0;
        rec.distilled_value = d.c[0] / 2.0 + g.gap;
        rec.gap = g.gap;
    });
    return records;
}

/// Limiting distilled Hardy success of the P_L1 mixtures over an (r,s) grid.
/// The parent success vanishes in the limit, so gap equals the distilled value.
inline std::vector<SweepRecord> sweep_limit_distilled(const AxisSpec& r_axis,
                                                      const AxisSpec& s_axis) {
    const auto rs = axis_points(r_axis);
    const auto ss = axis_points(s_axis);
    std::vector<SweepRecord> records(rs.size() * ss.size());
    detail::parallel_for(records.size(), [&](std::size_t k) {
        const double r = rs[k / ss.size()];
        const double s = ss[k % ss.size()];
        const double v = limit_distilled_hardy(r, s);
        SweepRecord& rec = records[k];
        rec.r = r;
        rec.s = s;
        rec.parent_value = 0.0;
        rec.distilled_value = v;
        rec.gap = v;
    });
    return records;
}

/// CHSH of the n-copy child of the B_Q_max mixture at fixed lambda, one record
/// per requested copy count.
inline std::vector<SweepRecord> sweep_chsh_copies(double lambda, std::span<const long long> ns) {
    if (ns.empty()) throw GridError("sweep_chsh_copies: empty copy-count list");
    const double parent = chsh_n_lambda(lambda, 1);
    std::vector<SweepRecord> records(ns.size());
    detail::parallel_for(records.size(), [&](std::size_t k) {
        SweepRecord& rec = records[k];
        rec.lambda = lambda;
        rec.n_opt = ns[k];
        rec.parent_value = parent;
        rec.distilled_value = chsh_n_lambda(lambda, ns[k]);
        rec.gap = rec.distilled_value - parent;
    });
    return records;
}

inline const SweepRecord& max_by_gap(std::span<const SweepRecord> records) {
    if (records.empty()) throw GridError("max_by_gap: empty sweep");
    std::size_t best = 0;
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].gap > records[best].gap) best = i;
    return records[best];
}

inline const SweepRecord& max_by_distilled(std::span<const SweepRecord> records) {
    if (records.empty()) throw GridError("max_by_distilled: empty sweep");
    std::size_t best = 0;
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].distilled_value > records[best].distilled_value) best = i;
    return records[best];
}

/// CSV with header r,s,lambda,n_opt,parent_value,distilled_value,gap; absent
/// axes stay empty; doubles carry full precision with '.' separators.
inline void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records) {
    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "r,s,lambda,n_opt,parent_value,distilled_value,gap\n";
    for (const SweepRecord& rec : records) {
        os << (rec.r ? num(*rec.r) : "") << ',' << (rec.s ? num(*rec.s) : "") << ','
           << (rec.lambda ? num(*rec.lambda) : "") << ','
           << (rec.n_opt ? std::to_string(*rec.n_opt) : "") << ',' << num(rec.parent_value) << ','
           << num(rec.distilled_value) << ',' << num(rec.gap) << '\n';
    }
}

}  // namespace nsbox::distill
