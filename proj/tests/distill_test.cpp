#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "nsbox/catalog.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/distill.hpp"
#include "nsbox/hardy.hpp"
#include "nsbox/wiring.hpp"
#include "test_util.hpp"

using namespace nsbox;
using namespace nsbox::distill;

namespace {

Behavior mix_simplex(const SimplexDecomposition& w) {
    const auto& basis = simplex_basis();
    return mix(std::span<const double>(w.c.data(), 9),
               std::span<const Behavior>(basis.data(), 9));
}

Behavior lambda_hardy_mixture(double lambda) {
    return mix({lambda, 1.0 - lambda}, {h_q_max(), local_box(1)});
}

Behavior lambda_chsh_mixture(double lambda) {
    return mix({lambda, 1.0 - lambda}, {b_q_max(), local_box(1)});
}

}  // namespace

TEST_CASE("n-copy Hardy success law") {
    CHECK(hardy_success_n(0.1, 0.85, 8) == Catch::Approx(0.157977).margin(1e-6));
    const auto hq = decompose_simplex(h_q_max());
    CHECK(hardy_success_n(hq.c[0], hq.c[1], 1) == Catch::Approx(0.0901699).margin(1e-7));
    // both bases below 1: success decays monotonically to zero
    double prev = hardy_success_n(0.3, 0.6, 5);
    for (long long n : {10LL, 100LL, 1000LL, 100000LL}) {
        const double v = hardy_success_n(0.3, 0.6, n);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev <= 1e-12);
    CHECK_THROWS_AS(hardy_success_n(0.0, 0.5, 2), DomainError);
    CHECK_THROWS_AS(hardy_success_n(0.6, 0.6, 2), DomainError);
    CHECK_THROWS_AS(hardy_success_n(0.1, 0.85, 0), DomainError);
}

TEST_CASE("optimal copy count on reference inputs") {
    const auto hns = optimal_copies(0.1, 0.85);
    CHECK(hns.n_star == Catch::Approx(7.5826).margin(5e-4));
    CHECK(hns.n_opt == 8);
    CHECK(hns.value_opt == Catch::Approx(0.157977).margin(1e-6));

    // H_Q_max itself is not distillable: c0/2 + 2c1 = 0.382 < 1
    const auto hq = decompose_simplex(h_q_max());
    const auto best = optimal_copies(hq.c[0], hq.c[1]);
    CHECK(best.n_opt == 1);
    CHECK(best.value_opt == Catch::Approx(hq.c[0] / 2.0).margin(1e-14));

    // mixture at lambda = 1/2
    const auto d = decompose_simplex(lambda_hardy_mixture(0.5));
    const auto mid = optimal_copies(d.c[0], d.c[1]);
    CHECK(mid.n_opt == 2);
    CHECK(mid.value_opt == Catch::Approx(0.0537).margin(1e-4));

    // c1 = 0 degenerates to a single copy
    const auto degenerate = optimal_copies(0.4, 0.0);
    CHECK(degenerate.n_opt == 1);
    CHECK(degenerate.value_opt == Catch::Approx(0.2).margin(1e-15));

    CHECK_THROWS_AS(optimal_copies(0.0, 0.5), DomainError);
}

TEST_CASE("optimal copy count matches exhaustive sweeps and success is unimodal") {
    test::Rng rng(61);
    for (int k = 0; k < 100; ++k) {
        const double c0 = rng.uniform(0.01, 0.6);
        const double lo = std::max(0.0, 0.5 - c0 / 4.0) + 1e-3;
        const double hi = 1.0 - c0 - 1e-3;
        const double c1 = rng.uniform(lo, hi);
        REQUIRE(c0 / 2.0 + 2.0 * c1 > 1.0);

        long long argmax = 1;
        double best = hardy_success_n(c0, c1, 1);
        bool descending = false;
        bool unimodal = true;
        double prev = best;
        for (long long n = 2; n <= 10000; ++n) {
            const double v = hardy_success_n(c0, c1, n);
            if (v > best + 1e-15) {
                best = v;
                argmax = n;
            }
            if (v < prev - 1e-15) descending = true;
            if (descending && v > prev + 1e-15) unimodal = false;
            prev = v;
        }
        CHECK(unimodal);

        const auto opt = optimal_copies(c0, c1);
        CHECK(opt.value_opt >= best - 1e-15);
        if (opt.n_opt != argmax)
            CHECK(std::abs(hardy_success_n(c0, c1, opt.n_opt) - best) <= 1e-15);
    }
}

TEST_CASE("Tsirelson gain") {
    CHECK(tsirelson_gain(2.0, 2.0 * std::sqrt(2.0)) == Catch::Approx(100.0).margin(1e-12));
    CHECK(tsirelson_gain(2.0, 2.32928) == Catch::Approx(39.748).margin(1e-3));
    CHECK(tsirelson_gain(2.7, 2.7) == 0.0);
}

TEST_CASE("quantum Hardy family tables") {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    const Behavior golden = hardy_family(g, g);
    CHECK(max_abs_diff(golden, h_q_max()) <= 1e-12);
    CHECK(hardy_test(golden, 1e-12).success == Catch::Approx(0.0901699).margin(1e-7));

    CHECK(hardy_test(hardy_family(0.0, 0.7)).success == 0.0);

    const Behavior white = hardy_family(0.1241, 0.8896);
    CHECK(is_valid(white));
    CHECK(hardy_test(white, 1e-12).is_hardy);

    CHECK_THROWS_AS(hardy_family(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hardy_family(-0.1, 0.5), DomainError);

    // interior family members validate and pass the Hardy test at 1e-12
    test::Rng rng(67);
    for (int k = 0; k < 200; ++k) {
        const Behavior b = hardy_family(rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99));
        CHECK(is_valid(b));
        CHECK(hardy_test(b, 1e-12).is_hardy);
    }
}

TEST_CASE("family coefficients agree with the least-squares decomposition") {
    test::Rng rng(71);
    for (int k = 0; k < 100; ++k) {
        const double r = rng.uniform(0.05, 0.95), s = rng.uniform(0.05, 0.95);
        const auto closed = hardy_family_coeffs(r, s);
        const auto ls = decompose_simplex(hardy_family(r, s));
        for (int i = 0; i < 9; ++i)
            CHECK(closed.c[std::size_t(i)] == Catch::Approx(ls.c[std::size_t(i)]).margin(1e-10));
    }
}

TEST_CASE("distillable region predicate") {
    CHECK(distillable_region(0.1241, 0.8896));
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK_FALSE(distillable_region(g, g));
    test::Rng rng(73);
    for (int k = 0; k < 100; ++k) CHECK_FALSE(distillable_region(rng.uniform(0.0, 1.0), rng.uniform(0.0, 0.5)));
}

TEST_CASE("region boundary matches the sign of the two-copy gain") {
    test::Rng rng(79);
    int crossings = 0;
    for (int ray = 0; ray < 100; ++ray) {
        // segment between two random points of the square
        const double r0 = rng.uniform(0.02, 0.98), s0 = rng.uniform(0.02, 0.98);
        const double r1 = rng.uniform(0.02, 0.98), s1 = rng.uniform(0.02, 0.98);
        auto at = [&](double t) {
            return std::pair{r0 + t * (r1 - r0), s0 + t * (s1 - s0)};
        };
        auto inside = [&](double t) {
            const auto [r, s] = at(t);
            return distillable_region(r, s);
        };
        if (inside(0.0) == inside(1.0)) continue;
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = (lo + hi) / 2.0;
            (inside(mid) == inside(0.0) ? lo : hi) = mid;
        }
        for (double t : {lo - 1e-3, hi + 1e-3}) {
            if (t < 0.0 || t > 1.0) continue;
            const auto [r, s] = at(t);
            const auto w = hardy_family_coeffs(r, s);
            if (w.c[0] < 1e-4) continue;  // degenerate parent, gain below noise
            const double parent = w.c[0] / 2.0;
            const double child = hardy_success_n(w.c[0], w.c[1], 2);
            if (distillable_region(r, s))
                CHECK(child > parent);
            else
                CHECK(child <= parent);
        }
        ++crossings;
    }
    CHECK(crossings >= 20);
}

TEST_CASE("distillation gap at reference points") {
    const auto white = distillation_gap(0.1241, 0.8896);
    CHECK(white.gap == Catch::Approx(0.0101896).margin(1e-4));
    CHECK(white.n_opt == 4);

    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    const auto golden = distillation_gap(g, g);
    CHECK(golden.gap == 0.0);
    CHECK(golden.n_opt == 1);

    // parent near-local: gap collapses with r
    for (double r : {1e-2, 1e-3, 1e-4}) CHECK(distillation_gap(r, 0.9).gap <= 2.0 * r);
    CHECK_THROWS_AS(distillation_gap(0.0, 0.5), DomainError);
}

TEST_CASE("limiting distilled Hardy success") {
    CHECK(limit_distilled_hardy(0.5, 2.0 / 3.0) == Catch::Approx(0.0433049).margin(1e-5));
    // closed form at the optimum equals (1/9)(8/9)^8 exactly
    CHECK(limit_distilled_hardy(0.5, 2.0 / 3.0) ==
          Catch::Approx(std::pow(8.0 / 9.0, 8) / 9.0).margin(1e-15));

    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(limit_distilled_hardy(g, g) == Catch::Approx(0.0410237).margin(1e-6));

    CHECK_THROWS_AS(limit_distilled_hardy(0.5, 1.0), DomainError);

    // finite-lambda oracle: optimally distilled mixture at lambda = 1e-6
    test::Rng rng(83);
    for (int k = 0; k < 20; ++k) {
        const double r = rng.uniform(0.2, 0.8), s = rng.uniform(0.2, 0.8);
        const double lambda = 1e-6;
        const Behavior box = mix({lambda, 1.0 - lambda}, {hardy_family(r, s), local_box(1)});
        const auto d = decompose_simplex(box);
        const auto opt = optimal_copies(d.c[0], d.c[1]);
        CHECK(limit_distilled_hardy(r, s) == Catch::Approx(opt.value_opt).margin(1e-3));
    }
}

TEST_CASE("algebraic cross-check of the limit formula") {
    // Factored route: with A = (1-s+(1-r)rs^2)/(1-rs), B = (1-s+(1-r)rs)/(1-rs),
    // the limit is (A/B)^(A/(B-A)) (B-A)/B.
    test::Rng rng(89);
    for (int k = 0; k < 200; ++k) {
        const double r = rng.uniform(0.05, 0.95), s = rng.uniform(0.05, 0.95);
        const double d = 1.0 - r * s;
        const double a = (1.0 - s + (1.0 - r) * r * s * s) / d;
        const double b = (1.0 - s + (1.0 - r) * r * s) / d;
        const double expected = std::pow(a / b, a / (b - a)) * (b - a) / b;
        CHECK(limit_distilled_hardy(r, s) == Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("n-copy CHSH law for the B_Q_max mixture") {
    CHECK(chsh_n_lambda(1.0, 1) == Catch::Approx(2.0 * std::sqrt(2.0)).margin(1e-12));
    for (long long n : {1LL, 2LL, 5LL, 40LL}) CHECK(chsh_n_lambda(0.0, n) == Catch::Approx(2.0).margin(1e-15));

    // two-copy polynomial 2 + 2(2sqrt2-2)l + (11/4-3sqrt2)l^2
    test::Rng rng(97);
    for (int k = 0; k < 50; ++k) {
        const double l = rng.uniform(0.0, 1.0);
        const double expected =
            2.0 + 2.0 * (2.0 * std::sqrt(2.0) - 2.0) * l + (11.0 / 4.0 - 3.0 * std::sqrt(2.0)) * l * l;
        CHECK(chsh_n_lambda(l, 2) == Catch::Approx(expected).margin(1e-12));
    }

    // law equals the wired-and-measured value
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double l = rng.uniform(0.05, 1.0);
        const Behavior box = lambda_chsh_mixture(l);
        for (long long n : {1LL, 2LL, 3LL, 6LL, 15LL})
            worst = std::max(worst,
                             std::abs(chsh_n_lambda(l, n) - chsh(wiring::wire_n_closed(box, n))));
    }
    CHECK(worst <= 1e-10);

    CHECK_THROWS_AS(chsh_n_lambda(1.5, 2), DomainError);
    CHECK_THROWS_AS(chsh_n_lambda(0.5, 0), DomainError);
}

TEST_CASE("CHSH peak location") {
    const auto tiny = peak_chsh_lambda(1e-7);
    CHECK(tiny.value == Catch::Approx(2.32928).margin(1e-4));
    CHECK(std::abs(double(tiny.n_opt) - 1.04739e7) / 1.04739e7 <= 0.01);

    const auto half = peak_chsh_lambda(0.5);
    CHECK(half.n_opt == 2);
    CHECK(half.value == Catch::Approx(2.455).margin(1e-3));
    // exhaustive oracle over n = 1..50
    double best = -4.0;
    long long argmax = 1;
    for (long long n = 1; n <= 50; ++n) {
        const double v = chsh_n_lambda(0.5, n);
        if (v > best) {
            best = v;
            argmax = n;
        }
    }
    CHECK(half.n_opt == argmax);
    CHECK(half.value == Catch::Approx(best).margin(1e-15));

    // around the two-copy threshold
    const double lc = two_copy_chsh_lambda_threshold();
    CHECK(lc == Catch::Approx(0.55501).margin(1e-5));
    const auto below = peak_chsh_lambda(lc - 1e-6);
    CHECK(below.value > chsh_n_lambda(lc - 1e-6, 1));
    CHECK(below.n_opt == 2);
    const auto above = peak_chsh_lambda(lc + 1e-6);
    CHECK(above.n_opt == 1);
    CHECK(above.value == Catch::Approx(chsh_n_lambda(lc + 1e-6, 1)).margin(1e-15));
}

TEST_CASE("distilled CHSH dips below 2 past the peak, then saturates") {
    const double lambda = 1e-7;
    const auto peak = peak_chsh_lambda(lambda);
    const double dipped = chsh_n_lambda(lambda, 35LL * 10000000LL);
    CHECK(dipped < 2.0);
    CHECK(double(peak.n_opt) < 35e7);
    CHECK(chsh_n_lambda(lambda, 1000000000000LL) == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("two-copy ball radius") {
    CHECK(two_copy_ball_radius(1.0) == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(two_copy_ball_radius(0.0) == 0.0);
    CHECK(two_copy_ball_radius(0.18034) == Catch::Approx(0.120227).margin(1e-6));
    CHECK_THROWS_AS(two_copy_ball_radius(1.5), DomainError);
}

TEST_CASE("golden-ratio threshold for the maximal-Hardy mixtures") {
    const double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));
    for (double sign : {-1.0, 1.0}) {
        const double lambda = inv_phi + sign * 1e-6;
        const Behavior parent = lambda_hardy_mixture(lambda);
        const double p1 = hardy_test(parent).success;
        const double p2 = hardy_test(wiring::wire_pair(parent, parent)).success;
        const auto d = decompose_simplex(parent);
        const double law = hardy_success_n(d.c[0], d.c[1], 2);
        CHECK(p2 == Catch::Approx(law).margin(1e-12));
        if (sign < 0.0)
            CHECK(p2 > p1);
        else
            CHECK(p2 <= p1);
    }
}

TEST_CASE("small-lambda optimum of the maximal-Hardy mixture") {
    const auto d = decompose_simplex(lambda_hardy_mixture(1e-6));
    const auto opt = optimal_copies(d.c[0], d.c[1]);
    CHECK(opt.value_opt == Catch::Approx(0.0410237).margin(1e-3));
}

TEST_CASE("axis points carry the half-step interior offset") {
    const auto pts = axis_points({0.0, 1.0, 4});
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Catch::Approx(0.125).margin(1e-15));
    CHECK(pts[3] == Catch::Approx(0.875).margin(1e-15));
    const auto single = axis_points({0.3, 0.3, 1});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Catch::Approx(0.3).margin(1e-15));
    CHECK_THROWS_AS(axis_points({1.0, 0.0, 4}), GridError);
    CHECK_THROWS_AS(axis_points({0.0, 1.0, 0}), GridError);
}

TEST_CASE("single-cell sweep matches the pointwise operation") {
    const auto recs = sweep_hardy_gap({0.1241, 0.1241, 1}, {0.8896, 0.8896, 1});
    REQUIRE(recs.size() == 1);
    const auto gap = distillation_gap(0.1241, 0.8896);
    CHECK(recs[0].gap == Catch::Approx(gap.gap).margin(1e-15));
    CHECK(*recs[0].n_opt == gap.n_opt);
    CHECK(*recs[0].r == Catch::Approx(0.1241).margin(1e-15));
}

TEST_CASE("sweep records come in row-major grid order") {
    const auto recs = sweep_limit_distilled({0.2, 0.8, 3}, {0.3, 0.9, 2});
    REQUIRE(recs.size() == 6);
    const auto rs = axis_points({0.2, 0.8, 3});
    const auto ss = axis_points({0.3, 0.9, 2});
    std::size_t k = 0;
    for (double r : rs)
        for (double s : ss) {
            CHECK(*recs[k].r == Catch::Approx(r).margin(1e-15));
            CHECK(*recs[k].s == Catch::Approx(s).margin(1e-15));
            CHECK(recs[k].distilled_value ==
                  Catch::Approx(limit_distilled_hardy(r, s)).margin(1e-15));
            ++k;
        }
}

TEST_CASE("sweep results are independent of the thread count") {
    setenv("NSBOX_THREADS", "7", 1);
    const auto threaded = sweep_hardy_gap({0.0, 1.0, 40}, {0.0, 1.0, 40});
    setenv("NSBOX_THREADS", "1", 1);
    const auto serial = sweep_hardy_gap({0.0, 1.0, 40}, {0.0, 1.0, 40});
    unsetenv("NSBOX_THREADS");
    REQUIRE(threaded.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(threaded[i].gap == serial[i].gap);
        CHECK(*threaded[i].n_opt == *serial[i].n_opt);
    }
}

TEST_CASE("gap sweep locates the published optimum") {
    const auto recs = sweep_hardy_gap({0.0, 1.0, 200}, {0.0, 1.0, 200});
    REQUIRE(recs.size() == 40000);
    const auto& m = max_by_gap(recs);
    CHECK(m.gap == Catch::Approx(0.0101896).margin(1e-4));
    CHECK(std::abs(*m.r - 0.1241) <= 0.005);
    CHECK(std::abs(*m.s - 0.8896) <= 0.005);
    CHECK(*m.n_opt == 4);
}

TEST_CASE("limit sweep peaks at r = 1/2, s = 2/3") {
    const auto recs = sweep_limit_distilled({0.0, 1.0, 200}, {0.0, 1.0, 200});
    const auto& m = max_by_distilled(recs);
    CHECK(std::abs(*m.r - 0.5) <= 0.005);
    CHECK(std::abs(*m.s - 2.0 / 3.0) <= 0.005);
    CHECK(m.distilled_value <= limit_distilled_hardy(0.5, 2.0 / 3.0) + 1e-12);
}

TEST_CASE("copy-count sweep emits one record per n") {
    const std::array<long long, 3> ns = {1, 2, 3};
    const auto recs = sweep_chsh_copies(0.5, ns);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].gap == 0.0);
    CHECK(recs[1].distilled_value == Catch::Approx(chsh_n_lambda(0.5, 2)).margin(1e-15));
    CHECK(*recs[2].n_opt == 3);
    CHECK(*recs[0].lambda == 0.5);
    CHECK_FALSE(recs[0].r.has_value());
}

TEST_CASE("CSV output is stable and complete") {
    const auto recs = sweep_chsh_copies(0.25, std::array<long long, 2>{1, 2});
    std::ostringstream os;
    write_sweep_csv(os, recs);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "r,s,lambda,n_opt,parent_value,distilled_value,gap");
    std::getline(is, line);
    char expected[160];
    std::snprintf(expected, sizeof expected, ",,0.25,1,%.17g,%.17g,0", chsh_n_lambda(0.25, 1),
                  chsh_n_lambda(0.25, 1));
    CHECK(line == expected);
    std::getline(is, line);
    CHECK(line.rfind(",,0.25,2,", 0) == 0);
}
