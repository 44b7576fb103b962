#include <catch2/catch_amalgamated.hpp>

#include "nsbox/catalog.hpp"
#include "nsbox/decompose.hpp"
#include "test_util.hpp"

using namespace nsbox;

namespace {

// Independent closed-form coordinates: eight weights sit directly in table
// cells that only one basis box populates, and c0 follows from p(00|00).
SimplexDecomposition read_off_decomposition(const Behavior& b) {
    SimplexDecomposition d;
    d.c[1] = b.at(0, 0, 0, 1);
    d.c[2] = b.at(0, 0, 1, 0);
    d.c[3] = b.at(1, 0, 1, 1);
    d.c[4] = b.at(0, 1, 1, 1);
    d.c[5] = b.at(1, 1, 0, 0);
    d.c[6] = b.at(0, 1, 0, 0);
    d.c[7] = b.at(1, 0, 0, 0);
    d.c[8] = b.at(1, 1, 1, 1);
    d.c[0] = 2.0 * (b.at(0, 0, 0, 0) - d.c[6] - d.c[7] - d.c[8]);
    return d;
}

}  // namespace

TEST_CASE("decomposition of the maximal quantum Hardy box") {
    const double s5 = std::sqrt(5.0);
    const auto d = decompose_simplex(h_q_max());
    CHECK(d.c[0] == Catch::Approx(5.0 * s5 - 11.0).margin(1e-12));
    for (int i = 1; i <= 4; ++i)
        CHECK(d.c[std::size_t(i)] == Catch::Approx((7.0 - 3.0 * s5) / 2.0).margin(1e-12));
    CHECK(d.c[5] == Catch::Approx(s5 - 2.0).margin(1e-12));
    for (int i = 6; i < 9; ++i) CHECK(std::abs(d.c[std::size_t(i)]) <= 1e-12);
    CHECK(d.residual <= 1e-12);
}

TEST_CASE("vertices decompose to unit weight") {
    const auto d = decompose_simplex(pr_box());
    CHECK(d.c[0] == Catch::Approx(1.0).margin(1e-12));
    for (int i = 1; i < 9; ++i) CHECK(std::abs(d.c[std::size_t(i)]) <= 1e-12);
}

TEST_CASE("the uniform box lies outside the simplex") {
    Behavior uniform{};
    for (int s = 0; s < 4; ++s) uniform.p[s] = {0.25, 0.25, 0.25, 0.25};
    CHECK_THROWS_AS(decompose_simplex(uniform), NotInSimplexError);
    try {
        decompose_simplex(uniform);
    } catch (const NotInSimplexError& e) {
        // exact affine coordinates put weight -1 on P_NL
        CHECK(e.min_weight == Catch::Approx(-1.0).margin(1e-9));
        CHECK(e.residual <= 1e-9);
    }
}

TEST_CASE("decompose is a left inverse of mix on the simplex") {
    test::Rng rng(17);
    const auto& basis = simplex_basis();
    for (int k = 0; k < 300; ++k) {
        const auto w = test::random_simplex_weights(rng);
        const Behavior b = mix(std::span<const double>(w.c.data(), 9),
                               std::span<const Behavior>(basis.data(), 9));
        const auto d = decompose_simplex(b);
        for (int i = 0; i < 9; ++i)
            CHECK(d.c[std::size_t(i)] == Catch::Approx(w.c[std::size_t(i)]).margin(1e-10));
        CHECK(d.residual <= 1e-12);
    }
}

TEST_CASE("least squares agrees with the closed-form read-off") {
    test::Rng rng(19);
    const auto& basis = simplex_basis();
    for (int k = 0; k < 200; ++k) {
        const auto w = test::random_simplex_weights(rng);
        const Behavior b = mix(std::span<const double>(w.c.data(), 9),
                               std::span<const Behavior>(basis.data(), 9));
        const auto ls = decompose_simplex(b);
        const auto ro = read_off_decomposition(b);
        for (int i = 0; i < 9; ++i)
            CHECK(ls.c[std::size_t(i)] == Catch::Approx(ro.c[std::size_t(i)]).margin(1e-12));
    }
}

TEST_CASE("correlators and CHSH survive reconstruction") {
    test::Rng rng(23);
    const auto& basis = simplex_basis();
    for (int k = 0; k < 100; ++k) {
        const auto w = test::random_simplex_weights(rng);
        const Behavior b = mix(std::span<const double>(w.c.data(), 9),
                               std::span<const Behavior>(basis.data(), 9));
        const Behavior back = reconstruct(decompose_simplex(b));
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                CHECK(correlator(back, x, y) == Catch::Approx(correlator(b, x, y)).margin(1e-12));
        CHECK(chsh(back) == Catch::Approx(chsh(b)).margin(1e-12));
    }
}
