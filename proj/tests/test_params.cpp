#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rindler/params.hpp"

using namespace rindler;

TEST_CASE("derive_constants reproduces desk-scale values") {
    auto p = natural_units();
    const auto d = derive_constants(p, 1.0);
    CHECK(d.E_tilde == Catch::Approx(1.0));
    CHECK(d.kappa == Catch::Approx(2.0));
    CHECK(d.gamma == Catch::Approx(8.0));
    CHECK(d.sigma == Catch::Approx(2.0 / std::sqrt(8.0)).epsilon(1e-12));
}

TEST_CASE("derive_constants zero-energy case") {
    const auto d = derive_constants(natural_units(), 0.0);
    CHECK(d.kappa == 0.0);
    CHECK(d.sigma == 0.0);
}

TEST_CASE("omega depends only on alpha and c") {
    auto p = natural_units(0.1);
    CHECK(derive_constants(p, 1.0).omega == Catch::Approx(std::sqrt(2.0) * 0.1).epsilon(1e-12));
    p.p_y = 0.7;
    p.p_z = -0.3;
    p.m = 5.0;
    CHECK(derive_constants(p, 1.0).omega == Catch::Approx(std::sqrt(2.0) * 0.1).epsilon(1e-12));
}

TEST_CASE("kappa is linear in E") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uni(0.1, 5.0);
    for (int i = 0; i < 20; ++i) {
        auto p = natural_units(uni(rng));
        p.p_y = uni(rng);
        const double e = uni(rng);
        const double k1 = derive_constants(p, e).kappa;
        const double k2 = derive_constants(p, 2.0 * e).kappa;
        CHECK(k2 == Catch::Approx(2.0 * k1).epsilon(1e-13));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(derive_constants(natural_units(), std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(natural_units(0.0), std::invalid_argument);
    PhysicalParams bad;
    bad.m = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = PhysicalParams{};
    bad.theta = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("natural_units defaults") {
    const auto p = natural_units();
    CHECK(p.m == 1.0);
    CHECK(p.c == 1.0);
    CHECK(p.hbar == 1.0);
    CHECK(p.alpha == 1.0);
    CHECK(p.theta == 0.0);
    CHECK(p.p_y == 0.0);
    CHECK(p.p_z == 0.0);
    CHECK(derive_constants(p, 1.0).kappa == Catch::Approx(2.0));
}

TEST_CASE("coordinate maps") {
    const auto p = natural_units();
    const auto maps = coordinate_maps(p, derive_constants(p, 1.0));
    CHECK(maps.xi_of_x(0.0) == 1.0);
    CHECK(maps.zeta_of_x(0.0) == Catch::Approx(std::sqrt(8.0)).epsilon(1e-12));

    SECTION("round trip is the identity") {
        for (double x : {-0.9, -0.5, 0.0, 0.3, 1.7, 12.0}) {
            CHECK(maps.x_of_zeta(maps.zeta_of_x(x)) == Catch::Approx(x).margin(1e-12));
        }
    }
    SECTION("strictly increasing") {
        double prev = maps.zeta_of_x(-0.99);
        for (double x = -0.9; x < 5.0; x += 0.1) {
            const double z = maps.zeta_of_x(x);
            CHECK(z > prev);
            prev = z;
        }
    }
    SECTION("inverse maps reject the far side of the horizon") {
        CHECK_THROWS_AS(maps.x_of_xi(0.0), std::domain_error);
        CHECK_THROWS_AS(maps.x_of_xi(-1.0), std::domain_error);
        CHECK_THROWS_AS(maps.x_of_zeta(-0.5), std::domain_error);
    }
}
