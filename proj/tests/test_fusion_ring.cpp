#include <catch2/catch_amalgamated.hpp>

#include "mext/constructors.hpp"
#include "mext/fusion_ring.hpp"

using namespace mext;

TEST_CASE("frobenius-perron dims of the ising ring", "[ring]") {
    auto ising = ising_mtc(Rational(1, 16));
    auto d = fp_dims(ising.ring);
    CHECK(d[0] == Catch::Approx(1.0).margin(1e-9));
    CHECK(d[1] == Catch::Approx(1.0).margin(1e-9));
    CHECK(d[2] == Catch::Approx(std::sqrt(2.0)).margin(1e-9));
}

TEST_CASE("fp dims of trivial and group rings", "[ring]") {
    auto triv = rep_abelian({});
    CHECK(fp_dims(triv.ring) == std::vector<double>{1.0});

    auto z2z2 = rep_abelian({2, 2});
    auto d = fp_dims(z2z2.ring);
    REQUIRE(d.size() == 4);
    for (double x : d)
        CHECK(x == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("ring validation rejects broken tables", "[ring]") {
    FusionRing r({"1", "a"}, 0, {0, 1});
    r.set_N(0, 0, 0, 1);
    r.set_N(0, 1, 1, 1);
    r.set_N(1, 0, 1, 1);
    // a x a undefined: duality N_{aa}^1 = 1 is missing
    CHECK_THROWS_AS(r.validate(), invalid_ring_error);
    r.set_N(1, 1, 0, 1);
    CHECK_NOTHROW(r.validate());

    FusionRing bad({"1", "a"}, 0, {0, 0});
    CHECK_THROWS_AS(bad.validate(), invalid_ring_error);
}

TEST_CASE("invertibility and unique products", "[ring]") {
    auto tc = rep_abelian({2, 2});
    CHECK(tc.ring.is_invertible(3));
    CHECK(tc.ring.fuse_invertible(1, 2) == 3);

    auto ising = ising_mtc(Rational(1, 16));
    CHECK(ising.ring.is_invertible(1));
    CHECK_FALSE(ising.ring.is_invertible(2));
    CHECK_THROWS_AS(ising.ring.fuse_invertible(2, 2), invalid_ring_error);
}
