#include <catch2/catch_amalgamated.hpp>

#include "mext/constructors.hpp"
#include "mext/symmetric_center.hpp"

using namespace mext;
using Catch::Approx;

TEST_CASE("pointed data from metric groups", "[constructors]") {
    // semion: c = 1
    MetricGroup m;
    m.group = AbelianGroup({2});
    m.q = {Rational(0), Rational(1, 4)};
    auto sem = pointed_mtc(m);
    CHECK(sem.rank() == 2);
    CHECK(is_modular(sem).is_modular);
    CHECK(central_charge(sem).c == Rational(1));

    // trivial group
    auto triv = rep_abelian({});
    CHECK(triv.rank() == 1);
    CHECK(is_modular(triv).is_modular);

    // degenerate b still yields valid premodular data
    auto r2 = rep_abelian({2});
    CHECK_FALSE(is_modular(r2).is_modular);
    CHECK(r2.balancing_residual() < 1e-12);
}

TEST_CASE("metric group invariants are enforced", "[constructors]") {
    MetricGroup bad;
    bad.group = AbelianGroup({3});
    bad.q = {Rational(0), Rational(1, 3), Rational(2, 3)}; // q(-1) != q(1)
    CHECK_THROWS_AS(pointed_mtc(bad), inconsistent_data_error);
}

TEST_CASE("ising family", "[constructors]") {
    for (int k = 0; k < 8; ++k) {
        auto is = ising_mtc(Rational(2 * k + 1, 16));
        INFO("s = " << 2 * k + 1 << "/16");
        CHECK(is_modular(is).is_modular);
        CHECK(transparent_objects(is) == std::vector<int>{0});
        auto ring = verlinde_fusion(is);
        CHECK(ring.N(2, 2, 0) == 1);
        CHECK(ring.N(2, 2, 1) == 1);
    }
    // the eight twists theta_x are pairwise distinct
    std::set<Rational> seen;
    for (int k = 0; k < 8; ++k)
        seen.insert(ising_mtc(Rational(2 * k + 1, 16)).twists[2]);
    CHECK(seen.size() == 8);

    CHECK_THROWS_AS(ising_mtc(Rational(1, 8)), input_error);
    CHECK_THROWS_AS(ising_mtc(Rational(2, 16)), input_error);
}

TEST_CASE("svect and rep bases", "[constructors]") {
    auto sv = svect_data();
    auto cls = classify_symmetric(sv, transparent_objects(sv));
    CHECK(cls.kind == SymmetricKind::super_tannakian);
    CHECK(cls.group_order == 2);

    auto r3 = rep_abelian({3});
    auto c3 = classify_symmetric(r3, transparent_objects(r3));
    CHECK(c3.kind == SymmetricKind::tannakian);
    CHECK(c3.group_order == 3);

    CHECK(rep_abelian({}).rank() == 1);
}

TEST_CASE("sixteenfold pointed entries", "[constructors]") {
    for (int t = 0; t < 8; ++t) {
        auto sf = sixteenfold_pointed(t);
        auto pm = pointed_mtc(sf.metric);
        INFO("t = " << t);
        CHECK(is_modular(pm).is_modular);
        CHECK(pm.twists[std::size_t(sf.fermion)] == Rational(1, 2));
        CHECK(central_charge(pm).c == Rational(t));
        // group type: Z2xZ2 for even t, Z4 for odd t
        if (t % 2 == 0)
            CHECK(sf.metric.group.orders == std::vector<int>{2, 2});
        else
            CHECK(sf.metric.group.orders == std::vector<int>{4});
    }
}
