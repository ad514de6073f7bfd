#include <catch2/catch_amalgamated.hpp>

#include "mext/constructors.hpp"
#include "mext/equivalence.hpp"
#include "mext/metric_group.hpp"

using namespace mext;

namespace {

PreModularData toric_code() {
    MetricGroup m;
    m.group = AbelianGroup({2, 2});
    m.q = {Rational(0), Rational(0), Rational(0), Rational(1, 2)};
    return pointed_mtc(m);
}

} // namespace

TEST_CASE("self equivalence of toric code allows the e-m swap", "[equivalence]") {
    auto tc = toric_code();
    auto pi = find_equivalence(tc, tc);
    REQUIRE(pi.has_value());
    // either identity or the swap of the two bosons 1 <-> 2
    bool identity = (*pi == std::vector<int>{0, 1, 2, 3});
    bool swap = (*pi == std::vector<int>{0, 2, 1, 3});
    CHECK((identity || swap));

    // the swap is an explicit valid equivalence: pin it and search
    auto pinned = find_equivalence(tc, tc, {{1, 2}});
    REQUIRE(pinned.has_value());
    CHECK((*pinned)[1] == 2);
    CHECK((*pinned)[2] == 1);
}

TEST_CASE("distinct ising categories are inequivalent", "[equivalence]") {
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
            auto ia = ising_mtc(Rational(2 * a + 1, 16));
            auto ib = ising_mtc(Rational(2 * b + 1, 16));
            INFO("a = " << a << ", b = " << b);
            CHECK_FALSE(find_equivalence(ia, ib).has_value());
        }
}

TEST_CASE("full identity pin", "[equivalence]") {
    auto is = ising_mtc(Rational(1, 16));
    auto pi = find_equivalence(is, is, {{0, 0}, {1, 1}, {2, 2}});
    REQUIRE(pi.has_value());
    CHECK(*pi == std::vector<int>{0, 1, 2});
}

TEST_CASE("ill-formed pinned maps are rejected", "[equivalence]") {
    auto is = ising_mtc(Rational(1, 16));
    CHECK_THROWS_AS(find_equivalence(is, is, {{0, 0}, {1, 0}}), input_error);
    CHECK_THROWS_AS(find_equivalence(is, is, {{0, 5}}), input_error);
}

TEST_CASE("degenerate bases are distinguished by fusion", "[equivalence]") {
    auto a = rep_abelian({4});
    auto b = rep_abelian({2, 2});
    // same twists (all 0) and S (all ones), different group law
    CHECK_FALSE(find_equivalence(a, b).has_value());
    CHECK(find_equivalence(a, a).has_value());
}
