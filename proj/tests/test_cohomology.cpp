#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mext/cohomology.hpp"
#include "mext/symmetry_breaking.hpp"

using namespace mext;

TEST_CASE("standard cyclic cocycles", "[cohomology]") {
    auto w0 = standard_cocycle_cyclic(4, 0);
    for (auto& v : w0.values)
        CHECK(v.is_zero());

    auto w = standard_cocycle_cyclic(2, 1);
    CHECK(w.value(1, 1, 1) == Rational(1, 2));
    CHECK(w.value(1, 1, 0) == Rational(0));

    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            INFO("n = " << n << " k = " << k);
            CHECK(standard_cocycle_cyclic(n, k).is_cocycle());
        }
}

TEST_CASE("coboundary of a coboundary vanishes", "[cohomology]") {
    AbelianGroup g({2, 2});
    auto d3 = detail::bar_coboundary(g, 3);
    auto d4 = detail::bar_coboundary(g, 4);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<mpz_class> x(std::size_t(d3.cols()));
        for (auto& v : x)
            v = int(rng() % 19) - 9;
        // y = d3 x, then d4 y must vanish exactly
        std::vector<mpz_class> y(std::size_t(d3.rows()));
        for (int r = 0; r < d3.rows(); ++r)
            for (int c = 0; c < d3.cols(); ++c)
                y[std::size_t(r)] += d3(r, c) * x[std::size_t(c)];
        for (int r = 0; r < d4.rows(); ++r) {
            mpz_class acc = 0;
            for (int c = 0; c < d4.cols(); ++c)
                acc += d4(r, c) * y[std::size_t(c)];
            REQUIRE(acc == 0);
        }
    }
}

TEST_CASE("h3 counts for the acceptance groups", "[cohomology]") {
    auto z2 = h3_classes({2});
    CHECK(z2.order() == 2);
    CHECK(z2.invariant_factors() == std::vector<int>{2});
    CHECK(z2.representatives().size() == 2);

    auto z3 = h3_classes({3});
    CHECK(z3.order() == 3);
    CHECK(z3.invariant_factors() == std::vector<int>{3});

    auto z4 = h3_classes({4});
    CHECK(z4.order() == 4);
    CHECK(z4.invariant_factors() == std::vector<int>{4});

    auto z22 = h3_classes({2, 2});
    CHECK(z22.order() == 8);
    CHECK(z22.invariant_factors() == std::vector<int>{2, 2, 2});

    CHECK_THROWS_AS(h3_classes({5}), size_bound_error);
}

TEST_CASE("standard cocycles are pairwise non-cohomologous", "[cohomology]") {
    auto h = h3_classes({4});
    std::set<std::vector<long>> classes;
    for (int k = 0; k < 4; ++k)
        classes.insert(h.class_of(standard_cocycle_cyclic(4, k)));
    CHECK(classes.size() == 4);

    // the class map is additive in k
    auto c1 = h.class_of(standard_cocycle_cyclic(4, 1));
    auto c2 = h.class_of(standard_cocycle_cyclic(4, 2));
    auto sum = h.class_of(standard_cocycle_cyclic(4, 1) + standard_cocycle_cyclic(4, 1));
    CHECK(sum == c2);
}

TEST_CASE("restriction of cocycles", "[cohomology]") {
    // Z_4 -> {0, 2}: class k mod 2
    auto h2 = h3_classes({2});
    for (int k = 0; k < 4; ++k) {
        auto w = standard_cocycle_cyclic(4, k);
        auto r = restrict_cocycle(w, {2});
        REQUIRE(r.group.orders == std::vector<int>{2});
        CHECK(r.is_cocycle());
        INFO("k = " << k);
        CHECK(h2.class_of(r) == h2.class_of(standard_cocycle_cyclic(2, k % 2)));
    }

    // restriction to the trivial subgroup and to the whole group
    auto w = standard_cocycle_cyclic(4, 3);
    auto triv = restrict_cocycle(w, {});
    CHECK(triv.group.size() == 1);
    CHECK(triv.values[0].is_zero());
    auto full = restrict_cocycle(w, {1});
    auto h4 = h3_classes({4});
    CHECK(h4.class_of(full) == h4.class_of(w));
}

TEST_CASE("analytic count matches the smith normal form", "[cohomology]") {
    // |H^3| = prod n_i * prod gcd(n_i,n_j) * prod gcd(n_i,n_j,n_k)
    auto analytic = [](const std::vector<int>& orders) {
        long c = 1;
        for (std::size_t i = 0; i < orders.size(); ++i)
            c *= orders[i];
        for (std::size_t i = 0; i < orders.size(); ++i)
            for (std::size_t j = i + 1; j < orders.size(); ++j)
                c *= std::gcd(orders[i], orders[j]);
        for (std::size_t i = 0; i < orders.size(); ++i)
            for (std::size_t j = i + 1; j < orders.size(); ++j)
                for (std::size_t k = j + 1; k < orders.size(); ++k)
                    c *= std::gcd(std::gcd(orders[i], orders[j]), orders[k]);
        return c;
    };
    for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
        INFO("group size " << AbelianGroup(orders).size());
        CHECK(h3_classes(orders).order() == analytic(orders));
    }
}

TEST_CASE("cocycle class of extensions", "[cohomology]") {
    CHECK(cocycle_class_of_extension(twisted_double_cyclic(2, 0)) == 0);
    CHECK(cocycle_class_of_extension(twisted_double_cyclic(2, 1)) == 1);
    CHECK(cocycle_class_of_extension(extension_identity(rep_abelian({2}))) == 0);
    for (int k = 0; k < 3; ++k)
        CHECK(cocycle_class_of_extension(twisted_double_cyclic(3, k)) == k);
}

TEST_CASE("symmetry breaking of twisted doubles", "[cohomology]") {
    // Z_4 down to {0, 2}: class k mod 2, matching the cocycle restriction
    for (int k = 0; k < 4; ++k) {
        auto w = twisted_double_cyclic(4, k);
        auto broken = break_symmetry(w, {2});
        INFO("k = " << k);
        CHECK(broken.base.rank() == 2);
        CHECK(extensions_equivalent(broken, twisted_double_cyclic(2, k % 2)));
        CHECK(cocycle_class_of_extension(broken) == k % 2);
    }

    // H = A leaves the witness unchanged up to equivalence
    auto w = twisted_double_cyclic(2, 1);
    auto same = break_symmetry(w, {1});
    CHECK(extensions_equivalent(same, w));

    // H = 0 is a lagrangian condensation; k = 0 gives rank 1
    auto lag = break_symmetry(twisted_double_cyclic(2, 0), {});
    CHECK(lag.bulk.rank() == 1);
    auto lag1 = break_symmetry(twisted_double_cyclic(2, 1), {});
    CHECK(lag1.bulk.rank() == 1);
}
