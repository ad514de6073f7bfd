#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mext/catalogs.hpp"

using namespace mext;

TEST_CASE("sixteenfold catalog basics", "[catalogs]") {
    auto cat = mext_svect_catalog();
    REQUIRE(cat.size() == 16);
    std::set<Rational> charges;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        INFO("entry " << i);
        auto rep = validate_extension(cat[i]);
        CHECK(rep.ok);
        CHECK(rep.centralizer_is_image);
        auto c = central_charge(cat[i].bulk).c;
        CHECK(c == Rational(std::int64_t(i), 2));
        charges.insert(c);
    }
    CHECK(charges.size() == 16);
}

TEST_CASE("sixteenfold catalog is pairwise inequivalent", "[catalogs]") {
    auto cat = mext_svect_catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j) {
            INFO("entries " << i << " and " << j);
            CHECK_FALSE(extensions_equivalent(cat[i], cat[j]));
        }
}

TEST_CASE("kappa = 1 entry is the identity extension", "[catalogs]") {
    auto cat = mext_svect_catalog();
    CHECK(extensions_equivalent(cat[0], extension_identity(svect_data())));
}

TEST_CASE("pointed extension enumeration counts", "[catalogs]") {
    CHECK(enumerate_pointed_extensions({2}).size() == 2);
    CHECK(enumerate_pointed_extensions({3}).size() == 3);
    CHECK(enumerate_pointed_svect_extensions().size() == 8);
    CHECK_THROWS_AS(enumerate_pointed_extensions({5}), size_bound_error);
}

TEST_CASE("twisted doubles of Z_2", "[catalogs]") {
    auto w0 = twisted_double_cyclic(2, 0);
    CHECK(validate_extension(w0).ok);
    CHECK(extensions_equivalent(w0, extension_identity(rep_abelian({2}))));

    auto w1 = twisted_double_cyclic(2, 1);
    CHECK(validate_extension(w1).ok);
    std::multiset<Rational> tw(w1.bulk.twists.begin(), w1.bulk.twists.end());
    CHECK(tw == std::multiset<Rational>{Rational(0), Rational(0), Rational(1, 4), Rational(3, 4)});
    CHECK_FALSE(extensions_equivalent(w0, w1));

    CHECK_THROWS_AS(twisted_double_cyclic(7, 0), input_error);
    CHECK_THROWS_AS(twisted_double_cyclic(3, 3), input_error);
}

TEST_CASE("embedded base of a twisted double classifies as tannakian", "[catalogs]") {
    for (int k = 0; k < 3; ++k) {
        auto w = twisted_double_cyclic(3, k);
        std::vector<int> image(w.embedding.begin(), w.embedding.end());
        std::sort(image.begin(), image.end());
        CHECK(centralizer(w.bulk, image) == image);
        auto cls = classify_symmetric(w.bulk, image);
        INFO("k = " << k);
        CHECK(cls.kind == SymmetricKind::tannakian);
        CHECK(cls.group_order == 3);
        REQUIRE(cls.group_orders.has_value());
        CHECK(*cls.group_orders == std::vector<int>{3});
    }
}

TEST_CASE("twisted doubles of Z_3 and stacking addition", "[catalogs]") {
    std::vector<ExtensionWitness> tdc;
    for (int k = 0; k < 3; ++k)
        tdc.push_back(twisted_double_cyclic(3, k));
    for (auto& w : tdc)
        CHECK(validate_extension(w).ok);
    auto gt = group_table(tdc);
    CHECK(gt.identity == 0);
    CHECK(gt.invariant_factors == std::vector<int>{3});
    CHECK(gt.table[1][1] == 2);
    CHECK(gt.table[1][2] == 0);
}
