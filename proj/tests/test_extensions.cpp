#include <catch2/catch_amalgamated.hpp>

#include "mext/catalogs.hpp"
#include "mext/extensions.hpp"

using namespace mext;

namespace {

ExtensionWitness toric_over_rep_z2() {
    // toric code as an extension of Rep(Z_2) embedded on {1, e}
    PreModularData base = rep_abelian({2});
    MetricGroup m;
    m.group = AbelianGroup({2, 2});
    m.q = {Rational(0), Rational(0), Rational(0), Rational(1, 2)};
    ExtensionWitness w;
    w.base = base;
    w.bulk = pointed_mtc(m);
    w.embedding = {0, 1};
    return w;
}

} // namespace

TEST_CASE("validate extension witnesses", "[extensions]") {
    auto w = toric_over_rep_z2();
    auto rep = validate_extension(w);
    CHECK(rep.ok);
    CHECK(rep.centralizer_is_image);
    CHECK(rep.centralizer_labels == std::vector<int>{0, 1});

    // ising over svect: f must go to u, not to the unit
    ExtensionWitness is;
    is.base = svect_data();
    is.bulk = ising_mtc(Rational(1, 16));
    is.embedding = {0, 1};
    auto rep_good = validate_extension(is);
    CHECK(rep_good.ok);
    CHECK(rep_good.centralizer_is_image);

    ExtensionWitness bad = is;
    bad.embedding = {1, 0}; // swaps unit and fermion: twist mismatch
    auto rep_bad = validate_extension(bad);
    CHECK_FALSE(rep_bad.ok);
}

TEST_CASE("extension identity over small bases", "[extensions]") {
    auto id2 = extension_identity(rep_abelian({2}));
    CHECK(id2.bulk.rank() == 4);
    CHECK(validate_extension(id2).ok);
    CHECK(validate_extension(id2).centralizer_is_image);
    CHECK(central_charge(id2.bulk).c == Rational(0));
    CHECK(extensions_equivalent(id2, toric_over_rep_z2()));

    for (auto orders : std::vector<std::vector<int>>{{3}, {4}, {2, 2}}) {
        auto id = extension_identity(rep_abelian(orders));
        INFO("orders size " << orders.size());
        CHECK(validate_extension(id).ok);
        CHECK(validate_extension(id).centralizer_is_image);
        CHECK(central_charge(id.bulk).c == Rational(0));
    }

    auto idsv = extension_identity(svect_data());
    CHECK(idsv.bulk.rank() == 4);
    CHECK(validate_extension(idsv).ok);
    CHECK(central_charge(idsv.bulk).c == Rational(0));

    auto id1 = extension_identity(rep_abelian({}));
    CHECK(id1.bulk.rank() == 1);
}

TEST_CASE("stack of two ising witnesses is pointed", "[extensions]") {
    auto cat = mext_svect_catalog();
    // slot 1 carries c = 1/2
    auto& ising_half = cat[1];
    CHECK(central_charge(ising_half.bulk).c == Rational(1, 2));

    auto prod = stack(ising_half, ising_half);
    CHECK(validate_extension(prod).ok);
    CHECK(central_charge(prod.bulk).c == Rational(1));
    CHECK(prod.bulk.rank() == 4);
    // equivalent to the kappa = exp(2 pi i/8) entry, i.e. slot 2
    CHECK(extensions_equivalent(prod, cat[2]));
}

TEST_CASE("identity and inverse laws on selected entries", "[extensions]") {
    auto cat = mext_svect_catalog();
    auto id = extension_identity(svect_data());
    for (int slot : {0, 1, 2, 7}) {
        INFO("slot " << slot);
        CHECK(extensions_equivalent(stack(cat[std::size_t(slot)], id), cat[std::size_t(slot)]));
        auto inv = extension_inverse(cat[std::size_t(slot)]);
        CHECK(extensions_equivalent(stack(cat[std::size_t(slot)], inv), id));
    }
    // inverse of the c = 1/2 entry has c = 15/2
    CHECK(central_charge(extension_inverse(cat[1]).bulk).c == Rational(15, 2));
    // the identity is its own inverse
    CHECK(extensions_equivalent(extension_inverse(id), id));
    // double inverse is the identity map
    auto w = extension_inverse(extension_inverse(cat[3]));
    CHECK(extensions_equivalent(w, cat[3]));
}

TEST_CASE("equivalence respects the embedding", "[extensions]") {
    auto tc = toric_over_rep_z2();
    CHECK(extensions_equivalent(tc, tc));

    // the {1,m} embedding is related to {1,e} by the swap automorphism
    ExtensionWitness other = tc;
    other.embedding = {0, 2};
    CHECK(validate_extension(other).ok);
    CHECK(extensions_equivalent(tc, other));

    // double semion vs toric code
    MetricGroup ds;
    ds.group = AbelianGroup({2, 2});
    ds.q = {Rational(0), Rational(1, 4), Rational(3, 4), Rational(0)};
    ExtensionWitness dsw;
    dsw.base = tc.base;
    dsw.bulk = pointed_mtc(ds);
    dsw.embedding = {0, 3}; // q(1,1) = 0: the embedded boson
    CHECK(validate_extension(dsw).ok);
    CHECK_FALSE(extensions_equivalent(tc, dsw));

    ExtensionWitness wrong_base = tc;
    wrong_base.base = rep_abelian({3});
    CHECK_THROWS_AS(extensions_equivalent(tc, wrong_base), base_mismatch_error);
}

TEST_CASE("group table of the rep(Z_2) extensions", "[extensions]") {
    auto classes = enumerate_pointed_extensions({2});
    REQUIRE(classes.size() == 2);
    auto gt = group_table(classes);
    CHECK(gt.invariant_factors == std::vector<int>{2});
    CHECK(gt.element_orders[std::size_t(1 - gt.identity)] == 2);
}

TEST_CASE("singleton group table", "[extensions]") {
    auto gt = group_table({extension_identity(rep_abelian({2}))});
    CHECK(gt.identity == 0);
    CHECK(gt.invariant_factors.empty());
}

TEST_CASE("torsor negative control", "[extensions]") {
    // the group acting on itself is free and transitive; dropping one element
    // breaks transitivity (and closure shows up as missing cells)
    auto classes = enumerate_pointed_extensions({2});
    REQUIRE(classes.size() == 2);
    auto full = torsor_check(classes, classes);
    CHECK(full.ok);
    CHECK(full.free_action);
    CHECK(full.transitive);

    std::vector<ExtensionWitness> missing = {classes[0]};
    auto broken = torsor_check(missing, classes);
    CHECK_FALSE(broken.ok);
    CHECK_FALSE(broken.transitive);
}
