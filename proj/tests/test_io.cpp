#include <catch2/catch_amalgamated.hpp>

#include "mext/catalogs.hpp"
#include "mext/io.hpp"

using namespace mext;

TEST_CASE("premodular round trip", "[io]") {
    auto is = ising_mtc(Rational(15, 16));
    json j = premodular_to_json(is);
    CHECK(j["format"] == "premodular-data/v1");
    auto back = premodular_from_json(j);
    CHECK(back.rank() == 3);
    // canonical order is applied on write; the data is equivalent
    REQUIRE(find_equivalence(back, is).has_value());
    // twists survive exactly, floats to full precision
    std::multiset<Rational> tw_a(is.twists.begin(), is.twists.end());
    std::multiset<Rational> tw_b(back.twists.begin(), back.twists.end());
    CHECK(tw_a == tw_b);
    json j2 = premodular_to_json(back);
    CHECK(j == j2);
}

TEST_CASE("witness round trip", "[io]") {
    auto cat = mext_svect_catalog();
    for (int slot : {0, 1, 5}) {
        json j = witness_to_json(cat[std::size_t(slot)]);
        CHECK(j["format"] == "extension-witness/v1");
        auto back = witness_from_json(j);
        INFO("slot " << slot);
        CHECK(validate_extension(back).ok);
        CHECK(extensions_equivalent(back, cat[std::size_t(slot)]));
        CHECK(witness_to_json(back) == j);
    }
}

TEST_CASE("schema violations are input errors", "[io]") {
    auto base = premodular_to_json(rep_abelian({2}));

    json bad = base;
    bad["format"] = "premodular-data/v0";
    CHECK_THROWS_AS(premodular_from_json(bad), input_error);

    bad = base;
    bad["fusion"][0][3] = -1;
    CHECK_THROWS_AS(premodular_from_json(bad), input_error);

    bad = base;
    bad["fusion"][0][2] = 7; // index out of range
    CHECK_THROWS_AS(premodular_from_json(bad), input_error);

    bad = base;
    bad["twists"][1] = "one half";
    CHECK_THROWS_AS(premodular_from_json(bad), input_error);

    bad = base;
    bad["smatrix"][0][1] = json::array({2.0, 0.0}); // breaks the symmetry
    CHECK_THROWS_AS(premodular_from_json(bad), input_error);

    bad = base;
    bad.erase("twists");
    CHECK_THROWS_AS(premodular_from_json(bad), input_error);
}

TEST_CASE("bad witness embeddings surface through validation", "[io]") {
    // embedding hitting a non-transparent label parses but fails validation
    ExtensionWitness w;
    w.base = svect_data();
    w.bulk = ising_mtc(Rational(1, 16));
    w.embedding = {0, 2}; // f -> x: wrong twist, wrong centralizer
    json j;
    j["format"] = kWitnessFormat;
    j["base"] = premodular_to_json(w.base);
    j["bulk"] = premodular_to_json(w.bulk);
    j["base"].erase("format");
    j["bulk"].erase("format");
    j["embedding"] = w.embedding;
    auto loaded = witness_from_json(j);
    auto rep = validate_extension(loaded);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.centralizer_is_image);

    j["embedding"] = std::vector<int>{0, 9};
    CHECK_THROWS_AS(witness_from_json(j), input_error);
}
