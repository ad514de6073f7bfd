#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "mext/premodular.hpp"
#include "mext/witness.hpp"

namespace mext {

using nlohmann::json;

inline constexpr const char* kPremodularFormat = "premodular-data/v1";
inline constexpr const char* kWitnessFormat = "extension-witness/v1";

namespace detail {

inline const json& require_field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(where + ": missing field '" + key + "'");
    return *it;
}

inline json premodular_body(const PreModularData& d) {
    json j;
    j["rank"] = d.rank();
    j["labels"] = d.ring.labels();
    j["unit"] = d.ring.unit();
    j["dual"] = d.ring.duals();
    json fusion = json::array();
    for (int a = 0; a < d.rank(); ++a)
        for (int b = 0; b < d.rank(); ++b)
            for (auto& [c, n] : d.ring.products(a, b))
                fusion.push_back({a, b, c, n});
    j["fusion"] = std::move(fusion);
    json twists = json::array();
    for (auto& t : d.twists)
        twists.push_back(t.mod1().str());
    j["twists"] = std::move(twists);
    json smat = json::array();
    for (int i = 0; i < d.rank(); ++i) {
        json row = json::array();
        for (int k = 0; k < d.rank(); ++k)
            row.push_back({d.smat(i, k).real(), d.smat(i, k).imag()});
        smat.push_back(std::move(row));
    }
    j["smatrix"] = std::move(smat);
    return j;
}

inline PreModularData premodular_from_body(const json& j, const std::string& where) {
    int rank = require_field(j, "rank", where).get<int>();
    if (rank < 1)
        throw input_error(where + ": rank must be positive");
    auto labels = require_field(j, "labels", where).get<std::vector<std::string>>();
    int unit = require_field(j, "unit", where).get<int>();
    auto dual = require_field(j, "dual", where).get<std::vector<int>>();
    if (int(labels.size()) != rank || int(dual.size()) != rank)
        throw input_error(where + ": labels/dual sizes do not match the rank");
    for (int i = 0; i < rank; ++i)
        for (int k = i + 1; k < rank; ++k)
            if (labels[std::size_t(i)] == labels[std::size_t(k)])
                throw input_error(where + ": duplicate label '" + labels[std::size_t(i)] + "'");
    if (unit < 0 || unit >= rank)
        throw input_error(where + ": unit index out of range");
    for (int x : dual)
        if (x < 0 || x >= rank)
            throw input_error(where + ": dual index out of range");

    FusionRing ring(labels, unit, dual);
    const json& fusion = require_field(j, "fusion", where);
    for (std::size_t i = 0; i < fusion.size(); ++i) {
        const json& q = fusion[i];
        std::string at = where + ": fusion[" + std::to_string(i) + "]";
        if (!q.is_array() || q.size() != 4)
            throw input_error(at + " must be [a,b,c,N]");
        int a = q[0].get<int>(), b = q[1].get<int>(), c = q[2].get<int>(), n = q[3].get<int>();
        if (a < 0 || a >= rank || b < 0 || b >= rank || c < 0 || c >= rank)
            throw input_error(at + ": label index out of range");
        if (n < 0)
            throw input_error(at + ": multiplicity must be non-negative");
        ring.set_N(a, b, c, n);
    }

    const json& jt = require_field(j, "twists", where);
    if (int(jt.size()) != rank)
        throw input_error(where + ": twists size does not match the rank");
    std::vector<Rational> twists;
    for (std::size_t i = 0; i < jt.size(); ++i) {
        try {
            twists.push_back(Rational::parse(jt[i].get<std::string>()).mod1());
        } catch (const std::exception& e) {
            throw input_error(where + ": twists[" + std::to_string(i) + "]: " + e.what());
        }
    }

    const json& js = require_field(j, "smatrix", where);
    if (int(js.size()) != rank)
        throw input_error(where + ": smatrix must be rank x rank");
    CMatrix s(rank, rank);
    for (int i = 0; i < rank; ++i) {
        if (int(js[std::size_t(i)].size()) != rank)
            throw input_error(where + ": smatrix row " + std::to_string(i) + " has the wrong size");
        for (int k = 0; k < rank; ++k) {
            const json& e = js[std::size_t(i)][std::size_t(k)];
            if (!e.is_array() || e.size() != 2)
                throw input_error(where + ": smatrix entries must be [re, im]");
            s(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    try {
        return PreModularData::make_checked(std::move(ring), std::move(twists), std::move(s));
    } catch (const inconsistent_data_error& e) {
        std::string what = e.what();
        if (what.find("balancing") != std::string::npos)
            what += " (datasets in the transpose-inverse braiding convention must be imported "
                    "conjugated: negate the twists and conjugate the S-matrix)";
        throw input_error(where + ": " + what);
    } catch (const error& e) {
        throw input_error(where + ": " + e.what());
    }
}

} // namespace detail

/// Serialization applies the canonical label order first.
inline json premodular_to_json(const PreModularData& d) {
    json j = detail::premodular_body(canonical_form(d).data);
    j["format"] = kPremodularFormat;
    return j;
}

inline PreModularData premodular_from_json(const json& j) {
    if (detail::require_field(j, "format", "premodular data") != kPremodularFormat)
        throw input_error("unknown format tag '" + j["format"].get<std::string>() + "'");
    return detail::premodular_from_body(j, "premodular data");
}

inline ExtensionWitness fully_canonical_witness(const ExtensionWitness& w) {
    ExtensionWitness c = canonical_witness(w); // canonical bulk
    auto cb = canonical_form(c.base);
    ExtensionWitness out;
    out.base = std::move(cb.data);
    out.bulk = std::move(c.bulk);
    out.embedding.resize(c.embedding.size());
    for (std::size_t i = 0; i < c.embedding.size(); ++i)
        out.embedding[i] = c.embedding[std::size_t(cb.perm[i])];
    return out;
}

inline json witness_to_json(const ExtensionWitness& w) {
    ExtensionWitness c = fully_canonical_witness(w);
    json j;
    j["format"] = kWitnessFormat;
    j["base"] = detail::premodular_body(c.base);
    j["bulk"] = detail::premodular_body(c.bulk);
    j["embedding"] = c.embedding;
    return j;
}

inline ExtensionWitness witness_from_json(const json& j) {
    if (detail::require_field(j, "format", "witness") != kWitnessFormat)
        throw input_error("unknown format tag '" + j["format"].get<std::string>() + "'");
    ExtensionWitness w;
    w.base = detail::premodular_from_body(detail::require_field(j, "base", "witness"), "witness base");
    w.bulk = detail::premodular_from_body(detail::require_field(j, "bulk", "witness"), "witness bulk");
    w.embedding = detail::require_field(j, "embedding", "witness").get<std::vector<int>>();
    if (int(w.embedding.size()) != w.base.rank())
        throw input_error("witness: embedding size does not match the base rank");
    for (int e : w.embedding)
        if (e < 0 || e >= w.bulk.rank())
            throw input_error("witness: embedding index out of range");
    return w;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("parse error in '" + path + "': " + e.what());
    }
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write '" + path + "'");
    out << j.dump(1) << "\n";
}

} // namespace mext
