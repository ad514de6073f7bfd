#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mext/condensation.hpp"
#include "mext/constructors.hpp"
#include "mext/witness.hpp"

namespace mext {

namespace detail {

inline bool premodular_identical(const PreModularData& a, const PreModularData& b) {
    if (a.rank() != b.rank() || a.ring.unit() != b.ring.unit() ||
        a.ring.labels() != b.ring.labels() || a.ring.duals() != b.ring.duals() ||
        a.twists != b.twists)
        return false;
    if (a.smat.max_diff(b.smat) > 1e-12)
        return false;
    for (int x = 0; x < a.rank(); ++x)
        for (int y = 0; y < a.rank(); ++y) {
            auto pa = a.ring.products(x, y);
            auto pb = b.ring.products(x, y);
            std::sort(pa.begin(), pa.end());
            std::sort(pb.begin(), pb.end());
            if (pa != pb)
                return false;
        }
    return true;
}

/// Base-matching bijection: the identity for identical data, otherwise any
/// twist/S/fusion-preserving bijection.
inline std::vector<int> base_match(const PreModularData& a, const PreModularData& b) {
    if (premodular_identical(a, b)) {
        std::vector<int> id(static_cast<std::size_t>(a.rank()));
        for (int i = 0; i < a.rank(); ++i)
            id[std::size_t(i)] = i;
        return id;
    }
    auto sigma = find_equivalence(a, b);
    if (!sigma)
        throw base_mismatch_error("witnesses have inequivalent bases");
    return *sigma;
}

} // namespace detail

/// Stacking product of two extension witnesses over a common base:
/// Deligne product followed by condensation of the diagonal boson group
/// {iota1(e) x iota2(sigma(e*))}. The result carries the base of w1,
/// embedded through iota1(e) x unit.
inline ExtensionWitness stack(const ExtensionWitness& w1, const ExtensionWitness& w2) {
    auto sigma = detail::base_match(w1.base, w2.base);
    int nb = w1.base.rank();
    int r2 = w2.bulk.rank();

    PreModularData prod = deligne_product(w1.bulk, w2.bulk);
    std::vector<int> members;
    for (int e = 0; e < nb; ++e) {
        int ed = w1.base.ring.dual(e);
        members.push_back(w1.embedding[std::size_t(e)] * r2 +
                          w2.embedding[std::size_t(sigma[std::size_t(ed)])]);
    }
    BosonGroup b = make_boson_group(prod, members);
    if (int(b.members.size()) != nb)
        throw base_mismatch_error("stack: embedded boson group has the wrong order");

    CondensationResult cr = condense(prod, b);
    ExtensionWitness out;
    out.base = w1.base;
    out.bulk = std::move(cr.condensed);
    out.embedding.resize(std::size_t(nb));
    for (int e = 0; e < nb; ++e) {
        int host = w1.embedding[std::size_t(e)] * r2 + w2.bulk.ring.unit();
        int cls = cr.condensed_of_host[std::size_t(host)];
        if (cls < 0)
            throw inconsistent_data_error("stack: embedded label did not survive condensation");
        out.embedding[std::size_t(e)] = cls;
    }

    // central charge adds along stacking; cheap and load-bearing, so always on
    Rational c1 = central_charge(w1.bulk).c;
    Rational c2 = central_charge(w2.bulk).c;
    Rational co = central_charge(out.bulk).c;
    Rational diff = (c1 + c2 - co).mod1();
    Rational whole = (c1 + c2 - co) - diff; // integer part
    if (!diff.is_zero() || whole.num() % 8 != 0)
        throw inconsistent_data_error("stack: central charge is not additive mod 8");
    return out;
}

/// The identity extension (Z(E), iota_0): the Drinfeld-center metric group
/// A + A^ for a Tannakian pointed base, the kappa = 1 sixteenfold entry for
/// the super-Tannakian rank-2 base, the base itself in rank 1.
inline ExtensionWitness extension_identity(const PreModularData& base) {
    int n = base.rank();
    if (int(transparent_objects(base).size()) != n)
        throw input_error("extension_identity: base is not symmetric");
    ExtensionWitness out;
    out.base = base;
    if (n == 1) {
        out.bulk = base;
        out.embedding = {base.ring.unit()};
        return out;
    }
    auto cls = classify_symmetric(base, transparent_objects(base));
    if (cls.kind == SymmetricKind::super_tannakian) {
        if (n != 2)
            throw input_error("extension_identity: only the rank-2 super-Tannakian base is supported");
        auto sf = sixteenfold_pointed(0);
        out.bulk = pointed_mtc(sf.metric);
        out.embedding.assign(2, 0);
        out.embedding[std::size_t(base.ring.unit())] = out.bulk.ring.unit();
        int fermion = (base.ring.unit() == 0) ? 1 : 0;
        out.embedding[std::size_t(fermion)] = sf.fermion;
        return out;
    }
    // Tannakian pointed base: recover coordinates from the fusion table
    for (int x = 0; x < n; ++x)
        if (!base.twists[std::size_t(x)].mod1().is_zero() || !base.ring.is_invertible(x))
            throw input_error("extension_identity: base is not an all-boson pointed category");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(std::size_t(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[std::size_t(x)][std::size_t(y)] = base.ring.fuse_invertible(x, y);
    CyclicBasis basis = table_cyclic_basis(table, base.ring.unit());
    AbelianGroup a(basis.orders);
    // coordinates of every base label in the chosen basis
    std::vector<int> label_of_coord(std::size_t(a.size()), -1);
    std::vector<int> coord_of_label(std::size_t(n), -1);
    for (int g = 0; g < a.size(); ++g) {
        auto c = a.coords(g);
        int lab = base.ring.unit();
        for (std::size_t i = 0; i < basis.generators.size(); ++i)
            for (int k = 0; k < c[i]; ++k)
                lab = base.ring.fuse_invertible(lab, basis.generators[i]);
        label_of_coord[std::size_t(g)] = lab;
        coord_of_label[std::size_t(lab)] = g;
    }

    std::vector<int> dbl_orders = basis.orders;
    dbl_orders.insert(dbl_orders.end(), basis.orders.begin(), basis.orders.end());
    MetricGroup m;
    m.group = AbelianGroup(dbl_orders);
    m.q.resize(std::size_t(m.group.size()));
    std::size_t r = basis.orders.size();
    for (int g = 0; g < m.group.size(); ++g) {
        auto c = m.group.coords(g);
        Rational q(0);
        for (std::size_t i = 0; i < r; ++i)
            q += Rational(std::int64_t(c[i]) * c[i + r], basis.orders[i]);
        m.q[std::size_t(g)] = q.mod1();
    }
    out.bulk = pointed_mtc(m);
    out.embedding.resize(std::size_t(n));
    for (int lab = 0; lab < n; ++lab) {
        auto c = a.coords(coord_of_label[std::size_t(lab)]);
        std::vector<int> dc(2 * r, 0);
        for (std::size_t i = 0; i < r; ++i)
            dc[i + r] = c[i];
        out.embedding[std::size_t(lab)] = m.group.from_coords(dc);
    }
    return out;
}

/// Inverse for stacking: the conjugate bulk with the same embedding (the
/// symmetric base is fixed by conjugation).
inline ExtensionWitness extension_inverse(const ExtensionWitness& w) {
    ExtensionWitness out;
    out.base = w.base;
    out.bulk = conjugate(w.bulk);
    out.embedding = w.embedding;
    return out;
}

/// Equivalence of extensions: a bulk equivalence matching the embeddings
/// pointwise (base automorphisms are not quotiented out).
inline bool extensions_equivalent(const ExtensionWitness& w1, const ExtensionWitness& w2) {
    auto sigma = detail::base_match(w1.base, w2.base);
    std::vector<std::pair<int, int>> pinned;
    for (int e = 0; e < w1.base.rank(); ++e)
        pinned.emplace_back(w1.embedding[std::size_t(e)],
                            w2.embedding[std::size_t(sigma[std::size_t(e)])]);
    return find_equivalence(w1.bulk, w2.bulk, pinned).has_value();
}

struct GroupTable {
    std::vector<std::vector<int>> table; // table[i][j] = index of stack(w_i, w_j)
    int identity = -1;
    std::vector<int> invariant_factors;
    std::vector<int> element_orders;
};

/// Cayley table of a stack-closed list of witnesses over a common base.
inline GroupTable group_table(const std::vector<ExtensionWitness>& ws) {
    int n = int(ws.size());
    if (n == 0)
        throw input_error("group_table: empty witness list");
    GroupTable gt;
    gt.table.assign(std::size_t(n), std::vector<int>(std::size_t(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            ExtensionWitness prod = stack(ws[std::size_t(i)], ws[std::size_t(j)]);
            int k = -1;
            for (int c = 0; c < n && k < 0; ++c)
                if (extensions_equivalent(prod, ws[std::size_t(c)]))
                    k = c;
            if (k < 0)
                throw error("group_table: product of entries " + std::to_string(i) + " and " +
                            std::to_string(j) + " is not in the list (closure failure)");
            gt.table[std::size_t(i)][std::size_t(j)] = k;
            gt.table[std::size_t(j)][std::size_t(i)] = k;
        }
    // group axioms on the finished table
    for (int e = 0; e < n && gt.identity < 0; ++e) {
        bool is_id = true;
        for (int j = 0; j < n && is_id; ++j)
            is_id = gt.table[std::size_t(e)][std::size_t(j)] == j;
        if (is_id)
            gt.identity = e;
    }
    if (gt.identity < 0)
        throw error("group_table: no identity element");
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen(std::size_t(n), false);
        for (int j = 0; j < n; ++j) {
            int k = gt.table[std::size_t(i)][std::size_t(j)];
            if (seen[std::size_t(k)])
                throw error("group_table: row " + std::to_string(i) + " is not a permutation");
            seen[std::size_t(k)] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (gt.table[std::size_t(gt.table[std::size_t(i)][std::size_t(j)])][std::size_t(k)] !=
                    gt.table[std::size_t(i)][std::size_t(gt.table[std::size_t(j)][std::size_t(k)])])
                    throw error("group_table: table is not associative");
    gt.invariant_factors = invariant_factors(table_cyclic_orders(gt.table, gt.identity));
    gt.element_orders.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        int o = 1, x = i;
        while (x != gt.identity) {
            x = gt.table[std::size_t(x)][std::size_t(i)];
            ++o;
        }
        gt.element_orders[std::size_t(i)] = o;
    }
    return gt;
}

struct TorsorReport {
    bool ok = false;
    bool free_action = false;
    bool transitive = false;
    std::vector<std::vector<int>> action; // action[i][k] = index of stack(extC[i], extE[k]), -1 if missing
    std::vector<std::string> failures;
};

/// Checks that stacking with the group extE acts freely and transitively on
/// the list extC of witnesses over a common larger category C.
inline TorsorReport torsor_check(const std::vector<ExtensionWitness>& ext_c,
                                 const std::vector<ExtensionWitness>& ext_e) {
    TorsorReport rep;
    GroupTable ge = group_table(ext_e); // verifies extE is a closed group
    int nc = int(ext_c.size()), ne = int(ext_e.size());

    // all extC members must extend equivalent categories C with E'|_M = C
    for (int i = 0; i < nc; ++i) {
        auto v = validate_extension(ext_c[std::size_t(i)]);
        if (!v.failures.empty()) {
            rep.failures.push_back("extC entry " + std::to_string(i) + " fails validation");
            continue;
        }
        if (i == 0)
            continue;
        auto v0 = validate_extension(ext_c[0]);
        PreModularData c0 = sub_data(ext_c[0].bulk, v0.centralizer_labels);
        PreModularData ci = sub_data(ext_c[std::size_t(i)].bulk, v.centralizer_labels);
        // pin the embedded base image inside both centralizers
        std::vector<std::pair<int, int>> pinned;
        auto pos_in = [](const std::vector<int>& labs, int x) {
            return int(std::lower_bound(labs.begin(), labs.end(), x) - labs.begin());
        };
        for (int e = 0; e < ext_c[0].base.rank(); ++e)
            pinned.emplace_back(pos_in(v0.centralizer_labels, ext_c[0].embedding[std::size_t(e)]),
                                pos_in(v.centralizer_labels, ext_c[std::size_t(i)].embedding[std::size_t(e)]));
        if (!find_equivalence(c0, ci, pinned))
            rep.failures.push_back("extC entry " + std::to_string(i) +
                                   " extends an inequivalent category C");
    }

    rep.action.assign(std::size_t(nc), std::vector<int>(std::size_t(ne), -1));
    for (int i = 0; i < nc; ++i)
        for (int k = 0; k < ne; ++k) {
            ExtensionWitness moved = stack(ext_c[std::size_t(i)], ext_e[std::size_t(k)]);
            for (int j = 0; j < nc; ++j)
                if (extensions_equivalent(moved, ext_c[std::size_t(j)])) {
                    rep.action[std::size_t(i)][std::size_t(k)] = j;
                    break;
                }
            if (rep.action[std::size_t(i)][std::size_t(k)] < 0)
                rep.failures.push_back("action of extE entry " + std::to_string(k) +
                                       " moves extC entry " + std::to_string(i) +
                                       " out of the list");
        }

    rep.free_action = true;
    for (int i = 0; i < nc; ++i)
        for (int k = 0; k < ne; ++k)
            if (rep.action[std::size_t(i)][std::size_t(k)] == i && k != ge.identity)
                rep.free_action = false;
    rep.transitive = true;
    for (int i = 0; i < nc; ++i)
        for (int k = 0; k < ne; ++k)
            if (rep.action[std::size_t(i)][std::size_t(k)] < 0)
                rep.transitive = false; // orbit leaves the list
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            bool hit = false;
            for (int k = 0; k < ne && !hit; ++k)
                hit = rep.action[std::size_t(i)][std::size_t(k)] == j;
            if (!hit) {
                rep.transitive = false;
                rep.failures.push_back("no group element moves extC entry " + std::to_string(i) +
                                       " to entry " + std::to_string(j));
            }
        }
    rep.ok = rep.failures.empty() && rep.free_action && rep.transitive;
    return rep;
}

} // namespace mext
