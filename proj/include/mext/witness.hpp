#pragma once

#include <string>
#include <vector>

#include "mext/premodular.hpp"
#include "mext/symmetric_center.hpp"

namespace mext {

/// A modular extension witness: a symmetric base E, a bulk M, and the label
/// embedding iota: E -> M. The category being extended is the centralizer of
/// the image in the bulk; for an extension of E itself it is the image.
struct ExtensionWitness {
    PreModularData base;
    PreModularData bulk;
    std::vector<int> embedding; // base label -> bulk label
};

struct ExtensionReport {
    bool ok = false;
    std::vector<std::pair<std::string, double>> failures;
    std::vector<int> centralizer_labels; // E'|_M as bulk label indices
    bool centralizer_is_image = false;   // true iff the witness extends its base
};

/// Restriction of premodular data to a fusion-closed label subset.
inline PreModularData sub_data(const PreModularData& d, const std::vector<int>& labels) {
    int m = int(labels.size());
    std::vector<int> pos(std::size_t(d.rank()), -1);
    for (int i = 0; i < m; ++i)
        pos[std::size_t(labels[std::size_t(i)])] = i;
    std::vector<std::string> names(static_cast<std::size_t>(m));
    std::vector<int> dual(static_cast<std::size_t>(m));
    std::vector<Rational> twists(static_cast<std::size_t>(m));
    CMatrix s(m, m);
    int unit = pos[std::size_t(d.ring.unit())];
    if (unit < 0)
        throw input_error("sub_data: subset does not contain the unit");
    for (int i = 0; i < m; ++i) {
        int x = labels[std::size_t(i)];
        names[std::size_t(i)] = d.ring.label(x);
        int xd = d.ring.dual(x);
        if (pos[std::size_t(xd)] < 0)
            throw input_error("sub_data: subset is not closed under duals");
        dual[std::size_t(i)] = pos[std::size_t(xd)];
        twists[std::size_t(i)] = d.twists[std::size_t(x)];
        for (int j = 0; j < m; ++j)
            s(i, j) = d.smat(x, labels[std::size_t(j)]);
    }
    FusionRing ring(std::move(names), unit, std::move(dual));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (auto& [c, nn] : d.ring.products(labels[std::size_t(i)], labels[std::size_t(j)])) {
                if (pos[std::size_t(c)] < 0)
                    throw input_error("sub_data: subset is not fusion-closed");
                ring.set_N(i, j, pos[std::size_t(c)], nn);
            }
    return PreModularData::make_trusted(std::move(ring), std::move(twists), std::move(s));
}

/// Checks the witness invariants: base transparency, bulk modularity, that
/// the embedding preserves unit, duals, fusion, twists, dims and S entries,
/// and the dimension bookkeeping D_bulk = D_centralizer * D_base.
inline ExtensionReport validate_extension(const ExtensionWitness& w) {
    ExtensionReport rep;
    int nb = w.base.rank();
    std::vector<bool> seen(std::size_t(w.bulk.rank()), false);
    if (int(w.embedding.size()) != nb)
        throw input_error("validate_extension: embedding size mismatch");
    for (int e : w.embedding) {
        if (e < 0 || e >= w.bulk.rank())
            throw input_error("validate_extension: embedding index out of range");
        if (seen[std::size_t(e)])
            throw input_error("validate_extension: embedding is not injective");
        seen[std::size_t(e)] = true;
    }

    auto trans = transparent_objects(w.base);
    if (int(trans.size()) != nb)
        rep.failures.emplace_back("base-not-symmetric", double(nb - int(trans.size())));

    auto bulk_rep = is_modular(w.bulk);
    if (!bulk_rep.is_modular)
        for (auto& [name, r] : bulk_rep.failures)
            rep.failures.emplace_back("bulk:" + name, r);

    if (w.embedding[std::size_t(w.base.ring.unit())] != w.bulk.ring.unit())
        rep.failures.emplace_back("embedding-unit", 1.0);
    for (int a = 0; a < nb; ++a) {
        int ia = w.embedding[std::size_t(a)];
        if (!equal_mod1(w.base.twists[std::size_t(a)], w.bulk.twists[std::size_t(ia)]))
            rep.failures.emplace_back("embedding-twist:" + w.base.ring.label(a), 1.0);
        double dd = std::abs(w.base.dims[std::size_t(a)] - w.bulk.dims[std::size_t(ia)]);
        if (dd > kNumTol)
            rep.failures.emplace_back("embedding-dim:" + w.base.ring.label(a), dd);
        if (w.bulk.ring.dual(ia) != w.embedding[std::size_t(w.base.ring.dual(a))])
            rep.failures.emplace_back("embedding-dual:" + w.base.ring.label(a), 1.0);
        for (int b = 0; b < nb; ++b) {
            int ib = w.embedding[std::size_t(b)];
            double ds = std::abs(w.base.smat(a, b) - w.bulk.smat(ia, ib));
            if (ds > kNumTol)
                rep.failures.emplace_back("embedding-smatrix", ds);
            for (int c = 0; c < nb; ++c)
                if (w.base.ring.N(a, b, c) !=
                    w.bulk.ring.N(ia, ib, w.embedding[std::size_t(c)]))
                    rep.failures.emplace_back("embedding-fusion", 1.0);
        }
    }

    std::vector<int> image(w.embedding.begin(), w.embedding.end());
    std::sort(image.begin(), image.end());
    rep.centralizer_labels = centralizer(w.bulk, image);
    rep.centralizer_is_image = rep.centralizer_labels == image;

    double dc = 0;
    for (int x : rep.centralizer_labels)
        dc += w.bulk.dims[std::size_t(x)] * w.bulk.dims[std::size_t(x)];
    double want = dc * w.base.total_dim;
    if (std::abs(w.bulk.total_dim - want) > 1e-6 * std::max(1.0, want))
        rep.failures.emplace_back("dimension-bookkeeping",
                                  std::abs(w.bulk.total_dim - want));

    rep.ok = rep.failures.empty();
    return rep;
}

/// Witness canonicalization: bulk into canonical label order, embedding
/// remapped accordingly (the base is left as given).
inline ExtensionWitness canonical_witness(const ExtensionWitness& w) {
    auto cf = canonical_form(w.bulk);
    std::vector<int> inv(static_cast<std::size_t>(w.bulk.rank()));
    for (int i = 0; i < w.bulk.rank(); ++i)
        inv[std::size_t(cf.perm[std::size_t(i)])] = i;
    ExtensionWitness out;
    out.base = w.base;
    out.bulk = std::move(cf.data);
    out.embedding.resize(w.embedding.size());
    for (std::size_t a = 0; a < w.embedding.size(); ++a)
        out.embedding[a] = inv[std::size_t(w.embedding[a])];
    return out;
}

} // namespace mext
