#pragma once

#include <vector>

#include "mext/constructors.hpp"
#include "mext/extensions.hpp"

namespace mext {

/// Breaks the symmetry of a witness over an all-boson pointed base from A
/// down to a subgroup H (given by base label indices generating H): the
/// annihilator of H inside the embedded dual group is condensed and the
/// witness is re-based on Rep(H).
inline ExtensionWitness break_symmetry(const ExtensionWitness& w,
                                       const std::vector<int>& subgroup_gens) {
    const PreModularData& base = w.base;
    int nb = base.rank();
    if (int(transparent_objects(base).size()) != nb)
        throw input_error("break_symmetry: base is not symmetric");
    for (int x = 0; x < nb; ++x) {
        if (base.twists[std::size_t(x)] == Rational(1, 2))
            throw not_condensable_error(
                "break_symmetry: the base contains a transparent fermion; the requested "
                "bosons would include it");
        if (!base.twists[std::size_t(x)].mod1().is_zero() || !base.ring.is_invertible(x))
            throw input_error("break_symmetry: base is not an all-boson pointed category");
    }
    for (int g : subgroup_gens)
        if (g < 0 || g >= nb)
            throw input_error("break_symmetry: subgroup generator out of range");

    // label group of the base, with coordinates from a recovered basis
    std::vector<std::vector<int>> table(static_cast<std::size_t>(nb), std::vector<int>(std::size_t(nb)));
    for (int x = 0; x < nb; ++x)
        for (int y = 0; y < nb; ++y)
            table[std::size_t(x)][std::size_t(y)] = base.ring.fuse_invertible(x, y);
    CyclicBasis basis = table_cyclic_basis(table, base.ring.unit());
    AbelianGroup a(basis.orders);
    std::vector<int> label_of(static_cast<std::size_t>(a.size()));
    std::vector<int> coord_of(static_cast<std::size_t>(nb));
    for (int g = 0; g < a.size(); ++g) {
        auto c = a.coords(g);
        int lab = base.ring.unit();
        for (std::size_t i = 0; i < basis.generators.size(); ++i)
            for (int k = 0; k < c[i]; ++k)
                lab = base.ring.fuse_invertible(lab, basis.generators[i]);
        label_of[std::size_t(g)] = lab;
        coord_of[std::size_t(lab)] = g;
    }
    auto pair_labels = [&](int x, int h) {
        return a.pairing(coord_of[std::size_t(x)], coord_of[std::size_t(h)]);
    };

    // subgroup H and the annihilator of H among the base labels
    std::vector<int> h_gen_coords;
    for (int g : subgroup_gens)
        h_gen_coords.push_back(coord_of[std::size_t(g)]);
    auto h_coords = subgroup_closure(a, h_gen_coords);
    std::vector<int> h_labels;
    for (int c : h_coords)
        h_labels.push_back(label_of[std::size_t(c)]);

    std::vector<int> annihilator;
    for (int x = 0; x < nb; ++x) {
        bool ann = true;
        for (int h : h_labels)
            if (!pair_labels(x, h).is_zero()) {
                ann = false;
                break;
            }
        if (ann)
            annihilator.push_back(x);
    }

    std::vector<int> boson_labels;
    for (int x : annihilator)
        boson_labels.push_back(w.embedding[std::size_t(x)]);
    BosonGroup b = make_boson_group(w.bulk, boson_labels);
    CondensationResult cr = condense(w.bulk, b);

    // new base Rep(H) on a cyclic basis of H
    CyclicBasis hb = cyclic_decomposition(a, h_coords);
    AbelianGroup hgroup(hb.orders);
    ExtensionWitness out;
    out.base = rep_abelian(hb.orders);
    out.bulk = cr.condensed;
    out.embedding.assign(std::size_t(hgroup.size()), -1);
    for (int t = 0; t < hgroup.size(); ++t) {
        auto tc = hgroup.coords(t);
        // character of H with values t_l / m_l on the basis h_l: find a base
        // label restricting to it
        int found = -1;
        for (int x = 0; x < nb && found < 0; ++x) {
            bool ok = true;
            for (std::size_t l = 0; l < hb.generators.size() && ok; ++l) {
                int hl = label_of[std::size_t(hb.generators[l])];
                ok = equal_mod1(pair_labels(x, hl), Rational(tc[l], hb.orders[l]));
            }
            if (ok)
                found = x;
        }
        if (found < 0)
            throw inconsistent_data_error("break_symmetry: character of H does not lift");
        int cls = cr.condensed_of_host[std::size_t(w.embedding[std::size_t(found)])];
        if (cls < 0)
            throw inconsistent_data_error("break_symmetry: embedded label did not survive");
        out.embedding[std::size_t(t)] = cls;
    }
    auto rep = validate_extension(out);
    if (!rep.failures.empty())
        throw inconsistent_data_error("break_symmetry: result fails witness validation");
    return out;
}

} // namespace mext
