#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mext/abelian.hpp"
#include "mext/premodular.hpp"

namespace mext {

/// Transparent labels: x with S_{xy} = d_x d_y for every y. Contains the
/// unit and is closed under fusion and duals.
inline std::vector<int> transparent_objects(const PreModularData& d) {
    return detail::transparent_set(d);
}

/// Muger centralizer of a label subset: all x with S_{xy} = d_x d_y for
/// every y in A.
inline std::vector<int> centralizer(const PreModularData& d, const std::vector<int>& a) {
    std::vector<int> out;
    for (int x = 0; x < d.rank(); ++x) {
        bool ok = true;
        for (int y : a) {
            if (std::abs(d.smat(x, y) - d.dims[std::size_t(x)] * d.dims[std::size_t(y)]) >= kNumTol) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(x);
    }
    return out;
}

enum class SymmetricKind { trivial, tannakian, super_tannakian };

struct SymmetricClassification {
    SymmetricKind kind = SymmetricKind::trivial;
    long group_order = 1;
    std::optional<int> fermion_label;          // present iff super_tannakian
    std::optional<std::vector<int>> group_orders; // cyclic orders, when all labels invertible
};

/// Deligne-type classification of a transparent (fusion-closed) label set:
/// Rep(G) when all twists vanish, Rep(G,z) when a transparent fermion is
/// present. The group itself is identified only in the pointed case.
inline SymmetricClassification classify_symmetric(const PreModularData& d,
                                                  const std::vector<int>& a) {
    SymmetricClassification out;
    double order = 0;
    std::optional<int> fermion;
    bool all_invertible = true;
    for (int x : a) {
        order += d.dims[std::size_t(x)] * d.dims[std::size_t(x)];
        const Rational& t = d.twists[std::size_t(x)];
        if (!(t.is_zero() || t == Rational(1, 2)))
            throw inconsistent_data_error("transparent label '" + d.ring.label(x) +
                                          "' has twist " + t.str() +
                                          ", not 0 or 1/2: not a symmetric category");
        if (t == Rational(1, 2) && (!fermion || x < *fermion))
            fermion = x;
        if (!d.ring.is_invertible(x))
            all_invertible = false;
    }
    double rounded = std::round(order);
    if (std::abs(order - rounded) > kIntTol)
        throw inconsistent_data_error("transparent subcategory has non-integer global dimension");
    out.group_order = long(rounded);
    if (fermion) {
        out.kind = SymmetricKind::super_tannakian;
        out.fermion_label = fermion;
    } else if (a.size() <= 1) {
        out.kind = SymmetricKind::trivial;
    } else {
        out.kind = SymmetricKind::tannakian;
    }
    if (all_invertible) {
        // fusion restricted to `a` is an abelian group; report its shape
        std::vector<int> pos(std::size_t(d.rank()), -1);
        for (std::size_t i = 0; i < a.size(); ++i)
            pos[std::size_t(a[i])] = int(i);
        std::vector<std::vector<int>> table(a.size(), std::vector<int>(a.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) {
                int c = d.ring.fuse_invertible(a[i], a[j]);
                if (pos[std::size_t(c)] < 0)
                    throw inconsistent_data_error("label set is not fusion-closed");
                table[i][j] = pos[std::size_t(c)];
            }
        out.group_orders =
            invariant_factors(table_cyclic_orders(table, pos[std::size_t(d.ring.unit())]));
    }
    return out;
}

} // namespace mext
