#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "mext/premodular.hpp"

namespace mext {

namespace detail {

struct Fingerprint {
    long dim_key;                 // d rounded
    Rational twist;
    std::vector<long> row_abs;    // sorted |S| row values, rounded
    bool operator==(const Fingerprint& o) const {
        return dim_key == o.dim_key && twist == o.twist && row_abs == o.row_abs;
    }
};

inline Fingerprint fingerprint(const PreModularData& d, int x) {
    Fingerprint f;
    f.dim_key = std::lround(d.dims[std::size_t(x)] * 1e6);
    f.twist = d.twists[std::size_t(x)];
    f.row_abs.resize(std::size_t(d.rank()));
    for (int y = 0; y < d.rank(); ++y)
        f.row_abs[std::size_t(y)] = std::lround(std::abs(d.smat(x, y)) * 1e6);
    std::sort(f.row_abs.begin(), f.row_abs.end());
    return f;
}

inline bool extend_label_map(const PreModularData& a, const PreModularData& b,
                             std::vector<int>& map, std::vector<bool>& used,
                             const std::vector<std::vector<int>>& candidates,
                             const std::vector<int>& order, std::size_t pos) {
    int n = a.rank();
    if (pos == order.size()) {
        // S entries and twists were enforced incrementally; finish with fusion
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto& pa = a.ring.products(x, y);
                auto& pb = b.ring.products(map[std::size_t(x)], map[std::size_t(y)]);
                if (pa.size() != pb.size())
                    return false;
                for (auto& [c, nn] : pa)
                    if (b.ring.N(map[std::size_t(x)], map[std::size_t(y)], map[std::size_t(c)]) != nn)
                        return false;
            }
        return true;
    }
    int x = order[pos];
    for (int y : candidates[std::size_t(x)]) {
        if (used[std::size_t(y)])
            continue;
        bool ok = std::abs(a.smat(x, x) - b.smat(y, y)) < kNumTol;
        for (int z = 0; z < n && ok; ++z) {
            if (map[std::size_t(z)] < 0)
                continue;
            ok = std::abs(a.smat(x, z) - b.smat(y, map[std::size_t(z)])) < kNumTol;
        }
        int xd = a.ring.dual(x);
        if (ok && map[std::size_t(xd)] >= 0 && map[std::size_t(xd)] != b.ring.dual(y))
            ok = false;
        if (!ok)
            continue;
        map[std::size_t(x)] = y;
        used[std::size_t(y)] = true;
        if (extend_label_map(a, b, map, used, candidates, order, pos + 1))
            return true;
        map[std::size_t(x)] = -1;
        used[std::size_t(y)] = false;
    }
    return false;
}

} // namespace detail

/// Searches for a bijection pi of labels with pi(unit) = unit that preserves
/// twists (exactly), dims and S entries (1e-9) and fusion multiplicities,
/// extending the partial map `pinned` (indices of a -> indices of b, -1 for
/// free). Backtracking with (d, theta, |S|-row multiset) fingerprints.
inline std::optional<std::vector<int>> find_equivalence(const PreModularData& a,
                                                        const PreModularData& b,
                                                        const std::vector<std::pair<int, int>>& pinned = {}) {
    if (a.rank() != b.rank())
        return std::nullopt;
    int n = a.rank();
    std::vector<int> map(std::size_t(n), -1);
    std::vector<bool> used(std::size_t(n), false);
    for (auto& [x, y] : pinned) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw input_error("find_equivalence: pinned index out of range");
        if ((map[std::size_t(x)] >= 0 && map[std::size_t(x)] != y) ||
            (map[std::size_t(x)] < 0 && used[std::size_t(y)]))
            throw input_error("find_equivalence: pinned map is not injective");
        map[std::size_t(x)] = y;
        used[std::size_t(y)] = true;
    }
    if (map[std::size_t(a.ring.unit())] < 0) {
        if (used[std::size_t(b.ring.unit())])
            return std::nullopt;
        map[std::size_t(a.ring.unit())] = b.ring.unit();
        used[std::size_t(b.ring.unit())] = true;
    }
    if (map[std::size_t(a.ring.unit())] != b.ring.unit())
        return std::nullopt;

    std::vector<detail::Fingerprint> fa(static_cast<std::size_t>(n));
    std::vector<detail::Fingerprint> fb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        fa[std::size_t(i)] = detail::fingerprint(a, i);
        fb[std::size_t(i)] = detail::fingerprint(b, i);
    }
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        if (map[std::size_t(x)] >= 0) {
            if (!(fa[std::size_t(x)] == fb[std::size_t(map[std::size_t(x)])]))
                return std::nullopt;
            candidates[std::size_t(x)] = {map[std::size_t(x)]};
            continue;
        }
        for (int y = 0; y < n; ++y)
            if (fa[std::size_t(x)] == fb[std::size_t(y)])
                candidates[std::size_t(x)].push_back(y);
        if (candidates[std::size_t(x)].empty())
            return std::nullopt;
    }

    // assign most constrained labels first; keep pinned ones at the front
    std::vector<int> order;
    for (int x = 0; x < n; ++x)
        order.push_back(x);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        bool px = map[std::size_t(x)] >= 0, py = map[std::size_t(y)] >= 0;
        if (px != py)
            return px;
        return candidates[std::size_t(x)].size() < candidates[std::size_t(y)].size();
    });

    // clear assignment and redo through the DFS so pinned entries get checked
    std::vector<int> work(std::size_t(n), -1);
    std::vector<bool> used2(std::size_t(n), false);
    if (!detail::extend_label_map(a, b, work, used2, candidates, order, 0))
        return std::nullopt;
    return work;
}

} // namespace mext
