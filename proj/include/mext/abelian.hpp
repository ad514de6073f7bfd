#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mext/rational.hpp"

namespace mext {

/// Finite abelian group G = Z_{n_1} x ... x Z_{n_r}. Elements are flat
/// indices 0..|G|-1 in mixed radix (last coordinate fastest).
struct AbelianGroup {
    std::vector<int> orders;

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<int> ns) : orders(std::move(ns)) {
        for (int n : orders)
            if (n < 1)
                throw std::invalid_argument("AbelianGroup: cyclic order must be >= 1");
    }

    int size() const {
        int s = 1;
        for (int n : orders)
            s *= n;
        return s;
    }

    std::vector<int> coords(int g) const {
        std::vector<int> c(orders.size());
        for (int i = int(orders.size()) - 1; i >= 0; --i) {
            c[i] = g % orders[i];
            g /= orders[i];
        }
        return c;
    }

    int from_coords(const std::vector<int>& c) const {
        int g = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            int v = c[i] % orders[i];
            if (v < 0)
                v += orders[i];
            g = g * orders[i] + v;
        }
        return g;
    }

    int add(int a, int b) const {
        auto ca = coords(a), cb = coords(b);
        for (std::size_t i = 0; i < orders.size(); ++i)
            ca[i] = (ca[i] + cb[i]) % orders[i];
        return from_coords(ca);
    }

    int neg(int a) const {
        auto c = coords(a);
        for (std::size_t i = 0; i < orders.size(); ++i)
            c[i] = (orders[i] - c[i]) % orders[i];
        return from_coords(c);
    }

    int mul(int a, long k) const {
        auto c = coords(a);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            long v = (long(c[i]) * k) % orders[i];
            c[i] = int(v < 0 ? v + orders[i] : v);
        }
        return from_coords(c);
    }

    int element_order(int a) const {
        int x = a, k = 1;
        while (x != 0) {
            x = add(x, a);
            ++k;
        }
        return k;
    }

    int exponent() const {
        int e = 1;
        for (int n : orders)
            e = int(std::lcm(e, n));
        return e;
    }

    /// Canonical pairing of G with its dual in the same coordinates:
    /// <a, chi> = sum a_i chi_i / n_i in Q/Z.
    Rational pairing(int a, int chi) const {
        auto ca = coords(a), cc = coords(chi);
        Rational r;
        for (std::size_t i = 0; i < orders.size(); ++i)
            r += Rational(std::int64_t(ca[i]) * cc[i], orders[i]);
        return r.mod1();
    }

    std::string element_name(int g) const {
        auto c = coords(g);
        if (c.size() == 1)
            return std::to_string(c[0]);
        if (c.empty())
            return "0";
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += std::to_string(c[i]) + (i + 1 < c.size() ? "," : ")");
        return s;
    }
};

/// Sorted element list of the subgroup generated by `gens`.
inline std::vector<int> subgroup_closure(const AbelianGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(std::size_t(g.size()), false);
    in[0] = true;
    std::vector<int> todo = {0};
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int h : gens) {
            int y = g.add(x, h);
            if (!in[std::size_t(y)]) {
                in[std::size_t(y)] = true;
                todo.push_back(y);
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < g.size(); ++i)
        if (in[std::size_t(i)])
            out.push_back(i);
    return out;
}

/// Generators g_1..g_s with orders m_1..m_s such that
/// (a_1..a_s) -> sum a_i g_i is a bijection Z_{m_1} x ... x Z_{m_s} -> H.
struct CyclicBasis {
    std::vector<int> generators;
    std::vector<int> orders;
};

namespace detail {

inline std::size_t elem_index(const std::vector<int>& elems, int x) {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || *it != x)
        throw std::invalid_argument("cyclic_decomposition: element set is not closed");
    return std::size_t(it - elems.begin());
}

inline bool extend_basis(const AbelianGroup& g, const std::vector<int>& elems,
                         std::vector<int>& gens, std::vector<int>& ords,
                         const std::vector<bool>& covered, int ncovered) {
    if (ncovered == int(elems.size()))
        return true;
    std::vector<int> cands;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] != 0)
            cands.push_back(elems[i]);
    std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
        return g.element_order(a) > g.element_order(b);
    });
    for (int cand : cands) {
        int m = g.element_order(cand);
        std::vector<bool> cov2 = covered;
        int n2 = ncovered;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (!covered[i])
                continue;
            int x = elems[i];
            for (int k = 1; k < m; ++k) {
                x = g.add(x, cand);
                std::size_t j = elem_index(elems, x);
                if (!cov2[j]) {
                    cov2[j] = true;
                    ++n2;
                }
            }
        }
        if (n2 != ncovered * m)
            continue; // <cand> meets the span of the chosen generators
        gens.push_back(cand);
        ords.push_back(m);
        if (extend_basis(g, elems, gens, ords, cov2, n2))
            return true;
        gens.pop_back();
        ords.pop_back();
    }
    return false;
}

} // namespace detail

/// Cyclic decomposition of a subgroup given as a (closed) element list.
/// Brute-force DFS, meant for |H| <= 36.
inline CyclicBasis cyclic_decomposition(const AbelianGroup& g, const std::vector<int>& elements) {
    std::vector<int> elems = elements;
    std::sort(elems.begin(), elems.end());
    if (elems.empty() || elems[0] != 0)
        throw std::invalid_argument("cyclic_decomposition: element list must contain 0");
    CyclicBasis b;
    if (elems.size() == 1)
        return b; // trivial group
    std::vector<bool> covered(elems.size(), false);
    covered[0] = true;
    if (!detail::extend_basis(g, elems, b.generators, b.orders, covered, 1))
        throw std::runtime_error("cyclic_decomposition: no direct-sum basis found");
    return b;
}

namespace detail {

inline bool table_extend_basis(const std::vector<std::vector<int>>& t, int id,
                               std::vector<int>& gens, std::vector<int>& ords,
                               std::vector<bool>& covered, int ncovered) {
    int n = int(t.size());
    if (ncovered == n)
        return true;
    auto order_of = [&](int g) {
        int o = 1, y = g;
        while (y != id) {
            y = t[std::size_t(y)][std::size_t(g)];
            ++o;
        }
        return o;
    };
    std::vector<int> cands;
    for (int g = 0; g < n; ++g)
        if (g != id)
            cands.push_back(g);
    std::stable_sort(cands.begin(), cands.end(),
                     [&](int a, int b) { return order_of(a) > order_of(b); });
    for (int g : cands) {
        int m = order_of(g);
        std::vector<bool> cov2 = covered;
        int n2 = ncovered;
        for (int i = 0; i < n; ++i) {
            if (!covered[std::size_t(i)])
                continue;
            int x = i;
            for (int k = 1; k < m; ++k) {
                x = t[std::size_t(x)][std::size_t(g)];
                if (!cov2[std::size_t(x)]) {
                    cov2[std::size_t(x)] = true;
                    ++n2;
                }
            }
        }
        if (n2 != ncovered * m)
            continue;
        gens.push_back(g);
        ords.push_back(m);
        if (table_extend_basis(t, id, gens, ords, cov2, n2))
            return true;
        gens.pop_back();
        ords.pop_back();
    }
    return false;
}

} // namespace detail

/// Direct-sum basis (generators and cyclic orders) of an abstract abelian
/// group given by its Cayley table. Throws if the table is not one.
inline CyclicBasis table_cyclic_basis(const std::vector<std::vector<int>>& table, int id) {
    int n = int(table.size());
    CyclicBasis b;
    if (n == 1)
        return b;
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            if (table[std::size_t(a)][std::size_t(x)] != table[std::size_t(x)][std::size_t(a)])
                throw std::invalid_argument("table_cyclic_basis: table is not commutative");
    std::vector<bool> covered(std::size_t(n), false);
    covered[std::size_t(id)] = true;
    if (!detail::table_extend_basis(table, id, b.generators, b.orders, covered, 1))
        throw std::runtime_error("table_cyclic_basis: no direct-sum basis found");
    return b;
}

inline std::vector<int> table_cyclic_orders(const std::vector<std::vector<int>>& table, int id) {
    return table_cyclic_basis(table, id).orders;
}

/// Invariant factors d_1 | d_2 | ... from a multiset of cyclic orders.
inline std::vector<int> invariant_factors(const std::vector<int>& cyclic_orders) {
    std::vector<std::pair<int, int>> pp; // (prime, prime power)
    for (int n : cyclic_orders) {
        for (int p = 2; p <= n; ++p) {
            if (n % p)
                continue;
            int q = 1;
            while (n % p == 0) {
                n /= p;
                q *= p;
            }
            pp.emplace_back(p, q);
        }
    }
    std::vector<int> factors;
    while (!pp.empty()) {
        std::vector<int> primes;
        for (auto& e : pp)
            if (std::find(primes.begin(), primes.end(), e.first) == primes.end())
                primes.push_back(e.first);
        int d = 1;
        for (int p : primes) {
            std::size_t best = pp.size();
            for (std::size_t i = 0; i < pp.size(); ++i)
                if (pp[i].first == p && (best == pp.size() || pp[i].second > pp[best].second))
                    best = i;
            d *= pp[best].second;
            pp.erase(pp.begin() + long(best));
        }
        factors.push_back(d);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

} // namespace mext
