#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "mext/extensions.hpp"

namespace mext {

/// The sixteen modular extensions of sVect, ordered by central charge
/// c = 0, 1/2, 1, ..., 15/2: eight pointed witnesses C(G_kappa, q_kappa)
/// at integer c and eight Ising witnesses at half-integer c.
inline std::vector<ExtensionWitness> mext_svect_catalog() {
    PreModularData base = svect_data();
    std::vector<ExtensionWitness> out(16);
    std::vector<bool> placed(16, false);
    for (int t = 0; t < 8; ++t) {
        auto sf = sixteenfold_pointed(t);
        ExtensionWitness w;
        w.base = base;
        w.bulk = pointed_mtc(sf.metric);
        w.embedding = {0, sf.fermion};
        out[std::size_t(2 * t)] = std::move(w);
        placed[std::size_t(2 * t)] = true;
    }
    for (int k = 0; k < 8; ++k) {
        ExtensionWitness w;
        w.base = base;
        w.bulk = ising_mtc(Rational(2 * k + 1, 16));
        w.embedding = {0, 1};
        Rational c = central_charge(w.bulk).c; // odd multiple of 1/2 in [0,8)
        int slot = int(c.num()); // c = num/2
        out[std::size_t(slot)] = std::move(w);
        placed[std::size_t(slot)] = true;
    }
    for (bool p : placed)
        if (!p)
            throw error("sixteenfold catalog: central charges did not fill all slots");
    return out;
}

namespace detail {

/// Multisets of cyclic orders (in invariant-factor form) of abelian groups
/// of the given order.
inline std::vector<std::vector<int>> abelian_group_types(int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int min_part) {
        if (rest == 1) {
            if (invariant_factors(cur) == cur) // keep one representative per iso type
                out.push_back(cur);
            return;
        }
        for (int p = min_part; p <= rest; ++p)
            if (rest % p == 0) {
                cur.push_back(p);
                rec(rest / p, p);
                cur.pop_back();
            }
    };
    if (order == 1)
        out.push_back({});
    else
        rec(order, 2);
    return out;
}

/// All quadratic forms on M = + Z_{m_i} given by generator values
/// q(e_i) (denominator 2 m_i when m_i is even, m_i when odd) and pairwise
/// b(e_i, e_j) (denominator gcd(m_i, m_j)).
inline void enumerate_quadratic_forms(const AbelianGroup& m,
                                      const std::function<void(const std::vector<Rational>&)>& emit) {
    int r = int(m.orders.size());
    int n = m.size();
    std::vector<int> qden(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        qden[std::size_t(i)] = (m.orders[std::size_t(i)] % 2 == 0) ? 2 * m.orders[std::size_t(i)]
                                                                   : m.orders[std::size_t(i)];
    std::vector<std::pair<int, int>> cross;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            cross.emplace_back(i, j);

    std::vector<int> qnum(std::size_t(r), 0);
    std::vector<int> bnum(cross.size(), 0);
    std::vector<Rational> q(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> recb;
    std::function<void(std::size_t)> recq = [&](std::size_t i) {
        if (i == std::size_t(r)) {
            recb(0);
            return;
        }
        for (int v = 0; v < qden[i]; ++v) {
            qnum[i] = v;
            recq(i + 1);
        }
    };
    recb = [&](std::size_t c) {
        if (c == cross.size()) {
            for (int g = 0; g < n; ++g) {
                auto co = m.coords(g);
                Rational val(0);
                for (int i = 0; i < r; ++i)
                    val += Rational(std::int64_t(co[std::size_t(i)]) * co[std::size_t(i)] *
                                        qnum[std::size_t(i)],
                                    qden[std::size_t(i)]);
                for (std::size_t k = 0; k < cross.size(); ++k) {
                    auto [i, j] = cross[k];
                    int gij = int(std::gcd(m.orders[std::size_t(i)], m.orders[std::size_t(j)]));
                    val += Rational(std::int64_t(co[std::size_t(i)]) * co[std::size_t(j)] * bnum[k], gij);
                }
                q[std::size_t(g)] = val.mod1();
            }
            emit(q);
            return;
        }
        auto [i, j] = cross[c];
        int gij = int(std::gcd(m.orders[std::size_t(i)], m.orders[std::size_t(j)]));
        for (int v = 0; v < gij; ++v) {
            bnum[c] = v;
            recb(c + 1);
        }
    };
    recq(0);
}

/// Pointed extension witnesses of a pointed symmetric base, by brute-force
/// enumeration of metric groups of order |A|^2 and isotropic self-orthogonal
/// embeddings of the base, deduplicated by witness equivalence.
inline std::vector<ExtensionWitness> enumerate_pointed_core(const PreModularData& base,
                                                            const AbelianGroup& agroup,
                                                            const std::vector<Rational>& qbase) {
    int na = agroup.size();
    int nm = na * na;
    std::vector<ExtensionWitness> classes;
    std::vector<std::vector<Rational>> class_twists; // sorted twist multisets for prefiltering

    for (auto& type : abelian_group_types(nm)) {
        AbelianGroup m(type);
        // generator images for homomorphisms A -> M are chosen per A-generator
        int ra = int(agroup.orders.size());
        enumerate_quadratic_forms(m, [&](const std::vector<Rational>& q) {
            // b-form table and non-degeneracy
            std::vector<std::vector<Rational>> b(static_cast<std::size_t>(nm), std::vector<Rational>(std::size_t(nm)));
            for (int g = 0; g < nm; ++g)
                for (int h = 0; h < nm; ++h)
                    b[std::size_t(g)][std::size_t(h)] =
                        (q[std::size_t(m.add(g, h))] - q[std::size_t(g)] - q[std::size_t(h)]).mod1();
            for (int g = 1; g < nm; ++g) {
                bool alltriv = true;
                for (int h = 0; h < nm && alltriv; ++h)
                    alltriv = b[std::size_t(g)][std::size_t(h)].is_zero();
                if (alltriv)
                    return; // degenerate form
            }
            // candidate homomorphisms
            std::vector<int> gen_img(std::size_t(std::max(ra, 1)), 0);
            std::function<void(int)> pick = [&](int gi) {
                if (gi == ra) {
                    std::vector<int> phi(static_cast<std::size_t>(na));
                    std::vector<bool> seen(std::size_t(nm), false);
                    for (int a = 0; a < na; ++a) {
                        auto co = agroup.coords(a);
                        int img = 0;
                        for (int i = 0; i < ra; ++i)
                            img = m.add(img, m.mul(gen_img[std::size_t(i)], co[std::size_t(i)]));
                        phi[std::size_t(a)] = img;
                        if (seen[std::size_t(img)])
                            return; // not injective
                        seen[std::size_t(img)] = true;
                        if (!equal_mod1(q[std::size_t(img)], qbase[std::size_t(a)]))
                            return; // embedding must match the base twists
                    }
                    // image must equal its own orthogonal complement
                    int orth = 0;
                    for (int y = 0; y < nm; ++y) {
                        bool ok = true;
                        for (int a = 0; a < na && ok; ++a)
                            ok = b[std::size_t(y)][std::size_t(phi[std::size_t(a)])].is_zero();
                        if (ok) {
                            ++orth;
                            if (!seen[std::size_t(y)])
                                return; // centralizer leaks outside the image
                        }
                    }
                    if (orth != na)
                        return;
                    // build the witness and deduplicate
                    MetricGroup mg;
                    mg.group = m;
                    mg.q = q;
                    ExtensionWitness w;
                    w.base = base;
                    w.bulk = pointed_mtc(mg);
                    w.embedding = phi;
                    std::vector<Rational> tw = w.bulk.twists;
                    std::sort(tw.begin(), tw.end());
                    for (std::size_t c = 0; c < classes.size(); ++c) {
                        if (class_twists[c] != tw)
                            continue;
                        if (extensions_equivalent(classes[c], w))
                            return; // known class
                    }
                    classes.push_back(std::move(w));
                    class_twists.push_back(std::move(tw));
                    return;
                }
                int ord_a = agroup.orders[std::size_t(gi)];
                for (int x = 0; x < nm; ++x)
                    if (m.mul(x, ord_a) == 0) {
                        gen_img[std::size_t(gi)] = x;
                        pick(gi + 1);
                    }
            };
            pick(0);
        });
    }
    return classes;
}

inline std::vector<ExtensionWitness> enumerate_pointed_with_bound(const std::vector<int>& orders,
                                                                  int bound) {
    AbelianGroup a(orders);
    if (a.size() > bound)
        throw size_bound_error("enumerate_pointed_extensions: |A| = " + std::to_string(a.size()) +
                               " exceeds the bound " + std::to_string(bound));
    PreModularData base = rep_abelian(orders);
    std::vector<Rational> qbase(static_cast<std::size_t>(a.size()), Rational(0));
    return enumerate_pointed_core(base, a, qbase);
}

} // namespace detail

/// Brute-force oracle: all pointed extension classes of Rep(A) for an
/// abelian A with |A| <= 4.
inline std::vector<ExtensionWitness> enumerate_pointed_extensions(const std::vector<int>& orders) {
    return detail::enumerate_pointed_with_bound(orders, 4);
}

/// Same machinery over the super-Tannakian base (q = 1/2 on the fermion):
/// recovers the eight pointed sixteenfold entries.
inline std::vector<ExtensionWitness> enumerate_pointed_svect_extensions() {
    PreModularData base = svect_data();
    AbelianGroup a({2});
    std::vector<Rational> qbase = {Rational(0), Rational(1, 2)};
    return detail::enumerate_pointed_core(base, a, qbase);
}

namespace detail {

/// Sector of a bulk label with respect to the embedded dual generator:
/// the monodromy with iota(chi_1) is sector/n.
inline int tdc_sector(const ExtensionWitness& w, int n, int x) {
    Rational mphase = monodromy_phase(w.bulk, w.embedding[1], x);
    Rational scaled = mphase * Rational(n);
    if (!scaled.is_integer())
        throw inconsistent_data_error("twisted double: sector grading is not Z_n-valued");
    return int(((scaled.num() % n) + n) % n);
}

/// Cocycle class selector: on the sector-1 labels the twists are
/// k/n^2 mod 1/n; returns k.
inline int tdc_selector(const ExtensionWitness& w, int n) {
    int found = -1;
    for (int x = 0; x < w.bulk.rank(); ++x) {
        if (tdc_sector(w, n, x) != 1)
            continue;
        Rational scaled = w.bulk.twists[std::size_t(x)] * Rational(std::int64_t(n) * n);
        if (!scaled.is_integer())
            throw inconsistent_data_error("twisted double: sector-1 twist has the wrong denominator");
        int k = int(((scaled.num() % n) + n) % n);
        if (found >= 0 && found != k)
            throw inconsistent_data_error("twisted double: sector-1 twists are inconsistent");
        found = k;
    }
    if (found < 0)
        throw inconsistent_data_error("twisted double: no sector-1 label");
    return found;
}

inline const std::vector<ExtensionWitness>& tdc_family(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<ExtensionWitness>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    // the spec bound for the public oracle is |A| <= 4; the twisted-double
    // family is defined up to n = 6, so the internal bound is lifted here
    auto classes = enumerate_pointed_with_bound({n}, 6);
    if (int(classes.size()) != n)
        throw error("twisted doubles: enumeration found " + std::to_string(classes.size()) +
                    " classes of extensions of Rep(Z_" + std::to_string(n) + "), expected " +
                    std::to_string(n));
    std::vector<ExtensionWitness> family(static_cast<std::size_t>(n));
    std::vector<bool> hit(std::size_t(n), false);
    for (auto& w : classes) {
        int k = tdc_selector(w, n);
        if (hit[std::size_t(k)])
            throw error("twisted doubles: two inequivalent classes share the selector " +
                        std::to_string(k));
        family[std::size_t(k)] = std::move(w);
        hit[std::size_t(k)] = true;
    }
    return cache.emplace(n, std::move(family)).first->second;
}

} // namespace detail

/// The twisted double Z(Vec_{Z_n}^{omega_k}) as an extension witness over
/// Rep(Z_n), selected from the enumeration oracle by the sector-1 twist
/// spectrum theta = k/n^2 (mod 1/n). k = 0 is the identity extension.
inline ExtensionWitness twisted_double_cyclic(int n, int k) {
    if (n < 1 || n > 6)
        throw input_error("twisted_double_cyclic: n must be between 1 and 6");
    if (k < 0 || k >= std::max(n, 1))
        throw input_error("twisted_double_cyclic: k must satisfy 0 <= k < n");
    if (n == 1)
        return extension_identity(rep_abelian({1}));
    return detail::tdc_family(n)[std::size_t(k)];
}

} // namespace mext
