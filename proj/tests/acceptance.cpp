// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "mext/mext.hpp"

using namespace mext;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    std::chrono::steady_clock::time_point start;
    bool ok = true;
    std::string note;

    explicit Criterion(const char* n) : name(n), start(std::chrono::steady_clock::now()) {}
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("%s %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name, (long long)ms,
                    note.empty() ? "" : " -- ", note.c_str());
        if (!ok)
            ++g_failures;
    }
};

PreModularData toric_code() {
    MetricGroup m;
    m.group = AbelianGroup({2, 2});
    m.q = {Rational(0), Rational(0), Rational(0), Rational(1, 2)};
    return pointed_mtc(m);
}

Rational charge(const ExtensionWitness& w) { return central_charge(w.bulk).c; }

bool charge_adds(const ExtensionWitness& a, const ExtensionWitness& b, const ExtensionWitness& out) {
    Rational d = charge(a) + charge(b) - charge(out);
    Rational frac = d.mod1();
    return frac.is_zero() && (d - frac).num() % 8 == 0;
}

// criterion 1: the sixteen-fold catalog
void criterion1(const std::vector<ExtensionWitness>& cat) {
    Criterion c("criterion 1: sixteen modular extensions of sVect, all valid, pairwise "
                "inequivalent, charges {0, 1/2, ..., 15/2}");
    c.expect(cat.size() == 16, "catalog size != 16");
    std::set<Rational> charges;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        auto rep = validate_extension(cat[i]);
        c.expect(rep.ok && rep.centralizer_is_image,
                 "entry " + std::to_string(i) + " fails validate_extension");
        charges.insert(charge(cat[i]));
    }
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j)
            c.expect(!extensions_equivalent(cat[i], cat[j]),
                     "entries " + std::to_string(i) + "," + std::to_string(j) + " equivalent");
    std::set<Rational> want;
    for (int k = 0; k < 16; ++k)
        want.insert(Rational(k, 2));
    c.expect(charges == want, "central charges are not {k/2, k = 0..15}");
    c.finish();
}

// criterion 2: the group law Z_16
void criterion2(const std::vector<ExtensionWitness>& cat) {
    Criterion c("criterion 2: stacking closes on the catalog with group Z_16, identity kappa=1, "
                "the c=1/2 Ising entry generating");
    try {
        auto gt = group_table(cat);
        c.expect(gt.invariant_factors == std::vector<int>{16}, "invariant factors != [16]");
        c.expect(gt.identity == 0, "identity is not the kappa = 1 entry");
        c.expect(gt.element_orders[1] == 16, "the c = 1/2 Ising witness does not generate");
        // abelian: re-stack every ordered pair and compare with the table
        for (int i = 0; i < 16 && c.ok; ++i)
            for (int j = 0; j < i; ++j) {
                auto ji = stack(cat[std::size_t(j)], cat[std::size_t(i)]);
                c.expect(extensions_equivalent(ji, cat[std::size_t(gt.table[std::size_t(i)][std::size_t(j)])]),
                         "stack does not commute at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                c.expect(charge_adds(cat[std::size_t(j)], cat[std::size_t(i)], ji),
                         "central charge not additive");
            }
        // associativity of the stacking itself on a sampled triple
        auto ab_c = stack(stack(cat[1], cat[2]), cat[5]);
        auto a_bc = stack(cat[1], stack(cat[2], cat[5]));
        c.expect(extensions_equivalent(ab_c, a_bc), "stack is not associative on (1,2,5)");
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

// criterion 3: inverse and identity laws
void criterion3(const std::vector<ExtensionWitness>& cat) {
    Criterion c("criterion 3: stack(w, inverse(w)) = identity and stack(w, identity) = w for all 16");
    try {
        auto id = extension_identity(svect_data());
        for (std::size_t i = 0; i < cat.size(); ++i) {
            auto wid = stack(cat[i], id);
            c.expect(extensions_equivalent(wid, cat[i]),
                     "identity law fails at entry " + std::to_string(i));
            auto winv = stack(cat[i], extension_inverse(cat[i]));
            c.expect(extensions_equivalent(winv, id),
                     "inverse law fails at entry " + std::to_string(i));
        }
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

// criterion 4: cohomology correspondence for n in {2, 3}
void criterion4() {
    Criterion c("criterion 4: enumerate_pointed_extensions([n]) has n classes with group Z_n and "
                "additive cocycle classes, n = 2, 3");
    try {
        for (int n : {2, 3}) {
            auto classes = enumerate_pointed_extensions({n});
            c.expect(int(classes.size()) == n,
                     "wrong class count for n = " + std::to_string(n));
            std::vector<ExtensionWitness> tdc;
            for (int k = 0; k < n; ++k)
                tdc.push_back(twisted_double_cyclic(n, k));
            auto gt = group_table(tdc);
            c.expect(gt.invariant_factors == std::vector<int>{n},
                     "group is not Z_" + std::to_string(n));
            for (int k1 = 0; k1 < n; ++k1)
                for (int k2 = 0; k2 < n; ++k2) {
                    auto s = stack(tdc[std::size_t(k1)], tdc[std::size_t(k2)]);
                    c.expect(cocycle_class_of_extension(s) == (k1 + k2) % n,
                             "class of stack != k1 + k2 at n = " + std::to_string(n));
                    c.expect(charge_adds(tdc[std::size_t(k1)], tdc[std::size_t(k2)], s),
                             "central charge not additive");
                }
        }
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

// criterion 5: H^3 counts by the integer Smith-normal-form oracle
void criterion5() {
    Criterion c("criterion 5: |H^3| = 2, 3, 4, 8 for Z_2, Z_3, Z_4, Z_2xZ_2");
    try {
        c.expect(h3_classes({2}).order() == 2, "Z_2");
        c.expect(h3_classes({3}).order() == 3, "Z_3");
        c.expect(h3_classes({4}).order() == 4, "Z_4");
        auto z22 = h3_classes({2, 2});
        c.expect(z22.order() == 8, "Z_2xZ_2 order");
        c.expect(z22.invariant_factors() == std::vector<int>{2, 2, 2}, "Z_2xZ_2 factors");
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

// criterion 6: the torsor property over C = sVect x toric code
void criterion6(const std::vector<ExtensionWitness>& cat) {
    Criterion c("criterion 6: M_ext(sVect x toric) is a free transitive M_ext(sVect)-torsor "
                "(256 action cells)");
    try {
        auto tc = toric_code();
        std::vector<ExtensionWitness> ext_c;
        for (auto& w : cat) {
            ExtensionWitness v;
            v.base = w.base;
            v.bulk = deligne_product(w.bulk, tc);
            v.embedding.resize(std::size_t(w.base.rank()));
            for (int e = 0; e < w.base.rank(); ++e)
                v.embedding[std::size_t(e)] = w.embedding[std::size_t(e)] * tc.rank() + 0;
            ext_c.push_back(std::move(v));
        }
        auto rep = torsor_check(ext_c, cat);
        c.expect(rep.free_action, "action is not free");
        c.expect(rep.transitive, "action is not transitive");
        c.expect(rep.ok, rep.failures.empty() ? "report not ok" : rep.failures[0]);
        // every action cell respects the central-charge homomorphism
        for (int i = 0; i < 16 && c.ok; ++i)
            for (int k = 0; k < 16; ++k) {
                int j = rep.action[std::size_t(i)][std::size_t(k)];
                Rational d = charge(ext_c[std::size_t(i)]) + charge(cat[std::size_t(k)]) -
                             charge(ext_c[std::size_t(j)]);
                Rational frac = d.mod1();
                if (!(frac.is_zero() && (d - frac).num() % 8 == 0)) {
                    c.expect(false, "charge homomorphism fails in the action table");
                    break;
                }
            }
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

// criterion 7: symmetry breaking Z_4 -> Z_2 agrees with cocycle restriction
void criterion7() {
    Criterion c("criterion 7: break_symmetry(tdc(4,k), Z_2) = tdc(2, k mod 2), matching "
                "restrict_cocycle");
    try {
        auto h2 = h3_classes({2});
        for (int k = 0; k < 4; ++k) {
            auto broken = break_symmetry(twisted_double_cyclic(4, k), {2});
            c.expect(extensions_equivalent(broken, twisted_double_cyclic(2, k % 2)),
                     "witness restriction fails at k = " + std::to_string(k));
            auto rc = restrict_cocycle(standard_cocycle_cyclic(4, k), {2});
            c.expect(h2.class_of(rc) == h2.class_of(standard_cocycle_cyclic(2, k % 2)),
                     "cocycle restriction fails at k = " + std::to_string(k));
        }
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

// criterion 8: central-charge homomorphism on every stack in criteria 2-7
void criterion8(const std::vector<ExtensionWitness>& cat) {
    Criterion c("criterion 8: c(stack) = c1 + c2 mod 8 (spot checks; every stack() call also "
                "verifies this internally)");
    try {
        // stack() throws if additivity ever fails, so criteria 2-7 already cover
        // every performed product; verify a representative sample explicitly.
        auto id = extension_identity(svect_data());
        for (int i = 0; i < 16; i += 3)
            for (int j = 1; j < 16; j += 5) {
                auto s = stack(cat[std::size_t(i)], cat[std::size_t(j)]);
                c.expect(charge_adds(cat[std::size_t(i)], cat[std::size_t(j)], s),
                         "charge additivity fails");
            }
        auto s = stack(cat[5], id);
        c.expect(charge_adds(cat[5], id, s), "charge additivity fails against the identity");
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

// criterion 9: randomized property suite over metric groups
void criterion9() {
    Criterion c("criterion 9: 200 random non-degenerate metric groups of order <= 16: modular, "
                "Verlinde = group law, condensation bookkeeping");
    try {
        std::mt19937 rng(20260809);
        int produced = 0;
        while (produced < 200) {
            // random abelian group of order <= 16
            std::vector<int> orders;
            int size = 1;
            int parts = 1 + int(rng() % 3);
            for (int p = 0; p < parts; ++p) {
                int o = 2 + int(rng() % 8);
                if (size * o > 16)
                    break;
                orders.push_back(o);
                size *= o;
            }
            if (orders.empty())
                continue;
            AbelianGroup g(orders);
            MetricGroup m;
            m.group = g;
            m.q.assign(std::size_t(g.size()), Rational(0));
            // random quadratic form from generator data
            int r = int(orders.size());
            std::vector<Rational> qgen(static_cast<std::size_t>(r));
            std::vector<std::vector<Rational>> bgen(std::size_t(r),
                                                    std::vector<Rational>(std::size_t(r), Rational(0)));
            for (int i = 0; i < r; ++i) {
                int den = orders[std::size_t(i)] % 2 == 0 ? 2 * orders[std::size_t(i)]
                                                          : orders[std::size_t(i)];
                qgen[std::size_t(i)] = Rational(int(rng() % unsigned(den)), den);
                for (int j = i + 1; j < r; ++j) {
                    int gij = int(std::gcd(orders[std::size_t(i)], orders[std::size_t(j)]));
                    bgen[std::size_t(i)][std::size_t(j)] = Rational(int(rng() % unsigned(gij)), gij);
                }
            }
            for (int x = 0; x < g.size(); ++x) {
                auto co = g.coords(x);
                Rational v(0);
                for (int i = 0; i < r; ++i) {
                    v += qgen[std::size_t(i)] * Rational(std::int64_t(co[std::size_t(i)]) *
                                                         co[std::size_t(i)]);
                    for (int j = i + 1; j < r; ++j)
                        v += bgen[std::size_t(i)][std::size_t(j)] *
                             Rational(std::int64_t(co[std::size_t(i)]) * co[std::size_t(j)]);
                }
                m.q[std::size_t(x)] = v.mod1();
            }
            if (!m.nondegenerate())
                continue;
            ++produced;

            auto data = pointed_mtc(m);
            if (!is_modular(data).is_modular) {
                c.expect(false, "pointed data of a non-degenerate metric group is not modular");
                break;
            }
            auto ring = verlinde_fusion(data);
            for (int a = 0; a < g.size() && c.ok; ++a)
                for (int b = 0; b < g.size(); ++b)
                    if (ring.N(a, b, g.add(a, b)) != 1) {
                        c.expect(false, "Verlinde fusion is not the group law");
                        break;
                    }

            // condense a random isotropic boson subgroup
            std::vector<int> bosons;
            for (int x = 1; x < g.size(); ++x) {
                if (!m.q[std::size_t(x)].mod1().is_zero())
                    continue;
                bool compat = m.bform(x, x).is_zero();
                for (int y : bosons)
                    compat = compat && m.bform(x, y).is_zero();
                if (compat && rng() % 2)
                    bosons.push_back(x);
            }
            auto bg = make_boson_group(data, bosons);
            auto res = condense(data, bg);
            double want = data.total_dim / (double(res.boson_count) * res.boson_count);
            c.expect(std::abs(res.condensed.total_dim - want) <= 1e-6 * std::max(1.0, want),
                     "condensed dimension bookkeeping fails");
            cplx xi_host = gauss_sums(data).first / std::sqrt(data.total_dim);
            cplx xi_cond = gauss_sums(res.condensed).first / std::sqrt(res.condensed.total_dim);
            c.expect(std::abs(xi_host - xi_cond) < 1e-9, "condensation changed the Gauss sum");
            if (!c.ok)
                break;
        }
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.finish();
}

} // namespace

int main() {
    auto cat = mext_svect_catalog();
    criterion1(cat);
    criterion2(cat);
    criterion3(cat);
    criterion4();
    criterion5();
    criterion6(cat);
    criterion7();
    criterion8(cat);
    criterion9();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
