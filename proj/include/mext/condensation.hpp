#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mext/equivalence.hpp"
#include "mext/premodular.hpp"

namespace mext {

/// Group of invertible bosons inside a host category: contains the unit,
/// closed under fusion and duals, every member has d = 1, theta = 0 and
/// trivial monodromy with the other members.
struct BosonGroup {
    std::vector<int> members; // sorted host label indices
};

/// Monodromy of an invertible label a with x: theta_{ax} - theta_a - theta_x
/// in Q/Z. Zero iff x centralizes a (cross-checked against the S-matrix).
inline Rational monodromy_phase(const PreModularData& d, int a, int x) {
    if (!d.ring.is_invertible(a))
        throw input_error("monodromy_phase: label '" + d.ring.label(a) + "' is not invertible");
    int ax = d.ring.fuse_invertible(a, x);
    Rational m = (d.twists[std::size_t(ax)] - d.twists[std::size_t(a)] - d.twists[std::size_t(x)])
                     .mod1();
    cplx want = d.dims[std::size_t(a)] * d.dims[std::size_t(x)] * root_of_unity(m);
    if (std::abs(d.smat(a, x) - want) > kNumTol)
        throw inconsistent_data_error("monodromy phase disagrees with the S-matrix at (" +
                                      d.ring.label(a) + "," + d.ring.label(x) + ")");
    return m;
}

/// Closes `gens` under fusion and validates the boson-group invariants.
inline BosonGroup make_boson_group(const PreModularData& host, const std::vector<int>& gens) {
    for (int g : gens) {
        if (g < 0 || g >= host.rank())
            throw input_error("make_boson_group: label index out of range");
        if (!host.ring.is_invertible(g))
            throw not_condensable_error("label '" + host.ring.label(g) + "' is not invertible");
    }
    std::vector<bool> in(std::size_t(host.rank()), false);
    in[std::size_t(host.ring.unit())] = true;
    std::vector<int> todo = {host.ring.unit()};
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int g : gens) {
            int y = host.ring.fuse_invertible(g, x);
            if (!in[std::size_t(y)]) {
                in[std::size_t(y)] = true;
                todo.push_back(y);
            }
        }
    }
    BosonGroup b;
    for (int x = 0; x < host.rank(); ++x)
        if (in[std::size_t(x)])
            b.members.push_back(x);
    for (int x : b.members) {
        if (!host.twists[std::size_t(x)].mod1().is_zero())
            throw not_condensable_error("label '" + host.ring.label(x) + "' has twist " +
                                        host.twists[std::size_t(x)].str() + ", not a boson");
        for (int y : b.members)
            if (!monodromy_phase(host, x, y).is_zero())
                throw not_condensable_error("labels '" + host.ring.label(x) + "' and '" +
                                            host.ring.label(y) + "' have nontrivial monodromy");
    }
    return b;
}

struct CondensationResult {
    PreModularData condensed;
    std::vector<std::vector<int>> lift; // condensed label -> orbit of host labels
    std::vector<int> split_index;       // -1 for unsplit, else 0/1
    std::vector<int> condensed_of_host; // host label -> condensed label (-1 if confined/split)
    int boson_count = 0;
};

namespace detail {

/// Verlinde fusion directly from an unnormalized S-matrix.
inline FusionRing verlinde_from_smatrix(const CMatrix& smat, double total_dim, int unit,
                                        const std::vector<std::string>& labels) {
    int n = smat.rows();
    std::vector<int> dual(std::size_t(n), -1);
    FusionRing ring(labels, unit, std::vector<int>(std::size_t(n), 0));
    std::vector<std::vector<std::pair<int, int>>> fusion(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                cplx acc = 0;
                for (int x = 0; x < n; ++x)
                    acc += smat(a, x) * smat(b, x) * std::conj(smat(c, x)) /
                           (smat(unit, x) * total_dim);
                double rounded = std::round(acc.real());
                if (std::abs(acc.real() - rounded) > kIntTol || std::abs(acc.imag()) > kIntTol)
                    throw integrality_error("Verlinde number is not an integer at (" + labels[std::size_t(a)] +
                                            "," + labels[std::size_t(b)] + "," + labels[std::size_t(c)] + ")");
                if (rounded < -0.5)
                    throw integrality_error("negative Verlinde number at (" + labels[std::size_t(a)] + "," +
                                            labels[std::size_t(b)] + "," + labels[std::size_t(c)] + ")");
                if (int(rounded) > 0) {
                    fusion[std::size_t(a) * n + b].emplace_back(c, int(rounded));
                    if (c == unit && int(rounded) == 1)
                        dual[std::size_t(a)] = b;
                }
            }
    for (int a = 0; a < n; ++a)
        if (dual[std::size_t(a)] < 0)
            throw integrality_error("no dual found for '" + labels[std::size_t(a)] + "'");
    FusionRing out(labels, unit, dual);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (auto& [c, nn] : fusion[std::size_t(a) * n + b])
                out.set_N(a, b, c, nn);
    out.validate();
    return out;
}

/// One Verlinde number from a candidate S-matrix, for cheap spot checks.
inline bool verlinde_spot_integral(const CMatrix& smat, double total_dim, int unit, int a, int b,
                                   int c) {
    cplx acc = 0;
    for (int x = 0; x < smat.rows(); ++x)
        acc += smat(a, x) * smat(b, x) * std::conj(smat(c, x)) / (smat(unit, x) * total_dim);
    return std::abs(acc.real() - std::round(acc.real())) <= kIntTol &&
           std::abs(acc.imag()) <= kIntTol && acc.real() > -0.5;
}

} // namespace detail

/// Bosonic condensation C -> C_B^0 for a group B of invertible bosons.
///
/// Local labels (trivial monodromy with B) are grouped into B-orbits; an
/// orbit with stabilizer of order m contributes m condensed simples of
/// dimension d/m carrying the twist of the lift. S-matrix entries between
/// unsplit classes come from the host; entries involving split pieces are
/// fixed by sum rules up to one unknown per pair of fixed points, which is
/// found by a finite search over a root-of-unity grid constrained by
/// unitarity, Verlinde integrality, balancing and the modular relations.
/// All completions must agree up to a relabeling fixing the unsplit labels.
inline CondensationResult condense(const PreModularData& host, const BosonGroup& bosons) {
    // revalidate B against this host (cheap, and catches mismatched inputs)
    BosonGroup b = make_boson_group(host, bosons.members);
    const int nb = int(b.members.size());
    const int n = host.rank();

    if (unitarity_residual(host.smat, host.total_dim) > kNumTol)
        throw not_modular_error("condense: host data is not modular");
    cplx host_xi = gauss_sums(host).first / std::sqrt(host.total_dim);

    // local labels and orbits
    std::vector<bool> local(std::size_t(n), false);
    for (int x = 0; x < n; ++x) {
        bool ok = true;
        for (int g : b.members)
            if (!monodromy_phase(host, g, x).is_zero()) {
                ok = false;
                break;
            }
        local[std::size_t(x)] = ok;
    }

    std::vector<int> orbit_of(std::size_t(n), -1);
    std::vector<std::vector<int>> orbits;
    std::vector<int> stab;
    for (int x = 0; x < n; ++x) {
        if (!local[std::size_t(x)] || orbit_of[std::size_t(x)] >= 0)
            continue;
        std::vector<int> orb;
        int m = 0;
        for (int g : b.members) {
            int y = host.ring.fuse_invertible(g, x);
            if (y == x)
                ++m;
            if (orbit_of[std::size_t(y)] < 0) {
                orbit_of[std::size_t(y)] = int(orbits.size());
                orb.push_back(y);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
        stab.push_back(m);
    }
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (stab[o] > 2)
            throw underdetermined_condensation_error(
                "orbit of '" + host.ring.label(orbits[o][0]) +
                "' has stabilizer of order " + std::to_string(stab[o]) +
                "; outside the validated scope");
        if (int(orbits[o].size()) * stab[o] != nb)
            throw inconsistent_data_error("orbit size does not divide the boson group order");
    }

    // condensed label skeleton
    std::vector<int> rep, piece, class_of_orbit(orbits.size(), -1);
    std::vector<double> dims;
    std::vector<Rational> twists;
    std::vector<std::string> names;
    std::vector<int> fixed; // host reps of split orbits
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        int r = orbits[o][0];
        class_of_orbit[o] = int(rep.size());
        if (stab[o] == 1) {
            rep.push_back(r);
            piece.push_back(-1);
            dims.push_back(host.dims[std::size_t(r)]);
            twists.push_back(host.twists[std::size_t(r)]);
            names.push_back(host.ring.label(r));
        } else {
            for (int i = 0; i < 2; ++i) {
                rep.push_back(r);
                piece.push_back(i);
                dims.push_back(host.dims[std::size_t(r)] / 2.0);
                twists.push_back(host.twists[std::size_t(r)]);
                names.push_back(host.ring.label(r) + "#" + std::to_string(i));
            }
            fixed.push_back(r);
        }
    }
    const int nc = int(rep.size());
    const double dcond = host.total_dim / (double(nb) * nb);
    {
        double sum = 0;
        for (double v : dims)
            sum += v * v;
        if (std::abs(sum - dcond) > 1e-6 * std::max(1.0, dcond))
            throw inconsistent_data_error("condensed dimensions do not sum to D/|B|^2");
    }

    // twists must be constant along orbits (theta of a local label is
    // invariant under fusion with a boson)
    for (auto& orb : orbits)
        for (int x : orb)
            if (!equal_mod1(host.twists[std::size_t(x)], host.twists[std::size_t(orb[0])]))
                throw inconsistent_data_error("twist is not constant along a condensation orbit");

    int cond_unit = class_of_orbit[std::size_t(orbit_of[std::size_t(host.ring.unit())])];

    // known S entries; split-split entries filled per search candidate
    auto base_entry = [&](int i, int j) -> cplx {
        double scale = 1.0;
        if (piece[std::size_t(i)] >= 0)
            scale /= 2.0;
        if (piece[std::size_t(j)] >= 0)
            scale /= 2.0;
        return host.smat(rep[std::size_t(i)], rep[std::size_t(j)]) * scale;
    };

    // rep-independence of the known entries
    for (int i = 0; i < nc; ++i)
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (int z : orbits[o])
                if (std::abs(host.smat(rep[std::size_t(i)], z) -
                             host.smat(rep[std::size_t(i)], orbits[o][0])) > kNumTol)
                    throw inconsistent_data_error("S-matrix is not constant along condensation orbits");

    const int t = int(fixed.size());

    // sum-rule consistency of the known part: with K(p,q) summed over orbit
    // reps, unsplit rows need K = D' delta, fixed rows K = 2 D' delta, and
    // mixed pairs K = 0.
    {
        std::vector<int> reps_unsplit;
        for (std::size_t o = 0; o < orbits.size(); ++o)
            if (stab[o] == 1)
                reps_unsplit.push_back(orbits[o][0]);
        auto kform = [&](int p, int q) {
            cplx acc = 0;
            for (int v : reps_unsplit)
                acc += host.smat(p, v) * std::conj(host.smat(q, v));
            for (int w : fixed)
                acc += host.smat(p, w) * std::conj(host.smat(q, w)) / 2.0;
            return acc;
        };
        for (std::size_t i = 0; i < reps_unsplit.size(); ++i)
            for (std::size_t j = i; j < reps_unsplit.size(); ++j) {
                cplx want = (i == j) ? cplx(dcond) : cplx(0);
                if (std::abs(kform(reps_unsplit[i], reps_unsplit[j]) - want) > 1e-6 * std::max(1.0, dcond))
                    throw underdetermined_condensation_error("condensation sum rules fail on unsplit rows");
            }
        for (int w : fixed)
            for (int v : reps_unsplit)
                if (std::abs(kform(w, v)) > 1e-6 * std::max(1.0, dcond))
                    throw underdetermined_condensation_error("condensation sum rules fail on mixed rows");
        for (int i = 0; i < t; ++i)
            for (int j = i; j < t; ++j) {
                cplx want = (i == j) ? cplx(2.0 * dcond) : cplx(0);
                if (std::abs(kform(fixed[std::size_t(i)], fixed[std::size_t(j)]) - want) >
                    1e-6 * std::max(1.0, dcond))
                    throw underdetermined_condensation_error("condensation sum rules fail on fixed rows");
            }
    }

    // piece index of a condensed label among its fixed point, or -1
    std::vector<int> fixed_index_of_class(std::size_t(nc), -1);
    for (int i = 0; i < nc; ++i)
        if (piece[std::size_t(i)] >= 0)
            for (int f = 0; f < t; ++f)
                if (fixed[std::size_t(f)] == rep[std::size_t(i)])
                    fixed_index_of_class[std::size_t(i)] = f;

    auto assemble = [&](const std::vector<cplx>& tmat) {
        CMatrix s(nc, nc);
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) {
                cplx v = base_entry(i, j);
                int fi = fixed_index_of_class[std::size_t(i)];
                int fj = fixed_index_of_class[std::size_t(j)];
                if (fi >= 0 && fj >= 0) {
                    int lo = std::min(fi, fj), hi = std::max(fi, fj);
                    cplx delta = tmat[std::size_t(lo) * t + hi] / 2.0;
                    int sign = ((piece[std::size_t(i)] + piece[std::size_t(j)]) % 2 == 0) ? 1 : -1;
                    v += double(sign) * delta;
                }
                s(i, j) = v;
            }
        return s;
    };

    // full validation of a candidate completion
    auto validate_candidate = [&](const CMatrix& s) -> std::optional<PreModularData> {
        if (unitarity_residual(s, dcond) > kNumTol)
            return std::nullopt;
        PreModularData cand;
        try {
            FusionRing ring = detail::verlinde_from_smatrix(s, dcond, cond_unit, names);
            cand = PreModularData::make_checked(std::move(ring), twists, s);
        } catch (const error&) {
            return std::nullopt;
        }
        if (!is_modular(cand).is_modular)
            return std::nullopt;
        cplx xi = gauss_sums(cand).first / std::sqrt(cand.total_dim);
        if (std::abs(xi - host_xi) > kNumTol)
            return std::nullopt;
        return cand;
    };

    std::vector<PreModularData> solutions;
    if (t == 0) {
        auto sol = validate_candidate(assemble({}));
        if (!sol)
            throw underdetermined_condensation_error("condensed data fails validation");
        solutions.push_back(std::move(*sol));
    } else {
        // Search the symmetric t x t matrix T (= 2 Delta) with T T^dag = D' I.
        // Entry grid: T = 2(v - S_xy/4) for v in {0} u {d_i d_j exp(2 pi i k/16)}.
        //
        // Fixed points linked by an invertible unsplit class e are not
        // independent: S_{e a, b} = S_{ab} S_{eb}/d_b ties their piece rows
        // together up to one sign (the piece matching). Grouping the fixed
        // points into components under that action leaves one grid unknown
        // per pair of component roots and one sign per non-root point.
        std::vector<std::vector<cplx>> grid(static_cast<std::size_t>(t) * t);
        for (int i = 0; i < t; ++i)
            for (int j = i; j <= std::max(i, t - 1) && j < t; ++j) {
                double di = host.dims[std::size_t(fixed[std::size_t(i)])] / 2.0;
                double dj = host.dims[std::size_t(fixed[std::size_t(j)])] / 2.0;
                cplx base = host.smat(fixed[std::size_t(i)], fixed[std::size_t(j)]) / 4.0;
                std::vector<cplx> g;
                g.push_back(2.0 * (cplx(0) - base));
                for (int k = 0; k < 16; ++k)
                    g.push_back(2.0 * (di * dj * root_of_unity(Rational(k, 16)) - base));
                grid[std::size_t(i) * t + j] = std::move(g);
            }
        // invertible local unsplit host labels (one per unsplit orbit member
        // works: S rows are orbit-constant)
        std::vector<int> currents;
        for (std::size_t o = 0; o < orbits.size(); ++o)
            if (stab[o] == 1)
                for (int x : orbits[o])
                    if (host.ring.is_invertible(x))
                        currents.push_back(x);

        // BFS forest on the fixed points: edge f -> class of (e x f)
        std::vector<int> fixed_pos(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < t; ++i)
            fixed_pos[std::size_t(fixed[std::size_t(i)])] = i;
        std::vector<int> root_of(static_cast<std::size_t>(t), -1);
        std::vector<int> gz(static_cast<std::size_t>(t), host.ring.unit()); // host label with gz x root = z
        std::vector<int> roots;
        for (int r = 0; r < t; ++r) {
            if (root_of[std::size_t(r)] >= 0)
                continue;
            roots.push_back(r);
            root_of[std::size_t(r)] = r;
            std::vector<int> todo = {r};
            while (!todo.empty()) {
                int z = todo.back();
                todo.pop_back();
                for (int e : currents) {
                    int img = host.ring.fuse_invertible(e, fixed[std::size_t(z)]);
                    int w = fixed_pos[std::size_t(img)];
                    if (w >= 0 && root_of[std::size_t(w)] < 0) {
                        root_of[std::size_t(w)] = r;
                        gz[std::size_t(w)] =
                            host.ring.fuse_invertible(e, gz[std::size_t(z)]);
                        todo.push_back(w);
                    }
                }
            }
        }
        int nroots = int(roots.size());
        std::vector<int> root_index(static_cast<std::size_t>(t), -1);
        for (int i = 0; i < nroots; ++i)
            root_index[std::size_t(roots[std::size_t(i)])] = i;

        // phase of the simple-current action of g on the w-column
        auto phi = [&](int g, int w) {
            return host.smat(g, fixed[std::size_t(w)]) / host.dims[std::size_t(fixed[std::size_t(w)])];
        };

        long root_pairs = long(nroots) * (nroots + 1) / 2;
        double budget = std::pow(17.0, double(root_pairs)) * std::pow(2.0, double(t - nroots));
        if (budget > 2e6)
            throw underdetermined_condensation_error(
                "fixed-point completion search space is too large (" + std::to_string(t) +
                " fixed points in " + std::to_string(nroots) + " components)");

        // enumerate root-pair grid values and signs
        std::vector<cplx> root_delta(static_cast<std::size_t>(nroots) * nroots);
        std::vector<int> sign(static_cast<std::size_t>(t), 1);
        std::vector<cplx> tmat(static_cast<std::size_t>(t) * t);

        auto try_candidate = [&]() {
            // Delta_{zw} = s_z s_w phi(g_z, w) phi(g_w, root_z) Delta_{root_w, root_z}
            for (int z = 0; z < t; ++z)
                for (int w = 0; w < t; ++w) {
                    int rz = root_index[std::size_t(root_of[std::size_t(z)])];
                    int rw = root_index[std::size_t(root_of[std::size_t(w)])];
                    cplx delta = double(sign[std::size_t(z)] * sign[std::size_t(w)]) *
                                 phi(gz[std::size_t(z)], w) *
                                 phi(gz[std::size_t(w)], root_of[std::size_t(z)]) *
                                 root_delta[std::size_t(rw) * nroots + rz];
                    tmat[std::size_t(z) * t + w] = 2.0 * delta;
                }
            // symmetry and unitarity of T
            for (int z = 0; z < t; ++z)
                for (int w = z + 1; w < t; ++w)
                    if (std::abs(tmat[std::size_t(z) * t + w] - tmat[std::size_t(w) * t + z]) > 1e-6)
                        return;
            for (int z = 0; z < t; ++z)
                for (int w = 0; w < t; ++w) {
                    cplx acc = 0;
                    for (int k = 0; k < t; ++k)
                        acc += tmat[std::size_t(z) * t + k] * std::conj(tmat[std::size_t(w) * t + k]);
                    cplx want = (z == w) ? cplx(dcond) : cplx(0);
                    if (std::abs(acc - want) > 1e-6 * std::max(1.0, dcond))
                        return;
                }
            CMatrix s = assemble(tmat);
            // cheap integrality spot checks before the full validation
            for (int f = 0; f < std::min(t, 2); ++f) {
                int p = -1;
                for (int i = 0; i < nc && p < 0; ++i)
                    if (fixed_index_of_class[std::size_t(i)] == f)
                        p = i;
                if (!detail::verlinde_spot_integral(s, dcond, cond_unit, p, p, cond_unit) ||
                    !detail::verlinde_spot_integral(s, dcond, cond_unit, p, p, p))
                    return;
            }
            auto sol = validate_candidate(s);
            if (sol)
                solutions.push_back(std::move(*sol));
        };

        std::function<void(int)> enum_signs = [&](int z) {
            if (z == t) {
                try_candidate();
                return;
            }
            if (root_index[std::size_t(z)] >= 0) { // roots carry no sign freedom
                enum_signs(z + 1);
                return;
            }
            for (int s : {1, -1}) {
                sign[std::size_t(z)] = s;
                enum_signs(z + 1);
            }
        };
        std::function<void(int)> enum_roots = [&](int p) {
            if (p == int(root_pairs)) {
                enum_signs(0);
                return;
            }
            // p-th unordered root pair
            int a = 0, b = p;
            while (b >= nroots - a) {
                b -= nroots - a;
                ++a;
            }
            b += a;
            int fa = roots[std::size_t(a)], fb = roots[std::size_t(b)];
            int lo = std::min(fa, fb), hi = std::max(fa, fb);
            for (const cplx& tv : grid[std::size_t(lo) * t + hi]) {
                root_delta[std::size_t(a) * nroots + b] = tv / 2.0;
                root_delta[std::size_t(b) * nroots + a] = tv / 2.0;
                enum_roots(p + 1);
            }
        };
        enum_roots(0);

        if (solutions.empty())
            throw underdetermined_condensation_error(
                "fixed-point S-matrix completion: no grid assignment passes validation");
        // all solutions must agree up to a relabeling fixing the unsplit labels
        std::vector<std::pair<int, int>> pinned;
        for (int i = 0; i < nc; ++i)
            if (piece[std::size_t(i)] < 0)
                pinned.emplace_back(i, i);
        for (std::size_t k = 1; k < solutions.size(); ++k)
            if (!find_equivalence(solutions[0], solutions[k], pinned))
                throw underdetermined_condensation_error(
                    "fixed-point S-matrix completion is not unique up to relabeling");
    }

    // package and canonicalize
    CondensationResult out;
    out.boson_count = nb;
    auto cf = canonical_form(solutions[0]);
    out.condensed = std::move(cf.data);
    out.lift.resize(std::size_t(nc));
    out.split_index.assign(std::size_t(nc), -1);
    out.condensed_of_host.assign(std::size_t(n), -1);
    std::vector<int> inv(static_cast<std::size_t>(nc));
    for (int i = 0; i < nc; ++i)
        inv[std::size_t(cf.perm[std::size_t(i)])] = i;
    for (int old_i = 0; old_i < nc; ++old_i) {
        int new_i = inv[std::size_t(old_i)];
        int o = orbit_of[std::size_t(rep[std::size_t(old_i)])];
        out.lift[std::size_t(new_i)] = orbits[std::size_t(o)];
        out.split_index[std::size_t(new_i)] = piece[std::size_t(old_i)];
        if (piece[std::size_t(old_i)] < 0)
            for (int x : orbits[std::size_t(o)])
                out.condensed_of_host[std::size_t(x)] = new_i;
    }
    {
        cplx xi = gauss_sums(out.condensed).first / std::sqrt(out.condensed.total_dim);
        if (std::abs(xi - host_xi) > kNumTol)
            throw inconsistent_data_error("condensation did not preserve the Gauss sum");
    }
    return out;
}

} // namespace mext
