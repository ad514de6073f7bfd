#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mext/fusion_ring.hpp"
#include "mext/rational.hpp"

namespace mext {

inline constexpr double kNumTol = 1e-9;  // numeric equality
inline constexpr double kIntTol = 1e-6;  // integrality snapping

/// Premodular data: a fusion ring with twists (exact rationals mod 1,
/// theta_a = exp(2 pi i r_a)) and the unnormalized S-matrix.
struct PreModularData {
    FusionRing ring;
    std::vector<Rational> twists;
    CMatrix smat;
    std::vector<double> dims; // d_a = S_{unit,a}
    double total_dim = 0;     // D = sum d_a^2

    int rank() const { return ring.rank(); }
    cplx theta(int a) const { return root_of_unity(twists[std::size_t(a)]); }

    /// Full invariant check: symmetry, positivity of the unit row, dual
    /// symmetry, the balancing equation, and dims = Frobenius-Perron dims.
    static PreModularData make_checked(FusionRing ring, std::vector<Rational> twists, CMatrix smat) {
        ring.validate();
        PreModularData d = make_trusted(std::move(ring), std::move(twists), std::move(smat));
        for (int a = 0; a < d.rank(); ++a) {
            if (!(d.dims[std::size_t(a)] > 0))
                throw inconsistent_data_error("S_{unit,a} must be positive at '" + d.ring.label(a) + "'");
            int ad = d.ring.dual(a);
            if (std::abs(d.dims[std::size_t(a)] - d.dims[std::size_t(ad)]) > kNumTol)
                throw inconsistent_data_error("d_a != d_{a*} at '" + d.ring.label(a) + "'");
            if (!equal_mod1(d.twists[std::size_t(a)], d.twists[std::size_t(ad)]))
                throw inconsistent_data_error("theta_a != theta_{a*} at '" + d.ring.label(a) + "'");
        }
        for (int a = 0; a < d.rank(); ++a)
            for (int b = a; b < d.rank(); ++b)
                if (std::abs(d.smat(a, b) - d.smat(b, a)) > kNumTol)
                    throw inconsistent_data_error("S-matrix is not symmetric");
        double bal = d.balancing_residual();
        if (bal > kNumTol)
            throw inconsistent_data_error("balancing equation fails, residual " + std::to_string(bal));
        for (int a = 0; a < d.rank(); ++a) {
            double fp = perron_frobenius(d.ring.fusion_matrix(a));
            if (std::abs(fp - d.dims[std::size_t(a)]) > kNumTol)
                throw inconsistent_data_error("dims differ from Frobenius-Perron dims at '" +
                                              d.ring.label(a) + "'");
        }
        return d;
    }

    /// Derives dims and D without re-verifying invariants. For internal
    /// constructions whose inputs are already validated.
    static PreModularData make_trusted(FusionRing ring, std::vector<Rational> twists, CMatrix smat) {
        PreModularData d;
        d.ring = std::move(ring);
        d.twists = std::move(twists);
        d.smat = std::move(smat);
        for (auto& t : d.twists)
            t = t.mod1();
        int n = d.ring.rank();
        if (int(d.twists.size()) != n || d.smat.rows() != n || d.smat.cols() != n)
            throw inconsistent_data_error("premodular data sizes do not match rank");
        d.dims.resize(static_cast<std::size_t>(n));
        d.total_dim = 0;
        for (int a = 0; a < n; ++a) {
            double v = d.smat(d.ring.unit(), a).real();
            d.dims[std::size_t(a)] = v;
            d.total_dim += v * v;
        }
        return d;
    }

    /// max_{a,b} | S_ab - (theta_a theta_b)^{-1} sum_c N_ab^c theta_c d_c |
    double balancing_residual() const {
        double worst = 0;
        for (int a = 0; a < rank(); ++a)
            for (int b = a; b < rank(); ++b) {
                cplx acc = 0;
                for (auto& [c, n] : ring.products(a, b))
                    acc += double(n) * theta(c) * dims[std::size_t(c)];
                acc /= theta(a) * theta(b);
                worst = std::max(worst, std::abs(acc - smat(a, b)));
            }
        return worst;
    }
};

/// (tau^+, tau^-) with tau^{pm} = sum_x theta_x^{pm 1} d_x^2
inline std::pair<cplx, cplx> gauss_sums(const PreModularData& d) {
    cplx tp = 0, tm = 0;
    for (int x = 0; x < d.rank(); ++x) {
        double d2 = d.dims[std::size_t(x)] * d.dims[std::size_t(x)];
        tp += d.theta(x) * d2;
        tm += std::conj(d.theta(x)) * d2;
    }
    return {tp, tm};
}

struct CentralCharge {
    Rational c;    // additive central charge mod 8, representative in [0,8)
    cplx xi;       // multiplicative central charge tau^+ / sqrt(D)
};

/// xi = tau^+/sqrt(D) and c with xi = exp(2 pi i c/8), c snapped to a
/// rational with denominator <= 16.
inline CentralCharge central_charge(const PreModularData& d) {
    cplx tp = gauss_sums(d).first;
    cplx xi = tp / std::sqrt(d.total_dim);
    if (std::abs(std::abs(xi) - 1.0) > kNumTol)
        throw anomalous_gauss_sum_error("|tau^+|/sqrt(D) = " + std::to_string(std::abs(xi)) +
                                        ", data is degenerate");
    double c = std::arg(xi) * 8.0 / (2.0 * std::numbers::pi); // in (-4, 4]
    for (int q = 1; q <= 16; ++q) {
        double p = std::round(c * q);
        if (std::abs(c * q - p) <= kIntTol * q) {
            Rational m(std::int64_t(p), q);
            while (m < Rational(0))
                m += Rational(8);
            while (m >= Rational(8))
                m -= Rational(8);
            return {m, xi};
        }
    }
    throw anomalous_gauss_sum_error("central charge does not snap to p/q with q <= 16");
}

/// Same data with reversed braiding: twists negated, S entrywise conjugated.
inline PreModularData conjugate(const PreModularData& d) {
    std::vector<Rational> tw = d.twists;
    for (auto& t : tw)
        t = (-t).mod1();
    return PreModularData::make_trusted(d.ring, std::move(tw), d.smat.conj());
}

/// Deligne product: labels are pairs, twists add, S is the Kronecker product.
inline PreModularData deligne_product(const PreModularData& a, const PreModularData& b) {
    int ra = a.rank(), rb = b.rank();
    std::vector<std::string> labels(std::size_t(ra) * rb);
    std::vector<int> dual(std::size_t(ra) * rb);
    std::vector<Rational> twists(std::size_t(ra) * rb);
    auto id = [&](int i, int j) { return i * rb + j; };
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) {
            labels[std::size_t(id(i, j))] = "(" + a.ring.label(i) + "," + b.ring.label(j) + ")";
            dual[std::size_t(id(i, j))] = id(a.ring.dual(i), b.ring.dual(j));
            twists[std::size_t(id(i, j))] = (a.twists[std::size_t(i)] + b.twists[std::size_t(j)]).mod1();
        }
    FusionRing ring(std::move(labels), id(a.ring.unit(), b.ring.unit()), std::move(dual));
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < ra; ++j)
            for (auto& [k, n1] : a.ring.products(i, j))
                for (int p = 0; p < rb; ++p)
                    for (int q = 0; q < rb; ++q)
                        for (auto& [r, n2] : b.ring.products(p, q))
                            ring.set_N(id(i, p), id(j, q), id(k, r), n1 * n2);
    return PreModularData::make_trusted(std::move(ring), std::move(twists),
                                        kronecker(a.smat, b.smat));
}

/// Fusion rules recovered from the S-matrix by the Verlinde formula.
/// Requires s = S/sqrt(D) unitary; each N_{ab}^c must land on a
/// non-negative integer within the snapping tolerance.
inline FusionRing verlinde_fusion(const PreModularData& d) {
    int n = d.rank();
    double resid = unitarity_residual(d.smat, d.total_dim);
    if (resid > kNumTol)
        throw not_modular_error("normalized S-matrix is not unitary (residual " +
                                std::to_string(resid) + ")");
    // N_{ab}^c = sum_x s_ax s_bx conj(s_cx) / s_{unit,x} with s = S/sqrt(D)
    // duals from N_{ab}^unit computed on the fly below
    std::vector<int> dual(std::size_t(n), -1);
    std::vector<std::vector<std::pair<int, int>>> fusion(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                cplx acc = 0;
                for (int x = 0; x < n; ++x)
                    acc += d.smat(a, x) * d.smat(b, x) * std::conj(d.smat(c, x)) /
                           (d.smat(d.ring.unit(), x) * d.total_dim);
                double re = acc.real(), im = acc.imag();
                double rounded = std::round(re);
                if (std::abs(re - rounded) > kIntTol || std::abs(im) > kIntTol)
                    throw integrality_error("Verlinde number is not an integer at (" +
                                            d.ring.label(a) + "," + d.ring.label(b) + "," +
                                            d.ring.label(c) + ")");
                if (rounded < -0.5)
                    throw integrality_error("negative Verlinde number at (" + d.ring.label(a) + "," +
                                            d.ring.label(b) + "," + d.ring.label(c) + ")");
                int nn = int(rounded);
                if (nn > 0) {
                    fusion[std::size_t(a) * n + b].emplace_back(c, nn);
                    if (c == d.ring.unit() && nn == 1)
                        dual[std::size_t(a)] = b;
                }
            }
    for (int a = 0; a < n; ++a)
        if (dual[std::size_t(a)] < 0)
            throw integrality_error("no dual found for '" + d.ring.label(a) + "'");
    FusionRing ring(d.ring.labels(), d.ring.unit(), dual);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (auto& [c, nn] : fusion[std::size_t(a) * n + b])
                ring.set_N(a, b, c, nn);
    ring.validate();
    return ring;
}

namespace detail {

/// labels x with |S_{xy} - d_x d_y| < tol for all y
inline std::vector<int> transparent_set(const PreModularData& d) {
    std::vector<int> out;
    for (int x = 0; x < d.rank(); ++x) {
        bool ok = true;
        for (int y = 0; y < d.rank() && ok; ++y)
            ok = std::abs(d.smat(x, y) - d.dims[std::size_t(x)] * d.dims[std::size_t(y)]) < kNumTol;
        if (ok)
            out.push_back(x);
    }
    return out;
}

} // namespace detail

struct ModularityReport {
    bool is_modular = false;
    std::vector<std::pair<std::string, double>> failures; // (check name, residual)
    std::optional<cplx> xi;
    std::optional<Rational> c;
};

/// Non-degeneracy checks: (i) S conj(S)^T = D Id, (ii) Verlinde integrality
/// and agreement with the declared fusion, (iii) s^2 = charge conjugation,
/// (iv) (st)^3 = xi s^2, (v) no transparent object besides the unit.
inline ModularityReport is_modular(const PreModularData& d) {
    ModularityReport rep;
    int n = d.rank();
    double r1 = unitarity_residual(d.smat, d.total_dim);
    if (r1 > kNumTol)
        rep.failures.emplace_back("unitarity", r1);

    if (r1 <= kNumTol) {
        try {
            FusionRing v = verlinde_fusion(d);
            double mismatch = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        mismatch = std::max(mismatch, double(std::abs(v.N(a, b, c) - d.ring.N(a, b, c))));
            if (mismatch > 0)
                rep.failures.emplace_back("verlinde-mismatch", mismatch);
        } catch (const error&) {
            rep.failures.emplace_back("verlinde-integrality", 1.0);
        }
    } else {
        rep.failures.emplace_back("verlinde-integrality", r1);
    }

    double sq = std::sqrt(d.total_dim);
    CMatrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s(i, j) = d.smat(i, j) / sq;
    CMatrix s2 = s * s;
    CMatrix cc(n, n);
    for (int a = 0; a < n; ++a)
        cc(a, d.ring.dual(a)) = 1.0;
    double r3 = s2.max_diff(cc);
    if (r3 > kNumTol)
        rep.failures.emplace_back("s^2=C", r3);

    // In the balancing convention fixed here (N_{ab}^c, no duals) the
    // SL(2,Z) relation reads (st)^3 = xi s^2 C; for self-dual spectra this
    // is the usual (st)^3 = xi s^2.
    CMatrix st(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            st(i, j) = s(i, j) * d.theta(j);
    CMatrix st3 = st * st * st;
    cplx xi = gauss_sums(d).first / sq;
    CMatrix s2c = s2 * cc;
    CMatrix want(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            want(i, j) = xi * s2c(i, j);
    double r4 = st3.max_diff(want);
    if (r4 > kNumTol)
        rep.failures.emplace_back("(st)^3=xi*s^2*C", r4);

    auto trans = detail::transparent_set(d);
    if (trans.size() != 1 || trans[0] != d.ring.unit())
        rep.failures.emplace_back("transparent-objects", double(trans.size() > 0 ? trans.size() - 1 : 1));

    rep.is_modular = rep.failures.empty();
    if (rep.is_modular) {
        auto chr = central_charge(d);
        rep.xi = chr.xi;
        rep.c = chr.c;
    }
    return rep;
}

/// Canonical label order: unit first, then by (d, twist, label name).
struct CanonicalForm {
    PreModularData data;
    std::vector<int> perm; // perm[new index] = old index
};

inline CanonicalForm canonical_form(const PreModularData& d) {
    int n = d.rank();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[std::size_t(i)] = i;
    auto key_less = [&](int x, int y) {
        if (x == d.ring.unit() || y == d.ring.unit())
            return x == d.ring.unit() && y != d.ring.unit();
        double dx = d.dims[std::size_t(x)], dy = d.dims[std::size_t(y)];
        if (std::abs(dx - dy) > kNumTol)
            return dx < dy;
        if (d.twists[std::size_t(x)] != d.twists[std::size_t(y)])
            return d.twists[std::size_t(x)] < d.twists[std::size_t(y)];
        return d.ring.label(x) < d.ring.label(y);
    };
    std::stable_sort(order.begin(), order.end(), key_less);
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        inv[std::size_t(order[std::size_t(i)])] = i;

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    std::vector<int> dual(static_cast<std::size_t>(n));
    std::vector<Rational> twists(static_cast<std::size_t>(n));
    CMatrix smat(n, n);
    for (int i = 0; i < n; ++i) {
        int o = order[std::size_t(i)];
        labels[std::size_t(i)] = d.ring.label(o);
        dual[std::size_t(i)] = inv[std::size_t(d.ring.dual(o))];
        twists[std::size_t(i)] = d.twists[std::size_t(o)];
        for (int j = 0; j < n; ++j)
            smat(i, j) = d.smat(o, order[std::size_t(j)]);
    }
    FusionRing ring(std::move(labels), 0, std::move(dual));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (auto& [c, nn] : d.ring.products(order[std::size_t(a)], order[std::size_t(b)]))
                ring.set_N(a, b, inv[std::size_t(c)], nn);
    CanonicalForm cf;
    cf.data = PreModularData::make_trusted(std::move(ring), std::move(twists), std::move(smat));
    cf.perm = order;
    return cf;
}

} // namespace mext
