#pragma once

#include <cmath>
#include <vector>

#include "mext/metric_group.hpp"
#include "mext/premodular.hpp"

namespace mext {

/// Super vector spaces: rank 2, twists (0, 1/2), all-ones S-matrix.
/// Degenerate; its transparent set is everything.
inline PreModularData svect_data() {
    FusionRing ring({"1", "f"}, 0, {0, 1});
    ring.set_N(0, 0, 0, 1);
    ring.set_N(0, 1, 1, 1);
    ring.set_N(1, 0, 1, 1);
    ring.set_N(1, 1, 0, 1);
    CMatrix s(2, 2);
    s(0, 0) = s(0, 1) = s(1, 0) = s(1, 1) = 1.0;
    return PreModularData::make_checked(std::move(ring), {Rational(0), Rational(1, 2)},
                                        std::move(s));
}

/// Rep of a finite abelian group, realized as the pointed category on the
/// dual group with q = 0 (all bosons, S identically 1).
inline PreModularData rep_abelian(const std::vector<int>& orders) {
    MetricGroup m;
    m.group = AbelianGroup(orders);
    m.q.assign(std::size_t(m.group.size()), Rational(0));
    return pointed_mtc(m);
}

/// Ising modular category I_zeta for zeta = exp(2 pi i s), s = odd/16.
/// The spherical structure is always resolved to the unitary choice
/// eps(zeta^2 + zeta^{-2}) = +sqrt(2); twists are (0, 1/2, eps*zeta^{-1}).
inline PreModularData ising_mtc(const Rational& s_in) {
    Rational s = s_in.mod1();
    if (s.den() != 16 || s.num() % 2 == 0)
        throw input_error("ising_mtc: s must be an odd multiple of 1/16, got " + s_in.str());
    double c2 = 2.0 * std::cos(4.0 * std::numbers::pi * s.to_double()); // zeta^2 + zeta^-2
    int eps = c2 > 0 ? 1 : -1;
    Rational r_x = (-s + (eps == 1 ? Rational(0) : Rational(1, 2))).mod1();

    FusionRing ring({"1", "u", "x"}, 0, {0, 1, 2});
    ring.set_N(0, 0, 0, 1);
    ring.set_N(0, 1, 1, 1);
    ring.set_N(1, 0, 1, 1);
    ring.set_N(0, 2, 2, 1);
    ring.set_N(2, 0, 2, 1);
    ring.set_N(1, 1, 0, 1);
    ring.set_N(1, 2, 2, 1);
    ring.set_N(2, 1, 2, 1);
    ring.set_N(2, 2, 0, 1);
    ring.set_N(2, 2, 1, 1);

    const double rt2 = std::sqrt(2.0);
    CMatrix s_mat(3, 3);
    s_mat(0, 0) = 1;
    s_mat(0, 1) = 1;
    s_mat(0, 2) = rt2;
    s_mat(1, 0) = 1;
    s_mat(1, 1) = 1;
    s_mat(1, 2) = -rt2;
    s_mat(2, 0) = rt2;
    s_mat(2, 1) = -rt2;
    s_mat(2, 2) = 0;
    return PreModularData::make_checked(std::move(ring),
                                        {Rational(0), Rational(1, 2), r_x}, std::move(s_mat));
}

/// Metric group (G_kappa, q_kappa) for kappa = exp(2 pi i t/8):
/// G = Z2 x Z2 when kappa^4 = 1 and Z4 when kappa^4 = -1, with
/// q(u) = -1 on the order-2 element u and q(v) = q(u+v) = kappa.
struct SixteenfoldPointed {
    MetricGroup metric;
    int fermion; // flat index of u
};

inline SixteenfoldPointed sixteenfold_pointed(int t) {
    t = ((t % 8) + 8) % 8;
    SixteenfoldPointed out;
    if (t % 2 == 0) {
        out.metric.group = AbelianGroup({2, 2});
        out.metric.q.assign(4, Rational(0));
        // elements: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3; u=(1,0), v=(0,1)
        out.metric.q[1] = Rational(t, 8).mod1();
        out.metric.q[2] = Rational(1, 2);
        out.metric.q[3] = Rational(t, 8).mod1();
        out.fermion = 2;
    } else {
        out.metric.group = AbelianGroup({4});
        out.metric.q.assign(4, Rational(0));
        // v = 1 generates; u = 2v
        out.metric.q[1] = Rational(t, 8);
        out.metric.q[2] = Rational(1, 2);
        out.metric.q[3] = Rational(t, 8);
        out.fermion = 2;
    }
    return out;
}

} // namespace mext
