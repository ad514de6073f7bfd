#pragma once

#include <vector>

#include "mext/abelian.hpp"
#include "mext/premodular.hpp"

namespace mext {

/// Finite abelian group with a quadratic form q: G -> Q/Z.
struct MetricGroup {
    AbelianGroup group;
    std::vector<Rational> q; // indexed by flat element index

    /// q(-g) = q(g); b(g,h) = q(g+h) - q(g) - q(h) biadditive.
    void validate() const {
        int n = group.size();
        if (int(q.size()) != n)
            throw inconsistent_data_error("metric group: q size mismatch");
        if (!q[0].mod1().is_zero())
            throw inconsistent_data_error("metric group: q(0) != 0");
        for (int g = 0; g < n; ++g)
            if (!equal_mod1(q[std::size_t(g)], q[std::size_t(group.neg(g))]))
                throw inconsistent_data_error("metric group: q(-g) != q(g)");
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k) {
                    Rational lhs = bform(group.add(g, h), k);
                    Rational rhs = (bform(g, k) + bform(h, k)).mod1();
                    if (lhs != rhs)
                        throw inconsistent_data_error("metric group: b is not biadditive");
                }
    }

    Rational bform(int g, int h) const {
        return (q[std::size_t(group.add(g, h))] - q[std::size_t(g)] - q[std::size_t(h)]).mod1();
    }

    bool nondegenerate() const {
        for (int g = 1; g < group.size(); ++g) {
            bool transparent = true;
            for (int h = 0; h < group.size() && transparent; ++h)
                transparent = bform(g, h).is_zero();
            if (transparent)
                return false;
        }
        return true;
    }
};

/// Pointed premodular data of a metric group: labels are group elements,
/// fusion is the group law, theta_g = q(g), S_{gh} = exp(2 pi i b(g,h)).
/// Modular iff b is non-degenerate.
inline PreModularData pointed_mtc(const MetricGroup& m) {
    m.validate();
    int n = m.group.size();
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    std::vector<int> dual(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
        labels[std::size_t(g)] = m.group.element_name(g);
        dual[std::size_t(g)] = m.group.neg(g);
    }
    FusionRing ring(std::move(labels), 0, std::move(dual));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            ring.set_N(g, h, m.group.add(g, h), 1);
    CMatrix s(n, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            s(g, h) = root_of_unity(m.bform(g, h));
    return PreModularData::make_checked(std::move(ring), m.q, std::move(s));
}

} // namespace mext
