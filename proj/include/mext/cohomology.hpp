#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "mext/abelian.hpp"
#include "mext/catalogs.hpp"
#include "mext/snf.hpp"

namespace mext {

/// Q/Z-valued 3-cochain on a finite abelian group; omega = exp(2 pi i value).
struct Cocycle3 {
    AbelianGroup group;
    std::vector<Rational> values; // indexed (g1 |G| + g2) |G| + g3

    Rational value(int a, int b, int c) const {
        int n = group.size();
        return values[std::size_t((a * n + b) * n + c)];
    }
    Rational& value(int a, int b, int c) {
        int n = group.size();
        return values[std::size_t((a * n + b) * n + c)];
    }

    /// delta omega = 0 in Q/Z, checked exactly on all argument tuples.
    bool is_cocycle() const {
        int n = group.size();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        Rational s = value(b, c, d) - value(group.add(a, b), c, d) +
                                     value(a, group.add(b, c), d) - value(a, b, group.add(c, d)) +
                                     value(a, b, c);
                        if (!s.mod1().is_zero())
                            return false;
                    }
        return true;
    }

    Cocycle3 operator+(const Cocycle3& o) const {
        Cocycle3 r = *this;
        for (std::size_t i = 0; i < values.size(); ++i)
            r.values[i] = (values[i] + o.values[i]).mod1();
        return r;
    }

    Cocycle3 scaled(int k) const {
        Cocycle3 r = *this;
        for (std::size_t i = 0; i < values.size(); ++i)
            r.values[i] = (values[i] * Rational(k)).mod1();
        return r;
    }
};

/// The standard generator of H^3(Z_n, U(1)) = Z_n:
/// value(a,b,c) = k a (b + c - ((b+c) mod n)) / n^2.
inline Cocycle3 standard_cocycle_cyclic(int n, int k) {
    if (n < 1 || k < 0 || k >= std::max(n, 1))
        throw input_error("standard_cocycle_cyclic: need n >= 1 and 0 <= k < n");
    Cocycle3 w;
    w.group = AbelianGroup({n});
    w.values.assign(std::size_t(n) * n * n, Rational(0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                w.value(a, b, c) =
                    Rational(std::int64_t(k) * a * (b + c - ((b + c) % n)), std::int64_t(n) * n)
                        .mod1();
    return w;
}

namespace detail {

/// Coboundary matrix of the bar resolution with Z coefficients at degree
/// deg -> deg+1: rows are (deg+1)-tuples, columns deg-tuples.
inline ZMatrix bar_coboundary(const AbelianGroup& g, int deg) {
    int n = g.size();
    long rows = 1, cols = 1;
    for (int i = 0; i < deg + 1; ++i)
        rows *= n;
    for (int i = 0; i < deg; ++i)
        cols *= n;
    ZMatrix d(static_cast<int>(rows), static_cast<int>(cols));
    std::vector<int> tup(static_cast<std::size_t>(deg + 1));
    for (long r = 0; r < rows; ++r) {
        long rest = r;
        for (int i = deg; i >= 0; --i) {
            tup[std::size_t(i)] = int(rest % n);
            rest /= n;
        }
        auto col_index = [&](const std::vector<int>& t) {
            long idx = 0;
            for (int v : t)
                idx = idx * n + v;
            return idx;
        };
        // face maps: drop first, merge i and i+1, drop last
        std::vector<int> face(tup.begin() + 1, tup.end());
        d(int(r), int(col_index(face))) += 1;
        int sign = -1;
        for (int i = 0; i < deg; ++i) {
            std::vector<int> t;
            for (int j = 0; j <= deg; ++j) {
                if (j == i) {
                    t.push_back(g.add(tup[std::size_t(i)], tup[std::size_t(i + 1)]));
                    ++j;
                } else {
                    t.push_back(tup[std::size_t(j)]);
                }
            }
            d(int(r), int(col_index(t))) += sign;
            sign = -sign;
        }
        std::vector<int> last(tup.begin(), tup.end() - 1);
        d(int(r), int(col_index(last))) += sign;
    }
    return d;
}

} // namespace detail

/// H^3(G, U(1)) computed as H^4(G; Z) = ker d4 / im d3 of the bar resolution
/// over the integers via Smith normal form, together with explicit Q/Z
/// representatives (one per class) from the standard I/II/III family.
class H3Data {
  public:
    explicit H3Data(const std::vector<int>& orders) : group_(orders) {
        if (group_.size() > 4)
            throw size_bound_error("h3_classes: |G| = " + std::to_string(group_.size()) +
                                   " exceeds the desk-scale bound 4");
        build();
    }

    const std::vector<int>& invariant_factors() const { return factors_; }
    long order() const { return order_; }
    const std::vector<Cocycle3>& representatives() const { return reps_; }
    const AbelianGroup& group() const { return group_; }

    /// Canonical class vector of a cocycle: its Bockstein image written in
    /// the Smith basis of ker d4 / im d3, one residue per invariant factor.
    std::vector<long> class_of(const Cocycle3& w) const {
        if (w.group.orders != group_.orders)
            throw input_error("class_of: cocycle lives on a different group");
        if (!w.is_cocycle())
            throw input_error("class_of: not a cocycle");
        int n = group_.size();
        long n3 = long(n) * n * n;
        // integer 4-cocycle F = delta(lift) with the rational lift in [0,1)
        long n4 = n3 * n;
        std::vector<mpz_class> f(static_cast<std::size_t>(n4));
        std::vector<int> tup(4);
        for (long r = 0; r < n4; ++r) {
            long rest = r;
            for (int i = 3; i >= 0; --i) {
                tup[std::size_t(i)] = int(rest % n);
                rest /= n;
            }
            Rational s = lifted(w, tup[1], tup[2], tup[3]) -
                         lifted(w, group_.add(tup[0], tup[1]), tup[2], tup[3]) +
                         lifted(w, tup[0], group_.add(tup[1], tup[2]), tup[3]) -
                         lifted(w, tup[0], tup[1], group_.add(tup[2], tup[3])) +
                         lifted(w, tup[0], tup[1], tup[2]);
            if (!s.is_integer())
                throw inconsistent_data_error("class_of: Bockstein image is not integral");
            f[std::size_t(r)] = long(s.num());
        }
        auto y = solver_->solve(f);
        // class coordinates: (U_R y)_i mod s_i on the torsion positions
        std::vector<long> cls;
        for (std::size_t p = 0; p < torsion_rows_.size(); ++p) {
            int i = torsion_rows_[p].first;
            const mpz_class& s = torsion_rows_[p].second;
            mpz_class acc = 0;
            for (int j = 0; j < rel_u_.cols(); ++j)
                acc += rel_u_(i, j) * y[std::size_t(j)];
            mpz_class m = acc % s;
            if (m < 0)
                m += s;
            cls.push_back(m.get_si());
        }
        return cls;
    }

  private:
    static Rational lifted(const Cocycle3& w, int a, int b, int c) { return w.value(a, b, c).mod1(); }

    void build() {
        ZMatrix d3 = detail::bar_coboundary(group_, 3);
        ZMatrix d4 = detail::bar_coboundary(group_, 4);
        ZMatrix kernel = kernel_basis(d4);
        solver_ = std::make_unique<LatticeSolver>(kernel);

        // relation matrix: coordinates of the d3 image inside the kernel
        int k = kernel.cols();
        ZMatrix rel(k, d3.cols());
        for (int c = 0; c < d3.cols(); ++c) {
            std::vector<mpz_class> col(static_cast<std::size_t>(d3.rows()));
            for (int r = 0; r < d3.rows(); ++r)
                col[std::size_t(r)] = d3(r, c);
            auto y = solver_->solve(col);
            for (int r = 0; r < k; ++r)
                rel(r, c) = y[std::size_t(r)];
        }
        SmithForm rf = smith_normal_form(rel, true, false);
        if (rf.rank != k)
            throw inconsistent_data_error("h3_classes: cohomology has unexpected free rank");
        rel_u_ = std::move(rf.u);
        order_ = 1;
        for (int i = 0; i < rf.rank; ++i) {
            if (rf.diag[std::size_t(i)] == 1)
                continue;
            torsion_rows_.emplace_back(i, rf.diag[std::size_t(i)]);
            factors_.push_back(int(rf.diag[std::size_t(i)].get_si()));
            order_ *= factors_.back();
        }
        std::sort(factors_.begin(), factors_.end());
        build_representatives();
    }

    /// Standard generating family: type I per cyclic factor, type II per
    /// pair, type III per triple. Verified to be cocycles and to span the
    /// computed group; one representative is kept per class.
    void build_representatives() {
        int rr = int(group_.orders.size());
        int n = group_.size();
        std::vector<Cocycle3> gens;
        std::vector<int> gen_orders;
        auto blank = [&]() {
            Cocycle3 w;
            w.group = group_;
            w.values.assign(std::size_t(n) * n * n, Rational(0));
            return w;
        };
        for (int i = 0; i < rr; ++i) {
            int ni = group_.orders[std::size_t(i)];
            if (ni == 1)
                continue;
            Cocycle3 w = blank();
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) {
                        auto ca = group_.coords(a), cb = group_.coords(b), cc = group_.coords(c);
                        int carry = cb[std::size_t(i)] + cc[std::size_t(i)] -
                                    ((cb[std::size_t(i)] + cc[std::size_t(i)]) % ni);
                        w.value(a, b, c) =
                            Rational(std::int64_t(ca[std::size_t(i)]) * carry, std::int64_t(ni) * ni)
                                .mod1();
                    }
            gens.push_back(std::move(w));
            gen_orders.push_back(ni);
        }
        for (int i = 0; i < rr; ++i)
            for (int j = i + 1; j < rr; ++j) {
                int g = int(std::gcd(group_.orders[std::size_t(i)], group_.orders[std::size_t(j)]));
                if (g == 1)
                    continue;
                int nj = group_.orders[std::size_t(j)];
                Cocycle3 w = blank();
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c) {
                            auto ca = group_.coords(a), cb = group_.coords(b), cc = group_.coords(c);
                            int carry = cb[std::size_t(j)] + cc[std::size_t(j)] -
                                        ((cb[std::size_t(j)] + cc[std::size_t(j)]) % nj);
                            w.value(a, b, c) =
                                Rational(std::int64_t(ca[std::size_t(i)]) * carry,
                                         std::int64_t(group_.orders[std::size_t(i)]) * nj)
                                    .mod1();
                        }
                gens.push_back(std::move(w));
                gen_orders.push_back(g);
            }
        for (int i = 0; i < rr; ++i)
            for (int j = i + 1; j < rr; ++j)
                for (int l = j + 1; l < rr; ++l) {
                    int g = int(std::gcd(std::gcd(group_.orders[std::size_t(i)],
                                                  group_.orders[std::size_t(j)]),
                                         group_.orders[std::size_t(l)]));
                    if (g == 1)
                        continue;
                    Cocycle3 w = blank();
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            for (int c = 0; c < n; ++c) {
                                auto ca = group_.coords(a), cb = group_.coords(b),
                                     cc = group_.coords(c);
                                w.value(a, b, c) = Rational(std::int64_t(ca[std::size_t(i)]) *
                                                                cb[std::size_t(j)] * cc[std::size_t(l)],
                                                            g)
                                                       .mod1();
                            }
                    gens.push_back(std::move(w));
                    gen_orders.push_back(g);
                }

        long expected = 1;
        for (int o : gen_orders)
            expected *= o;
        if (expected != order_)
            throw inconsistent_data_error(
                "h3_classes: standard family size does not match the Smith normal form count");

        for (auto& w : gens)
            if (!w.is_cocycle())
                throw inconsistent_data_error("h3_classes: standard family member is not a cocycle");

        // enumerate all combinations and keep one representative per class
        std::map<std::vector<long>, Cocycle3> by_class;
        std::vector<int> combo(gens.size(), 0);
        std::function<void(std::size_t, const Cocycle3&)> rec = [&](std::size_t i,
                                                                    const Cocycle3& acc) {
            if (i == gens.size()) {
                auto cls = class_of(acc);
                if (by_class.count(cls))
                    throw inconsistent_data_error(
                        "h3_classes: standard family members are cohomologous");
                by_class.emplace(cls, acc);
                return;
            }
            Cocycle3 cur = acc;
            for (int kk = 0; kk < gen_orders[i]; ++kk) {
                rec(i + 1, cur);
                cur = cur + gens[i];
            }
        };
        Cocycle3 zero;
        zero.group = group_;
        zero.values.assign(std::size_t(n) * n * n, Rational(0));
        if (gens.empty()) {
            by_class.emplace(class_of(zero), zero);
        } else {
            rec(0, zero);
        }
        if (long(by_class.size()) != order_)
            throw inconsistent_data_error("h3_classes: representative enumeration undercounts");
        for (auto& [cls, w] : by_class)
            reps_.push_back(w);
    }

    AbelianGroup group_;
    std::vector<int> factors_;
    long order_ = 1;
    std::vector<Cocycle3> reps_;
    std::unique_ptr<LatticeSolver> solver_;
    ZMatrix rel_u_;
    std::vector<std::pair<int, mpz_class>> torsion_rows_;
};

inline H3Data h3_classes(const std::vector<int>& orders) { return H3Data(orders); }

/// Restriction of a cocycle to the subgroup generated by `gens` (indices in
/// the ambient group), re-coordinatized on a cyclic basis of the subgroup.
inline Cocycle3 restrict_cocycle(const Cocycle3& w, const std::vector<int>& gens) {
    auto elems = subgroup_closure(w.group, gens);
    CyclicBasis basis = cyclic_decomposition(w.group, elems);
    AbelianGroup h(basis.orders);
    Cocycle3 out;
    out.group = h;
    int nh = h.size();
    out.values.assign(std::size_t(nh) * nh * nh, Rational(0));
    std::vector<int> embed(static_cast<std::size_t>(nh));
    for (int x = 0; x < nh; ++x) {
        auto co = h.coords(x);
        int g = 0;
        for (std::size_t i = 0; i < basis.generators.size(); ++i)
            g = w.group.add(g, w.group.mul(basis.generators[i], co[i]));
        embed[std::size_t(x)] = g;
    }
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b)
            for (int c = 0; c < nh; ++c)
                out.value(a, b, c) =
                    w.value(embed[std::size_t(a)], embed[std::size_t(b)], embed[std::size_t(c)]);
    return out;
}

/// The unique k with w equivalent to twisted_double_cyclic(n, k); the
/// enumeration oracle guarantees totality for cyclic bases in range.
inline int cocycle_class_of_extension(const ExtensionWitness& w) {
    int n = w.base.rank();
    for (int k = 0; k < n; ++k)
        if (extensions_equivalent(w, twisted_double_cyclic(n, k)))
            return k;
    throw error("cocycle_class_of_extension: witness matches no twisted double of Z_" +
                std::to_string(n));
}

} // namespace mext
