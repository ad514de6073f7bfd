#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mext/errors.hpp"
#include "mext/linalg.hpp"

namespace mext {

/// Commutative fusion ring: labels, unit, duals and fusion multiplicities
/// N_{ab}^c (stored sparsely; absent means 0).
class FusionRing {
  public:
    FusionRing() : rank_(0), unit_(0) {}
    FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual)
        : rank_(int(labels.size())), labels_(std::move(labels)), unit_(unit),
          dual_(std::move(dual)), table_(std::size_t(rank_) * rank_) {}

    int rank() const { return rank_; }
    int unit() const { return unit_; }
    int dual(int a) const { return dual_[std::size_t(a)]; }
    const std::vector<int>& duals() const { return dual_; }
    const std::string& label(int a) const { return labels_[std::size_t(a)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int N(int a, int b, int c) const {
        for (auto& [cc, n] : table_[idx(a, b)])
            if (cc == c)
                return n;
        return 0;
    }

    void set_N(int a, int b, int c, int n) {
        if (n < 0)
            throw invalid_ring_error("fusion multiplicity must be non-negative");
        if (n == 0)
            return;
        for (auto& [cc, nn] : table_[idx(a, b)])
            if (cc == c) {
                nn = n;
                return;
            }
        table_[idx(a, b)].emplace_back(c, n);
    }

    /// all (c, N_{ab}^c) with N > 0
    const std::vector<std::pair<int, int>>& products(int a, int b) const {
        return table_[idx(a, b)];
    }

    /// dense fusion matrix (N_a)_{bc} = N_{ab}^c, materialized on demand
    std::vector<std::vector<int>> fusion_matrix(int a) const {
        std::vector<std::vector<int>> m(static_cast<std::size_t>(rank_), std::vector<int>(std::size_t(rank_), 0));
        for (int b = 0; b < rank_; ++b)
            for (auto& [c, n] : products(a, b))
                m[std::size_t(b)][std::size_t(c)] = n;
        return m;
    }

    bool is_invertible(int a) const {
        auto& p = products(a, dual_[std::size_t(a)]);
        return p.size() == 1 && p[0].first == unit_ && p[0].second == 1;
    }

    /// unique fusion product of an invertible label with any label
    int fuse_invertible(int a, int x) const {
        auto& p = products(a, x);
        if (p.size() != 1 || p[0].second != 1)
            throw invalid_ring_error("label '" + label(a) + "' is not invertible");
        return p[0].first;
    }

    /// Checks unit laws, commutativity, associativity, and duality.
    /// Throws invalid_ring_error on the first violation.
    void validate() const {
        if (rank_ <= 0 || unit_ < 0 || unit_ >= rank_ || int(dual_.size()) != rank_)
            throw invalid_ring_error("malformed fusion ring");
        for (int a = 0; a < rank_; ++a) {
            if (dual_[std::size_t(dual_[std::size_t(a)])] != a)
                throw invalid_ring_error("dual is not involutive at '" + label(a) + "'");
            for (int b = 0; b < rank_; ++b) {
                int want = (a == b) ? 1 : 0;
                if (N(unit_, a, b) != want || N(a, unit_, b) != want)
                    throw invalid_ring_error("unit law fails at (" + label(a) + "," + label(b) + ")");
                if (N(a, b, unit_) != ((b == dual_[std::size_t(a)]) ? 1 : 0))
                    throw invalid_ring_error("duality fails at (" + label(a) + "," + label(b) + ")");
                for (auto& [c, n] : products(a, b))
                    if (N(b, a, c) != n)
                        throw invalid_ring_error("fusion is not commutative at (" + label(a) + "," +
                                                 label(b) + ")");
            }
        }
        // associativity: sum_e N_ab^e N_ec^d = sum_f N_bc^f N_af^d
        std::vector<int> lhs(static_cast<std::size_t>(rank_)), rhs(static_cast<std::size_t>(rank_));
        for (int a = 0; a < rank_; ++a)
            for (int b = a; b < rank_; ++b) // commutative: b >= a suffices
                for (int c = 0; c < rank_; ++c) {
                    std::fill(lhs.begin(), lhs.end(), 0);
                    std::fill(rhs.begin(), rhs.end(), 0);
                    for (auto& [e, n1] : products(a, b))
                        for (auto& [d, n2] : products(e, c))
                            lhs[std::size_t(d)] += n1 * n2;
                    for (auto& [f, n1] : products(b, c))
                        for (auto& [d, n2] : products(a, f))
                            rhs[std::size_t(d)] += n1 * n2;
                    if (lhs != rhs)
                        throw invalid_ring_error("fusion is not associative at (" + label(a) + "," +
                                                 label(b) + "," + label(c) + ")");
                }
    }

  private:
    std::size_t idx(int a, int b) const { return std::size_t(a) * rank_ + b; }

    int rank_;
    std::vector<std::string> labels_;
    int unit_;
    std::vector<int> dual_;
    std::vector<std::vector<std::pair<int, int>>> table_;
};

/// Frobenius-Perron dimension of every label (largest eigenvalue of N_a).
inline std::vector<double> fp_dims(const FusionRing& ring) {
    ring.validate();
    std::vector<double> d(static_cast<std::size_t>(ring.rank()));
    for (int a = 0; a < ring.rank(); ++a)
        d[std::size_t(a)] = perron_frobenius(ring.fusion_matrix(a));
    return d;
}

} // namespace mext
