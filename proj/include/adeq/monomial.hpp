#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "adeq/checked.hpp"
#include "adeq/root_system.hpp"

namespace adeq {

/// @brief Index of a Y-variable: diagram node and q-exponent.
struct YKey {
    int node = 0;
    long long exp = 0;

    bool operator==(const YKey& o) const { return node == o.node && exp == o.exp; }
    bool operator<(const YKey& o) const { return std::tie(node, exp) < std::tie(o.node, o.exp); }
};

struct YFactor {
    YKey key;
    long long power = 0;

    bool operator==(const YFactor& o) const { return key == o.key && power == o.power; }
};

/// @brief Laurent monomial in the variables Y[node, exp].
///
/// Factors are kept sorted by (node, exp) with nonzero powers, so equal
/// monomials have equal representations.
class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial y(int node, long long exp, long long power = 1) {
        Monomial m;
        if (power != 0) m.f_.push_back({{node, exp}, power});
        return m;
    }

    const std::vector<YFactor>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    std::size_t size() const { return f_.size(); }

    long long power_of(int node, long long exp) const {
        YKey k{node, exp};
        auto it = std::lower_bound(f_.begin(), f_.end(), k,
                                   [](const YFactor& f, const YKey& key) { return f.key < key; });
        return (it != f_.end() && it->key == k) ? it->power : 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.f_.reserve(f_.size() + o.f_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < f_.size() || j < o.f_.size()) {
            if (j == o.f_.size() || (i < f_.size() && f_[i].key < o.f_[j].key)) {
                r.f_.push_back(f_[i++]);
            } else if (i == f_.size() || o.f_[j].key < f_[i].key) {
                r.f_.push_back(o.f_[j++]);
            } else {
                long long p = checked_add(f_[i].power, o.f_[j].power);
                if (p != 0) r.f_.push_back({f_[i].key, p});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Monomial inverse() const {
        Monomial r = *this;
        for (auto& f : r.f_) f.power = checked_sub(0, f.power);
        return r;
    }

    Monomial pow(long long k) const {
        if (k == 0) return Monomial();
        Monomial r = *this;
        for (auto& f : r.f_) f.power = checked_mul(f.power, k);
        return r;
    }

    /// @brief All q-exponents shifted by d.
    Monomial shifted(long long d) const {
        Monomial r = *this;
        for (auto& f : r.f_) f.key.exp = checked_add(f.key.exp, d);
        std::sort(r.f_.begin(), r.f_.end(),
                  [](const YFactor& a, const YFactor& b) { return a.key < b.key; });
        return r;
    }

    /// @brief Duality flip Y[j, n]^p -> Y[j, -n]^-p.
    Monomial flipped() const {
        Monomial r;
        r.f_ = f_;
        for (auto& f : r.f_) {
            f.key.exp = checked_sub(0, f.key.exp);
            f.power = checked_sub(0, f.power);
        }
        std::sort(r.f_.begin(), r.f_.end(),
                  [](const YFactor& a, const YFactor& b) { return a.key < b.key; });
        return r;
    }

    /// @brief Factors belonging to one diagram node.
    Monomial node_part(int node) const {
        Monomial r;
        for (const auto& f : f_) {
            if (f.key.node == node) r.f_.push_back(f);
        }
        return r;
    }

    bool dominant() const {
        return std::all_of(f_.begin(), f_.end(), [](const YFactor& f) { return f.power > 0; });
    }

    bool antidominant() const {
        return std::all_of(f_.begin(), f_.end(), [](const YFactor& f) { return f.power < 0; });
    }

    bool node_dominant(int node) const {
        return std::all_of(f_.begin(), f_.end(),
                           [node](const YFactor& f) { return f.key.node != node || f.power > 0; });
    }

    /// @brief True when every factor at the maximal q-exponent of the support is negative.
    bool right_negative() const {
        if (f_.empty()) return false;
        long long top = f_[0].key.exp;
        for (const auto& f : f_) top = std::max(top, f.key.exp);
        return std::all_of(f_.begin(), f_.end(),
                           [top](const YFactor& f) { return f.key.exp != top || f.power < 0; });
    }

    /// @brief True when every factor at the minimal q-exponent of the support is positive.
    bool left_positive() const {
        if (f_.empty()) return false;
        long long bot = f_[0].key.exp;
        for (const auto& f : f_) bot = std::min(bot, f.key.exp);
        return std::all_of(f_.begin(), f_.end(),
                           [bot](const YFactor& f) { return f.key.exp != bot || f.power > 0; });
    }

    /// @brief Classical degree: the sum of all powers.
    long long degree() const {
        long long d = 0;
        for (const auto& f : f_) d = checked_add(d, f.power);
        return d;
    }

    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator!=(const Monomial& o) const { return !(f_ == o.f_); }

    bool operator<(const Monomial& o) const {
        return std::lexicographical_compare(
            f_.begin(), f_.end(), o.f_.begin(), o.f_.end(), [](const YFactor& a, const YFactor& b) {
                return std::tie(a.key.node, a.key.exp, a.power) <
                       std::tie(b.key.node, b.key.exp, b.power);
            });
    }

private:
    std::vector<YFactor> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t seed = 0x811c9dc5u;
        for (const auto& f : m.factors()) {
            hash_mix(seed, static_cast<std::size_t>(f.key.node));
            hash_mix(seed, static_cast<std::size_t>(f.key.exp));
            hash_mix(seed, static_cast<std::size_t>(f.power));
        }
        return seed;
    }
};

/// @brief Classical weight of a monomial: the sum of power * fundamental(node).
inline Weight classical_weight(const Monomial& m, const RootSystem& rs) {
    Weight w;
    for (const auto& f : m.factors()) {
        if (f.key.node < 1 || f.key.node > rs.rank()) throw std::domain_error("node out of range");
        w[f.key.node - 1] = checked_add(w[f.key.node - 1], f.power);
    }
    return w;
}

/// @brief Lowering variable A[j, r] = Y[j, r-1] Y[j, r+1] * prod over neighbours k of Y[k, r]^-1.
inline Monomial a_monomial(const RootSystem& rs, int j, long long r) {
    Monomial m = Monomial::y(j, r - 1) * Monomial::y(j, r + 1);
    for (int k : rs.neighbours(j)) m = m * Monomial::y(k, r, -1);
    return m;
}

} // namespace adeq
