#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adeq/monomial.hpp"

namespace adeq {

/// @brief String of consecutive q-exponents centre-r+1, centre-r+3, .., centre+r-1.
struct Segment {
    long long centre = 0;
    long long length = 0;

    bool operator==(const Segment& o) const { return centre == o.centre && length == o.length; }
    bool operator<(const Segment& o) const {
        return std::tie(centre, length) < std::tie(o.centre, o.length);
    }
};

/// @brief Multiset of lowering positions, sorted ascending. Applied as the product of A[node, p]^-1.
using Chain = std::vector<long long>;

/// @brief Character of one length-r string with the given centre, as single-node monomials.
///
/// Entry t has positive factors at centre-r+1, .., centre+r-1-2t and negative factors at
/// centre+r+3-2t, .., centre+r+1; its chain is the prefix {centre+r-2u : u < t}.
inline std::vector<std::pair<Chain, Monomial>> string_character(int node, Segment seg) {
    std::vector<std::pair<Chain, Monomial>> out;
    for (long long t = 0; t <= seg.length; ++t) {
        Monomial m;
        for (long long k = 0; k < seg.length - t; ++k) {
            m = m * Monomial::y(node, seg.centre - seg.length + 1 + 2 * k, 1);
        }
        for (long long k = 0; k < t; ++k) {
            m = m * Monomial::y(node, seg.centre + seg.length + 1 - 2 * k, -1);
        }
        Chain chain;
        for (long long u = 0; u < t; ++u) chain.push_back(seg.centre + seg.length - 2 * u);
        std::sort(chain.begin(), chain.end());
        out.emplace_back(std::move(chain), std::move(m));
    }
    return out;
}

/// @brief True when the union of the two strings is a string and neither contains the other.
inline bool special_position(Segment a, Segment b) {
    long long la = a.centre - a.length + 1;
    long long ra = a.centre + a.length - 1;
    long long lb = b.centre - b.length + 1;
    long long rb = b.centre + b.length - 1;
    if (((la % 2) + 2) % 2 != ((lb % 2) + 2) % 2) return false;
    if (std::max(la, lb) > std::min(ra, rb) + 2) return false;
    bool a_in_b = lb <= la && ra <= rb;
    bool b_in_a = la <= lb && rb <= ra;
    return !a_in_b && !b_in_a;
}

/// @brief Splits a dominant single-node monomial into its strings.
///
/// Greedy leftmost-longest extraction; the result is the unique decomposition
/// in which no two strings are in special position.
inline std::vector<Segment> split_segments(const Monomial& dom) {
    std::map<long long, long long> avail;
    for (const auto& f : dom.factors()) {
        if (f.power <= 0) throw std::domain_error("split_segments expects a dominant monomial");
        avail[f.key.exp] = f.power;
    }
    auto consume = [&avail](long long exp) {
        auto it = avail.find(exp);
        if (--it->second == 0) avail.erase(it);
    };
    std::vector<Segment> segs;
    while (!avail.empty()) {
        long long start = avail.begin()->first;
        long long end = start;
        consume(start);
        while (avail.count(end + 2)) {
            end += 2;
            consume(end);
        }
        segs.push_back({(start + end) / 2, (end - start) / 2 + 1});
    }
    return segs;
}

/// @brief Character of the simple module with the given dominant highest monomial,
/// keyed by lowering chain.
///
/// The unit monomial yields the single empty chain. Distinct string combinations
/// that merge to the same chain accumulate multiplicity.
inline std::map<Chain, long long> expand_chains(int node, const Monomial& dom) {
    std::map<Chain, long long> acc{{Chain{}, 1}};
    for (Segment seg : split_segments(dom)) {
        std::map<Chain, long long> next;
        for (const auto& [chain, mult] : acc) {
            for (const auto& [add, m] : string_character(node, seg)) {
                (void)m;
                Chain merged = chain;
                merged.insert(merged.end(), add.begin(), add.end());
                std::sort(merged.begin(), merged.end());
                next[merged] = checked_add(next[merged], mult);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

/// @brief Character of the simple module with the given dominant highest monomial,
/// as a monomial multiset.
inline std::map<Monomial, long long> simple_character(int node, const Monomial& dom) {
    std::map<Monomial, long long> acc{{Monomial::unit(), 1}};
    for (Segment seg : split_segments(dom)) {
        std::map<Monomial, long long> next;
        for (const auto& [m, mult] : acc) {
            for (const auto& [chain, part] : string_character(node, seg)) {
                (void)chain;
                next[m * part] = checked_add(next[m * part], mult);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

/// @brief Decomposes a single-node monomial multiset into simple characters.
///
/// Returns the multiset of highest monomials, or throws if the input is not a
/// nonnegative integer combination of simple characters. Works down the
/// classical degree: every surviving monomial of top degree must head a module.
inline std::map<Monomial, long long> decompose_characters(int node,
                                                          const std::map<Monomial, long long>& input) {
    std::map<long long, std::map<Monomial, long long>> buckets;
    for (const auto& [m, c] : input) {
        if (c != 0) buckets[m.degree()][m] = c;
    }
    std::map<Monomial, long long> heads;
    while (!buckets.empty()) {
        auto top = std::prev(buckets.end());
        auto layer = std::move(top->second);
        buckets.erase(top);
        for (const auto& [m, c] : layer) {
            if (c == 0) continue;
            if (c < 0 || !m.dominant()) {
                throw std::domain_error("multiset is not a nonnegative combination of simple characters");
            }
            heads[m] = checked_add(heads[m], c);
            for (const auto& [mm, cc] : simple_character(node, m)) {
                if (mm == m) continue;
                auto& slot = buckets[mm.degree()][mm];
                slot = checked_sub(slot, checked_mul(c, cc));
            }
        }
    }
    return heads;
}

} // namespace adeq
