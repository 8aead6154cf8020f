#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "adeq/monomial.hpp"
#include "adeq/root_system.hpp"
#include "adeq/sl2.hpp"

namespace adeq {

struct QCharEntry {
    Monomial m;
    long long mult = 0;
    int depth = 0;
};

/// @brief Lowering edge between entries: to = from * A[node, exp]^-1.
struct QCharEdge {
    int from = 0;
    int to = 0;
    int node = 0;
    long long exp = 0;
};

/// @brief q-character of one fundamental module, entries sorted by (depth, lex).
class QCharacter {
public:
    QCharacter(int node, std::vector<QCharEntry> entries, std::vector<QCharEdge> edges,
               int lowest_index)
        : node_(node), entries_(std::move(entries)), edges_(std::move(edges)),
          lowest_index_(lowest_index) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            index_.emplace(entries_[i].m, static_cast<int>(i));
        }
    }

    int node() const { return node_; }
    const std::vector<QCharEntry>& entries() const { return entries_; }
    const std::vector<QCharEdge>& edges() const { return edges_; }

    const Monomial& head() const { return entries_.front().m; }
    const Monomial& lowest() const { return entries_[static_cast<std::size_t>(lowest_index_)].m; }
    int lowest_index() const { return lowest_index_; }

    bool contains(const Monomial& m) const { return index_.count(m) > 0; }

    long long multiplicity(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? 0 : entries_[static_cast<std::size_t>(it->second)].mult;
    }

    int index_of(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : it->second;
    }

    /// @brief Classical dimension: the sum of multiplicities.
    long long dimension() const {
        long long d = 0;
        for (const auto& e : entries_) d = checked_add(d, e.mult);
        return d;
    }

private:
    int node_;
    std::vector<QCharEntry> entries_;
    std::vector<QCharEdge> edges_;
    int lowest_index_;
    std::unordered_map<Monomial, int, MonomialHash> index_;
};

namespace detail {

struct FmState {
    std::deque<Monomial> monos;
    std::vector<int> depths;
    std::vector<std::array<long long, max_rank>> needed;
    std::vector<long long> mults;
    std::unordered_map<Monomial, int, MonomialHash> index;
};

struct FmQueueCmp {
    const FmState* st;
    bool operator()(int a, int b) const {
        auto ia = static_cast<std::size_t>(a);
        auto ib = static_cast<std::size_t>(b);
        if (st->depths[ia] != st->depths[ib]) return st->depths[ia] < st->depths[ib];
        return st->monos[ia] < st->monos[ib];
    }
};

} // namespace detail

/// @brief q-character of the fundamental module with head Y[i, 0].
///
/// Expansion rule: a monomial needs max over directions of its pending module
/// memberships as multiplicity; each direction with a deficit starts that many
/// new single-node modules at the monomial's node part, which must be dominant.
/// Contributions flow strictly downward in lowering depth, so one pass in
/// (depth, lex) order suffices. The result is cross-validated direction by
/// direction as a nonnegative combination of single-node simple characters.
inline QCharacter fm_qcharacter(const RootSystem& rs, int i, std::size_t max_monomials = 2'000'000,
                                bool validate = true) {
    detail::FmState st;
    detail::FmQueueCmp cmp{&st};
    std::set<int, detail::FmQueueCmp> queue(cmp);

    auto discover = [&](const Monomial& m, int depth) {
        auto it = st.index.find(m);
        if (it != st.index.end()) {
            if (st.depths[static_cast<std::size_t>(it->second)] != depth) {
                throw std::logic_error("fm_qcharacter: inconsistent lowering depth");
            }
            return it->second;
        }
        if (st.monos.size() >= max_monomials) {
            throw std::runtime_error("fm_qcharacter: monomial cap exceeded");
        }
        int id = static_cast<int>(st.monos.size());
        st.monos.push_back(m);
        st.depths.push_back(depth);
        st.needed.push_back({});
        st.mults.push_back(0);
        st.index.emplace(m, id);
        queue.insert(id);
        return id;
    };

    discover(Monomial::y(i, 0), 0);

    while (!queue.empty()) {
        int id = *queue.begin();
        queue.erase(queue.begin());
        auto uid = static_cast<std::size_t>(id);
        const Monomial m = st.monos[uid];

        long long mult = 1;
        if (id != 0) {
            mult = 0;
            for (int j = 0; j < rs.rank(); ++j) mult = std::max(mult, st.needed[uid][j]);
            if (mult <= 0) throw std::logic_error("fm_qcharacter: discovered monomial never needed");
        }
        st.mults[uid] = mult;

        for (int j = 1; j <= rs.rank(); ++j) {
            long long deficit = checked_sub(mult, st.needed[uid][j - 1]);
            if (deficit < 0) throw std::logic_error("fm_qcharacter: direction overshoot");
            if (deficit == 0) continue;
            Monomial beta = m.node_part(j);
            if (!beta.dominant()) {
                throw std::domain_error("fm_qcharacter: new module head is not dominant at node " +
                                        std::to_string(j));
            }
            for (const auto& [chain, cmult] : expand_chains(j, beta)) {
                if (chain.empty()) continue;
                Monomial m2 = m;
                for (long long p : chain) m2 = m2 * a_monomial(rs, j, p).inverse();
                int id2 = discover(m2, st.depths[uid] + static_cast<int>(chain.size()));
                auto uid2 = static_cast<std::size_t>(id2);
                st.needed[uid2][j - 1] =
                    checked_add(st.needed[uid2][j - 1], checked_mul(deficit, cmult));
            }
        }
    }

    std::vector<int> order(st.monos.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), cmp);

    std::vector<int> pos(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

    std::vector<QCharEntry> entries;
    entries.reserve(order.size());
    for (int id : order) {
        auto uid = static_cast<std::size_t>(id);
        entries.push_back({st.monos[uid], st.mults[uid], st.depths[uid]});
    }

    std::vector<QCharEdge> edges;
    for (std::size_t from = 0; from < entries.size(); ++from) {
        const Monomial& m = entries[from].m;
        for (const auto& f : m.factors()) {
            if (f.power <= 0) continue;
            long long r = f.key.exp + 1;
            Monomial m2 = m * a_monomial(rs, f.key.node, r).inverse();
            auto it = st.index.find(m2);
            if (it == st.index.end()) continue;
            edges.push_back({static_cast<int>(from), pos[static_cast<std::size_t>(it->second)],
                             f.key.node, r});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const QCharEdge& a, const QCharEdge& b) {
        return std::tie(a.from, a.to, a.node, a.exp) < std::tie(b.from, b.to, b.node, b.exp);
    });

    int lowest_index = -1;
    int dominant_count = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const Monomial& m = entries[k].m;
        for (const auto& f : m.factors()) {
            if (f.key.exp < 0 || f.key.exp > rs.coxeter_number()) {
                throw std::logic_error("fm_qcharacter: support leaves [0, h]");
            }
        }
        if (m.dominant()) ++dominant_count;
        if (m.antidominant() && !m.is_unit()) {
            if (lowest_index >= 0) throw std::logic_error("fm_qcharacter: antidominant not unique");
            lowest_index = static_cast<int>(k);
        }
    }
    if (dominant_count != 1 || !(entries[0].m == Monomial::y(i, 0))) {
        throw std::logic_error("fm_qcharacter: head is not the unique dominant monomial");
    }
    if (lowest_index < 0 ||
        !(entries[static_cast<std::size_t>(lowest_index)].m ==
          Monomial::y(rs.bar(i), rs.coxeter_number(), -1))) {
        throw std::logic_error("fm_qcharacter: lowest monomial mismatch");
    }

    if (validate) {
        for (int j = 1; j <= rs.rank(); ++j) {
            std::map<Monomial, long long> beta;
            for (const auto& e : entries) {
                beta[e.m.node_part(j)] = checked_add(beta[e.m.node_part(j)], e.mult);
            }
            decompose_characters(j, beta);
        }
    }

    return QCharacter(i, std::move(entries), std::move(edges), lowest_index);
}

/// @brief Computes and memoizes the fundamental q-characters of one root system.
class CharCache {
public:
    explicit CharCache(const RootSystem& rs, std::size_t max_monomials = 2'000'000)
        : rs_(rs), cap_(max_monomials) {}

    const QCharacter& get(int node) {
        auto it = chars_.find(node);
        if (it == chars_.end()) {
            it = chars_.emplace(node, fm_qcharacter(rs_, node, cap_)).first;
        }
        return it->second;
    }

    const RootSystem& root_system() const { return rs_; }

private:
    const RootSystem& rs_;
    std::size_t cap_;
    std::map<int, QCharacter> chars_;
};

} // namespace adeq
