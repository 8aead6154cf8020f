#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "adeq/dorey.hpp"
#include "adeq/monomial.hpp"
#include "adeq/qchar.hpp"
#include "adeq/root_system.hpp"
#include "adeq/strip.hpp"

namespace adeq {

/// @brief Summand sign * w~^power fund(node) of a weight identity.
struct IdentityTerm {
    long long sign = 0;
    int node = 0;
    long long power = 0;
};

/// @brief Weight identity fund(base) = sum of terms, in the view where base is black.
struct WeightIdentity {
    int base = 0;
    bool swapped_view = false;
    std::vector<IdentityTerm> terms;
};

/// @brief Weight identity read off a monomial of the q-character with head Y[base, 0].
///
/// Each factor Y[j, e]^p maps to p * w~^n fund(j) with n determined by the strip
/// parity of (j, e). Throws if a factor violates the lattice parity or if the
/// resulting identity does not hold exactly.
inline WeightIdentity monomial_identity(const RootSystem& rs, int base, const Monomial& m) {
    WeightIdentity id;
    id.base = base;
    id.swapped_view = rs.colour(base) == Colour::white;

    Weight sum;
    for (const auto& f : m.factors()) {
        if (!is_black_strip(rs, f.key.node, f.key.exp, id.swapped_view)) {
            throw std::domain_error("monomial_identity: factor violates the strip parity");
        }
        bool even = ((f.key.exp % 2) + 2) % 2 == 0;
        long long n = even ? f.key.exp / 2 : (f.key.exp + 1) / 2;
        id.terms.push_back({f.power, f.key.node, n});
        Weight term = rs.coxeter_apply(rs.fundamental(f.key.node), n, id.swapped_view);
        for (int t = 0; t < rs.rank(); ++t) {
            sum[t] = checked_add(sum[t], checked_mul(f.power, term[t]));
        }
    }
    if (!(sum == rs.fundamental(base))) {
        throw std::domain_error("monomial_identity: identity does not hold");
    }
    return id;
}

/// @brief Strip realization of a canonical fusing solution.
struct FusingMonomial {
    Monomial quadratic;
    StripFunction c;
    StripFunction g;
    bool g_nonnegative = false;
};

/// @brief Builds the three-term strip source of a canonical fusing, solves for g,
/// and checks the associated monomial relations.
///
/// The source is +1 at (i1, 0), -1 at (bar(i2), r), +1 at (i3, s). Asserts that the
/// literal monomial of (c, g) is the unit and that the quadratic Y[bar(i2), r] *
/// Y[i3, s]^-1 lies in the q-character of the i1 fundamental module. Negative g
/// entries are recorded, not rejected.
inline FusingMonomial fusing_to_monomial(const RootSystem& rs, CharCache& cache,
                                         const CanonicalFusing& can) {
    const int i1 = can.nodes[0];
    const int i2bar = rs.bar(can.nodes[1]);
    const int i3 = can.nodes[2];

    FusingMonomial out;
    out.c[{i1, 0}] = 1;
    out.c[{i2bar, can.r}] = checked_add(out.c[{i2bar, can.r}], -1);
    out.c[{i3, can.s}] = checked_add(out.c[{i3, can.s}], 1);
    for (auto it = out.c.begin(); it != out.c.end();) {
        it = (it->second == 0) ? out.c.erase(it) : std::next(it);
    }

    out.g = strip_solve(rs, out.c, can.swapped_view);
    out.g_nonnegative = std::all_of(out.g.begin(), out.g.end(),
                                    [](const auto& kv) { return kv.second >= 0; });

    if (!strip_monomial(rs, out.c, out.g).is_unit()) {
        throw std::logic_error("fusing_to_monomial: strip monomial is not the unit");
    }
    if (!strip_weight(rs, out.c, out.g, can.swapped_view).is_zero()) {
        throw std::logic_error("fusing_to_monomial: strip weight does not vanish");
    }

    out.quadratic = Monomial::y(i2bar, can.r) * Monomial::y(i3, can.s, -1);
    if (!cache.get(i1).contains(out.quadratic)) {
        throw std::logic_error("fusing_to_monomial: quadratic monomial missing from character");
    }
    return out;
}

/// @brief Decides whether the unit monomial occurs in the product of three shifted
/// fundamental q-characters, by the two-extreme-factor reduction.
///
/// The slot with the smallest shift contributes its lowest monomial and the slot
/// with the largest shift its head, so the middle character must contain one
/// specific quadratic monomial; ties between shifts are resolved by trying every
/// consistent role assignment.
inline bool product_contains_one(CharCache& cache,
                                 const std::array<std::pair<int, long long>, 3>& slots) {
    const RootSystem& rs = cache.root_system();
    const int h = rs.coxeter_number();
    std::array<int, 3> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        const auto& lo = slots[static_cast<std::size_t>(perm[0])];
        const auto& mid = slots[static_cast<std::size_t>(perm[1])];
        const auto& hi = slots[static_cast<std::size_t>(perm[2])];
        if (lo.second > mid.second || mid.second > hi.second) continue;
        Monomial quad = Monomial::y(rs.bar(lo.first), lo.second + h - mid.second) *
                        Monomial::y(hi.first, hi.second - mid.second, -1);
        if (cache.get(mid.first).contains(quad)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// @brief Same decision by scanning all monomial triples of the shifted characters.
inline bool brute_force_product_contains_one(
    CharCache& cache, const std::array<std::pair<int, long long>, 3>& slots) {
    std::array<std::vector<Monomial>, 3> monos;
    for (int k = 0; k < 3; ++k) {
        const QCharacter& ch = cache.get(slots[static_cast<std::size_t>(k)].first);
        for (const auto& e : ch.entries()) {
            monos[static_cast<std::size_t>(k)].push_back(
                e.m.shifted(slots[static_cast<std::size_t>(k)].second));
        }
    }
    std::array<int, 3> ord = {0, 1, 2};
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return monos[static_cast<std::size_t>(a)].size() < monos[static_cast<std::size_t>(b)].size();
    });
    std::unordered_set<Monomial, MonomialHash> table(
        monos[static_cast<std::size_t>(ord[2])].begin(),
        monos[static_cast<std::size_t>(ord[2])].end());
    for (const Monomial& m1 : monos[static_cast<std::size_t>(ord[0])]) {
        for (const Monomial& m2 : monos[static_cast<std::size_t>(ord[1])]) {
            if (table.count((m1 * m2).inverse())) return true;
        }
    }
    return false;
}

/// @brief One comparison row of the main equivalence:
/// key = (middle node, bar-side node, head-side node, negative exponent, positive exponent).
struct TheoremEntry {
    std::array<long long, 5> key{};
    bool in_char = false;
    bool in_dorey = false;
};

struct TheoremReport {
    std::string algebra;
    std::size_t char_count = 0;
    std::size_t dorey_count = 0;
    std::size_t solution_count = 0;
    bool matched = false;
    std::vector<TheoremEntry> entries;
};

/// @brief Mechanised equivalence check between quadratic character monomials and
/// canonicalized fusing solutions, with prescribed rapidity exponents.
///
/// The character side collects, over every node i, the quadratic monomials
/// Y[j, r] Y[k, s]^-1 of the q-character with head Y[i, 0] as keys
/// (i, bar(j), k, r - h, s); the fusing side collects canonicalized solutions as
/// (i1, i2, i3, r - h, s). The report lists the union with membership flags.
inline TheoremReport verify_theorem(CharCache& cache) {
    const RootSystem& rs = cache.root_system();
    const int h = rs.coxeter_number();
    TheoremReport rep;
    rep.algebra = rs.name();

    std::set<std::array<long long, 5>> s_char;
    for (int i = 1; i <= rs.rank(); ++i) {
        const QCharacter& ch = cache.get(i);
        for (const auto& e : ch.entries()) {
            if (e.m.size() != 2) continue;
            const auto& fs = e.m.factors();
            const YFactor* plus = nullptr;
            const YFactor* minus = nullptr;
            for (const auto& f : fs) {
                if (f.power == 1) plus = &f;
                if (f.power == -1) minus = &f;
            }
            if (!plus || !minus) continue;
            long long r = plus->key.exp;
            long long s = minus->key.exp;
            if (!(0 < r && r < s && s < h)) {
                throw std::logic_error("verify_theorem: quadratic exponents leave the expected range");
            }
            s_char.insert({i, rs.bar(plus->key.node), minus->key.node, r - h, s});
        }
    }

    std::set<std::array<long long, 5>> s_dorey;
    std::vector<FusingSolution> sols = enumerate_fusings(rs);
    rep.solution_count = sols.size();
    for (const auto& sol : sols) {
        const CanonicalFusing& can = sol.canonical;
        s_dorey.insert({can.nodes[0], can.nodes[1], can.nodes[2], can.r - h, can.s});
    }

    rep.char_count = s_char.size();
    rep.dorey_count = s_dorey.size();
    std::set<std::array<long long, 5>> all = s_char;
    all.insert(s_dorey.begin(), s_dorey.end());
    rep.matched = true;
    for (const auto& key : all) {
        TheoremEntry e;
        e.key = key;
        e.in_char = s_char.count(key) > 0;
        e.in_dorey = s_dorey.count(key) > 0;
        if (!(e.in_char && e.in_dorey)) rep.matched = false;
        rep.entries.push_back(e);
    }
    return rep;
}

} // namespace adeq
