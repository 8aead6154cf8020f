#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "adeq/root_system.hpp"

namespace adeq {

/// @brief Canonical presentation of a fusing solution:
/// fund(nodes[0]) - w~^n fund(bar(nodes[1])) + w~^m fund(nodes[2]) = 0,
/// where w~ is the Coxeter element of the view in which nodes[0] is black.
struct CanonicalFusing {
    std::array<int, 3> nodes{};
    bool swapped_view = false;
    bool slots_swapped = false;
    long long n = 0;
    long long m = 0;
    long long r = 0;
    long long s = 0;
};

/// @brief One solution of the fusing rule, with slot 1 fixed at Coxeter power zero.
struct FusingSolution {
    std::array<int, 3> nodes{};
    std::array<long long, 3> powers{};     ///< default-view Coxeter powers; powers[0] == 0
    std::array<long long, 3> exponents{};  ///< rapidity q-exponents per slot, slot 1 reference
    std::array<long long, 3> angles{};     ///< fusing angle at each slot, units of pi/h
    CanonicalFusing canonical{};
};

/// @brief Canonicalizes an exact three-orbit zero sum.
///
/// Input: fund(nodes[0]) + w^powers[1] fund(nodes[1]) + w^powers[2] fund(nodes[2]) = 0
/// in the default view, powers[0] == 0. Throws if the sum is not exactly zero or if a
/// projection lands on an angle boundary (impossible for genuine solutions).
inline FusingSolution canonicalize(const RootSystem& rs, std::array<int, 3> nodes,
                                   std::array<long long, 3> powers) {
    const int h = rs.coxeter_number();
    if (powers[0] != 0) throw std::domain_error("canonicalize: slot 1 must carry power zero");

    Weight sum = rs.fundamental(nodes[0]);
    for (int k = 1; k < 3; ++k) {
        sum = sum + rs.coxeter_apply(rs.fundamental(nodes[k]), powers[k]);
    }
    if (!sum.is_zero()) throw std::domain_error("canonicalize: weights do not sum to zero");

    FusingSolution sol;
    sol.nodes = nodes;
    sol.powers = powers;

    const bool swapped = rs.colour(nodes[0]) == Colour::white;
    std::array<long long, 3> view_powers{};
    std::array<long long, 3> pos{};
    for (int k = 0; k < 3; ++k) {
        long long p = ((powers[k] % h) + h) % h;
        view_powers[k] = swapped ? (h - p) % h : p;
        pos[k] = rs.position(nodes[k], view_powers[k], swapped);
    }
    std::array<long long, 3> e{};
    for (int k = 0; k < 3; ++k) e[k] = wrap_position(pos[k] - pos[0], h);
    if (e[1] == 0 || e[2] == 0 || e[1] == h || e[2] == h || e[1] == e[2]) {
        throw std::domain_error("canonicalize: projection hits an angle boundary");
    }
    sol.exponents = e;

    // Fusing angle at slot k: the arc between the other two slots that avoids slot k.
    {
        std::array<long long, 3> u = e;
        std::sort(u.begin(), u.end());
        auto angle_for = [&](long long p) {
            if (p == u[0]) return u[2] - u[1];
            if (p == u[1]) return 2LL * h - (u[2] - u[0]);
            return u[1] - u[0];
        };
        for (int k = 0; k < 3; ++k) sol.angles[k] = angle_for(e[k]);
    }

    CanonicalFusing can;
    can.swapped_view = swapped;
    can.slots_swapped = e[1] > 0;
    int i2 = can.slots_swapped ? 2 : 1;
    int i3 = can.slots_swapped ? 1 : 2;
    can.nodes = {nodes[0], nodes[i2], nodes[i3]};
    can.r = e[i2] + h;
    can.s = e[i3];
    if (!(0 < can.r && can.r < can.s && can.s < h)) {
        throw std::domain_error("canonicalize: rapidity exponents leave (0, h)");
    }

    // Exact power of the bar term: -w~^n fund(bar(i2)) equals the slot's orbit point.
    const int i2bar = rs.bar(can.nodes[1]);
    const Weight target = -rs.coxeter_apply(rs.fundamental(can.nodes[1]), view_powers[i2], swapped);
    can.n = -1;
    for (long long n = 0; n < h; ++n) {
        if (rs.coxeter_apply(rs.fundamental(i2bar), n, swapped) == target) {
            can.n = n;
            break;
        }
    }
    if (can.n < 0) throw std::logic_error("canonicalize: bar term has no orbit solution");
    can.m = view_powers[i3];

    const bool bar_black = rs.colour(i2bar, swapped) == Colour::black;
    if (can.r != (bar_black ? 2 * can.n : 2 * can.n - 1)) {
        throw std::logic_error("canonicalize: bar term parity mismatch");
    }
    const bool i3_black = rs.colour(can.nodes[2], swapped) == Colour::black;
    if (can.s != (i3_black ? 2 * can.m : 2 * can.m - 1)) {
        throw std::logic_error("canonicalize: third term parity mismatch");
    }
    const long long n_bound = bar_black ? h / 2 : (h + 1) / 2;
    const long long m_bound = i3_black ? h / 2 : (h + 1) / 2;
    if (!(0 < can.n && can.n <= n_bound && 0 < can.m && can.m <= m_bound)) {
        throw std::logic_error("canonicalize: canonical powers leave their bounds");
    }

    Weight check = rs.fundamental(can.nodes[0]) -
                   rs.coxeter_apply(rs.fundamental(i2bar), can.n, swapped) +
                   rs.coxeter_apply(rs.fundamental(can.nodes[2]), can.m, swapped);
    if (!check.is_zero()) throw std::logic_error("canonicalize: canonical identity fails");

    sol.canonical = can;
    return sol;
}

/// @brief Rapidity q-exponents recomputed from eigenplane angles.
///
/// Asserts each (h/pi) * angle is within 1e-6 of an integer and matches the exact
/// exponents carried by the solution.
inline std::array<long long, 3> rapidity_exponents(const RootSystem& rs,
                                                   const FusingSolution& sol) {
    const int h = rs.coxeter_number();
    const bool swapped = rs.colour(sol.nodes[0]) == Colour::white;
    const Weight ref = rs.fundamental(sol.nodes[0]);
    std::array<long long, 3> out{};
    for (int k = 0; k < 3; ++k) {
        Weight v = rs.coxeter_apply(rs.fundamental(sol.nodes[k]), sol.powers[k]);
        double units = rs.plane_angle(ref, v) * static_cast<double>(h) / RootSystem::pi();
        long long e = std::llround(units);
        if (std::abs(units - static_cast<double>(e)) > 1e-6) {
            throw std::logic_error("rapidity_exponents: angle is not an integer multiple of pi/h");
        }
        if (swapped) e = -e;
        if (e <= -h) e += 2LL * h;
        if (e > h) e -= 2LL * h;
        if (e != sol.exponents[k]) {
            throw std::logic_error("rapidity_exponents: angle disagrees with exact positions");
        }
        out[k] = e;
    }
    return out;
}

/// @brief All fusing-rule solutions with slot 1 at power zero, over ordered node triples.
///
/// Deterministic order: lexicographic in (nodes, powers).
inline std::vector<FusingSolution> enumerate_fusings(const RootSystem& rs) {
    const int h = rs.coxeter_number();
    std::vector<FusingSolution> out;
    std::vector<std::vector<Weight>> orbits;
    orbits.reserve(static_cast<std::size_t>(rs.rank()));
    for (int i = 1; i <= rs.rank(); ++i) orbits.push_back(rs.coxeter_orbit(i));

    for (int i1 = 1; i1 <= rs.rank(); ++i1) {
        const Weight& base = orbits[static_cast<std::size_t>(i1 - 1)][0];
        for (int i2 = 1; i2 <= rs.rank(); ++i2) {
            for (int i3 = 1; i3 <= rs.rank(); ++i3) {
                for (long long n2 = 0; n2 < h; ++n2) {
                    const Weight partial =
                        base + orbits[static_cast<std::size_t>(i2 - 1)][static_cast<std::size_t>(n2)];
                    for (long long n3 = 0; n3 < h; ++n3) {
                        const Weight& third =
                            orbits[static_cast<std::size_t>(i3 - 1)][static_cast<std::size_t>(n3)];
                        if ((partial + third).is_zero()) {
                            FusingSolution sol =
                                canonicalize(rs, {i1, i2, i3}, {0, n2, n3});
                            rapidity_exponents(rs, sol);
                            out.push_back(std::move(sol));
                        }
                    }
                }
            }
        }
    }
    return out;
}

enum class PrvResult { no, yes, not_computed };

/// @brief Exact test whether zero lies in the sum of the three full Weyl orbits.
///
/// Scans pairs from the two smallest orbits against a hash set of the largest;
/// returns not_computed when that pair count exceeds the cap. Never guesses.
inline PrvResult prv_admissible(const RootSystem& rs, int i, int j, int k,
                                unsigned long long pair_cap = 10'000'000ULL) {
    std::array<std::vector<Weight>, 3> orbits = {rs.weyl_orbit(rs.fundamental(i)),
                                                 rs.weyl_orbit(rs.fundamental(j)),
                                                 rs.weyl_orbit(rs.fundamental(k))};
    std::array<int, 3> ord = {0, 1, 2};
    std::sort(ord.begin(), ord.end(),
              [&](int a, int b) { return orbits[static_cast<std::size_t>(a)].size() <
                                         orbits[static_cast<std::size_t>(b)].size(); });
    const auto& small0 = orbits[static_cast<std::size_t>(ord[0])];
    const auto& small1 = orbits[static_cast<std::size_t>(ord[1])];
    const auto& large = orbits[static_cast<std::size_t>(ord[2])];

    unsigned long long pairs =
        static_cast<unsigned long long>(small0.size()) * static_cast<unsigned long long>(small1.size());
    if (pairs > pair_cap) return PrvResult::not_computed;

    std::unordered_set<Weight, WeightHash> table(large.begin(), large.end());
    for (const Weight& u : small0) {
        for (const Weight& v : small1) {
            if (table.count(-(u + v))) return PrvResult::yes;
        }
    }
    return PrvResult::no;
}

inline std::string to_string(PrvResult r) {
    switch (r) {
        case PrvResult::no: return "no";
        case PrvResult::yes: return "yes";
        default: return "not_computed";
    }
}

} // namespace adeq
