#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "adeq/monomial.hpp"
#include "adeq/root_system.hpp"

namespace adeq {

/// @brief Finitely supported integer function on strip nodes (node, row); zeros are absent.
using StripFunction = std::map<std::pair<int, long long>, long long>;

/// @brief Black strip nodes carry Y-variables: black nodes at even rows, white at odd rows.
inline bool is_black_strip(const RootSystem& rs, int node, long long row, bool swapped = false) {
    bool black = rs.colour(node, swapped) == Colour::black;
    bool even = ((row % 2) + 2) % 2 == 0;
    return black == even;
}

/// @brief Lattice weight of the Y-variable at a black strip node: a Coxeter orbit point.
inline Weight strip_y(const RootSystem& rs, int node, long long row, bool swapped = false) {
    if (!is_black_strip(rs, node, row, swapped)) {
        throw std::domain_error("strip_y: not a black strip node");
    }
    bool even = ((row % 2) + 2) % 2 == 0;
    long long power = even ? row / 2 : (row + 1) / 2;
    return rs.coxeter_apply(rs.fundamental(node), power, swapped);
}

/// @brief Lattice weight of the lowering variable at a white strip node; identically zero.
inline Weight strip_a(const RootSystem& rs, int node, long long row, bool swapped = false) {
    if (is_black_strip(rs, node, row, swapped)) {
        throw std::domain_error("strip_a: not a white strip node");
    }
    Weight w = strip_y(rs, node, row - 1, swapped) + strip_y(rs, node, row + 1, swapped);
    for (int k : rs.neighbours(node)) w = w - strip_y(rs, k, row, swapped);
    return w;
}

/// @brief Lattice weight of a strip pair: sum of c * y minus sum of g * a.
inline Weight strip_weight(const RootSystem& rs, const StripFunction& c, const StripFunction& g,
                           bool swapped = false) {
    Weight w;
    for (const auto& [key, val] : c) {
        Weight y = strip_y(rs, key.first, key.second, swapped);
        for (int t = 0; t < rs.rank(); ++t) w[t] = checked_add(w[t], checked_mul(val, y[t]));
    }
    for (const auto& [key, val] : g) {
        Weight a = strip_a(rs, key.first, key.second, swapped);
        for (int t = 0; t < rs.rank(); ++t) w[t] = checked_sub(w[t], checked_mul(val, a[t]));
    }
    return w;
}

/// @brief Solves the discrete recurrence for g from a source c on black strip nodes.
///
/// At every black strip node (i, n) with n >= 1 the constraint
/// g(i, n-1) + g(i, n+1) - sum over neighbours j of g(j, n) = c(i, n)
/// determines g(i, n-1) from the rows above; g vanishes at and above the top row of c.
inline StripFunction strip_solve(const RootSystem& rs, const StripFunction& c,
                                 bool swapped = false) {
    long long top = 0;
    for (const auto& [key, val] : c) {
        if (val == 0) continue;
        if (key.second < 0) throw std::domain_error("strip_solve: source below row zero");
        if (!is_black_strip(rs, key.first, key.second, swapped)) {
            throw std::domain_error("strip_solve: source is not on black strip nodes");
        }
        top = std::max(top, key.second);
    }
    StripFunction g;
    auto get = [](const StripFunction& f, int node, long long row) {
        auto it = f.find({node, row});
        return it == f.end() ? 0LL : it->second;
    };
    for (long long n = top; n >= 1; --n) {
        for (int i = 1; i <= rs.rank(); ++i) {
            if (!is_black_strip(rs, i, n, swapped)) continue;
            long long val = checked_sub(get(c, i, n), get(g, i, n + 1));
            for (int j : rs.neighbours(i)) val = checked_add(val, get(g, j, n));
            if (val != 0) g[{i, n - 1}] = val;
        }
    }
    return g;
}

/// @brief Literal monomial of a strip pair: prod Y[i, row]^c * prod A[i, row]^-g.
inline Monomial strip_monomial(const RootSystem& rs, const StripFunction& c,
                               const StripFunction& g) {
    Monomial m;
    for (const auto& [key, val] : c) {
        m = m * Monomial::y(key.first, key.second, val);
    }
    for (const auto& [key, val] : g) {
        m = m * a_monomial(rs, key.first, key.second).pow(-val);
    }
    return m;
}

} // namespace adeq
