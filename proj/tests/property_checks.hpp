#pragma once

// Property suites shared by the randomized test binary and the acceptance gate.
// Each suite returns the number of cases it checked and throws std::runtime_error
// with context on the first violation.

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adeq/correspondence.hpp"
#include "adeq/dorey.hpp"
#include "adeq/qchar.hpp"
#include "adeq/root_system.hpp"
#include "adeq/sl2.hpp"
#include "adeq/strip.hpp"

namespace adeq_props {

using namespace adeq;

struct AlgebraId {
    Family family;
    int rank;
};

/// @brief Every supported algebra.
inline const std::vector<AlgebraId>& full_scope() {
    static const std::vector<AlgebraId> scope = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5},
        {Family::A, 6}, {Family::A, 7}, {Family::A, 8}, {Family::D, 4}, {Family::D, 5},
        {Family::D, 6}, {Family::D, 7}, {Family::D, 8}, {Family::E, 6}, {Family::E, 7},
        {Family::E, 8},
    };
    return scope;
}

/// @brief Algebras whose full sets of fundamental q-characters are desk scale.
inline const std::vector<AlgebraId>& char_scope() {
    static const std::vector<AlgebraId> scope = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5},
        {Family::A, 6}, {Family::D, 4}, {Family::D, 5}, {Family::D, 6}, {Family::E, 6},
    };
    return scope;
}

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error(where + ": " + what);
}

inline Weight random_weight(const RootSystem& rs, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> coeff(-5, 5);
    Weight w{};
    for (int i = 0; i < rs.rank(); ++i) w[i] = coeff(rng);
    return w;
}

/// @brief w^h is the identity and no smaller positive power fixes the Weyl vector.
inline long long prop_coxeter_order() {
    std::mt19937_64 rng(0xC0FFEE01);
    long long cases = 0;
    for (auto id : full_scope()) {
        RootSystem rs(id.family, id.rank);
        const int h = rs.coxeter_number();
        Weight rho{};
        for (int i = 0; i < rs.rank(); ++i) rho[i] = 1;
        for (int k = 1; k < h; ++k) {
            if (rs.coxeter_apply(rho, k) == rho) {
                fail("coxeter_order", rs.name() + " fixed by power " + std::to_string(k));
            }
            ++cases;
        }
        for (int t = 0; t < 200; ++t) {
            Weight mu = random_weight(rs, rng);
            if (rs.coxeter_apply(mu, h) != mu) fail("coxeter_order", rs.name() + " w^h != id");
            ++cases;
        }
    }
    return cases;
}

/// @brief The strip lowering generator carries weight zero wherever it is defined.
inline long long prop_lowering_relations() {
    long long cases = 0;
    for (auto id : full_scope()) {
        RootSystem rs(id.family, id.rank);
        for (bool swapped : {false, true}) {
            for (int i = 1; i <= rs.rank(); ++i) {
                for (long long row = 1; row <= 2 * rs.coxeter_number(); ++row) {
                    if (is_black_strip(rs, i, row, swapped)) continue;
                    if (!strip_a(rs, i, row, swapped).is_zero()) {
                        fail("lowering_relations", rs.name() + " node " + std::to_string(i) +
                                                       " row " + std::to_string(row));
                    }
                    ++cases;
                }
            }
        }
    }
    return cases;
}

/// @brief Every full Coxeter orbit sums to zero.
inline long long prop_orbit_sums() {
    std::mt19937_64 rng(0xC0FFEE02);
    long long cases = 0;
    for (auto id : full_scope()) {
        RootSystem rs(id.family, id.rank);
        const int h = rs.coxeter_number();
        auto orbit_sum_is_zero = [&](const Weight& mu) {
            Weight sum{};
            Weight cur = mu;
            for (int n = 0; n < h; ++n) {
                sum = sum + cur;
                cur = rs.coxeter_apply(cur, 1);
            }
            return sum.is_zero();
        };
        for (int i = 1; i <= rs.rank(); ++i) {
            if (!orbit_sum_is_zero(rs.fundamental(i))) {
                fail("orbit_sums", rs.name() + " fundamental " + std::to_string(i));
            }
            ++cases;
        }
        for (int t = 0; t < 200; ++t) {
            if (!orbit_sum_is_zero(random_weight(rs, rng))) fail("orbit_sums", rs.name());
            ++cases;
        }
    }
    return cases;
}

/// @brief All q-exponents of every fundamental character lie in [0, h].
inline long long prop_support_window() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        const int h = rs.coxeter_number();
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i);
            for (const auto& e : ch.entries()) {
                for (const auto& f : e.m.factors()) {
                    if (f.key.exp < 0 || f.key.exp > h) {
                        fail("support_window", rs.name() + " node " + std::to_string(i));
                    }
                }
                ++cases;
            }
        }
    }
    return cases;
}

/// @brief Every non-head monomial is right negative; every non-lowest one is left positive.
inline long long prop_extremal_dichotomy() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i);
            for (std::size_t k = 0; k < ch.entries().size(); ++k) {
                const Monomial& m = ch.entries()[k].m;
                if (k != 0 && !m.right_negative()) {
                    fail("extremal_dichotomy", rs.name() + " non-head not right negative");
                }
                if (static_cast<int>(k) != ch.lowest_index() && !m.left_positive()) {
                    fail("extremal_dichotomy", rs.name() + " non-lowest not left positive");
                }
                ++cases;
            }
        }
    }
    return cases;
}

/// @brief The head is the unique dominant monomial and Y[bar(i), h]^-1 the unique
/// antidominant one.
inline long long prop_unique_extremes() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i);
            const Monomial expected_head = Monomial::y(i, 0);
            const Monomial expected_low = Monomial::y(rs.bar(i), rs.coxeter_number(), -1);
            if (ch.head() != expected_head) fail("unique_extremes", rs.name() + " head");
            if (ch.lowest() != expected_low) fail("unique_extremes", rs.name() + " lowest");
            for (std::size_t k = 0; k < ch.entries().size(); ++k) {
                const Monomial& m = ch.entries()[k].m;
                if (m.dominant() != (k == 0)) fail("unique_extremes", rs.name() + " dominant");
                if (m.antidominant() != (static_cast<int>(k) == ch.lowest_index())) {
                    fail("unique_extremes", rs.name() + " antidominant");
                }
                ++cases;
            }
        }
    }
    return cases;
}

/// @brief Negating all q-exponents and inverting maps the character of node i onto
/// the character of bar(i) shifted by h.
inline long long prop_duality_flip() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i);
            QCharacter dual = fm_qcharacter(rs, rs.bar(i));
            std::map<Monomial, long long> flipped;
            for (const auto& e : ch.entries()) flipped[e.m.flipped().shifted(rs.coxeter_number())] += e.mult;
            std::map<Monomial, long long> expected;
            for (const auto& e : dual.entries()) expected[e.m] += e.mult;
            if (flipped != expected) fail("duality_flip", rs.name() + " node " + std::to_string(i));
            cases += static_cast<long long>(ch.entries().size());
        }
    }
    return cases;
}

/// @brief The classical weight multiset of every character is Weyl symmetric.
inline long long prop_classical_weyl_symmetry() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i);
            std::map<Weight, long long> weights;
            for (const auto& e : ch.entries()) weights[classical_weight(e.m, rs)] += e.mult;
            for (int j = 1; j <= rs.rank(); ++j) {
                std::map<Weight, long long> reflected;
                for (const auto& [w, c] : weights) reflected[rs.simple_reflection(j, w)] += c;
                if (reflected != weights) {
                    fail("classical_weyl_symmetry",
                         rs.name() + " node " + std::to_string(i) + " reflection " + std::to_string(j));
                }
                ++cases;
            }
        }
    }
    return cases;
}

/// @brief Every single-direction restriction of every character is a nonnegative
/// combination of simple sl2 characters.
inline long long prop_beta_decomposition() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i, 2'000'000, false);
            for (int j = 1; j <= rs.rank(); ++j) {
                std::map<Monomial, long long> parts;
                for (const auto& e : ch.entries()) parts[e.m.node_part(j)] += e.mult;
                decompose_characters(j, parts);
                ++cases;
            }
        }
    }
    return cases;
}

/// @brief Every monomial of every computed character encodes an exact weight identity.
inline long long prop_per_monomial_identity() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i);
            for (const auto& e : ch.entries()) {
                monomial_identity(rs, i, e.m);
                ++cases;
            }
        }
    }
    return cases;
}

/// @brief The strip solution of every enumerated fusing has nonnegative exponents.
inline long long prop_fusing_g_nonnegative() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        CharCache cache(rs);
        for (const auto& sol : enumerate_fusings(rs)) {
            FusingMonomial fm = fusing_to_monomial(rs, cache, sol.canonical);
            if (!fm.g_nonnegative) fail("fusing_g_nonnegative", rs.name());
            ++cases;
        }
    }
    return cases;
}

/// @brief Fusing angles sum to a full turn, exactly in lattice units and within
/// 1e-9 in radians.
inline long long prop_angle_sums() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        const int h = rs.coxeter_number();
        for (const auto& sol : enumerate_fusings(rs)) {
            long long total = sol.angles[0] + sol.angles[1] + sol.angles[2];
            if (total != 2 * h) fail("angle_sums", rs.name() + " lattice sum");
            double radians = static_cast<double>(total) * RootSystem::pi() / h;
            if (std::abs(radians - 2.0 * RootSystem::pi()) > 1e-9) {
                fail("angle_sums", rs.name() + " float sum");
            }
            ++cases;
        }
    }
    return cases;
}

/// @brief Plane angles of every fusing are integers in units of pi/h within 1e-6 and
/// reproduce the exact rapidity exponents.
inline long long prop_rapidity_integrality() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (const auto& sol : enumerate_fusings(rs)) {
            if (rapidity_exponents(rs, sol) != sol.exponents) {
                fail("rapidity_integrality", rs.name());
            }
            ++cases;
        }
    }
    return cases;
}

/// @brief Negating all relative exponents of a fusing gives another fusing with
/// the same nodes: conjugation by the white reflection product inverts the
/// Coxeter element at the cost of a colour-dependent power shift.
inline long long prop_mirror_enumeration() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        const long long h = rs.coxeter_number();
        auto sols = enumerate_fusings(rs);
        std::set<std::array<long long, 8>> index;
        for (const auto& s : sols) {
            index.insert({s.nodes[0], s.nodes[1], s.nodes[2], s.powers[1], s.powers[2],
                          s.exponents[0], s.exponents[1], s.exponents[2]});
        }
        auto white = [&](int node) { return rs.colour(node) == Colour::white ? 1LL : 0LL; };
        for (const auto& s : sols) {
            long long shift = -white(s.nodes[0]);
            std::array<long long, 8> mirror = {
                s.nodes[0],
                s.nodes[1],
                s.nodes[2],
                ((white(s.nodes[1]) + shift - s.powers[1]) % h + h) % h,
                ((white(s.nodes[2]) + shift - s.powers[2]) % h + h) % h,
                -s.exponents[0],
                -s.exponents[1],
                -s.exponents[2]};
            if (!index.count(mirror)) fail("mirror_enumeration", rs.name());
            ++cases;
        }
    }
    return cases;
}

/// @brief Every stored lowering edge replays as multiplication by an inverse
/// A-monomial between its endpoint monomials.
inline long long prop_edge_replay() {
    long long cases = 0;
    for (auto id : char_scope()) {
        RootSystem rs(id.family, id.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            QCharacter ch = fm_qcharacter(rs, i);
            for (const auto& e : ch.edges()) {
                const Monomial& from = ch.entries()[static_cast<std::size_t>(e.from)].m;
                const Monomial& to = ch.entries()[static_cast<std::size_t>(e.to)].m;
                if (from * a_monomial(rs, e.node, e.exp).inverse() != to) {
                    fail("edge_replay", rs.name() + " node " + std::to_string(i));
                }
                ++cases;
            }
        }
    }
    return cases;
}

/// @brief Random monomials form a commutative group under multiplication with
/// degree, classical weight, flip, and shift behaving as homomorphisms.
inline long long prop_monomial_algebra() {
    std::mt19937_64 rng(0xC0FFEE03);
    RootSystem rs(Family::D, 5);
    std::uniform_int_distribution<int> node(1, 5);
    std::uniform_int_distribution<long long> exp(-10, 10);
    std::uniform_int_distribution<long long> power(-3, 3);
    std::uniform_int_distribution<int> nfac(0, 6);
    std::uniform_int_distribution<long long> shift(-7, 7);
    auto random_monomial = [&]() {
        Monomial m;
        int n = nfac(rng);
        for (int k = 0; k < n; ++k) m = m * Monomial::y(node(rng), exp(rng), power(rng));
        return m;
    };
    long long cases = 0;
    for (int t = 0; t < 200; ++t) {
        Monomial a = random_monomial();
        Monomial b = random_monomial();
        Monomial c = random_monomial();
        if ((a * b) * c != a * (b * c)) fail("monomial_algebra", "associativity");
        if (a * b != b * a) fail("monomial_algebra", "commutativity");
        if (!(a * a.inverse()).is_unit()) fail("monomial_algebra", "inverse");
        if (a.flipped().flipped() != a) fail("monomial_algebra", "flip involution");
        long long d = shift(rng);
        long long e = shift(rng);
        if (a.shifted(d).shifted(e) != a.shifted(d + e)) fail("monomial_algebra", "shift");
        if (a.pow(3) != a * a * a) fail("monomial_algebra", "pow");
        if (a.degree() + b.degree() != (a * b).degree()) fail("monomial_algebra", "degree");
        Weight wa = classical_weight(a, rs);
        Weight wb = classical_weight(b, rs);
        if (classical_weight(a * b, rs) != wa + wb) fail("monomial_algebra", "classical weight");
        ++cases;
    }
    return cases;
}

/// @brief Random dominant sl2 monomials split into pairwise non-special strings
/// whose product reproduces the simple character and whose sizes multiply.
inline long long prop_segment_split() {
    std::mt19937_64 rng(0xC0FFEE04);
    std::uniform_int_distribution<long long> exp(-8, 8);
    std::uniform_int_distribution<long long> power(1, 3);
    std::uniform_int_distribution<int> nfac(1, 5);
    long long cases = 0;
    for (int t = 0; t < 200; ++t) {
        Monomial dom;
        int n = nfac(rng);
        for (int k = 0; k < n; ++k) dom = dom * Monomial::y(1, exp(rng), power(rng));
        auto segs = split_segments(dom);

        Monomial heads;
        long long expected_size = 1;
        for (const auto& seg : segs) {
            for (long long k = 0; k < seg.length; ++k) {
                heads = heads * Monomial::y(1, seg.centre - seg.length + 1 + 2 * k);
            }
            expected_size *= seg.length + 1;
        }
        if (heads != dom) fail("segment_split", "strings do not reassemble the monomial");

        for (std::size_t i = 0; i < segs.size(); ++i) {
            for (std::size_t j = i + 1; j < segs.size(); ++j) {
                if (special_position(segs[i], segs[j])) fail("segment_split", "special pair");
            }
        }

        auto ch = simple_character(1, dom);
        long long total = 0;
        for (const auto& [m, c] : ch) {
            (void)m;
            total += c;
        }
        if (total != expected_size) fail("segment_split", "character size");
        if (ch.count(dom) == 0 || ch.at(dom) != 1) fail("segment_split", "head multiplicity");
        ++cases;
    }
    return cases;
}

/// @brief wrap_position lands in (-h, h] and preserves the value mod 2h.
inline long long prop_wrap_position() {
    std::mt19937_64 rng(0xC0FFEE05);
    std::uniform_int_distribution<long long> delta(-1000, 1000);
    std::uniform_int_distribution<long long> hdist(1, 30);
    long long cases = 0;
    for (int t = 0; t < 200; ++t) {
        long long h = hdist(rng);
        long long d = delta(rng);
        long long w = wrap_position(d, h);
        if (!(-h < w && w <= h)) fail("wrap_position", "range");
        if (((w - d) % (2 * h) + 2 * h) % (2 * h) != 0) fail("wrap_position", "congruence");
        ++cases;
    }
    return cases;
}

struct PropertySuite {
    const char* name;
    long long (*run)();
    long long min_cases;
};

inline const std::vector<PropertySuite>& all_property_suites() {
    static const std::vector<PropertySuite> suites = {
        {"coxeter_order", prop_coxeter_order, 200},
        {"lowering_relations", prop_lowering_relations, 200},
        {"orbit_sums", prop_orbit_sums, 200},
        {"support_window", prop_support_window, 200},
        {"extremal_dichotomy", prop_extremal_dichotomy, 200},
        {"unique_extremes", prop_unique_extremes, 200},
        {"duality_flip", prop_duality_flip, 200},
        {"classical_weyl_symmetry", prop_classical_weyl_symmetry, 200},
        {"beta_decomposition", prop_beta_decomposition, 200},
        {"per_monomial_identity", prop_per_monomial_identity, 200},
        {"fusing_g_nonnegative", prop_fusing_g_nonnegative, 200},
        {"angle_sums", prop_angle_sums, 200},
        {"rapidity_integrality", prop_rapidity_integrality, 200},
        {"mirror_enumeration", prop_mirror_enumeration, 200},
        {"edge_replay", prop_edge_replay, 200},
        {"monomial_algebra", prop_monomial_algebra, 200},
        {"segment_split", prop_segment_split, 200},
        {"wrap_position", prop_wrap_position, 200},
    };
    return suites;
}

} // namespace adeq_props
