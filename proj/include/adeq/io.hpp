#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "adeq/correspondence.hpp"
#include "adeq/dorey.hpp"
#include "adeq/monomial.hpp"
#include "adeq/qchar.hpp"
#include "adeq/root_system.hpp"

namespace adeq {

using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

inline std::string render_monomial(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& f : m.factors()) {
        if (!first) out << ' ';
        first = false;
        out << "Y[" << f.key.node << ',' << f.key.exp << ']';
        if (f.power != 1) out << '^' << f.power;
    }
    return out.str();
}

inline std::string render_weight(const Weight& w, int rank) {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < rank; ++i) {
        if (i) out << ',';
        out << w[i];
    }
    out << ')';
    return out.str();
}

inline json weight_json(const Weight& w, int rank) {
    json arr = json::array();
    for (int i = 0; i < rank; ++i) arr.push_back(w[i]);
    return arr;
}

inline std::string colour_name(Colour c) { return c == Colour::black ? "black" : "white"; }

// ---- algebra ----

inline std::string algebra_table(const RootSystem& rs) {
    std::ostringstream out;
    out << "algebra " << rs.name() << '\n';
    out << "coxeter_number " << rs.coxeter_number() << '\n';
    out << "node colour bar neighbours\n";
    for (int i = 1; i <= rs.rank(); ++i) {
        out << i << ' ' << colour_name(rs.colour(i)) << ' ' << rs.bar(i) << ' ';
        const auto& nb = rs.neighbours(i);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (k) out << ',';
            out << nb[k];
        }
        out << '\n';
    }
    out << "cartan\n";
    for (int i = 1; i <= rs.rank(); ++i) {
        for (int j = 1; j <= rs.rank(); ++j) {
            if (j > 1) out << ' ';
            out << rs.cartan(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline json algebra_json(const RootSystem& rs) {
    json j;
    j["schema_version"] = schema_version;
    j["algebra"] = rs.name();
    j["rank"] = rs.rank();
    j["coxeter_number"] = rs.coxeter_number();
    json nodes = json::array();
    for (int i = 1; i <= rs.rank(); ++i) {
        json n;
        n["id"] = i;
        n["colour"] = colour_name(rs.colour(i));
        n["bar"] = rs.bar(i);
        n["neighbours"] = rs.neighbours(i);
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    json cartan = json::array();
    for (int i = 1; i <= rs.rank(); ++i) {
        json row = json::array();
        for (int k = 1; k <= rs.rank(); ++k) row.push_back(rs.cartan(i, k));
        cartan.push_back(row);
    }
    j["cartan"] = cartan;
    return j;
}

// ---- orbit ----

inline std::string orbit_table(const RootSystem& rs, int node) {
    std::ostringstream out;
    out << "algebra " << rs.name() << '\n';
    out << "node " << node << '\n';
    out << "power position weight\n";
    auto orbit = rs.coxeter_orbit(node);
    for (int n = 0; n < rs.coxeter_number(); ++n) {
        out << n << ' ' << wrap_position(rs.position(node, n), rs.coxeter_number()) << ' '
            << render_weight(orbit[static_cast<std::size_t>(n)], rs.rank()) << '\n';
    }
    return out.str();
}

inline json orbit_json(const RootSystem& rs, int node) {
    json j;
    j["schema_version"] = schema_version;
    j["algebra"] = rs.name();
    j["node"] = node;
    j["coxeter_number"] = rs.coxeter_number();
    json entries = json::array();
    auto orbit = rs.coxeter_orbit(node);
    for (int n = 0; n < rs.coxeter_number(); ++n) {
        json e;
        e["power"] = n;
        e["position"] = wrap_position(rs.position(node, n), rs.coxeter_number());
        e["weight"] = weight_json(orbit[static_cast<std::size_t>(n)], rs.rank());
        entries.push_back(e);
    }
    j["orbit"] = entries;
    return j;
}

// ---- fusings ----

inline std::string fusings_table(const RootSystem& rs, const std::vector<FusingSolution>& sols,
                                 bool float_angles = false) {
    std::ostringstream out;
    out << "algebra " << rs.name() << '\n';
    out << "count " << sols.size() << '\n';
    out << "i1 i2 i3 n2 n3 e1 e2 e3 a1 a2 a3 c1 c2 c3 n m r s";
    if (float_angles) out << " theta1 theta2 theta3";
    out << '\n';
    for (const auto& s : sols) {
        out << s.nodes[0] << ' ' << s.nodes[1] << ' ' << s.nodes[2] << ' ' << s.powers[1] << ' '
            << s.powers[2] << ' ' << s.exponents[0] << ' ' << s.exponents[1] << ' '
            << s.exponents[2] << ' ' << s.angles[0] << ' ' << s.angles[1] << ' ' << s.angles[2]
            << ' ' << s.canonical.nodes[0] << ' ' << s.canonical.nodes[1] << ' '
            << s.canonical.nodes[2] << ' ' << s.canonical.n << ' ' << s.canonical.m << ' '
            << s.canonical.r << ' ' << s.canonical.s;
        if (float_angles) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), " %.12g %.12g %.12g",
                          static_cast<double>(s.angles[0]) * RootSystem::pi() / rs.coxeter_number(),
                          static_cast<double>(s.angles[1]) * RootSystem::pi() / rs.coxeter_number(),
                          static_cast<double>(s.angles[2]) * RootSystem::pi() / rs.coxeter_number());
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

inline json fusings_json(const RootSystem& rs, const std::vector<FusingSolution>& sols) {
    json j;
    j["schema_version"] = schema_version;
    j["algebra"] = rs.name();
    j["coxeter_number"] = rs.coxeter_number();
    j["count"] = sols.size();
    json list = json::array();
    for (const auto& s : sols) {
        json e;
        e["nodes"] = s.nodes;
        e["powers"] = s.powers;
        e["exponents"] = s.exponents;
        e["rapidity_exponents"] = rapidity_exponents(rs, s);
        e["angles"] = s.angles;
        json c;
        c["nodes"] = s.canonical.nodes;
        c["swapped_view"] = s.canonical.swapped_view;
        c["slots_swapped"] = s.canonical.slots_swapped;
        c["n"] = s.canonical.n;
        c["m"] = s.canonical.m;
        c["r"] = s.canonical.r;
        c["s"] = s.canonical.s;
        e["canonical"] = c;
        list.push_back(e);
    }
    j["solutions"] = list;
    return j;
}

// ---- prv ----

inline std::string prv_table(const RootSystem& rs, int i, int j, int k, PrvResult res,
                             const std::array<std::size_t, 3>& sizes) {
    std::ostringstream out;
    out << "algebra " << rs.name() << '\n';
    out << "triple " << i << ',' << j << ',' << k << '\n';
    out << "orbit_sizes " << sizes[0] << ',' << sizes[1] << ',' << sizes[2] << '\n';
    out << "result " << to_string(res) << '\n';
    return out.str();
}

inline json prv_json(const RootSystem& rs, int i, int j, int k, PrvResult res,
                     const std::array<std::size_t, 3>& sizes) {
    json out;
    out["schema_version"] = schema_version;
    out["algebra"] = rs.name();
    out["triple"] = {i, j, k};
    out["orbit_sizes"] = sizes;
    out["result"] = to_string(res);
    return out;
}

// ---- qchar ----

inline std::string qchar_table(const RootSystem& rs, const QCharacter& qc) {
    std::ostringstream out;
    out << "algebra " << rs.name() << '\n';
    out << "node " << qc.node() << '\n';
    out << "monomials " << qc.entries().size() << '\n';
    out << "dimension " << qc.dimension() << '\n';
    out << "idx depth mult monomial\n";
    for (std::size_t i = 0; i < qc.entries().size(); ++i) {
        const auto& e = qc.entries()[i];
        out << i << ' ' << e.depth << ' ' << e.mult << ' ' << render_monomial(e.m) << '\n';
    }
    out << "edges " << qc.edges().size() << '\n';
    out << "from to node exp\n";
    for (const auto& e : qc.edges()) {
        out << e.from << ' ' << e.to << ' ' << e.node << ' ' << e.exp << '\n';
    }
    return out.str();
}

inline json qchar_json(const RootSystem& rs, const QCharacter& qc) {
    json j;
    j["schema_version"] = schema_version;
    j["algebra"] = rs.name();
    j["node"] = qc.node();
    j["dimension"] = qc.dimension();
    json monos = json::array();
    for (const auto& e : qc.entries()) {
        json m;
        json factors = json::array();
        for (const auto& f : e.m.factors()) {
            factors.push_back({f.key.node, f.key.exp, f.power});
        }
        m["factors"] = factors;
        m["multiplicity"] = e.mult;
        m["depth"] = e.depth;
        monos.push_back(m);
    }
    j["monomials"] = monos;
    json edges = json::array();
    for (const auto& e : qc.edges()) {
        edges.push_back({e.from, e.to, e.node, e.exp});
    }
    j["edges"] = edges;
    return j;
}

inline std::string qchar_dot(const RootSystem& rs, const QCharacter& qc) {
    std::ostringstream out;
    out << "digraph qchar {\n";
    out << "  rankdir=TB;\n";
    out << "  label=\"" << rs.name() << " node " << qc.node() << "\";\n";
    for (std::size_t i = 0; i < qc.entries().size(); ++i) {
        out << "  m" << i << " [label=\"" << render_monomial(qc.entries()[i].m) << "\"];\n";
    }
    for (const auto& e : qc.edges()) {
        out << "  m" << e.from << " -> m" << e.to << " [label=\"A[" << e.node << ',' << e.exp
            << "]^-1\"];\n";
    }
    out << "}\n";
    return out.str();
}

// ---- verify ----

inline std::string verify_table(const std::vector<TheoremReport>& reports) {
    std::ostringstream out;
    bool all = true;
    for (const auto& rep : reports) {
        out << rep.algebra << ": " << rep.solution_count << " fusings, " << rep.char_count
            << " quadratic monomials, " << (rep.matched ? "MATCH" : "MISMATCH") << '\n';
        for (const auto& e : rep.entries) {
            const char* where = e.in_char && e.in_dorey ? "both"
                                : e.in_char              ? "char_only"
                                                         : "dorey_only";
            out << "  " << e.key[0] << ' ' << e.key[1] << ' ' << e.key[2] << ' ' << e.key[3]
                << ' ' << e.key[4] << ' ' << where << '\n';
        }
        all = all && rep.matched;
    }
    out << (all ? "MATCH" : "MISMATCH") << '\n';
    return out.str();
}

inline json verify_json(const std::vector<TheoremReport>& reports) {
    json j;
    j["schema_version"] = schema_version;
    bool all = true;
    json list = json::array();
    for (const auto& rep : reports) {
        json r;
        r["algebra"] = rep.algebra;
        r["solutions"] = rep.solution_count;
        r["char_keys"] = rep.char_count;
        r["dorey_keys"] = rep.dorey_count;
        r["matched"] = rep.matched;
        json rows = json::array();
        for (const auto& e : rep.entries) {
            json row;
            row["key"] = e.key;
            row["in_char"] = e.in_char;
            row["in_dorey"] = e.in_dorey;
            rows.push_back(row);
        }
        r["entries"] = rows;
        list.push_back(r);
        all = all && rep.matched;
    }
    j["results"] = list;
    j["all_matched"] = all;
    return j;
}

} // namespace adeq
