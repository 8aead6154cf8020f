// Command line driver: algebras, orbits, fusing tables, q-characters, theorem checks.
// Exit codes: 0 success, 1 domain or usage error, 2 verification mismatch.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adeq/correspondence.hpp"
#include "adeq/dorey.hpp"
#include "adeq/io.hpp"
#include "adeq/qchar.hpp"
#include "adeq/root_system.hpp"

namespace {

adeq::Family parse_family(const std::string& f) {
    if (f == "A") return adeq::Family::A;
    if (f == "D") return adeq::Family::D;
    if (f == "E") return adeq::Family::E;
    throw std::domain_error("unknown family: " + f);
}

std::array<int, 3> parse_triple(const std::string& t) {
    std::array<int, 3> out{};
    char extra = 0;
    if (std::sscanf(t.c_str(), "%d,%d,%d%c", &out[0], &out[1], &out[2], &extra) != 3) {
        throw std::domain_error("triple must be of the form i,j,k");
    }
    return out;
}

void require_node(const adeq::RootSystem& rs, int node) {
    if (node < 1 || node > rs.rank()) {
        throw std::domain_error("node " + std::to_string(node) + " is out of range for " +
                                rs.name());
    }
}

struct VerifyScopeEntry {
    adeq::Family family;
    int rank;
};

std::vector<VerifyScopeEntry> default_verify_scope() {
    std::vector<VerifyScopeEntry> scope;
    for (int n = 1; n <= 6; ++n) scope.push_back({adeq::Family::A, n});
    for (int n = 4; n <= 6; ++n) scope.push_back({adeq::Family::D, n});
    scope.push_back({adeq::Family::E, 6});
    return scope;
}

// Coxeter-side only: enumeration with its internal exactness checks, no q-characters.
struct CoxeterOnlyReport {
    std::string algebra;
    std::size_t solution_count;
};

int run_verify(const std::vector<VerifyScopeEntry>& scope,
               const std::vector<VerifyScopeEntry>& coxeter_only, const std::string& format,
               long long max_monomials) {
    std::vector<adeq::TheoremReport> reports;
    for (const auto& entry : scope) {
        adeq::RootSystem rs(entry.family, entry.rank);
        adeq::CharCache cache(rs, max_monomials);
        reports.push_back(adeq::verify_theorem(cache));
    }
    std::vector<CoxeterOnlyReport> cox;
    for (const auto& entry : coxeter_only) {
        adeq::RootSystem rs(entry.family, entry.rank);
        cox.push_back({rs.name(), adeq::enumerate_fusings(rs).size()});
    }
    bool all = true;
    for (const auto& rep : reports) all = all && rep.matched;
    if (format == "json") {
        adeq::json j = adeq::verify_json(reports);
        if (!cox.empty()) {
            adeq::json list = adeq::json::array();
            for (const auto& c : cox) {
                adeq::json e;
                e["algebra"] = c.algebra;
                e["fusings"] = c.solution_count;
                e["coxeter_side_only"] = true;
                list.push_back(e);
            }
            j["coxeter_only"] = list;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << adeq::verify_table(reports);
        for (const auto& c : cox) {
            std::cout << c.algebra << ": " << c.solution_count
                      << " fusings, coxeter side only, OK\n";
        }
    }
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Coxeter orbits, fusing rules, and q-characters for ADE algebras"};
    app.require_subcommand(1);

    std::string family;
    int rank = 0;
    int node = 0;
    std::string triple;
    std::string format = "table";
    long long max_monomials = 2'000'000;
    unsigned long long pair_cap = 10'000'000ULL;
    bool e7 = false;
    bool e8 = false;
    bool float_angles = false;

    auto add_algebra_flags = [&](CLI::App* cmd, bool required) {
        auto* fam = cmd->add_option("--family", family, "algebra family: A, D, or E");
        auto* rk = cmd->add_option("--rank", rank, "algebra rank");
        if (required) {
            fam->required();
            rk->required();
        } else {
            fam->needs(rk);
            rk->needs(fam);
        }
    };
    auto add_format_flag = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format, "output format: " + choices);
    };

    auto* cmd_algebra = app.add_subcommand("algebra", "print diagram, colouring, and Cartan data");
    add_algebra_flags(cmd_algebra, true);
    add_format_flag(cmd_algebra, "table|json");

    auto* cmd_orbit = app.add_subcommand("orbit", "print the Coxeter orbit of a fundamental weight");
    add_algebra_flags(cmd_orbit, true);
    cmd_orbit->add_option("--node", node, "Dynkin node")->required();
    add_format_flag(cmd_orbit, "table|json");

    auto* cmd_fusings = app.add_subcommand("fusings", "enumerate three point fusing solutions");
    add_algebra_flags(cmd_fusings, true);
    add_format_flag(cmd_fusings, "table|json");
    cmd_fusings->add_flag("--float-angles", float_angles, "also print angles in radians");

    auto* cmd_prv = app.add_subcommand("prv", "test whether zero lies in a sum of three Weyl orbits");
    add_algebra_flags(cmd_prv, true);
    cmd_prv->add_option("--triple", triple, "node triple i,j,k")->required();
    cmd_prv->add_option("--cap", pair_cap, "pair scan budget before reporting not_computed");
    add_format_flag(cmd_prv, "table|json");

    auto* cmd_qchar = app.add_subcommand("qchar", "compute the q-character of a fundamental module");
    add_algebra_flags(cmd_qchar, true);
    cmd_qchar->add_option("--node", node, "Dynkin node")->required();
    cmd_qchar->add_option("--max-monomials", max_monomials, "abort beyond this many monomials");
    add_format_flag(cmd_qchar, "table|json|dot");

    auto* cmd_verify = app.add_subcommand(
        "verify", "check quadratic monomials against fusing solutions (default scope if no algebra)");
    add_algebra_flags(cmd_verify, false);
    cmd_verify->add_option("--max-monomials", max_monomials, "abort beyond this many monomials");
    cmd_verify->add_flag("--e7", e7, "also run the E7 Coxeter side enumeration");
    cmd_verify->add_flag("--e8", e8, "also run the E8 Coxeter side enumeration");
    add_format_flag(cmd_verify, "table|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (format != "table" && format != "json" && format != "dot") {
            throw std::domain_error("unknown format: " + format);
        }
        if (format == "dot" && !cmd_qchar->parsed()) {
            throw std::domain_error("dot output is only available for qchar");
        }

        if (cmd_verify->parsed()) {
            std::vector<VerifyScopeEntry> scope;
            if (!family.empty()) {
                scope.push_back({parse_family(family), rank});
            } else {
                scope = default_verify_scope();
            }
            std::vector<VerifyScopeEntry> coxeter_only;
            if (e7) coxeter_only.push_back({adeq::Family::E, 7});
            if (e8) coxeter_only.push_back({adeq::Family::E, 8});
            return run_verify(scope, coxeter_only, format, max_monomials);
        }

        adeq::RootSystem rs(parse_family(family), rank);

        if (cmd_algebra->parsed()) {
            if (format == "json") {
                std::cout << adeq::algebra_json(rs).dump(2) << '\n';
            } else {
                std::cout << adeq::algebra_table(rs);
            }
        } else if (cmd_orbit->parsed()) {
            require_node(rs, node);
            if (format == "json") {
                std::cout << adeq::orbit_json(rs, node).dump(2) << '\n';
            } else {
                std::cout << adeq::orbit_table(rs, node);
            }
        } else if (cmd_fusings->parsed()) {
            auto sols = adeq::enumerate_fusings(rs);
            if (format == "json") {
                std::cout << adeq::fusings_json(rs, sols).dump(2) << '\n';
            } else {
                std::cout << adeq::fusings_table(rs, sols, float_angles);
            }
        } else if (cmd_prv->parsed()) {
            auto t = parse_triple(triple);
            for (int x : t) require_node(rs, x);
            std::array<std::size_t, 3> sizes{};
            for (int k = 0; k < 3; ++k) {
                sizes[static_cast<std::size_t>(k)] = rs.weyl_orbit(rs.fundamental(t[static_cast<std::size_t>(k)])).size();
            }
            adeq::PrvResult res = adeq::prv_admissible(rs, t[0], t[1], t[2], pair_cap);
            if (format == "json") {
                std::cout << adeq::prv_json(rs, t[0], t[1], t[2], res, sizes).dump(2) << '\n';
            } else {
                std::cout << adeq::prv_table(rs, t[0], t[1], t[2], res, sizes);
            }
        } else if (cmd_qchar->parsed()) {
            require_node(rs, node);
            adeq::QCharacter qc = adeq::fm_qcharacter(rs, node, max_monomials);
            if (format == "json") {
                std::cout << adeq::qchar_json(rs, qc).dump(2) << '\n';
            } else if (format == "dot") {
                std::cout << adeq::qchar_dot(rs, qc);
            } else {
                std::cout << adeq::qchar_table(rs, qc);
            }
        }
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
