// curvecat command line: exact invariants, surface-model enumeration, line
// bundle cohomology, Hilbert profiles, and the checked classification
// catalog for smooth curves of degree at most 15 in P^5.
//
// Exit codes: 0 success, 1 catalog check failures, 2 invalid input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "curvecat/builtin.hpp"
#include "curvecat/render.hpp"

namespace {

using namespace curvecat;

i64 pi_or_throw(i64 d, i64 r) { return castelnuovo_pi(d, r); }

std::string model_line(const CurveModel& m) {
    std::string out = detail::spec_text(m.surface);
    out += "  degree=" + std::to_string(m.degree) + " genus=" + std::to_string(m.genus);
    if (!m.ruling_pencils.empty()) {
        out += " pencils=";
        for (std::size_t i = 0; i < m.ruling_pencils.size(); ++i)
            out += (i ? "," : "") + std::to_string(m.ruling_pencils[i]);
    }
    if (m.maroni) out += " maroni=" + std::to_string(*m.maroni);
    if (m.outside_standard_range) out += " [outside-standard-range]";
    return out;
}

Catalog load_catalog(const std::string& path) {
    if (path.empty()) return catalog_from_json(kBuiltinCatalogJson);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open catalog file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return catalog_from_json(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and the checked classification catalog of smooth curves in P^5"};
    app.require_subcommand(1);

    // bounds <d> <r>
    i64 b_d = 0, b_r = 0;
    auto* bounds = app.add_subcommand("bounds", "Castelnuovo genus bounds pi (and pi1 in P^5)");
    bounds->add_option("d", b_d, "degree")->required();
    bounds->add_option("r", b_r, "ambient projective dimension")->required();

    // invariants <d> <g> <r>
    i64 i_d = 0, i_g = 0, i_r = 0;
    auto* inv = app.add_subcommand("invariants", "classical invariants of a (d, g, r) triple");
    inv->add_option("d", i_d)->required();
    inv->add_option("g", i_g)->required();
    inv->add_option("r", i_r)->required();

    // enumerate <d> <g>
    i64 e_d = 0, e_g = 0;
    auto* enumr = app.add_subcommand("enumerate", "surface models carrying a smooth (d, g) curve");
    enumr->add_option("d", e_d)->required();
    enumr->add_option("g", e_g)->required();

    // cohomology fe|bidegree
    auto* coh = app.add_subcommand("cohomology", "line bundle cohomology on F_e or P^1 x P^1");
    coh->require_subcommand(1);
    i64 c_e = 0, c_x = 0, c_y = 0, c_a = 0, c_b = 0;
    auto* fe = coh->add_subcommand("fe", "O(x*h + y*f) on the Hirzebruch surface F_e");
    fe->add_option("--e", c_e)->required();
    fe->add_option("--x", c_x)->required();
    fe->add_option("--y", c_y)->required();
    auto* bi = coh->add_subcommand("bidegree", "O(a, b) on P^1 x P^1");
    bi->add_option("--a", c_a)->required();
    bi->add_option("--b", c_b)->required();

    // hilbert <d> <g> [--component ID] [--tmax T] [--format F]
    i64 h_d = 0, h_g = 0, h_tmax = 8;
    std::string h_component, h_format = "text";
    auto* hil = app.add_subcommand("hilbert", "Hilbert profile of a catalog component");
    hil->add_option("d", h_d)->required();
    hil->add_option("g", h_g)->required();
    hil->add_option("--component", h_component, "component id (default: first component)");
    hil->add_option("--tmax", h_tmax, "largest twist (default 8)");
    hil->add_option("--format", h_format, "text|markdown|csv|json");

    // catalog <d> [<g>] [--format F]
    i64 q_d = 0, q_g = -1;
    std::string q_format = "text";
    auto* catq = app.add_subcommand("catalog", "catalog entries for a degree (or one (d, g))");
    catq->add_option("d", q_d)->required();
    catq->add_option("g", q_g);
    catq->add_option("--format", q_format, "text|markdown|csv|json");

    // table <d> [--format F]
    i64 t_d = 0;
    std::string t_format = "text";
    auto* tab = app.add_subcommand("table", "per-genus summary sweep for a degree");
    tab->add_option("d", t_d)->required();
    tab->add_option("--format", t_format, "text|markdown|csv|json");

    // check [--json] [--file PATH]
    bool k_json = false;
    std::string k_file;
    auto* chk = app.add_subcommand("check", "cross-validate every catalog number");
    chk->add_flag("--json", k_json, "emit the full report as JSON");
    chk->add_option("--file", k_file, "check an external catalog dataset instead of the built-in one");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bounds) {
            std::cout << "pi(" << b_d << "," << b_r << ") = " << pi_or_throw(b_d, b_r) << "\n";
            if (b_r == 5 && b_d >= 6 && b_d <= 100)
                std::cout << "pi1(" << b_d << ",5) = " << castelnuovo_pi1_p5(b_d) << "\n";
        } else if (*inv) {
            const auto ci = classical_invariants(DGR(i_d, i_g, i_r));
            std::cout << "pi = " << ci.pi << "\n";
            if (ci.pi1) std::cout << "pi1 = " << *ci.pi1 << "\n";
            std::cout << "rho = " << ci.rho << "\nlambda = " << ci.lambda
                      << "\nexpected_dim = " << ci.expected_dim << "\n";
        } else if (*enumr) {
            for (const auto& m : enumerate_models(e_d, e_g)) std::cout << model_line(m) << "\n";
        } else if (*coh) {
            const CohomologyTriple t =
                *fe ? cohomology_fe(FeClass(c_e, c_x, c_y)) : cohomology_bidegree(c_a, c_b);
            std::cout << "h0 = " << t.h0 << "\nh1 = " << t.h1 << "\nh2 = " << t.h2 << "\n";
        } else if (*hil) {
            const auto& cat = builtin_catalog();
            const auto entry = catalog_query(cat, h_d, h_g);
            if (entry.components.empty()) throw InvalidInput("no components at this (d, g)");
            const ComponentRecord* comp = &entry.components.front();
            if (!h_component.empty()) {
                comp = nullptr;
                for (const auto& c : entry.components)
                    if (c.id == h_component) comp = &c;
                if (!comp) throw UnknownComponent("no component named " + h_component);
            }
            std::cout << render_profile(component_profile(cat, entry, *comp, h_tmax),
                                        parse_format(h_format));
        } else if (*catq) {
            const auto& cat = builtin_catalog();
            const Format f = parse_format(q_format);
            if (q_g >= 0) {
                std::cout << render_entry(cat, catalog_query(cat, q_d, q_g), f);
            } else {
                if (q_d < 5 || q_d > 15) throw InvalidInput("catalog: need 5 <= d <= 15");
                for (i64 g = 0; g <= castelnuovo_pi(q_d, 5); ++g)
                    std::cout << render_entry(cat, catalog_query(cat, q_d, g), f);
            }
        } else if (*tab) {
            if (t_d < 5 || t_d > 15) throw InvalidInput("table: need 5 <= d <= 15");
            std::cout << render_table(builtin_catalog(), t_d, parse_format(t_format));
        } else if (*chk) {
            std::vector<CheckResult> results;
            try {
                const Catalog cat = load_catalog(k_file);
                results = check_all(cat);
            } catch (const IoError& ex) {
                // an unreadable dataset is a failed check, not invalid input
                std::cout << "FAIL dataset: " << ex.what() << "\n";
                return 1;
            }
            std::cout << render_check_report(results, k_json);
            return count_failures(results) == 0 ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
