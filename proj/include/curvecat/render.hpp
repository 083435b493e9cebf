#pragma once

#include <iomanip>
#include <sstream>

#include "curvecat/check.hpp"

// Deterministic, byte-stable rendering of catalog entries, per-degree tables,
// Hilbert profiles and check reports as text, markdown, csv or json. CSV uses
// a comma separator, a header row, and no quoting of integers.

namespace curvecat {

enum class Format { Text, Markdown, Csv, Json };

inline Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "markdown") return Format::Markdown;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw UnsupportedFormat("unsupported format: " + name);
}

namespace detail {

inline std::string status_text(EntryStatus s) {
    switch (s) {
        case EntryStatus::Empty: return "empty";
        case EntryStatus::Irreducible: return "irreducible";
        case EntryStatus::Reducible: return "reducible";
    }
    return "?";
}

inline nlohmann::ordered_json model_to_json(const SurfaceClassSpec& s) {
    nlohmann::ordered_json j;
    struct V {
        nlohmann::ordered_json& j;
        void operator()(const VeroneseSurface& v) const { j["surface"] = "veronese"; j["s"] = v.s; }
        void operator()(const QuarticConeF4& c) const {
            j["surface"] = "cone_f4"; j["k"] = c.k; j["m"] = c.m;
        }
        void operator()(const AbstractScroll& x) const {
            j["surface"] = "scroll"; j["a"] = x.a; j["b"] = x.b;
        }
        void operator()(const QuadricF0& x) const { j["surface"] = "f0"; j["a"] = x.a; j["b"] = x.b; }
        void operator()(const HirzebruchF2& x) const { j["surface"] = "f2"; j["a"] = x.a; j["b"] = x.b; }
        void operator()(const DelPezzoSurface& p) const {
            j["surface"] = "del_pezzo"; j["a"] = p.cls.a;
            j["b"] = {p.cls.b[0], p.cls.b[1], p.cls.b[2], p.cls.b[3]};
        }
    };
    std::visit(V{j}, s);
    return j;
}

inline nlohmann::ordered_json profile_to_json(const HilbertProfile& p) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [t, e] : p.entries) {
        nlohmann::ordered_json r;
        r["t"] = t;
        r["h0_ideal"] = e.h0_ideal;
        r["h1_ideal"] = e.h1_ideal;
        r["h1_curve"] = e.h1_curve;
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json j;
    j["d"] = p.d;
    j["g"] = p.g;
    j["acm"] = p.acm;
    j["linearly_normal"] = p.linearly_normal;
    j["maximal_rank"] = p.maximal_rank;
    j["rows"] = std::move(rows);
    return j;
}

} // namespace detail

inline nlohmann::ordered_json entry_to_json(const Catalog& cat, const CatalogEntry& e, i64 t_max = 8) {
    nlohmann::ordered_json j;
    j["d"] = e.d;
    j["g"] = e.g;
    j["status"] = detail::status_text(e.status);
    if (e.reducible_count) j["count"] = *e.reducible_count;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : e.components) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["dimension"] = c.dimension;
        if (c.exceeds) jc["relation"] = {{"exceeds", c.exceeds_by}};
        else jc["relation"] = "expected";
        if (c.gonality) jc["gonality"] = *c.gonality;
        if (c.maroni) jc["maroni"] = *c.maroni;
        jc["linearly_normal"] = c.linearly_normal;
        jc["acm"] = c.acm_general_member;
        if (c.surface_model) jc["surface_model"] = detail::model_to_json(*c.surface_model);
        if (c.moduli_image_dim) jc["moduli_image_dim"] = *c.moduli_image_dim;
        try {
            jc["profile"] = detail::profile_to_json(component_profile(cat, e, c, t_max));
        } catch (const std::exception& ex) {
            jc["profile_error"] = ex.what();
        }
        if (!c.notes.empty()) jc["notes"] = c.notes;
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    if (!e.notes.empty()) j["notes"] = e.notes;
    return j;
}

inline std::string render_profile(const HilbertProfile& p, Format fmt) {
    std::ostringstream os;
    switch (fmt) {
        case Format::Json:
            os << detail::profile_to_json(p).dump(2) << "\n";
            break;
        case Format::Csv:
            os << "t,h0_ideal,h1_ideal,h1_curve\n";
            for (const auto& [t, e] : p.entries)
                os << t << "," << e.h0_ideal << "," << e.h1_ideal << "," << e.h1_curve << "\n";
            break;
        case Format::Markdown:
            os << "| t | h0(I) | h1(I) | h1(O_X) |\n|---|---|---|---|\n";
            for (const auto& [t, e] : p.entries)
                os << "| " << t << " | " << e.h0_ideal << " | " << e.h1_ideal << " | " << e.h1_curve
                   << " |\n";
            break;
        case Format::Text: {
            os << "d=" << p.d << " g=" << p.g << (p.acm ? "  ACM" : "")
               << (p.linearly_normal ? "  linearly-normal" : "")
               << (p.maximal_rank ? "  maximal-rank" : "") << "\n";
            auto row = [&](const std::string& label, auto f) {
                os << std::setw(8) << label;
                for (const auto& [t, e] : p.entries) os << std::setw(7) << f(t, e);
                os << "\n";
            };
            row("t", [](i64 t, const ProfileEntry&) { return t; });
            row("h0(I)", [](i64, const ProfileEntry& e) { return e.h0_ideal; });
            row("h1(I)", [](i64, const ProfileEntry& e) { return e.h1_ideal; });
            row("h1(O_X)", [](i64, const ProfileEntry& e) { return e.h1_curve; });
            break;
        }
    }
    return os.str();
}

inline std::string render_entry(const Catalog& cat, const CatalogEntry& e, Format fmt, i64 t_max = 8) {
    std::ostringstream os;
    switch (fmt) {
        case Format::Json:
            os << entry_to_json(cat, e, t_max).dump(2) << "\n";
            break;
        case Format::Csv: {
            os << "component,t,h0_ideal,h1_ideal,h1_curve\n";
            for (const auto& c : e.components) {
                const auto p = component_profile(cat, e, c, t_max);
                for (const auto& [t, pe] : p.entries)
                    os << c.id << "," << t << "," << pe.h0_ideal << "," << pe.h1_ideal << ","
                       << pe.h1_curve << "\n";
            }
            break;
        }
        case Format::Markdown: {
            os << "## (d, g) = (" << e.d << ", " << e.g << "): " << detail::status_text(e.status);
            if (!e.components.empty()) os << ", " << e.components.size() << " component(s)";
            os << "\n\n";
            if (e.components.empty()) {
                if (!e.notes.empty()) os << e.notes << "\n";
                break;
            }
            std::vector<HilbertProfile> profiles;
            os << "| t |";
            for (const auto& c : e.components) {
                profiles.push_back(component_profile(cat, e, c, t_max));
                os << " " << c.id << " h0 | " << c.id << " h1 |";
            }
            os << "\n|---|";
            for (std::size_t i = 0; i < e.components.size(); ++i) os << "---|---|";
            os << "\n";
            for (i64 t = 1; t <= t_max; ++t) {
                os << "| " << t << " |";
                for (const auto& p : profiles)
                    os << " " << p.entries.at(t).h0_ideal << " | " << p.entries.at(t).h1_ideal << " |";
                os << "\n";
            }
            break;
        }
        case Format::Text: {
            os << "H_{" << e.d << "," << e.g << ",5}: " << detail::status_text(e.status) << "\n";
            if (!e.notes.empty()) os << "  " << e.notes << "\n";
            for (const auto& c : e.components) {
                os << "  " << c.id << ": dim " << c.dimension;
                if (c.exceeds) os << " (expected + " << c.exceeds_by << ")";
                else os << " (expected)";
                if (c.gonality) os << ", gonality " << *c.gonality;
                if (c.maroni) os << ", maroni " << *c.maroni;
                os << (c.linearly_normal ? ", linearly normal" : ", not linearly normal");
                os << (c.acm_general_member ? ", ACM" : ", not ACM") << "\n";
                if (c.surface_model) os << "      on " << detail::spec_text(*c.surface_model) << "\n";
                if (!c.notes.empty()) os << "      " << c.notes << "\n";
                std::istringstream lines(render_profile(component_profile(cat, e, c, t_max), Format::Text));
                std::string line;
                std::getline(lines, line);  // drop the d/g banner
                while (std::getline(lines, line)) os << "    " << line << "\n";
            }
            break;
        }
    }
    return os.str();
}

/// Per-degree sweep: one row per genus 0..pi(d,5).
inline std::string render_table(const Catalog& cat, i64 d, Format fmt) {
    const i64 gmax = castelnuovo_pi(d, 5);
    struct Row {
        i64 g;
        const CatalogEntry* e;
    };
    std::vector<Row> rows;
    for (i64 g = 0; g <= gmax; ++g) rows.push_back({g, cat.find(d, g)});

    auto max_dim = [](const CatalogEntry* e) -> std::optional<i64> {
        if (!e || e->components.empty()) return std::nullopt;
        i64 m = e->components.front().dimension;
        for (const auto& c : e->components) m = std::max(m, c.dimension);
        return m;
    };

    std::ostringstream os;
    switch (fmt) {
        case Format::Json: {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json j;
                j["d"] = d;
                j["g"] = r.g;
                j["status"] = r.e ? detail::status_text(r.e->status) : "missing";
                j["components"] = r.e ? static_cast<i64>(r.e->components.size()) : 0;
                j["expected_dim"] = classical_invariants(DGR(d, r.g, 5)).expected_dim;
                if (auto m = max_dim(r.e)) j["max_dim"] = *m;
                arr.push_back(std::move(j));
            }
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            os << "d,g,status,components,expected_dim,max_dim\n";
            for (const auto& r : rows) {
                os << d << "," << r.g << "," << (r.e ? detail::status_text(r.e->status) : "missing")
                   << "," << (r.e ? r.e->components.size() : 0) << ","
                   << classical_invariants(DGR(d, r.g, 5)).expected_dim << ",";
                if (auto m = max_dim(r.e)) os << *m;
                os << "\n";
            }
            break;
        case Format::Markdown:
            os << "| d | g | status | components | expected dim | max dim |\n"
               << "|---|---|---|---|---|---|\n";
            for (const auto& r : rows) {
                os << "| " << d << " | " << r.g << " | "
                   << (r.e ? detail::status_text(r.e->status) : "missing") << " | "
                   << (r.e ? r.e->components.size() : 0) << " | "
                   << classical_invariants(DGR(d, r.g, 5)).expected_dim << " | ";
                if (auto m = max_dim(r.e)) os << *m;
                os << " |\n";
            }
            break;
        case Format::Text:
            os << std::setw(4) << "d" << std::setw(4) << "g" << std::setw(14) << "status"
               << std::setw(6) << "comps" << std::setw(10) << "expected" << std::setw(9) << "max"
               << "\n";
            for (const auto& r : rows) {
                os << std::setw(4) << d << std::setw(4) << r.g << std::setw(14)
                   << (r.e ? detail::status_text(r.e->status) : "missing") << std::setw(6)
                   << (r.e ? r.e->components.size() : 0) << std::setw(10)
                   << classical_invariants(DGR(d, r.g, 5)).expected_dim;
                if (auto m = max_dim(r.e)) os << std::setw(9) << *m;
                os << "\n";
            }
            break;
    }
    return os.str();
}

inline std::string render_check_report(const std::vector<CheckResult>& results, bool as_json) {
    std::ostringstream os;
    if (as_json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json j;
            j["d"] = r.d;
            j["g"] = r.g;
            j["check"] = r.check;
            j["pass"] = r.pass;
            if (!r.details.empty()) j["details"] = r.details;
            arr.push_back(std::move(j));
        }
        nlohmann::ordered_json top;
        top["schema"] = 1;
        top["checks"] = static_cast<i64>(results.size());
        top["failures"] = count_failures(results);
        top["results"] = std::move(arr);
        os << top.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            if (r.pass) continue;
            os << "FAIL d=" << r.d << " g=" << r.g << " " << r.check;
            if (!r.details.empty()) os << ": " << r.details;
            os << "\n";
        }
        os << results.size() << " checks, " << count_failures(results) << " failure(s)\n";
    }
    return os.str();
}

} // namespace curvecat
