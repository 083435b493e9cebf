#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "curvecat/hilbert.hpp"

// The classification catalog: one entry per (d, g) with 5 <= d <= 15 and
// 0 <= g <= pi(d,5). Entries for d >= 11 are transcribed in the shipped JSON
// dataset (schema 1); entries for d <= 10 follow one uniform description and
// are generated when the catalog is loaded. The dataset is never the trust
// anchor: check_all() recomputes every stored number against the formula
// modules and fails on any disagreement.

namespace curvecat {

enum class EntryStatus { Empty, Irreducible, Reducible };

struct SeveriRecord {
    std::string ambient;           // "plane" or "quadric"
    i64 degree = 0;                // plane curve degree
    std::array<i64, 2> bidegree{}; // quadric bidegree
    i64 delta = 0;                 // number of nodes
};

struct Exclusion {
    std::string kind;   // "incomplete_series" or "del_pezzo_nonfull"
    i64 gonality = 0;   // incomplete_series: the gonality k of the stratum
    i64 dim = 0;        // incomplete_series: claimed family dimension (without ambient)
};

enum class ProfileKind { MaximalRank, Extremal, Special };

struct ComponentRecord {
    std::string id;
    i64 dimension = 0;
    bool exceeds = false;  // dimension relation: false = equals expected
    i64 exceeds_by = 0;
    std::optional<i64> gonality;
    std::optional<i64> maroni;
    bool linearly_normal = false;
    bool acm_general_member = false;
    ProfileKind profile_kind = ProfileKind::MaximalRank;
    std::optional<SurfaceClassSpec> profile_model;   // Extremal only
    std::string special_id;                          // Special only
    std::optional<SurfaceClassSpec> surface_model;   // surface the general member lies on
    std::optional<i64> moduli_image_dim;
    bool dominates = false;                  // moduli image dense in M_g
    bool dominates_gonality_stratum = false; // moduli image dense in the k-gonal locus
    std::optional<FiberDescriptor> fiber;
    std::string notes;
};

struct CatalogEntry {
    i64 d = 0;
    i64 g = 0;
    EntryStatus status = EntryStatus::Empty;
    std::optional<i64> reducible_count;  // stored alongside status "reducible"
    std::vector<ComponentRecord> components;
    std::optional<SeveriRecord> severi;
    std::vector<Exclusion> exclusions;
    std::string notes;
    bool generated = false;  // synthesized low-degree entry
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    SpecialProfileRegistry registry;

    const CatalogEntry* find(i64 d, i64 g) const {
        for (const auto& e : entries)
            if (e.d == d && e.g == g) return &e;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// JSON loading

namespace detail {

inline SurfaceClassSpec model_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("surface").get<std::string>();
    if (kind == "veronese") return VeroneseSurface{j.at("s").get<i64>()};
    if (kind == "cone_f4") return QuarticConeF4{j.at("k").get<i64>(), j.at("m").get<i64>()};
    if (kind == "scroll") return AbstractScroll{j.at("a").get<i64>(), j.at("b").get<i64>()};
    if (kind == "f0") return QuadricF0{j.at("a").get<i64>(), j.at("b").get<i64>()};
    if (kind == "f2") return HirzebruchF2{j.at("a").get<i64>(), j.at("b").get<i64>()};
    if (kind == "del_pezzo") {
        const auto b = j.at("b");
        if (!b.is_array() || b.size() != 4) throw IoError("del_pezzo class needs 4 b-values");
        return DelPezzoSurface{DelPezzoClass(
            j.at("a").get<i64>(), {b[0].get<i64>(), b[1].get<i64>(), b[2].get<i64>(), b[3].get<i64>()})};
    }
    throw IoError("unknown surface kind: " + kind);
}

inline FiberFactor fiber_factor_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "aut_p5") return AutP5Orbit{};
    if (kind == "aut_p5_mod_p1") return AutP5ModAutP1{};
    if (kind == "sym") return SymmetricPower{j.at("k").get<i64>()};
    if (kind == "jacobian") return Jacobian{};
    if (kind == "grassmannian") return Grassmannian{j.at("s").get<i64>(), j.at("n").get<i64>()};
    throw IoError("unknown fiber factor kind: " + kind);
}

inline ComponentRecord component_from_json(const nlohmann::json& j) {
    ComponentRecord c;
    c.id = j.at("id").get<std::string>();
    c.dimension = j.at("dimension").get<i64>();
    const auto& rel = j.at("relation");
    if (rel.is_string() && rel.get<std::string>() == "expected") {
        c.exceeds = false;
    } else if (rel.is_object() && rel.contains("exceeds")) {
        c.exceeds = true;
        c.exceeds_by = rel.at("exceeds").get<i64>();
    } else {
        throw IoError("component relation must be \"expected\" or {\"exceeds\": n}");
    }
    if (j.contains("gonality")) c.gonality = j.at("gonality").get<i64>();
    if (j.contains("maroni")) c.maroni = j.at("maroni").get<i64>();
    c.linearly_normal = j.at("linearly_normal").get<bool>();
    c.acm_general_member = j.at("acm").get<bool>();
    const auto& prof = j.at("profile");
    if (prof.is_string() && prof.get<std::string>() == "maximal_rank") {
        c.profile_kind = ProfileKind::MaximalRank;
    } else if (prof.is_object() && prof.contains("extremal")) {
        c.profile_kind = ProfileKind::Extremal;
        c.profile_model = model_from_json(prof.at("extremal"));
    } else if (prof.is_object() && prof.contains("special")) {
        c.profile_kind = ProfileKind::Special;
        c.special_id = prof.at("special").get<std::string>();
    } else {
        throw IoError("bad profile reference for component " + c.id);
    }
    if (j.contains("surface_model")) c.surface_model = model_from_json(j.at("surface_model"));
    if (j.contains("moduli_image_dim")) c.moduli_image_dim = j.at("moduli_image_dim").get<i64>();
    if (j.contains("dominates")) c.dominates = j.at("dominates").get<bool>();
    if (j.contains("dominates_gonality_stratum"))
        c.dominates_gonality_stratum = j.at("dominates_gonality_stratum").get<bool>();
    if (j.contains("fiber")) {
        FiberDescriptor f;
        for (const auto& jf : j.at("fiber")) f.push_back(fiber_factor_from_json(jf));
        c.fiber = std::move(f);
    }
    if (j.contains("notes")) c.notes = j.at("notes").get<std::string>();
    return c;
}

/// Entries for d <= 10: every non-empty Hilbert scheme in this range is
/// irreducible of the expected dimension and dominates the moduli space.
inline CatalogEntry generated_low_degree_entry(i64 d, i64 g) {
    CatalogEntry e;
    e.d = d;
    e.g = g;
    e.status = EntryStatus::Irreducible;
    e.generated = true;
    ComponentRecord c;
    c.id = "H";
    c.dimension = classical_invariants(DGR(d, g, 5)).expected_dim;
    c.exceeds = false;
    const bool acm = (d <= 9 && g == d - 5) || (d == 10 && g >= 5);
    c.linearly_normal = acm;
    c.acm_general_member = acm;
    c.profile_kind = ProfileKind::MaximalRank;
    c.moduli_image_dim = moduli_dim(g);
    c.dominates = true;
    if (g == 0) {
        c.fiber = FiberDescriptor{AutP5ModAutP1{}, Grassmannian{5, d}};
    } else if (g == 1) {
        c.fiber = FiberDescriptor{AutP5Orbit{}, Grassmannian{5, d - 1}};
    } else if (d == 10 && g == 6) {
        c.fiber = FiberDescriptor{AutP5Orbit{}};
        c.notes = "canonical curves of non-hyperelliptic genus-six curves";
    } else {
        c.fiber = FiberDescriptor{Jacobian{}, Grassmannian{5, d - g}, AutP5Orbit{}};
    }
    e.components.push_back(std::move(c));
    return e;
}

} // namespace detail

inline Catalog catalog_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(std::string("catalog dataset unreadable: ") + ex.what());
    }
    Catalog cat;
    try {
        if (!doc.contains("schema") || doc.at("schema").get<i64>() != 1)
            throw IoError("catalog dataset: unsupported schema");
        for (const auto& js : doc.at("special_profiles")) {
            SpecialProfileSpec s;
            s.d = js.at("d").get<i64>();
            s.g = js.at("g").get<i64>();
            s.id = js.at("id").get<std::string>();
            i64 expect = 1;
            for (const auto& jr : js.at("rows")) {
                if (jr.at("t").get<i64>() != expect)
                    throw IoError("special profile rows must run t = 1, 2, ...");
                ++expect;
                s.rows.push_back(
                    {jr.at("h0").get<i64>(), jr.at("h1").get<i64>(), jr.at("hc").get<i64>()});
            }
            s.tail_from = js.at("tail_from").get<i64>();
            s.tail_const = js.at("tail_const").get<i64>();
            cat.registry.push_back(std::move(s));
        }
        for (const auto& je : doc.at("entries")) {
            CatalogEntry e;
            e.d = je.at("d").get<i64>();
            e.g = je.at("g").get<i64>();
            if (e.d < 11 || e.d > 15)
                throw IoError("stored entries cover 11 <= d <= 15; lower degrees are generated");
            const std::string status = je.at("status").get<std::string>();
            if (status == "empty") e.status = EntryStatus::Empty;
            else if (status == "irreducible") e.status = EntryStatus::Irreducible;
            else if (status == "reducible") e.status = EntryStatus::Reducible;
            else throw IoError("unknown entry status: " + status);
            if (je.contains("count")) e.reducible_count = je.at("count").get<i64>();
            for (const auto& jc : je.at("components"))
                e.components.push_back(detail::component_from_json(jc));
            if (je.contains("severi")) {
                SeveriRecord s;
                const auto& jsv = je.at("severi");
                s.ambient = jsv.at("ambient").get<std::string>();
                if (s.ambient == "plane") s.degree = jsv.at("degree").get<i64>();
                else if (s.ambient == "quadric") {
                    const auto& bd = jsv.at("bidegree");
                    s.bidegree = {bd.at(0).get<i64>(), bd.at(1).get<i64>()};
                } else throw IoError("severi ambient must be plane or quadric");
                s.delta = jsv.at("delta").get<i64>();
                e.severi = std::move(s);
            }
            if (je.contains("exclusions"))
                for (const auto& jx : je.at("exclusions")) {
                    Exclusion x;
                    x.kind = jx.at("kind").get<std::string>();
                    if (x.kind == "incomplete_series") {
                        x.gonality = jx.at("gonality").get<i64>();
                        x.dim = jx.at("dim").get<i64>();
                    } else if (x.kind != "del_pezzo_nonfull") {
                        throw IoError("unknown exclusion kind: " + x.kind);
                    }
                    e.exclusions.push_back(std::move(x));
                }
            if (je.contains("notes")) e.notes = je.at("notes").get<std::string>();
            cat.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(std::string("catalog dataset malformed: ") + ex.what());
    }
    for (i64 d = 5; d <= 10; ++d)
        for (i64 g = 0; g <= castelnuovo_pi(d, 5); ++g)
            cat.entries.push_back(detail::generated_low_degree_entry(d, g));
    std::sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& l, const CatalogEntry& r) {
        return std::pair(l.d, l.g) < std::pair(r.d, r.g);
    });
    return cat;
}

/// Entry lookup. Genus above pi(d,5) yields a synthesized empty entry with a
/// bound-violation note.
inline CatalogEntry catalog_query(const Catalog& cat, i64 d, i64 g) {
    if (d < 5 || d > 15) throw InvalidInput("catalog_query: need 5 <= d <= 15");
    if (g < 0) throw InvalidInput("catalog_query: need g >= 0");
    if (g > castelnuovo_pi(d, 5)) {
        CatalogEntry e;
        e.d = d;
        e.g = g;
        e.status = EntryStatus::Empty;
        e.notes = "genus exceeds the first Castelnuovo bound pi(" + std::to_string(d) +
                  ",5) = " + std::to_string(castelnuovo_pi(d, 5));
        return e;
    }
    const CatalogEntry* found = cat.find(d, g);
    if (!found) throw IoError("catalog entry missing for the requested (d, g)");
    return *found;
}

/// Profile of a component, built per its profile reference.
inline HilbertProfile component_profile(const Catalog& cat, const CatalogEntry& e,
                                        const ComponentRecord& c, i64 t_max = 8) {
    switch (c.profile_kind) {
        case ProfileKind::MaximalRank:
            return maximal_rank_profile(e.d, e.g, t_max);
        case ProfileKind::Extremal: {
            const auto [d, g] = model_degree_genus(*c.profile_model);
            return extremal_profile(CurveModel{*c.profile_model, d, g, {}, std::nullopt}, t_max);
        }
        case ProfileKind::Special:
            return special_profile(cat.registry, e.d, e.g, c.special_id, t_max);
    }
    throw InvalidInput("component_profile: bad profile kind");
}

} // namespace curvecat
