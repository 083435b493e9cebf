#pragma once

#include <sstream>

#include "curvecat/catalog.hpp"

// Cross-validation of the catalog against the formula modules. Every stored
// number is bound by at least one recomputation here; check_all never throws
// on a failing catalog, it reports.

namespace curvecat {

struct CheckResult {
    i64 d;
    i64 g;
    std::string check;
    bool pass;
    std::string details;
};

namespace detail {

inline bool spec_equal(const SurfaceClassSpec& a, const SurfaceClassSpec& b) {
    return kind_rank(a) == kind_rank(b) && class_key(a) == class_key(b);
}

inline std::string spec_text(const SurfaceClassSpec& s) {
    struct V {
        std::string operator()(const VeroneseSurface& v) const {
            return "veronese s=" + std::to_string(v.s);
        }
        std::string operator()(const QuarticConeF4& c) const {
            return "cone k=" + std::to_string(c.k) + " m=" + std::to_string(c.m);
        }
        std::string operator()(const AbstractScroll& x) const {
            return "scroll " + std::to_string(x.a) + "H" + (x.b < 0 ? "" : "+") + std::to_string(x.b) + "L";
        }
        std::string operator()(const QuadricF0& x) const {
            return "f0 (" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
        }
        std::string operator()(const HirzebruchF2& x) const {
            return "f2 " + std::to_string(x.a) + "h+" + std::to_string(x.b) + "f";
        }
        std::string operator()(const DelPezzoSurface& p) const {
            std::string out = "del_pezzo (" + std::to_string(p.cls.a) + ";";
            for (int i = 0; i < 4; ++i) out += (i ? "," : "") + std::to_string(p.cls.b[i]);
            return out + ")";
        }
    };
    return std::visit(V{}, s);
}

/// Gonality recomputed from a surface class, where a rule exists.
inline std::optional<i64> gonality_from_model(const SurfaceClassSpec& s) {
    struct V {
        std::optional<i64> operator()(const VeroneseSurface& v) const {
            return v.s >= 2 ? std::optional<i64>(v.s - 1) : std::nullopt;
        }
        std::optional<i64> operator()(const QuarticConeF4& c) const { return c.k; }
        std::optional<i64> operator()(const AbstractScroll& x) const { return x.a; }
        std::optional<i64> operator()(const QuadricF0& x) const { return std::min(x.a, x.b); }
        std::optional<i64> operator()(const HirzebruchF2& x) const { return x.a; }
        std::optional<i64> operator()(const DelPezzoSurface& p) const {
            // pencils of lines through a blown-up point, and of conics
            // through three of them
            const i64 sum = p.cls.b[0] + p.cls.b[1] + p.cls.b[2] + p.cls.b[3];
            return std::min(p.cls.a - p.cls.b[0], 2 * p.cls.a - sum + p.cls.b[3]);
        }
    };
    return std::visit(V{}, s);
}

/// Scrollar invariant recomputed from a surface class, where defined.
inline std::optional<i64> maroni_from_model(const SurfaceClassSpec& s, std::string* err) {
    if (const auto* q = std::get_if<QuadricF0>(&s)) {
        const i64 lo = std::min(q->a, q->b), hi = std::max(q->a, q->b);
        if (lo < 3) return std::nullopt;
        const i64 iter = maroni_iterative(SurfaceKind::Q, {lo, hi});
        const i64 closed = maroni_closed_form(ScrollSurface::Q, lo, hi);
        if (iter != closed && err) *err = "iterative and closed form disagree";
        return iter;
    }
    if (const auto* f = std::get_if<HirzebruchF2>(&s)) {
        if (f->a < 3) return std::nullopt;
        const i64 iter = maroni_iterative(SurfaceKind::F2, {f->a, f->b});
        if (2 * f->a >= 6 && 2 * f->a <= f->b) {
            const i64 closed = maroni_closed_form(ScrollSurface::F2, f->a, f->b);
            if (iter != closed && err) *err = "iterative and closed form disagree";
        }
        return iter;
    }
    if (const auto* c = std::get_if<QuarticConeF4>(&s)) {
        if (c->k < 3) return std::nullopt;
        return maroni_iterative(SurfaceKind::ConeF4, {c->k, 4 * c->k + c->m});
    }
    return std::nullopt;
}

struct Reporter {
    std::vector<CheckResult>& out;
    i64 d;
    i64 g;
    void operator()(const std::string& check, bool pass, const std::string& details) const {
        out.push_back({d, g, check, pass, details});
    }
};

inline void check_entry(const Catalog& cat, const CatalogEntry& e, std::vector<CheckResult>& out) {
    Reporter report{out, e.d, e.g};

    // status vs component count; reducible entries store the count explicitly
    const auto n = static_cast<i64>(e.components.size());
    bool status_ok = (e.status == EntryStatus::Empty && n == 0) ||
                     (e.status == EntryStatus::Irreducible && n == 1) ||
                     (e.status == EntryStatus::Reducible && n >= 2);
    if (e.status == EntryStatus::Reducible)
        status_ok = status_ok && e.reducible_count && *e.reducible_count == n;
    else
        status_ok = status_ok && !e.reducible_count;
    report("status-count", status_ok, "components=" + std::to_string(n));

    // a stored empty entry must have no surface models at all
    if (e.status == EntryStatus::Empty) {
        bool none = true;
        try {
            none = enumerate_models(e.d, e.g).empty();
        } catch (const std::exception&) {
            none = false;
        }
        report("empty-no-models", none, "");
    }

    ClassicalInvariants ci{};
    bool ci_ok = true;
    try {
        ci = classical_invariants(DGR(e.d, e.g, 5));
    } catch (const std::exception& ex) {
        ci_ok = false;
        report("invariants", false, ex.what());
    }

    for (const auto& c : e.components) {
        const std::string who = "component " + c.id;

        if (ci_ok) {
            const bool ge = c.dimension >= ci.expected_dim;
            const bool rel = c.exceeds ? (c.exceeds_by >= 1 && c.dimension == ci.expected_dim + c.exceeds_by)
                                       : (c.dimension == ci.expected_dim);
            report("dimension", ge && rel,
                   who + ": dim=" + std::to_string(c.dimension) +
                       " expected=" + std::to_string(ci.expected_dim));
        }

        // profile construction, internal consistency, flag agreement
        try {
            const HilbertProfile p = component_profile(cat, e, c, 8);
            auto violations = verify_profile(p);
            if (p.d != e.d || p.g != e.g) violations.push_back("profile built for a different (d, g)");
            std::string detail = who;
            for (const auto& v : violations) detail += "; " + v;
            report("profile", violations.empty(), detail);
            report("flags",
                   p.linearly_normal == c.linearly_normal && p.acm == c.acm_general_member &&
                       (!c.acm_general_member || c.linearly_normal),
                   who);
            if (c.profile_kind == ProfileKind::MaximalRank) {
                bool mr = p.maximal_rank;
                report("maximal-rank", mr, who);
            }
        } catch (const std::exception& ex) {
            report("profile", false, who + ": " + std::string(ex.what()));
        }

        // cited models must exist in the enumerator output
        auto model_exists = [&](const SurfaceClassSpec& s) -> bool {
            for (const auto& m : enumerate_models(e.d, e.g))
                if (spec_equal(m.surface, s)) return true;
            return false;
        };
        try {
            if (c.profile_model) {
                const bool ok = model_exists(*c.profile_model) && ci_ok && e.g == ci.pi;
                report("model", ok, who + ": extremal " + spec_text(*c.profile_model));
            }
            if (c.surface_model)
                report("model", model_exists(*c.surface_model), who + ": " + spec_text(*c.surface_model));
        } catch (const std::exception& ex) {
            report("model", false, who + ": " + std::string(ex.what()));
        }

        // a component pinned to a surface has the surface-family dimension
        if (c.surface_model) {
            try {
                const auto [md, mg] = model_degree_genus(*c.surface_model);
                const auto fam =
                    family_dimension_count(CurveModel{*c.surface_model, md, mg, {}, std::nullopt}, true);
                report("family-dim", fam.family_dim == c.dimension,
                       who + ": family=" + std::to_string(fam.family_dim));
            } catch (const std::exception& ex) {
                report("family-dim", false, who + ": " + std::string(ex.what()));
            }
        }

        if (c.maroni) {
            bool ok = false;
            std::string detail = who;
            if (c.surface_model) {
                try {
                    std::string err;
                    const auto m = maroni_from_model(*c.surface_model, &err);
                    ok = m && *m == *c.maroni && err.empty();
                    if (!err.empty()) detail += ": " + err;
                    if (m) detail += ": recomputed " + std::to_string(*m);
                } catch (const std::exception& ex) {
                    detail += ": " + std::string(ex.what());
                }
            }
            report("maroni", ok, detail);
        }

        if (c.fiber && c.moduli_image_dim) {
            try {
                // Grassmannian factors here are always spaces of subseries of
                // projective dimension r = 5, so the first argument is pinned
                bool shape_ok = true;
                for (const auto& f : *c.fiber)
                    if (const auto* gr = std::get_if<Grassmannian>(&f)) shape_ok = shape_ok && gr->s == 5;
                const i64 f = fiber_dimension(*c.fiber, e.g, 5);
                report("fiber-sum", shape_ok && *c.moduli_image_dim + f == c.dimension,
                       who + ": moduli+" + std::to_string(f));
            } catch (const std::exception& ex) {
                report("fiber-sum", false, who + ": " + std::string(ex.what()));
            }
        }

        if (c.dominates) {
            const bool ok = ci_ok && ci.rho >= 0 && c.moduli_image_dim &&
                            *c.moduli_image_dim == moduli_dim(e.g);
            report("dominates", ok, who);
        }
        if (c.dominates_gonality_stratum) {
            const bool ok = c.gonality && c.moduli_image_dim &&
                            *c.moduli_image_dim == 2 * e.g + 2 * *c.gonality - 5;
            report("gonality-stratum", ok, who);
        }

        if (c.gonality) {
            // every stored gonality must be recomputable by at least one
            // rule, and no applicable rule may disagree
            int applicable = 0;
            bool ok = true;
            if (c.surface_model) {
                if (const auto k = gonality_from_model(*c.surface_model)) {
                    ++applicable;
                    ok = ok && *k == *c.gonality;
                }
            }
            if (c.dominates_gonality_stratum && c.moduli_image_dim) {
                ++applicable;
                ok = ok && *c.moduli_image_dim == 2 * e.g + 2 * *c.gonality - 5;
            }
            if (e.severi && e.severi->ambient == "plane" && e.components.size() == 1) {
                ++applicable;
                ok = ok && *c.gonality == e.severi->degree - 2;
            }
            report("gonality", applicable > 0 && ok,
                   who + ": gonality=" + std::to_string(*c.gonality) + " rules=" +
                       std::to_string(applicable));
        }
    }

    if (e.severi) {
        i64 linear_dim = 0, aut = 0;
        if (e.severi->ambient == "plane") {
            linear_dim = binomial(e.severi->degree + 2, 2) - 1;
            aut = 8;
        } else {
            linear_dim = (e.severi->bidegree[0] + 1) * (e.severi->bidegree[1] + 1) - 1;
            aut = 6;
        }
        const i64 image = linear_dim - e.severi->delta - aut;
        bool matched = false;
        for (const auto& c : e.components)
            matched = matched || (c.moduli_image_dim && *c.moduli_image_dim == image);
        report("severi", matched && ci_ok && image >= ci.lambda,
               "image=" + std::to_string(image) + " lambda=" + std::to_string(ci.lambda));
    }

    for (const auto& x : e.exclusions) {
        if (x.kind == "incomplete_series") {
            // trigonal/tetragonal curves re-embedded by an incomplete series:
            // stratum dimension plus one Grassmannian step, below lambda
            const i64 recomputed = (2 * e.g + 2 * x.gonality - 5) + 6;
            report("exclusion", ci_ok && x.dim == recomputed && x.dim < ci.lambda,
                   "incomplete_series k=" + std::to_string(x.gonality) + " dim=" +
                       std::to_string(x.dim));
        } else if (x.kind == "del_pezzo_nonfull") {
            bool has_class = false;
            try {
                has_class = !del_pezzo_models(e.d, e.g).empty();
            } catch (const std::exception&) {
            }
            report("exclusion", del_pezzo_nonfull(e.d, e.g) && has_class, "del_pezzo_nonfull");
        } else {
            report("exclusion", false, "unknown kind " + x.kind);
        }
    }

    // linear normality and the ACM property move together in low degree
    bool acm_ln = true;
    for (const auto& c : e.components) {
        if (e.d <= 9) acm_ln = acm_ln && (c.acm_general_member == c.linearly_normal);
        else if (e.d <= 13) acm_ln = acm_ln && (!c.linearly_normal || c.acm_general_member);
        else if (e.d == 14 && e.g != 14) acm_ln = acm_ln && (!c.linearly_normal || c.acm_general_member);
    }
    report("acm-ln-rule", acm_ln, "");
}

} // namespace detail

/// Runs every cross-module validation on the catalog; never throws on a
/// failing catalog. Results are sorted by (d, g, check name).
inline std::vector<CheckResult> check_all(const Catalog& cat) {
    std::vector<CheckResult> out;

    // key-set coverage: exactly one entry per (d, g) with g <= pi(d, 5)
    std::set<std::pair<i64, i64>> expected;
    for (i64 d = 5; d <= 15; ++d)
        for (i64 g = 0; g <= castelnuovo_pi(d, 5); ++g) expected.insert({d, g});
    std::map<std::pair<i64, i64>, int> seen;
    for (const auto& e : cat.entries) ++seen[{e.d, e.g}];
    for (const auto& e : cat.entries) {
        const bool in_range = expected.count({e.d, e.g}) > 0;
        const bool unique = seen[{e.d, e.g}] == 1;
        if (!in_range || !unique)
            out.push_back({e.d, e.g, "coverage", false,
                           !in_range ? "entry outside the valid (d, g) range" : "duplicate entry"});
    }
    for (const auto& key : expected)
        if (!seen.count(key))
            out.push_back({key.first, key.second, "coverage", false, "entry missing"});
    if (out.empty())
        out.push_back({0, 0, "coverage", true,
                       std::to_string(cat.entries.size()) + " entries, complete and unique"});

    for (const auto& e : cat.entries) detail::check_entry(cat, e, out);

    std::sort(out.begin(), out.end(), [](const CheckResult& l, const CheckResult& r) {
        return std::tie(l.d, l.g, l.check, l.details) < std::tie(r.d, r.g, r.check, r.details);
    });
    return out;
}

inline i64 count_failures(const std::vector<CheckResult>& results) {
    i64 n = 0;
    for (const auto& r : results)
        if (!r.pass) ++n;
    return n;
}

} // namespace curvecat
