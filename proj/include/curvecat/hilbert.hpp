#pragma once

#include <map>
#include <string>

#include "curvecat/models.hpp"

// Per-twist (h0(I_X(t)), h1(I_X(t))) profiles under the three regimes the
// classification uses: maximal rank, extremal ACM, and the tabulated special
// components. Profiles store h1(O_X(t)) alongside, so the ideal-sheaf Euler
// identity
//     h0(I_X(t)) - h1(I_X(t)) = C(t+5,5) - (t*d + 1 - g) - h1(O_X(t))
// is checkable without re-deriving curve cohomology.

namespace curvecat {

struct ProfileEntry {
    i64 h0_ideal;
    i64 h1_ideal;
    i64 h1_curve;
};

struct HilbertProfile {
    i64 d;
    i64 g;
    std::map<i64, ProfileEntry> entries;  // contiguous t = 1..t_max
    bool acm = false;
    bool linearly_normal = false;
    bool maximal_rank = false;
};

namespace detail {

inline void fill_flags(HilbertProfile& p) {
    p.linearly_normal = p.entries.at(1).h1_ideal == 0;
    bool h1_zero = true, inj_or_surj = true;
    i64 tmax = 0;
    for (const auto& [t, e] : p.entries) {
        h1_zero = h1_zero && e.h1_ideal == 0;
        inj_or_surj = inj_or_surj && e.h0_ideal * e.h1_ideal == 0;
        tmax = std::max(tmax, t);
    }
    bool covers = true;
    if (p.d >= 5 && p.d <= 17)
        covers = tmax >= acm_vanishing_levels(p.d).back();
    p.acm = h1_zero && covers;
    p.maximal_rank = inj_or_surj;
}

} // namespace detail

/// Profile of a curve whose restriction maps all have maximal rank. At t = 1
/// the hyperplane series is complete of dimension max(6, d+1-g):
/// h1(O_X(1)) = max(0, g-d+5) and h1(I_X(1)) = max(0, d-5-g).
inline HilbertProfile maximal_rank_profile(i64 d, i64 g, i64 t_max = 8) {
    if (t_max < 2) throw InvalidInput("maximal_rank_profile: need t_max >= 2");
    DGR check(d, g, 5);
    HilbertProfile p{d, g, {}};
    p.entries[1] = {0, std::max<i64>(0, d - 5 - g), std::max<i64>(0, g - d + 5)};
    for (i64 t = 2; t <= t_max; ++t) {
        const i64 chi = binomial(t + 5, 5) - (t * d + 1 - g);
        p.entries[t] = {std::max<i64>(0, chi), std::max<i64>(0, -chi), 0};
    }
    detail::fill_flags(p);
    return p;
}

/// Profile of an extremal curve (g = pi(d,5)): ACM, with
/// h0(I_X(t)) = C(t+5,5) - t*d - 1 + pi(d,5) - h1(O_X(t)) and the curve
/// speciality h1(O_X(t)) computed on the model surface.
inline HilbertProfile extremal_profile(const CurveModel& model, i64 t_max = 8) {
    const auto [d, g] = model_degree_genus(model.surface);
    if (g != castelnuovo_pi(d, 5))
        throw InvalidInput("extremal_profile: model genus must equal pi(d,5)");

    SurfaceKind kind;
    DivisorClass cls{};
    if (const auto* q = std::get_if<QuadricF0>(&model.surface)) {
        kind = SurfaceKind::Q;
        cls = {q->a, q->b};
    } else if (const auto* f = std::get_if<HirzebruchF2>(&model.surface)) {
        kind = SurfaceKind::F2;
        cls = {f->a, f->b};
    } else if (const auto* c = std::get_if<QuarticConeF4>(&model.surface)) {
        kind = SurfaceKind::ConeF4;
        cls = {c->k, 4 * c->k + c->m};
    } else {
        throw InvalidInput("extremal_profile: model surface does not support twist cohomology");
    }

    HilbertProfile p{d, g, {}};
    for (i64 t = 1; t <= t_max; ++t) {
        const auto [h0x, h1x] = curve_twist_cohomology(kind, cls, t);
        (void)h0x;
        p.entries[t] = {binomial(t + 5, 5) - t * d - 1 + g - h1x, 0, h1x};
    }
    detail::fill_flags(p);
    return p;
}

// ---------------------------------------------------------------------------
// Special tabulated profiles

/// One registry entry: explicit rows for t = 1..tail_from-1, then the
/// closed-form tail h0 = C(t+5,5) - d*t + tail_const with h1 = 0.
struct SpecialProfileSpec {
    i64 d;
    i64 g;
    std::string id;
    std::vector<ProfileEntry> rows;  // rows[i] is the entry at t = i+1
    i64 tail_from;
    i64 tail_const;
};

using SpecialProfileRegistry = std::vector<SpecialProfileSpec>;

inline HilbertProfile special_profile_from_spec(const SpecialProfileSpec& s, i64 t_max = 8) {
    if (static_cast<i64>(s.rows.size()) != s.tail_from - 1)
        throw InvalidInput("special profile: rows must cover exactly t = 1..tail_from-1");
    HilbertProfile p{s.d, s.g, {}};
    for (i64 t = 1; t <= t_max; ++t) {
        if (t < s.tail_from)
            p.entries[t] = s.rows[static_cast<std::size_t>(t - 1)];
        else
            p.entries[t] = {binomial(t + 5, 5) - s.d * t + s.tail_const, 0, 0};
    }
    detail::fill_flags(p);
    return p;
}

inline HilbertProfile special_profile(const SpecialProfileRegistry& registry, i64 d, i64 g,
                                      const std::string& component_id, i64 t_max = 8) {
    for (const auto& s : registry)
        if (s.d == d && s.g == g && s.id == component_id)
            return special_profile_from_spec(s, t_max);
    throw UnknownComponent("special_profile: no registered profile for this (d, g, id)");
}

// ---------------------------------------------------------------------------
// Verification

/// Twist level from which h1(I_X(t)) must vanish for any maximal-rank or ACM
/// curve in the given degree range (hyperplane-section monotonicity).
inline i64 h1_vanishing_threshold(i64 d) {
    if (d <= 9) return 2;
    if (d <= 13) return 3;
    return 4;
}

/// Returns human-readable violation descriptions; empty means consistent.
inline std::vector<std::string> verify_profile(const HilbertProfile& p) {
    std::vector<std::string> out;
    auto note = [&](i64 t, const std::string& what) {
        out.push_back("t=" + std::to_string(t) + ": " + what);
    };

    i64 expect = 1;
    for (const auto& [t, e] : p.entries) {
        if (t != expect) {
            out.push_back("entries not contiguous from t=1");
            break;
        }
        ++expect;
        if (e.h0_ideal < 0 || e.h1_ideal < 0 || e.h1_curve < 0) note(t, "negative entry");
        const i64 lhs = e.h0_ideal - e.h1_ideal;
        const i64 rhs = binomial(t + 5, 5) - (t * p.d + 1 - p.g) - e.h1_curve;
        if (lhs != rhs)
            note(t, "Euler identity violated (" + std::to_string(lhs) + " != " + std::to_string(rhs) + ")");
        if ((p.maximal_rank || p.acm) && p.d >= 5 && p.d <= 17 && t >= h1_vanishing_threshold(p.d) &&
            e.h1_ideal != 0)
            note(t, "h1(I) nonzero at or above the vanishing threshold");
    }
    if (p.entries.empty() || p.entries.begin()->first != 1) out.push_back("missing t=1 entry");

    if (!p.entries.empty() && p.entries.count(1)) {
        HilbertProfile recomputed = p;
        detail::fill_flags(recomputed);
        if (recomputed.acm != p.acm) out.push_back("acm flag inconsistent with entries");
        if (recomputed.linearly_normal != p.linearly_normal)
            out.push_back("linearly_normal flag inconsistent with entries");
        if (recomputed.maximal_rank != p.maximal_rank)
            out.push_back("maximal_rank flag inconsistent with entries");
    }
    return out;
}

} // namespace curvecat
