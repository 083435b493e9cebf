#pragma once

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "curvecat/surfaces.hpp"

// Diophantine enumeration of the surface models carrying a smooth curve of
// given (d, g) in P^5: the Veronese surface, smooth quartic scrolls (abstract
// H,L basis and the two embedded types F_0, F_2), the cone over a rational
// normal quartic, and quintic del Pezzo classes. Search bounds: the degree
// equation is strictly increasing in the bounded variable (a <= d/2 for
// F_0/F_2, k <= d/4 for cones, a <= d for del Pezzo); abstract scrolls stop
// when dim|aH+bL| turns negative.

namespace curvecat {

struct VeroneseSurface { i64 s; };                 // plane curve of degree s, doubly embedded
struct AbstractScroll { i64 a; i64 b; };           // class aH + bL on a quartic scroll
struct QuadricF0 { i64 a; i64 b; };                // O_Q(a,b) on Q = P^1 x P^1 in |O(1,2)|
struct HirzebruchF2 { i64 a; i64 b; };             // a*h + b*f on F_2 in |h+3f|
struct QuarticConeF4 { i64 k; i64 m; };            // strict transform k*C0 + d*f, m = d - 4k
struct DelPezzoSurface { DelPezzoClass cls; };

using SurfaceClassSpec =
    std::variant<VeroneseSurface, QuarticConeF4, AbstractScroll, QuadricF0, HirzebruchF2, DelPezzoSurface>;

struct CurveModel {
    SurfaceClassSpec surface;
    i64 degree;
    i64 genus;
    std::vector<i64> ruling_pencils;   // degrees of pencils cut by rulings
    std::optional<i64> maroni;
    bool outside_standard_range = false;  // F2 classes with a <= b < 2a
};

/// Recompute (degree, genus) of a model from its class; the stored fields
/// must round-trip through this.
inline std::pair<i64, i64> model_degree_genus(const SurfaceClassSpec& s) {
    struct V {
        std::pair<i64, i64> operator()(const VeroneseSurface& v) const {
            return {2 * v.s, binomial(v.s - 1, 2)};
        }
        std::pair<i64, i64> operator()(const QuarticConeF4& c) const {
            const i64 d = 4 * c.k + c.m;
            return {d, (c.k - 1) * (2 * d - 4 * c.k - 2) / 2};
        }
        std::pair<i64, i64> operator()(const AbstractScroll& s) const {
            return {4 * s.a + s.b, 2 * (s.a - 1) * (s.a - 2) + (3 + s.b) * (s.a - 1)};
        }
        std::pair<i64, i64> operator()(const QuadricF0& q) const {
            return {2 * q.a + q.b, (q.a - 1) * (q.b - 1)};
        }
        std::pair<i64, i64> operator()(const HirzebruchF2& f) const {
            return {f.a + f.b, (f.a - 1) * (f.b - f.a - 1)};
        }
        std::pair<i64, i64> operator()(const DelPezzoSurface& p) const {
            return {p.cls.degree(), p.cls.genus()};
        }
    };
    return std::visit(V{}, s);
}

/// dim|aH + bL| on a smooth quartic scroll.
inline i64 scroll_linear_system_dim(i64 a, i64 b) {
    const i64 dim = 2 * a * (a + 1) + (a + 1) * (b + 1) - 1;
    if (dim < 0) throw InvalidInput("scroll_linear_system_dim: negative dimension");
    return dim;
}

inline std::vector<CurveModel> veronese_models(i64 d, i64 g) {
    if (d < 2) throw InvalidInput("veronese_models: need d >= 2");
    std::vector<CurveModel> out;
    if (d % 2 == 0) {
        const i64 s = d / 2;
        if (g == binomial(s - 1, 2))
            out.push_back({VeroneseSurface{s}, d, g, {}, std::nullopt});
    }
    return out;
}

inline std::vector<CurveModel> cone_models(i64 d, i64 g, bool smooth_only) {
    if (d < 5) throw InvalidInput("cone_models: need d >= 5");
    std::vector<CurveModel> out;
    for (i64 k = 1; 4 * k <= d; ++k) {
        const i64 m = d - 4 * k;
        if ((k - 1) * (2 * d - 4 * k - 2) / 2 != g) continue;
        if (smooth_only && m > 1) continue;
        CurveModel model{QuarticConeF4{k, m}, d, g, {k}, std::nullopt};
        if (k >= 3) model.maroni = maroni_iterative(SurfaceKind::ConeF4, {k, d});
        out.push_back(std::move(model));
    }
    return out;
}

inline std::vector<CurveModel> scroll_models(i64 d, i64 g) {
    if (d < 5) throw InvalidInput("scroll_models: need d >= 5");
    std::vector<CurveModel> out;
    for (i64 a = 1; a <= d; ++a) {
        const i64 b = d - 4 * a;
        // effectivity certified only by dim|aH+bL| >= 0
        if (2 * a * (a + 1) + (a + 1) * (b + 1) - 1 < 0) continue;
        if (2 * (a - 1) * (a - 2) + (3 + b) * (a - 1) != g) continue;
        out.push_back({AbstractScroll{a, b}, d, g, {a}, std::nullopt});
    }
    return out;
}

inline std::vector<CurveModel> f0_f2_models(i64 d, i64 g) {
    if (d < 5) throw InvalidInput("f0_f2_models: need d >= 5");
    std::vector<CurveModel> out;
    for (i64 a = 1; 2 * a + 1 <= d; ++a) {
        const i64 b = d - 2 * a;
        if ((a - 1) * (b - 1) != g) continue;
        CurveModel model{QuadricF0{a, b}, d, g, {a, b}, std::nullopt};
        const i64 lo = std::min(a, b), hi = std::max(a, b);
        if (lo >= 3) model.maroni = maroni_iterative(SurfaceKind::Q, {lo, hi});
        out.push_back(std::move(model));
    }
    for (i64 a = 1; 2 * a <= d; ++a) {
        const i64 b = d - a;
        if ((a - 1) * (b - a - 1) != g) continue;
        CurveModel model{HirzebruchF2{a, b}, d, g, {a}, std::nullopt};
        model.outside_standard_range = b < 2 * a;
        if (a >= 3) model.maroni = maroni_iterative(SurfaceKind::F2, {a, b});
        out.push_back(std::move(model));
    }
    return out;
}

inline std::vector<CurveModel> del_pezzo_models(i64 d, i64 g) {
    if (d < 3) throw InvalidInput("del_pezzo_models: need d >= 3");
    std::vector<CurveModel> out;
    for (i64 a = 1; a <= d; ++a) {
        const i64 s = 3 * a - d;
        if (s < 0) continue;
        for (i64 b1 = s; b1 >= 0; --b1)
            for (i64 b2 = std::min(b1, s - b1); b2 >= 0; --b2)
                for (i64 b3 = std::min(b2, s - b1 - b2); b3 >= 0; --b3) {
                    const i64 b4 = s - b1 - b2 - b3;
                    if (b4 < 0 || b4 > b3) continue;
                    const i64 self = a * a - (b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4);
                    if (self != 2 * g - 2 + d) continue;
                    out.push_back({DelPezzoSurface{DelPezzoClass(a, {b1, b2, b3, b4})},
                                   d, g, {}, std::nullopt});
                }
    }
    return out;
}

namespace detail {
inline int kind_rank(const SurfaceClassSpec& s) { return static_cast<int>(s.index()); }
inline std::vector<i64> class_key(const SurfaceClassSpec& s) {
    struct V {
        std::vector<i64> operator()(const VeroneseSurface& v) const { return {v.s}; }
        std::vector<i64> operator()(const QuarticConeF4& c) const { return {c.k, c.m}; }
        std::vector<i64> operator()(const AbstractScroll& x) const { return {x.a, x.b}; }
        std::vector<i64> operator()(const QuadricF0& x) const { return {x.a, x.b}; }
        std::vector<i64> operator()(const HirzebruchF2& x) const { return {x.a, x.b}; }
        std::vector<i64> operator()(const DelPezzoSurface& p) const {
            return {p.cls.a, p.cls.b[0], p.cls.b[1], p.cls.b[2], p.cls.b[3]};
        }
    };
    return std::visit(V{}, s);
}
} // namespace detail

/// Union of all model enumerators, in deterministic order
/// (surface kind, then lexicographic class).
inline std::vector<CurveModel> enumerate_models(i64 d, i64 g) {
    if (d < 5 || d > 20) throw InvalidInput("enumerate_models: need 5 <= d <= 20");
    if (g < 0 || g > castelnuovo_pi(d, 5)) throw InvalidInput("enumerate_models: need 0 <= g <= pi(d,5)");
    std::vector<CurveModel> out;
    auto append = [&](std::vector<CurveModel> v) {
        for (auto& m : v) out.push_back(std::move(m));
    };
    append(veronese_models(d, g));
    append(cone_models(d, g, /*smooth_only=*/false));
    append(scroll_models(d, g));
    append(f0_f2_models(d, g));
    append(del_pezzo_models(d, g));
    std::sort(out.begin(), out.end(), [](const CurveModel& l, const CurveModel& r) {
        const int lk = detail::kind_rank(l.surface), rk = detail::kind_rank(r.surface);
        if (lk != rk) return lk < rk;
        return detail::class_key(l.surface) < detail::class_key(r.surface);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Family dimension counts

struct FamilyDimension {
    i64 linear_system_dim;
    i64 aut_dim;
    i64 family_dim;   // linear_system_dim - aut_dim (+ 35 with ambient)
};

/// dim Aut of the surface the class lives on; 0 for del Pezzo classes, whose
/// ambient count is the 35-dimensional space of quintic del Pezzos in P^5.
inline i64 surface_aut_dim(const SurfaceClassSpec& s) {
    struct V {
        i64 operator()(const VeroneseSurface&) const { return 8; }
        i64 operator()(const QuarticConeF4&) const { return 9; }
        i64 operator()(const AbstractScroll&) const { return 6; }
        i64 operator()(const QuadricF0&) const { return 6; }
        i64 operator()(const HirzebruchF2&) const { return 7; }
        i64 operator()(const DelPezzoSurface&) const { return 0; }
    };
    return std::visit(V{}, s);
}

inline i64 model_linear_system_dim(const SurfaceClassSpec& s) {
    struct V {
        i64 operator()(const VeroneseSurface& v) const { return binomial(v.s + 2, 2) - 1; }
        i64 operator()(const QuarticConeF4& c) const {
            return cohomology_fe(FeClass(4, c.k, 4 * c.k + c.m)).h0 - 1;
        }
        i64 operator()(const AbstractScroll& x) const { return scroll_linear_system_dim(x.a, x.b); }
        i64 operator()(const QuadricF0& x) const { return (x.a + 1) * (x.b + 1) - 1; }
        i64 operator()(const HirzebruchF2& x) const { return cohomology_fe(FeClass(2, x.a, x.b)).h0 - 1; }
        i64 operator()(const DelPezzoSurface& p) const { return del_pezzo_cohomology(p.cls).h0 - 1; }
    };
    return std::visit(V{}, s);
}

inline FamilyDimension family_dimension_count(const CurveModel& model, bool include_ambient) {
    FamilyDimension out{};
    out.linear_system_dim = model_linear_system_dim(model.surface);
    out.aut_dim = surface_aut_dim(model.surface);
    out.family_dim = out.linear_system_dim - out.aut_dim + (include_ambient ? 35 : 0);
    return out;
}

/// True when the family of curves on quintic del Pezzos cannot be a full
/// component: d > (3g + 32)/5, i.e. 5d > 3g + 32.
inline bool del_pezzo_nonfull(i64 d, i64 g) {
    DGR check(d, g, 5);
    return 5 * d > 3 * g + 32;
}

/// h1 of the normal bundle of a degree-d curve on a Veronese surface.
inline i64 veronese_normal_h1(i64 d, i64 g) {
    if (d % 2 != 0) throw InvalidInput("veronese_normal_h1: need d even");
    const i64 a = d / 2;
    return 3 * (g - d + 5) - 3 * a + 9;
}

} // namespace curvecat
