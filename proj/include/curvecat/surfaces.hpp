#pragma once

#include <array>
#include <cstdlib>

#include "curvecat/invariants.hpp"

// Exact line-bundle cohomology on Hirzebruch surfaces F_e, on the quadric
// Q = P^1 x P^1, and on the quintic del Pezzo surface, plus the
// restriction-to-curve and scrollar-invariant computations built on top.
//
// Coordinate convention, used by every call site:
//   * F_e classes are x*h + y*f with h^2 = -e, h.f = 1, f^2 = 0 and
//     canonical class -2h - (e+2)f.
//   * Q is F_0 with h <-> O(1,0) and f <-> O(0,1); the bidegree (a,b)
//     is the F_0 class (x,y) = (a,b).
//   * Embeddings into P^5: Q by |O_Q(1,2)| = |h+2f|, F_2 by |h+3f|, and the
//     cone over a rational normal quartic is handled upstairs on F_4 via the
//     pullback hyperplane class |h+4f|.

namespace curvecat {

struct FeClass {
    i64 e;
    i64 x;
    i64 y;

    FeClass(i64 e_, i64 x_, i64 y_) : e(e_), x(x_), y(y_) {
        if (e < 0) throw InvalidInput("FeClass: need e >= 0");
        if (std::abs(x) > 10000 || std::abs(y) > 10000 || e > 10000)
            throw InvalidInput("FeClass: coefficient overflow guard (|x|,|y|,e <= 10^4)");
    }

    i64 dot(const FeClass& o) const {
        return -e * x * o.x + x * o.y + o.x * y;
    }
    i64 self_intersection() const { return dot(*this); }
};

inline FeClass fe_canonical(i64 e) { return FeClass(e, -2, -e - 2); }

struct CohomologyTriple {
    i64 h0;
    i64 h1;
    i64 h2;
};

/// h^0, h^1 of O_P1(n).
inline std::pair<i64, i64> cohomology_p1(i64 n) {
    return {std::max<i64>(0, n + 1), std::max<i64>(0, -n - 1)};
}

/// Cohomology of O_Fe(x*h + y*f): h0 from the pushforward decomposition
/// (+) O(y - j*e), h2 by Serre duality, h1 from Riemann-Roch.
inline CohomologyTriple cohomology_fe(const FeClass& c) {
    auto h0_of = [](i64 e, i64 x, i64 y) -> i64 {
        if (x < 0) return 0;
        i64 acc = 0;
        for (i64 j = 0; j <= x; ++j) acc += std::max<i64>(0, y - j * e + 1);
        return acc;
    };
    const i64 h0 = h0_of(c.e, c.x, c.y);
    const i64 h2 = h0_of(c.e, -2 - c.x, -c.e - 2 - c.y);
    const i64 chi = 1 + (-c.e * c.x * c.x + 2 * c.x * c.y - c.e * c.x + 2 * c.x + 2 * c.y) / 2;
    return {h0, h0 + h2 - chi, h2};
}

/// Cohomology of O_Q(a,b) by the Kunneth formula.
inline CohomologyTriple cohomology_bidegree(i64 a, i64 b) {
    if (std::abs(a) > 10000 || std::abs(b) > 10000)
        throw InvalidInput("cohomology_bidegree: |a|,|b| <= 10^4");
    const auto [a0, a1] = cohomology_p1(a);
    const auto [b0, b1] = cohomology_p1(b);
    return {a0 * b0, a0 * b1 + a1 * b0, a1 * b1};
}

// ---------------------------------------------------------------------------
// Embedded rational surfaces in P^5

enum class SurfaceKind { Q, F2, ConeF4 };

inline i64 surface_e(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Q: return 0;
        case SurfaceKind::F2: return 2;
        case SurfaceKind::ConeF4: return 4;
    }
    throw InvalidInput("surface_e: bad kind");
}

/// Hyperplane class of the embedding, in (x, y) coordinates.
inline std::pair<i64, i64> surface_hyperplane(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Q: return {1, 2};
        case SurfaceKind::F2: return {1, 3};
        case SurfaceKind::ConeF4: return {1, 4};
    }
    throw InvalidInput("surface_hyperplane: bad kind");
}

/// Divisor class of a curve on one of the three surfaces, in (x, y) coords.
struct DivisorClass {
    i64 x;
    i64 y;
};

/// (h0, h1) of O_X(t) for a curve X of class `curve` on the given surface,
/// via 0 -> O_S(tH - X) -> O_S(tH) -> O_X(t) -> 0. Requires
/// h1(O_S(tH)) = h2(O_S(tH)) = 0, else the shortcut is invalid.
inline std::pair<i64, i64> curve_twist_cohomology(SurfaceKind kind, DivisorClass curve, i64 t) {
    const i64 e = surface_e(kind);
    const auto [hx, hy] = surface_hyperplane(kind);
    const auto ambient = cohomology_fe(FeClass(e, t * hx, t * hy));
    if (ambient.h1 != 0 || ambient.h2 != 0)
        throw SequenceAssumptionViolated("curve_twist_cohomology: h1 or h2 of O_S(tH) nonzero");
    const auto diff = cohomology_fe(FeClass(e, t * hx - curve.x, t * hy - curve.y));
    return {ambient.h0 - diff.h0 + diff.h1, diff.h2};
}

// ---------------------------------------------------------------------------
// Scrollar / Maroni invariants

/// m(X, g^1_a) = max{ k : dim|k g^1_a| = k } - 1 for the pencil of degree
/// a = C.f cut by the ruling, computed by iterating the h1-vanishing
/// criterion dim|t g^1_a| = t  <=>  h1(O_S(tf - C)) = 0.
inline i64 maroni_iterative(SurfaceKind kind, DivisorClass curve) {
    if (curve.x < 3) throw InvalidInput("maroni_iterative: fiber degree C.f >= 3 required");
    const i64 e = surface_e(kind);
    i64 last = 0;
    for (i64 t = 1; t <= curve.y + 2; ++t) {
        if (cohomology_fe(FeClass(e, -curve.x, t - curve.y)).h1 == 0)
            last = t;
        else
            break;
    }
    return last - 1;
}

enum class ScrollSurface { Q, F2 };

/// Closed forms: b - 2 on Q (3 <= a <= b), b - 2a on F_2 (6 <= 2a <= b).
inline i64 maroni_closed_form(ScrollSurface s, i64 a, i64 b) {
    if (s == ScrollSurface::Q) {
        if (!(3 <= a && a <= b)) throw InvalidInput("maroni_closed_form(Q): need 3 <= a <= b");
        return b - 2;
    }
    if (!(6 <= 2 * a && 2 * a <= b)) throw InvalidInput("maroni_closed_form(F2): need 6 <= 2a <= b");
    return b - 2 * a;
}

// ---------------------------------------------------------------------------
// Quintic del Pezzo surface

/// Class (a; b1,...,b4) on P^2 blown up at 4 general points, b sorted descending.
struct DelPezzoClass {
    i64 a;
    std::array<i64, 4> b;

    DelPezzoClass(i64 a_, std::array<i64, 4> b_) : a(a_), b(b_) {
        if (a < 1) throw InvalidInput("DelPezzoClass: need a >= 1");
        for (int i = 0; i < 3; ++i)
            if (b[i] < b[i + 1]) throw InvalidInput("DelPezzoClass: b must be sorted descending");
        if (b[3] < 0) throw InvalidInput("DelPezzoClass: need b4 >= 0");
    }

    i64 degree() const { return 3 * a - (b[0] + b[1] + b[2] + b[3]); }
    i64 self_intersection() const {
        return a * a - (b[0] * b[0] + b[1] * b[1] + b[2] * b[2] + b[3] * b[3]);
    }
    /// Adjunction genus from X^2 = 2g - 2 + deg X; throws on parity failure.
    i64 genus() const {
        const i64 twice = self_intersection() + 2 - degree();
        if (twice % 2 != 0) throw ParityViolation("DelPezzoClass: non-integral adjunction genus");
        return twice / 2;
    }
};

struct DelPezzoCohomology {
    i64 h0;
    i64 degree;
    i64 genus;
    /// True when the class passes the nef-and-big screen (a >= b1 + b2) that
    /// justifies h1 = h2 = 0; h0 = g + deg is returned either way.
    bool vanishing_verified;
};

inline DelPezzoCohomology del_pezzo_cohomology(const DelPezzoClass& c) {
    const i64 deg = c.degree();
    if (deg < 1) throw InvalidInput("del_pezzo_cohomology: need degree >= 1");
    const i64 g = c.genus();
    const bool screen = c.a >= c.b[0] + c.b[1];
    return {g + deg, deg, g, screen};
}

} // namespace curvecat
