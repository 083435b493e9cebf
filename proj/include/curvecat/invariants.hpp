#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "curvecat/errors.hpp"

// Classical numerical invariants of a (degree, genus, ambient dimension)
// triple, plus the small bookkeeping formulas shared by the other modules.
// Everything here is exact 64-bit integer arithmetic; the input contract
// (d <= 100, r <= 20) keeps every intermediate far from overflow.

namespace curvecat {

using i64 = std::int64_t;

inline i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i64 acc = 1;
    for (i64 i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

/// Degree, genus, ambient projective dimension. The universal query key.
struct DGR {
    i64 d;
    i64 g;
    i64 r;

    DGR(i64 d_, i64 g_, i64 r_) : d(d_), g(g_), r(r_) {
        if (d < 1 || g < 0 || r < 2) throw InvalidInput("DGR: need d >= 1, g >= 0, r >= 2");
        if (d > 100 || r > 20) throw InvalidInput("DGR: d <= 100, r <= 20");
    }
};

struct ClassicalInvariants {
    i64 pi;                   // first Castelnuovo bound
    std::optional<i64> pi1;   // second Castelnuovo bound, r = 5 only
    i64 rho;                  // Brill-Noether number, may be negative
    i64 lambda;               // 3g - 3 + rho
    i64 expected_dim;         // lambda + (r+1)^2 - 1
};

/// First Castelnuovo genus bound pi(d, r) for non-degenerate integral
/// curves of degree d in P^r.
inline i64 castelnuovo_pi(i64 d, i64 r) {
    if (r < 2 || d < r) throw InvalidInput("castelnuovo_pi: need d >= r >= 2");
    const i64 m = (d - 1) / (r - 1);
    const i64 eps = (d - 1) - m * (r - 1);
    return m * (m - 1) / 2 * (r - 1) + m * eps;
}

/// Second Castelnuovo bound in P^5, computed as a brute-force maximum of the
/// adjunction genus over quintic del Pezzo divisor classes (a; b1..b4) with
/// a - 1 >= b1 >= b2 >= b3 >= b4 >= 0 and 3a - sum(b) = d. The search is the
/// implementation: the quoted value pi1(14,5) = 13 anchors it.
inline i64 castelnuovo_pi1_p5(i64 d) {
    if (d < 6 || d > 100) throw InvalidInput("castelnuovo_pi1_p5: need 6 <= d <= 100");
    i64 best = -1;
    for (i64 a = 1; a <= d; ++a) {
        const i64 s = 3 * a - d;
        if (s < 0) continue;
        for (i64 b1 = std::min(a - 1, s); b1 >= 0; --b1)
            for (i64 b2 = std::min(b1, s - b1); b2 >= 0; --b2)
                for (i64 b3 = std::min(b2, s - b1 - b2); b3 >= 0; --b3) {
                    const i64 b4 = s - b1 - b2 - b3;
                    if (b4 < 0 || b4 > b3) continue;
                    const i64 self = a * a - (b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4);
                    const i64 twice = self + 2 - d;
                    if (twice % 2 != 0) continue;
                    best = std::max(best, twice / 2);
                }
    }
    return best;
}

/// Brill-Noether number rho(d, g, r) = g - (r+1)(g - d + r).
inline i64 brill_noether_rho(i64 d, i64 g, i64 r) {
    DGR check(d, g, r);
    return g - (r + 1) * (g - d + r);
}

inline ClassicalInvariants classical_invariants(const DGR& q) {
    ClassicalInvariants out{};
    out.pi = castelnuovo_pi(q.d, q.r);
    if (q.r == 5 && q.d >= 6 && q.d <= 100) out.pi1 = castelnuovo_pi1_p5(q.d);
    out.rho = brill_noether_rho(q.d, q.g, q.r);
    out.lambda = 3 * q.g - 3 + out.rho;
    out.expected_dim = out.lambda + (q.r + 1) * (q.r + 1) - 1;
    return out;
}

/// g <= m*h + n*q + (m-1)(n-1) for a curve with coverings of degrees m, n
/// onto curves of genera h, q admitting no common factorization.
inline i64 castelnuovo_severi_bound(i64 m, i64 h, i64 n, i64 q) {
    if (m < 2 || n < 2) throw InvalidInput("castelnuovo_severi_bound: need m, n >= 2");
    if (h < 0 || q < 0) throw InvalidInput("castelnuovo_severi_bound: need h, q >= 0");
    return m * h + n * q + (m - 1) * (n - 1);
}

/// Arithmetic genus of a connected nodal union of two curves meeting
/// transversally in the given number of points.
inline i64 nodal_union_genus(i64 g1, i64 g2, i64 meeting_points) {
    if (g1 < 0 || g2 < 0) throw InvalidInput("nodal_union_genus: genera >= 0");
    if (meeting_points < 1) throw InvalidInput("nodal_union_genus: need meeting_points >= 1");
    return g1 + g2 + meeting_points - 1;
}

/// Sections of the normal bundle of a rational normal curve in P^n twisted
/// down by a degree-z divisor: N is a sum of (n-1) line bundles of degree n+2.
inline std::pair<i64, i64> rnc_normal_bundle_profile(i64 n, i64 z_degree) {
    if (n < 3) throw InvalidInput("rnc_normal_bundle_profile: need n >= 3");
    if (z_degree < 0) throw InvalidInput("rnc_normal_bundle_profile: need z >= 0");
    const i64 h0 = (n - 1) * std::max<i64>(0, n + 3 - z_degree);
    const i64 h1 = (n - 1) * std::max<i64>(0, z_degree - n - 3);
    return {h0, h1};
}

/// Twist levels whose h1(I_X(t)) vanishing suffices for ACM, by degree range.
inline std::vector<i64> acm_vanishing_levels(i64 d) {
    if (d < 5 || d > 17) throw InvalidInput("acm_vanishing_levels: need 5 <= d <= 17");
    if (d <= 9) return {1};
    if (d <= 13) return {1, 2};
    return {1, 2, 3};
}

/// Range of the Maroni invariant of a trigonal curve of genus g:
/// ceil((g-4)/3) <= m <= floor((g-2)/2).
inline std::pair<i64, i64> maroni_range(i64 g) {
    if (g < 5) throw InvalidInput("maroni_range: need g >= 5");
    return {(g - 4 + 2) / 3, (g - 2) / 2};
}

// ---------------------------------------------------------------------------
// Moduli-fiber bookkeeping

struct AutP5Orbit {};        // Aut(P^r)-orbit of an embedded curve
struct AutP5ModAutP1 {};     // same, modulo the stabilizer Aut(P^1) of a rational normal curve
struct SymmetricPower { i64 k; };
struct Jacobian {};
struct Grassmannian { i64 s; i64 n; };

using FiberFactor = std::variant<AutP5Orbit, AutP5ModAutP1, SymmetricPower, Jacobian, Grassmannian>;
using FiberDescriptor = std::vector<FiberFactor>;

inline i64 fiber_factor_dimension(const FiberFactor& f, i64 g, i64 r) {
    struct V {
        i64 g, r;
        i64 operator()(const AutP5Orbit&) const { return (r + 1) * (r + 1) - 1; }
        i64 operator()(const AutP5ModAutP1&) const { return (r + 1) * (r + 1) - 4; }
        i64 operator()(const SymmetricPower& s) const {
            if (s.k < 0) throw InvalidInput("SymmetricPower: k >= 0");
            return s.k;
        }
        i64 operator()(const Jacobian&) const { return g; }
        i64 operator()(const Grassmannian& gr) const {
            // s == n is the one-point Grassmannian (the complete series itself).
            if (gr.s < 0 || gr.s > gr.n) throw InvalidInput("Grassmannian: need 0 <= s <= n");
            return (gr.s + 1) * (gr.n - gr.s);
        }
    };
    return std::visit(V{g, r}, f);
}

/// Dimension of a product fiber of the moduli map.
inline i64 fiber_dimension(const FiberDescriptor& desc, i64 g, i64 r) {
    i64 total = 0;
    for (const auto& f : desc) total += fiber_factor_dimension(f, g, r);
    return total;
}

/// dim M_g, extended to g < 2.
inline i64 moduli_dim(i64 g) {
    if (g >= 2) return 3 * g - 3;
    return g == 1 ? 1 : 0;
}

} // namespace curvecat
