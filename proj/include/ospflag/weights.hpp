#pragma once

// Weight lattice of osp(3|4) in rho-shifted coordinates.
//
// Every weight handled by this library is already rho-shifted: a point
// (a, b | c) with a, b (the sp(4)-part) and c (the so(3)-part) all lying in
// Z + 1/2.  Coordinates are stored doubled (da = 2a, ...) so that the whole
// engine runs on exact integers; a valid weight therefore has three odd
// components.  The shift by rho = (1, -1 | 1)/... is baked in by the callers:
// the engine never needs the unshifted weight.
//
// The invariant form used throughout is
//     (u, v) = u_a v_a + u_b v_b - u_c v_c,
// evaluated here in quarter units on doubled coordinates (bilinear_q4).
// Root vectors are even lattice points and reuse the same struct.

#include <array>
#include <compare>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ospflag {

// Throwing assert for internal invariants: these conditions are supposed to be
// unreachable, but a combinatorial engine should fail loudly, not corrupt
// multiplicities.
inline void check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("ospflag invariant violated: ") + what);
}

// Exact half-integer: value = num2 / 2.
struct HalfInt {
    int num2 = 0;

    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

    bool is_integer() const { return num2 % 2 == 0; }
    bool is_negative() const { return num2 < 0; }
    bool is_zero() const { return num2 == 0; }

    // Renders "3/2", "-1/2", "2", ... for diagnostics.
    std::string str() const {
        std::ostringstream os;
        if (is_integer()) os << num2 / 2;
        else os << num2 << "/2";
        return os.str();
    }
};

// Lattice vector in doubled coordinates; odd entries for (rho-shifted)
// weights, even entries for roots and finite-dimensional weights.
struct Weight {
    int da = 0;
    int db = 0;
    int dc = 0;

    friend bool operator==(const Weight&, const Weight&) = default;

    Weight operator+(const Weight& o) const { return {da + o.da, db + o.db, dc + o.dc}; }
    Weight operator-(const Weight& o) const { return {da - o.da, db - o.db, dc - o.dc}; }
    Weight operator*(int k) const { return {k * da, k * db, k * dc}; }
};

// Deterministic total order used for normalised output and as map key:
// by coordinate sum first (so "lower in the block" tends to come first),
// then lexicographically.
struct WeightOrder {
    bool operator()(const Weight& u, const Weight& v) const {
        const int su = u.da + u.db + u.dc, sv = v.da + v.db + v.dc;
        if (su != sv) return su < sv;
        if (u.da != v.da) return u.da < v.da;
        if (u.db != v.db) return u.db < v.db;
        return u.dc < v.dc;
    }
};

inline bool is_valid_weight(const Weight& w) {
    return (w.da % 2 != 0) && (w.db % 2 != 0) && (w.dc % 2 != 0);
}

// (u, v) in quarter units: 4 (u, v) on true coordinates.
inline int bilinear_q4(const Weight& u, const Weight& v) {
    return u.da * v.da + u.db * v.db - u.dc * v.dc;
}

// A root of osp(3|4), kept with the data the engine needs: its lattice vector
// (doubled, hence even), its height in the distinguished simple system
// {delta1 - delta2, epsilon, delta2 - epsilon}, and a printable name.
struct Root {
    Weight vec;
    int height = 0;
    const char* name = "";
};

// Positive even roots: 2delta1, 2delta2, delta1 -/+ delta2, epsilon.
inline const std::array<Root, 5>& even_positive_roots() {
    static const std::array<Root, 5> roots = {{
        {{2, -2, 0}, 1, "delta1-delta2"},
        {{0, 0, 2}, 1, "epsilon"},
        {{0, 4, 0}, 4, "2delta2"},
        {{2, 2, 0}, 5, "delta1+delta2"},
        {{4, 0, 0}, 6, "2delta1"},
    }};
    return roots;
}

// Positive isotropic (odd) roots delta_i -/+ epsilon, ordered by height:
// delta2 - epsilon (1) < delta1 - epsilon (2) < delta2 + epsilon (3)
// < delta1 + epsilon (4).
inline const std::array<Root, 4>& isotropic_positive_roots() {
    static const std::array<Root, 4> roots = {{
        {{0, 2, -2}, 1, "delta2-epsilon"},
        {{2, 0, -2}, 2, "delta1-epsilon"},
        {{0, 2, 2}, 3, "delta2+epsilon"},
        {{2, 0, 2}, 4, "delta1+epsilon"},
    }};
    return roots;
}

// <w, alpha^vee> = 2 (w, alpha) / (alpha, alpha) as an exact half-integer.
// On the standard coroots this reads: <., (2delta1)^vee> = a,
// <., (2delta2)^vee> = b, <., (delta1 -/+ delta2)^vee> = a -/+ b,
// <., epsilon^vee> = 2c.
inline HalfInt coroot_pairing(const Weight& w, const Root& alpha) {
    const int aa = bilinear_q4(alpha.vec, alpha.vec);
    check(aa != 0, "coroot_pairing needs a non-isotropic root");
    const int num = 4 * bilinear_q4(w, alpha.vec);
    check(num % aa == 0, "coroot pairing left the half-integer lattice");
    return HalfInt{num / aa};
}

// Reflection s_alpha(w) = w - <w, alpha^vee> alpha for non-isotropic alpha.
inline Weight reflect(const Weight& w, const Root& alpha) {
    const HalfInt n = coroot_pairing(w, alpha);
    check((n.num2 * alpha.vec.da) % 2 == 0 && (n.num2 * alpha.vec.db) % 2 == 0 &&
              (n.num2 * alpha.vec.dc) % 2 == 0,
          "reflection left the weight lattice");
    return {w.da - (n.num2 * alpha.vec.da) / 2, w.db - (n.num2 * alpha.vec.db) / 2,
            w.dc - (n.num2 * alpha.vec.dc) / 2};
}

// A rho-shifted weight is atypical iff it is orthogonal to some isotropic
// root, i.e. iff |c| equals |a| or |b|.  osp(3|4) has defect one, so the
// atypicality degree is 0 or 1.
inline int atypicality_degree(const Weight& w) {
    check(is_valid_weight(w), "atypicality_degree expects an odd (shifted) weight");
    return (std::abs(w.dc) == std::abs(w.da) || std::abs(w.dc) == std::abs(w.db)) ? 1 : 0;
}

inline bool is_atypical(const Weight& w) { return atypicality_degree(w) == 1; }

// Antidominance for the dot-action orbit: a <= -|b| and c < 0.  (Not unique
// on singular orbits; canonical_antidominant below fixes a representative.)
inline bool is_antidominant(const Weight& w) {
    check(is_valid_weight(w), "is_antidominant expects an odd (shifted) weight");
    return w.da <= -std::abs(w.db) && w.dc < 0;
}

inline bool is_dominant(const Weight& w) {
    check(is_valid_weight(w), "is_dominant expects an odd (shifted) weight");
    return w.da >= std::abs(w.db) && w.dc > 0;
}

// Regular for the dot action iff the sp(4)-part has |a| != |b|; the so(3)
// and mixed stabilisers are always trivial on shifted weights (c != 0 and
// the form is definite on each factor), so this is the whole condition.
inline bool is_dot_regular(const Weight& w) {
    check(is_valid_weight(w), "is_dot_regular expects an odd (shifted) weight");
    return std::abs(w.da) != std::abs(w.db);
}

// Canonical antidominant representative (-p, -q | -z) of the W-orbit of w,
// with p = max(|a|, |b|), q = min(|a|, |b|), z = |c|.
inline Weight canonical_antidominant(const Weight& w) {
    check(is_valid_weight(w), "canonical_antidominant expects an odd (shifted) weight");
    const int p = std::max(std::abs(w.da), std::abs(w.db));
    const int q = std::min(std::abs(w.da), std::abs(w.db));
    const int z = std::abs(w.dc);
    return {-p, -q, -z};
}

// Coordinate dominance order: mu <= lam iff lam - mu is a non-negative sum of
// positive roots, which for this root system is equivalent to the partial
// sums of lam - mu in the basis (delta1, delta2, epsilon) being >= 0:
//     d_a >= 0,  d_a + d_b >= 0,  d_a + d_b + d_c >= 0.
// Within one block this is the Bruhat order on Verma highest weights; the
// block check itself lives with the linkage utilities.
inline bool dominance_leq(const Weight& mu, const Weight& lam) {
    const int d1 = lam.da - mu.da;
    const int d2 = lam.db - mu.db;
    const int d3 = lam.dc - mu.dc;
    return d1 >= 0 && d1 + d2 >= 0 && d1 + d2 + d3 >= 0;
}

inline bool dominance_lt(const Weight& mu, const Weight& lam) {
    return !(mu == lam) && dominance_leq(mu, lam);
}

}  // namespace ospflag
