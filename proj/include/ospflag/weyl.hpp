#pragma once

// Integral Weyl group machinery for osp(3|4).
//
// The even Weyl group is W = W(sp4) x W(so3) = D8 x <t>, of order 16.  The
// dihedral factor D8 = <r, s> acts on the (a, b)-plane with r the swap
// (reflection in delta1 - delta2) and s the sign flip of b (reflection in
// 2delta2); t is central and negates c (reflection in epsilon).  Products are
// function composition, so the element "rs" acts by s first, then r.
//
// Because every rho-shifted weight in an integral block has all three
// coordinates in Z + 1/2 (hence nonzero), the integral Weyl group of any
// weight here is all of W, and a stabiliser is either trivial or generated by
// one sp4-reflection.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospflag/weights.hpp"

namespace ospflag {

namespace detail {
// Dihedral action index: e, r, s, rs, sr, rsr, srs, rsrs.
// Entry {swap, s1, s2}: (x, y) -> (s1 * u, s2 * v) with (u, v) = (y, x) when
// swap is set and (x, y) otherwise.
struct DihedralAction {
    bool swap_xy;
    int s1, s2;
};
inline constexpr std::array<DihedralAction, 8> kDihedral = {{
    {false, +1, +1},  // e
    {true, +1, +1},   // r
    {false, +1, -1},  // s
    {true, -1, +1},   // rs : (x,y) -> (-y, x)
    {true, +1, -1},   // sr : (x,y) -> (y, -x)
    {false, -1, +1},  // rsr
    {true, -1, -1},   // srs
    {false, -1, -1},  // rsrs
}};
inline constexpr std::array<int, 8> kDihedralLength = {0, 1, 1, 2, 2, 3, 3, 4};
inline constexpr std::array<const char*, 8> kDihedralName = {"e",  "r",   "s",   "rs",
                                                             "sr", "rsr", "srs", "rsrs"};

inline std::pair<int, int> dihedral_apply(int d, int x, int y) {
    const DihedralAction& act = kDihedral[static_cast<std::size_t>(d)];
    const int u = act.swap_xy ? y : x;
    const int v = act.swap_xy ? x : y;
    return {act.s1 * u, act.s2 * v};
}
}  // namespace detail

// Element u0 * t^i of W = D8 x <t>, with u0 indexed as in detail::kDihedral.
struct WeylElement {
    int d = 0;
    bool t = false;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

inline WeylElement weyl_e() { return {0, false}; }
inline WeylElement weyl_r() { return {1, false}; }
inline WeylElement weyl_s() { return {2, false}; }
inline WeylElement weyl_t() { return {0, true}; }

inline Weight apply(const WeylElement& g, const Weight& w) {
    auto [x, y] = detail::dihedral_apply(g.d, w.da, w.db);
    return {x, y, g.t ? -w.dc : w.dc};
}

// Coxeter length: dihedral length plus one for the t factor.
inline int length(const WeylElement& g) {
    return detail::kDihedralLength[static_cast<std::size_t>(g.d)] + (g.t ? 1 : 0);
}

// g * h, acting as h first (function composition).  The dihedral factor is
// resolved by matching the composite action on a generic probe pair, which
// distinguishes all eight signed permutations.
inline WeylElement compose(const WeylElement& g, const WeylElement& h) {
    const auto inner = detail::dihedral_apply(h.d, 1, 2);
    const auto outer = detail::dihedral_apply(g.d, inner.first, inner.second);
    for (int d = 0; d < 8; ++d)
        if (detail::dihedral_apply(d, 1, 2) == outer) return {d, g.t != h.t};
    throw std::logic_error("ospflag: dihedral composition table is not closed");
}

inline WeylElement inverse(const WeylElement& g) {
    for (int d = 0; d < 8; ++d)
        if (compose(g, WeylElement{d, false}).d == 0) return {d, g.t};
    throw std::logic_error("ospflag: dihedral element without inverse");
}

// Reduced word in the generators r, s, t ("e" for the identity).
inline std::string word(const WeylElement& g) {
    std::string out = g.d == 0 ? "" : detail::kDihedralName[static_cast<std::size_t>(g.d)];
    if (g.t) out += "t";
    return out.empty() ? "e" : out;
}

// Bruhat order on W.  In a dihedral group u <= v iff u = v or l(u) < l(v);
// t is a central generator, so the product order is componentwise:
//     u0 t^i <= v0 t^j  iff  i <= j and (u0 = v0 or l(u0) < l(v0)).
inline bool bruhat_leq_group(const WeylElement& u, const WeylElement& v) {
    if (u.t && !v.t) return false;
    return u.d == v.d || detail::kDihedralLength[static_cast<std::size_t>(u.d)] <
                             detail::kDihedralLength[static_cast<std::size_t>(v.d)];
}

inline std::vector<WeylElement> all_weyl_elements() {
    std::vector<WeylElement> out;
    out.reserve(16);
    for (int i = 0; i < 2; ++i)
        for (int d = 0; d < 8; ++d) out.push_back({d, i == 1});
    return out;
}

// Stabiliser W_w = { g : g w = w }.  On shifted weights this is {e} or a
// two-element group generated by one sp4 reflection (when |a| = |b|).
inline std::vector<WeylElement> stabilizer(const Weight& w) {
    std::vector<WeylElement> out;
    for (const WeylElement& g : all_weyl_elements())
        if (apply(g, w) == w) out.push_back(g);
    return out;
}

// Minimal-length coset representatives W^{lambda0} for W / W_{lambda0},
// lambda0 antidominant.  Each orbit element gets the shortest g mapping
// lambda0 to it (unique; ties cannot occur between distinct minimal reps of
// one coset here, but the (length, d, t) key keeps the choice deterministic).
// Sorted by (length, d, t).
inline std::vector<WeylElement> min_coset_reps(const Weight& lambda0) {
    check(is_antidominant(lambda0), "min_coset_reps expects an antidominant base point");
    std::vector<WeylElement> reps;
    for (const WeylElement& g : all_weyl_elements()) {
        const Weight img = apply(g, lambda0);
        bool minimal = true;
        for (const WeylElement& h : all_weyl_elements()) {
            if (apply(h, lambda0) == img) {
                const auto key = [&](const WeylElement& x) {
                    return std::array<int, 3>{length(x), x.d, x.t ? 1 : 0};
                };
                if (key(h) < key(g)) minimal = false;
            }
        }
        if (minimal) reps.push_back(g);
    }
    std::sort(reps.begin(), reps.end(), [](const WeylElement& x, const WeylElement& y) {
        return std::array<int, 3>{length(x), x.d, x.t ? 1 : 0} <
               std::array<int, 3>{length(y), y.d, y.t ? 1 : 0};
    });
    return reps;
}

// The unique minimal coset representative sending lambda0 to nu.
inline WeylElement find_coset_rep(const Weight& lambda0, const Weight& nu) {
    for (const WeylElement& g : min_coset_reps(lambda0))
        if (apply(g, lambda0) == nu) return g;
    throw std::invalid_argument("ospflag: weight is not in the orbit of the base point");
}

}  // namespace ospflag
