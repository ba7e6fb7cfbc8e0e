#pragma once

// Linkage classes (blocks) of integral rho-shifted weights.
//
// Two Verma highest weights interact only within a block.  For osp(3|4) the
// integral blocks are:
//   * typical blocks: a single W-orbit, labelled by the sorted absolute
//     coordinate triple (p, q | z), p >= q > 0, z > 0, z not in {p, q};
//   * atypical blocks At(t): all weights orthogonal to an isotropic root
//     whose free parameter is t, i.e. |b| = |c| with t = |a| or |a| = |c|
//     with t = |b|.  These are infinite and are where the interesting
//     multiplicities live.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "ospflag/weights.hpp"
#include "ospflag/weyl.hpp"

namespace ospflag {

struct BlockLabel {
    enum class Kind { atypical, typical };
    Kind kind = Kind::typical;
    // Atypical: doubled block parameter t (odd, positive).
    int dt = 0;
    // Typical: canonical orbit representative (p, q | z) with p >= q.
    Weight canonical{};

    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

inline BlockLabel atypical_block(int dt) {
    check(dt > 0 && dt % 2 != 0, "atypical block parameter must be positive and odd");
    return {BlockLabel::Kind::atypical, dt, Weight{}};
}

inline BlockLabel block_label(const Weight& w) {
    check(is_valid_weight(w), "block_label expects an odd (shifted) weight");
    const int pa = std::abs(w.da), pb = std::abs(w.db), pc = std::abs(w.dc);
    if (pb == pc) return atypical_block(pa);
    if (pa == pc) return atypical_block(pb);
    BlockLabel out;
    out.kind = BlockLabel::Kind::typical;
    out.canonical = Weight{std::max(pa, pb), std::min(pa, pb), pc};
    return out;
}

inline bool linked(const Weight& u, const Weight& v) { return block_label(u) == block_label(v); }

// Bruhat order on Verma highest weights: linkage plus the dominance order.
// (Within a fixed block the dominance comparison alone decides; the linkage
// test makes the predicate meaningful across arbitrary pairs.)
inline bool bruhat_leq_weights(const Weight& mu, const Weight& lam) {
    return linked(mu, lam) && dominance_leq(mu, lam);
}

// All block members with every doubled coordinate bounded by dbound,
// sorted in the deterministic weight order.
inline std::vector<Weight> enumerate_block(const BlockLabel& label, int dbound) {
    check(dbound > 0, "enumerate_block needs a positive bound");
    std::vector<Weight> out;
    for (int da = -dbound; da <= dbound; da += 2)
        for (int db = -dbound; db <= dbound; db += 2)
            for (int dc = -dbound; dc <= dbound; dc += 2) {
                const Weight w{da, db, dc};
                if (!is_valid_weight(w)) continue;
                if (block_label(w) == label) out.push_back(w);
            }
    std::sort(out.begin(), out.end(), WeightOrder{});
    return out;
}

// First-principles linkage oracle: the closure of `start` inside the box
// |coordinate| <= dbound under (i) the W-action and (ii) translations
// w -> w + k beta along any isotropic root beta orthogonal to w.  Used by
// tests to certify block_label against the definition of linkage; callers
// should close in a padded box and compare on an inner box, since shifts
// may need to leave a tight box and come back.
inline std::vector<Weight> bfs_linkage_oracle(const Weight& start, int dbound) {
    check(is_valid_weight(start), "bfs_linkage_oracle expects an odd (shifted) weight");
    const auto in_box = [&](const Weight& w) {
        return std::abs(w.da) <= dbound && std::abs(w.db) <= dbound && std::abs(w.dc) <= dbound;
    };
    check(in_box(start), "bfs_linkage_oracle: start lies outside the box");
    std::vector<Weight> order{start};
    std::vector<Weight> work{start};
    auto push = [&](const Weight& w) {
        if (!in_box(w)) return;
        if (std::find(order.begin(), order.end(), w) != order.end()) return;
        order.push_back(w);
        work.push_back(w);
    };
    while (!work.empty()) {
        const Weight w = work.back();
        work.pop_back();
        for (const WeylElement& g : all_weyl_elements()) push(apply(g, w));
        for (const Root& beta : isotropic_positive_roots()) {
            if (bilinear_q4(w, beta.vec) != 0) continue;
            for (int k = 1;; ++k) {
                const Weight up = w + beta.vec * k;
                const Weight down = w - beta.vec * k;
                const bool any = in_box(up) || in_box(down);
                push(up);
                push(down);
                if (!any) break;
            }
        }
    }
    std::sort(order.begin(), order.end(), WeightOrder{});
    return order;
}

}  // namespace ospflag
