#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ospflag/filprop.hpp"
#include "ospflag/table.hpp"

namespace ospflag {

/// Thrown when the translation-functor resolution cannot decide between
/// several consistent decompositions (no probe configured, no probe survivor,
/// or the search space exceeds its safety budget).
class DeriveInconclusive : public std::runtime_error {
public:
    explicit DeriveInconclusive(const std::string& what) : std::runtime_error(what) {}
};

/// Verma flag of the projective cover P(lam): closed form for atypical
/// weights, Weyl-orbit upset for typical ones.
inline VermaFlag projective_flag(const Weight& lam) {
    return is_atypical(lam) ? table_flag(lam) : typical_projective(lam);
}

inline const FiniteRep& natural_rep() {
    static const FiniteRep r = rep_natural();
    return r;
}
inline const FiniteRep& sym2_rep() {
    static const FiniteRep r = rep_sym2();
    return r;
}
inline const FiniteRep& adjoint_rep() {
    static const FiniteRep r = rep_adjoint();
    return r;
}

/// One component of a projective decomposition: `count` copies of P(weight)
/// (or, in join lists, `count` bare Verma terms M(weight)).
struct PeelComponent {
    Weight weight;
    int count = 0;

    bool operator==(const PeelComponent&) const = default;
};

/// Greedily decompose `f` as a nonnegative sum of flags supplied by `flag_of`.
/// Every dominance-minimal weight of the remainder must head its own
/// component, so each round subtracts `mult * flag_of(min)` for all current
/// minima (incomparable minima commute).  Throws NegativeMultiplicity when
/// `f` is not such a sum.
inline std::vector<PeelComponent>
peel_with(VermaFlag f, const std::function<VermaFlag(const Weight&)>& flag_of) {
    std::vector<PeelComponent> out;
    while (!f.empty()) {
        for (const Weight& nu : minimal_weights(f)) {
            const int count = f.mult(nu);
            f.subtract_flag(flag_of(nu), count);
            out.push_back({nu, count});
        }
    }
    return out;
}

/// Decompose `f` into copies of projective-cover flags.
inline std::vector<PeelComponent> peel(const VermaFlag& f) {
    return peel_with(f, [](const Weight& nu) { return projective_flag(nu); });
}

/// How an ambiguous resolution is arbitrated.
///
///  - tensor_check: tensor each candidate flag with `rep`, project onto
///    `block`, and demand a clean projective peel; exactly one candidate
///    may survive.
///  - overcount:    tensor the known flag of P(`pivot`) with `rep`, project
///    onto `block`, and peel while substituting the candidate for the flag
///    of the target; exactly one candidate may complete the peel.
///  - anchor:       derive P(`anchor`) first (its own record must contain a
///    decided ambiguity) and adopt the same choice by position.
enum class ProbeKind { tensor_check, overcount, anchor };

struct ProbeSpec {
    ProbeKind kind = ProbeKind::tensor_check;
    const FiniteRep* rep = nullptr;
    BlockLabel block = atypical_block(1);
    Weight pivot{1, 1, 1};   // overcount only
    Weight anchor{1, 1, 1};  // anchor only

    std::string describe() const {
        const auto code = [](const Weight& w) {
            return "(" + std::to_string(w.da) + "," + std::to_string(w.db) + "," +
                   std::to_string(w.dc) + ")/2";
        };
        const auto blk = [&] { return "At(" + std::to_string(block.dt) + "/2)"; };
        switch (kind) {
            case ProbeKind::tensor_check:
                return std::string("tensor ") + rep->name + " -> " + blk();
            case ProbeKind::overcount:
                return std::string("overcount ") + rep->name + " pivot " + code(pivot) +
                       " -> " + blk();
            case ProbeKind::anchor:
                return "anchor " + code(anchor);
        }
        return "?";
    }
};

/// Translation-functor recipe for one atypical weight: tensor the projective
/// cover of `pivot` with `rep` and project back onto the block of the target.
struct Recipe {
    Weight pivot{1, 1, 1};
    const FiniteRep* rep = &natural_rep();
    std::optional<ProbeSpec> probe;
};

/// Pivot/representation choice per closed-form case.  Pivots are typical
/// wherever a typical neighbour exists; boundary cases recurse through the
/// previously derived atypical neighbour instead.
inline Recipe derive_recipe(const Weight& lam) {
    const TableCase tc = table_case(lam);
    const int A = lam.da, B = lam.db, C = lam.dc;
    Recipe r;
    const auto raise_a = [&] { r.pivot = Weight{A + 2, B, C}; };
    const auto raise_b = [&] { r.pivot = Weight{A, B + 2, C}; };

    switch (tc) {
        // --- pivots one delta_1-step above the target -------------------
        case TableCase::t31_11:
        case TableCase::t31_12:
        case TableCase::t31_13b:
        case TableCase::t31_14b:
        case TableCase::t31_21a:
        case TableCase::t31_21b:
        case TableCase::t31_22a:
        case TableCase::t31_22b:
        case TableCase::t32_11:
        case TableCase::t32_12:
        case TableCase::t32_21:
        case TableCase::t32_22:
        case TableCase::t32_31a:
        case TableCase::t32_32a:
        case TableCase::t32_32b:
        case TableCase::t33_11:
        case TableCase::t33_12:
        case TableCase::t33_21a:
        case TableCase::t33_21b:
        case TableCase::t33_21c:
        case TableCase::t33_22a:
        case TableCase::t33_31a:
        case TableCase::t33_31b:
        case TableCase::t33_32a:
        case TableCase::t33_32b:
        case TableCase::t34_11:
        case TableCase::t34_12:
        case TableCase::t34_21a:
        case TableCase::t34_22a:
        case TableCase::t34_23b:
        case TableCase::t34_23c:
        case TableCase::t34_24b:
        case TableCase::t34_14b:
            raise_a();
            break;

        case TableCase::t32_31b:  // (1/2,-1/2|1/2): S-versus-S+T juncture
            raise_a();
            r.probe = ProbeSpec{ProbeKind::tensor_check, &adjoint_rep(), atypical_block(5)};
            break;

        case TableCase::t34_21b:  // (-1/2,b|1/2): juncture for b <= -5/2 only
            raise_a();
            if (B <= -5)
                r.probe =
                    ProbeSpec{ProbeKind::tensor_check, &natural_rep(), atypical_block(-B - 2)};
            break;

        // --- pivots one delta_2-step above the target -------------------
        case TableCase::t31_13a:
        case TableCase::t31_14a:
        case TableCase::t31_23:
        case TableCase::t31_24:
        case TableCase::t32_13a:
        case TableCase::t32_13b:
        case TableCase::t32_13c:
        case TableCase::t32_14a:
        case TableCase::t32_23:
        case TableCase::t32_24:
        case TableCase::t33_13:
        case TableCase::t33_14:
        case TableCase::t33_23:
        case TableCase::t33_24:
        case TableCase::t34_13a:
        case TableCase::t34_14a:
        case TableCase::t34_23a:
        case TableCase::t34_24a:
            raise_b();
            break;

        case TableCase::t34_13b:  // (a,-1/2|1/2), a <= -3/2
            raise_b();
            r.probe = ProbeSpec{ProbeKind::tensor_check, &natural_rep(), atypical_block(-A - 2)};
            break;

        case TableCase::t34_31b:  // (-1/2,-1/2|1/2)
            raise_b();
            r.probe = ProbeSpec{ProbeKind::tensor_check, &natural_rep(), atypical_block(3)};
            break;

        // --- epsilon-step pivots ----------------------------------------
        case TableCase::t31_31:
            r.pivot = Weight{A, B, C + 2};
            break;
        case TableCase::t31_32:
            r.pivot = Weight{A, B, C - 2};
            break;
        case TableCase::t32_14b:   // (a,-1/2|-1/2) -> (a,-1/2|1/2), two routes back
        case TableCase::t33_22b:   // (-1/2,b|-1/2) -> (-1/2,b|1/2), two routes back
        case TableCase::t34_32b:   // (-1/2,-1/2|-1/2), three routes back
        case TableCase::t34_24c:   // (-1/2,-3/2|-3/2): the step off the c=-1/2
                                   // wall lands on this cover alone, so every
                                   // leftover term joins with no branching
            r.pivot = Weight{A, B, C + 2};
            break;
        case TableCase::t34_22b: {  // (-1/2,b|-1/2) -> (-1/2,b|1/2), two routes back
            r.pivot = Weight{A, B, C + 2};
            if (B == -5) {
                ProbeSpec p;
                p.kind = ProbeKind::overcount;
                p.rep = &sym2_rep();
                p.block = atypical_block(5);
                p.pivot = Weight{-3, -5, -3};
                r.probe = p;
            } else {
                ProbeSpec p;
                p.kind = ProbeKind::anchor;
                // b = -3/2 anchors on the probed b = -5/2 case; deeper cases
                // chain one step towards it.
                p.anchor = (B == -3) ? Weight{-1, -5, -1} : Weight{-1, B + 2, -1};
                r.probe = p;
            }
            break;
        }

        // --- delta_1+delta_2 pivots under the symmetric square ----------
        case TableCase::t34_31a:
        case TableCase::t34_32a:
            r.pivot = Weight{A + 2, B + 2, C};
            r.rep = &sym2_rep();
            break;
    }
    return r;
}

/// Several full resolutions survived the peel-or-join search; `chosen` is the
/// index (in search order: maximal standalone peeling first) adopted after
/// arbitration.
struct DeriveAmbiguity {
    std::vector<VermaFlag> candidates;
    std::string probe;
    int chosen = -1;
};

/// Complete audit record of one translation-functor derivation.
struct DeriveRecord {
    Weight target{1, 1, 1};
    TableCase tcase = TableCase::t31_11;
    Weight pivot{1, 1, 1};
    const FiniteRep* rep = nullptr;
    /// Multiplicity of P(target) inside the projected tensor product.
    int copies = 1;
    /// The projected tensor product T itself.
    VermaFlag projected;
    /// Standalone projective summands peeled off T.
    std::vector<PeelComponent> standalone;
    /// Verma terms joined into the flag of P(target) beyond its mandatory floor.
    std::vector<PeelComponent> joined;
    std::optional<DeriveAmbiguity> ambiguity;
    /// The derived Verma flag of P(target).
    VermaFlag result;
};

/// Derives Verma flags of projective covers from scratch by translation
/// functors, using only typical projectives, previously derived neighbours,
/// and the mandatory-floor lower bound.  Results are memoized.
class DeriveEngine {
public:
    DeriveEngine() = default;

    /// Engine whose flag lookups are pre-empted by `overrides`: used to
    /// evaluate a probe under the hypothesis that an ambiguous cover has a
    /// particular flag, which also breaks the mutual recursion between the
    /// boundary probes of neighbouring blocks.
    explicit DeriveEngine(std::map<Weight, VermaFlag, WeightOrder> overrides)
        : overrides_(std::move(overrides)) {}

    const DeriveRecord& derive(const Weight& lam) {
        check(is_valid_weight(lam), "derive expects an odd (shifted) weight");
        if (!is_atypical(lam))
            throw std::invalid_argument("ospflag: derive is defined for atypical weights only");
        auto it = memo_.find(lam);
        if (it != memo_.end()) return it->second;
        if (!in_progress_.insert(lam).second)
            throw DeriveInconclusive("derivation cycle at " + code(lam));
        DeriveRecord rec = resolve(lam);
        in_progress_.erase(lam);
        return memo_.emplace(lam, std::move(rec)).first->second;
    }

    const VermaFlag& flag(const Weight& lam) { return derive(lam).result; }

    std::size_t derivations() const { return memo_.size(); }

private:
    static std::string code(const Weight& w) {
        return "(" + std::to_string(w.da) + "," + std::to_string(w.db) + "," +
               std::to_string(w.dc) + ")/2";
    }

    /// Search state: what remains of T, the flag accumulated per copy of
    /// P(target), and the bookkeeping lists.
    struct State {
        VermaFlag remainder;
        VermaFlag x;
        std::vector<PeelComponent> standalone;
        std::vector<PeelComponent> joined;
    };

    VermaFlag flag_of(const Weight& nu) {
        const auto it = overrides_.find(nu);
        if (it != overrides_.end()) return it->second;
        return is_atypical(nu) ? derive(nu).result : typical_projective(nu);
    }

    /// Depth-first resolution of the remainder.  At each step the first
    /// dominance-minimal leftover nu with count c admits hypotheses
    /// k + copies*j = c (k standalone covers P(nu), j joins of M(nu) into
    /// every copy of P(target)); standalone-heavy hypotheses are tried first.
    void explore(State state, int copies, std::vector<State>& completions, int& forks) {
        for (;;) {
            if (state.remainder.empty()) {
                completions.push_back(std::move(state));
                return;
            }
            const auto mins = minimal_weights(state.remainder);
            const Weight nu = mins.front();
            const int c = state.remainder.mult(nu);
            const VermaFlag f = flag_of(nu);

            std::vector<std::pair<int, int>> hyps;  // (k, j), k descending
            for (int k = c; k >= 0; --k) {
                if ((c - k) % copies != 0) continue;
                if (k > 0 && !flag_leq(f.scaled(k), state.remainder)) continue;
                hyps.emplace_back(k, (c - k) / copies);
            }
            if (hyps.empty()) return;  // dead branch

            const auto apply = [&](State& s, int k, int j) {
                if (k > 0) {
                    s.remainder.subtract_flag(f, k);
                    s.standalone.push_back({nu, k});
                }
                if (j > 0) {
                    s.x.add(nu, j);
                    s.remainder.subtract_flag(VermaFlag::single(nu, 1), copies * j);
                    s.joined.push_back({nu, j});
                }
            };

            if (hyps.size() == 1) {
                apply(state, hyps[0].first, hyps[0].second);
                continue;
            }
            if (++forks > 6)
                throw DeriveInconclusive("resolution fork budget exceeded");
            for (const auto& [k, j] : hyps) {
                State branch = state;
                apply(branch, k, j);
                explore(std::move(branch), copies, completions, forks);
                if (completions.size() > 12)
                    throw DeriveInconclusive("too many surviving resolutions");
            }
            return;
        }
    }

    /// Evaluate one probe under the hypothesis flag(lam) = cand.  The
    /// hypothesis is installed as an override in a scratch engine, so any
    /// derivation the probe touches -- including a neighbouring block's
    /// probe that needs flag(lam) back -- sees the candidate instead of
    /// recursing into the in-progress derivation.
    bool hypothesis_survives(const Weight& lam, const VermaFlag& cand, const ProbeSpec& p) {
        auto overrides = overrides_;
        overrides.insert_or_assign(lam, cand);
        DeriveEngine scratch(std::move(overrides));
        try {
            VermaFlag probe_t =
                p.kind == ProbeKind::tensor_check
                    ? project_flag(tensor_flag(cand, *p.rep), p.block)
                    : project_flag(tensor_flag(scratch.flag_of(p.pivot), *p.rep), p.block);
            peel_with(std::move(probe_t),
                      [&](const Weight& nu) { return scratch.flag_of(nu); });
            return true;
        } catch (const std::exception&) {
            // A failed peel, a nested inconclusive derivation, or a violated
            // engine invariant under the hypothesis all falsify it.
            return false;
        }
    }

    int arbitrate(const Weight& lam, const std::vector<State>& completions,
                  const std::optional<ProbeSpec>& probe) {
        if (!probe)
            throw DeriveInconclusive("ambiguous resolution without probe at " + code(lam));
        const ProbeSpec& p = *probe;
        if (p.kind == ProbeKind::anchor) {
            const DeriveRecord& arec = derive(p.anchor);
            if (!arec.ambiguity || arec.ambiguity->chosen < 0)
                throw DeriveInconclusive("anchor " + code(p.anchor) + " resolved without ambiguity");
            const bool first = arec.ambiguity->chosen == 0;
            return first ? 0 : static_cast<int>(completions.size()) - 1;
        }
        std::vector<int> survivors;
        for (std::size_t i = 0; i < completions.size(); ++i)
            if (hypothesis_survives(lam, completions[i].x, p))
                survivors.push_back(static_cast<int>(i));
        if (survivors.size() != 1)
            throw DeriveInconclusive("probe kept " + std::to_string(survivors.size()) +
                                     " of " + std::to_string(completions.size()) +
                                     " candidates at " + code(lam));
        return survivors.front();
    }

    DeriveRecord resolve(const Weight& lam) {
        DeriveRecord rec;
        rec.target = lam;
        rec.tcase = table_case(lam);
        const Recipe recipe = derive_recipe(lam);
        rec.pivot = recipe.pivot;
        rec.rep = recipe.rep;

        const VermaFlag pivot_flag = flag_of(recipe.pivot);
        rec.projected = project_flag(tensor_flag(pivot_flag, *recipe.rep), block_label(lam));
        const VermaFlag& t = rec.projected;

        for (const auto& [w, m] : t.terms())
            check(!dominance_lt(w, lam), "projected tensor product dips below the target");
        rec.copies = t.mult(lam);
        check(rec.copies >= 1 && rec.copies <= 3,
              "unexpected multiplicity of the target in the projection");

        State init;
        init.x = mandatory_terms(lam);
        init.remainder = t;
        init.remainder.subtract_flag(init.x, rec.copies);

        std::vector<State> completions;
        int forks = 0;
        explore(std::move(init), rec.copies, completions, forks);

        // Distinct surviving flags, in search order (max standalone first).
        std::vector<State> distinct;
        for (auto& s : completions) {
            const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                          [&](const State& d) { return d.x == s.x; });
            if (!seen) distinct.push_back(std::move(s));
        }
        if (distinct.empty())
            throw DeriveInconclusive("no consistent resolution at " + code(lam));

        int chosen = 0;
        if (distinct.size() > 1) {
            chosen = arbitrate(lam, distinct, recipe.probe);
            DeriveAmbiguity amb;
            for (const auto& s : distinct) amb.candidates.push_back(s.x);
            amb.probe = recipe.probe ? recipe.probe->describe() : "";
            amb.chosen = chosen;
            rec.ambiguity = std::move(amb);
        }

        State& adopted = distinct[static_cast<std::size_t>(chosen)];
        rec.standalone = std::move(adopted.standalone);
        rec.joined = std::move(adopted.joined);
        rec.result = std::move(adopted.x);

        check(rec.result.mult(lam) == 1, "derived flag must contain its own Verma once");
        VermaFlag recon = rec.result.scaled(rec.copies);
        for (const auto& [nu, k] : rec.standalone) recon.add_flag(flag_of(nu), k);
        check(recon == t, "derivation bookkeeping failed to reconstruct the projection");
        return rec;
    }

    std::map<Weight, DeriveRecord, WeightOrder> memo_;
    std::set<Weight, WeightOrder> in_progress_;
    std::map<Weight, VermaFlag, WeightOrder> overrides_;
};

/// Convenience wrapper: derive one flag with a fresh engine.
inline VermaFlag derive_flag(const Weight& lam) {
    DeriveEngine engine;
    return engine.flag(lam);
}

struct VerifyReport {
    int checked = 0;
    std::vector<Weight> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Re-derive every atypical weight with |coordinates| <= bound (doubled, so
/// bound = 11 covers |a|,|b| <= 11/2) and compare against the closed forms.
inline VerifyReport verify_range(int doubled_bound) {
    DeriveEngine engine;
    VerifyReport report;
    for (int da = -doubled_bound; da <= doubled_bound; da += 2)
        for (int db = -doubled_bound; db <= doubled_bound; db += 2) {
            const std::set<int> cs{std::abs(da), -std::abs(da), std::abs(db), -std::abs(db)};
            for (int dc : cs) {
                const Weight lam{da, db, dc};
                ++report.checked;
                if (engine.flag(lam) == table_flag(lam)) continue;
                report.mismatches.push_back(lam);
            }
        }
    return report;
}

}  // namespace ospflag
