// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.  Each criterion is checked exactly as stated, against
// values computed from first principles; notes document the one place where
// the stated count disagrees with the derived object.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ospflag/engine.hpp"
#include "ospflag/golden.hpp"
#include "ospflag/io.hpp"

namespace {

using namespace ospflag;

struct Gate {
    int failures = 0;

    void line(int idx, const std::string& title, bool ok, const std::string& note = "") {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << idx << ". " << title;
        if (!note.empty()) std::cout << "  [" << note << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

std::vector<Weight> atypical_box(int bound) {
    std::set<Weight, WeightOrder> seen;
    for (int da = -bound; da <= bound; da += 2)
        for (int db = -bound; db <= bound; db += 2)
            for (int dc : {da, -da, db, -db}) {
                const Weight w{da, db, dc};
                if (is_atypical(w)) seen.insert(w);
            }
    return {seen.begin(), seen.end()};
}

// Shared cache: jh_multiplicities is pure but not memoized.
const JHDecomposition& jh_cached(const Weight& mu) {
    static std::map<Weight, JHDecomposition, WeightOrder> memo;
    const auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
    return memo.emplace(mu, jh_multiplicities(mu)).first->second;
}

std::string wtext(const Weight& w) { return weight_text(w); }

}  // namespace

int main() {
    Gate gate;
    const std::vector<Weight> box11 = atypical_box(11);

    // ------------------------------------------------------------------ 1
    {
        const auto t0 = std::chrono::steady_clock::now();
        const VerifyReport r = verify_range(11);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string note = std::to_string(r.checked) + " weights re-derived in " +
                           std::to_string(secs).substr(0, 4) + "s";
        if (!r.ok()) note += "; first mismatch " + wtext(r.mismatches.front());
        gate.line(1, "translation-functor derivation reproduces every closed-form flag",
                  r.ok() && r.checked == 528 && secs < 60.0, note);
    }

    // ------------------------------------------------------------------ 2
    {
        const VermaFlag nine = table_flag(Weight{1, -1, 1});
        const VermaFlag corner = table_flag(Weight{-1, -1, -1});
        const bool ok = nine.length() == 9 && nine.mult(Weight{3, 1, 3}) == 2 &&
                        nine.mult(Weight{5, 1, 5}) == 1 &&
                        table_flag(Weight{3, -1, 1}).length() == 5 &&
                        corner == sigma_sum(Weight{-1, -1, -1}) && corner.length() == 8 &&
                        table_flag(Weight{5, 3, -3}).length() == 6;
        gate.line(2, "spot values of the flag tables", ok,
                  "singular corner expands to 8 terms, not the quoted 4: "
                  "its Sigma sum runs over the whole 8-element orbit");
    }

    // ------------------------------------------------------------------ 3
    {
        bool ok = true;
        std::string note;
        for (const GoldenIdentity& g : golden_identities()) {
            VermaFlag lhs;
            for (const PeelComponent& c : g.source) lhs.add_flag(projective_flag(c.weight), c.count);
            lhs = project_flag(tensor_flag(lhs, *g.rep), g.block);
            VermaFlag rhs;
            for (const PeelComponent& c : g.target) rhs.add_flag(projective_flag(c.weight), c.count);
            std::map<Weight, int, WeightOrder> peeled;
            try {
                for (const PeelComponent& c : peel(lhs)) peeled[c.weight] += c.count;
            } catch (const std::exception&) {
                peeled.clear();
            }
            std::map<Weight, int, WeightOrder> want;
            for (const PeelComponent& c : g.target) want[c.weight] += c.count;
            if (lhs != rhs || peeled != want) {
                ok = false;
                note = "identity '" + g.name + "' broke";
                break;
            }
        }
        if (ok) note = std::to_string(golden_identities().size()) + " projection identities";
        gate.line(3, "every quoted projection decomposition peels as stated", ok, note);
    }

    // ------------------------------------------------------------------ 4
    {
        bool ok = true;
        std::string note = "exhaustive on the 11/2 box, both directions";
        for (const Weight& mu : box11) {
            const JHDecomposition& d = jh_cached(mu);
            for (const Weight& nu : enumerate_block(block_label(mu), 11))
                if (d.mult(nu) != table_flag(nu).mult(mu)) {
                    ok = false;
                    note = "transpose mismatch at mu=" + wtext(mu) + ", nu=" + wtext(nu);
                    break;
                }
            if (!ok) break;
        }
        if (ok)
            for (const Weight& lam : box11) {
                const VermaFlag flag = table_flag(lam);
                for (const auto& [mu, m] : flag.terms())
                    if (jh_cached(mu).mult(lam) != m) {
                        ok = false;
                        note = "flag entry not mirrored at lam=" + wtext(lam) +
                               ", mu=" + wtext(mu);
                        break;
                    }
                if (!ok) break;
            }
        gate.line(4, "BGG reciprocity: composition factors transpose the flag tables", ok, note);
    }

    // ------------------------------------------------------------------ 5
    {
        bool ok = true;
        std::string note = "all " + std::to_string(box11.size()) +
                           " atypical weights, exceptional families included";
        for (const Weight& mu : box11)
            if (thm41_formula(mu) != jh_cached(mu).factors) {
                ok = false;
                note = "formula disagrees at " + wtext(mu);
                break;
            }
        gate.line(5, "closed composition formulae match the reciprocity transpose", ok, note);
    }

    // ------------------------------------------------------------------ 6
    {
        bool ok = true;
        std::string note = "forced terms sit inside every flag; length always >= 2";
        for (const Weight& lam : box11) {
            const VermaFlag forced = mandatory_terms(lam);
            const VermaFlag flag = table_flag(lam);
            if (forced.length() < 2) {
                ok = false;
                note = "floor shorter than 2 at " + wtext(lam);
                break;
            }
            for (const auto& [w, m] : forced.terms())
                if (flag.mult(w) < 1) {
                    ok = false;
                    note = "forced term " + wtext(w) + " missing from flag of " + wtext(lam);
                    break;
                }
            if (!ok) break;
        }
        gate.line(6, "mandatory filtration terms are sound lower bounds", ok, note);
    }

    // ------------------------------------------------------------------ 7
    {
        bool ok = true;
        int classes = 0, covered = 0, total = 0;
        std::string note;
        std::set<Weight, WeightOrder> assigned;
        for (int da = -9; da <= 9 && ok; da += 2)
            for (int db = -9; db <= 9 && ok; db += 2)
                for (int dc = -9; dc <= 9 && ok; dc += 2) {
                    const Weight w{da, db, dc};
                    ++total;
                    if (assigned.count(w)) continue;
                    // close w's class in a padded box, compare on the inner box
                    const BlockLabel label = block_label(w);
                    const std::vector<Weight> members = enumerate_block(label, 9);
                    std::set<Weight, WeightOrder> closure;
                    for (const Weight& v : bfs_linkage_oracle(w, 13))
                        if (std::abs(v.da) <= 9 && std::abs(v.db) <= 9 && std::abs(v.dc) <= 9)
                            closure.insert(v);
                    const std::set<Weight, WeightOrder> want(members.begin(), members.end());
                    if (closure != want) {
                        ok = false;
                        note = "class of " + wtext(w) + " disagrees with its label";
                        break;
                    }
                    ++classes;
                    covered += static_cast<int>(members.size());
                    assigned.insert(members.begin(), members.end());
                }
        if (ok && covered != total) {
            ok = false;
            note = "labels cover " + std::to_string(covered) + " of " + std::to_string(total);
        }
        if (ok)
            note = std::to_string(classes) + " classes partition all " + std::to_string(total) +
                   " box weights";
        gate.line(7, "block labels equal the first-principles linkage closure", ok, note);
    }

    // ------------------------------------------------------------------ 8
    {
        bool ok = true;
        std::string note = "tensor lengths, typical projectives, Sigma expansion, Weyl presentation";

        const VermaFlag nine = table_flag(Weight{1, -1, 1});
        ok &= tensor_flag(nine, rep_natural()).length() == 9 * 7;
        ok &= tensor_flag(nine, rep_sym2()).length() == 9 * 24;
        ok &= tensor_flag(nine, rep_adjoint()).length() == 9 * 25;

        ok &= typical_projective(Weight{-7, -3, -5}).length() == 16;
        ok &= typical_projective(Weight{7, 3, 5}).length() == 1;

        ok &= weighted_sum_text(sigma_sum(Weight{1, -3, 1}).terms(), "M") ==
              "M(1/2,-3/2|1/2) + M(3/2,-1/2|1/2) + M(1/2,3/2|1/2) + M(3/2,1/2|1/2)";

        // presentation: r^2 = s^2 = t^2 = e, (rs)^4 = e, t central
        const WeylElement e{};
        const WeylElement r{1, false}, s{2, false}, t{0, true};
        ok &= compose(r, r) == e && compose(s, s) == e && compose(t, t) == e;
        WeylElement rs = compose(r, s), p = e;
        for (int i = 0; i < 4; ++i) p = compose(rs, p);
        ok &= p == e;
        ok &= compose(r, t) == compose(t, r) && compose(s, t) == compose(t, s);
        ok &= all_weyl_elements().size() == 16;
        ok &= min_coset_reps(Weight{-1, -1, -1}).size() == 8;

        gate.line(8, "structural invariants of the ambient machinery", ok, note);
    }

    std::cout << (gate.failures == 0 ? "ALL CRITERIA PASS"
                                     : std::to_string(gate.failures) + " CRITERIA FAILED")
              << "\n";
    return gate.failures == 0 ? 0 : 1;
}
