#pragma once

// Filtration floor of an atypical projective cover: Verma terms P_lambda is
// guaranteed to contain, independently of any closed form.
//
// Seeds: M_lambda itself; M_{lambda + beta} for every positive isotropic
// beta orthogonal to lambda; and M_{lambda + beta + gamma} for isotropic
// beta, gamma of increasing height with (lambda, beta) = 0 and
// (lambda + beta, gamma) = 0.  The seed set is then closed under the even
// reflections s_alpha nu whenever <nu, alpha^vee> < 0, each such step moving
// strictly up in the dominance order.  Every weight collected this way
// indexes a Verma that must occur in the flag (with multiplicity >= 1).

#include <set>
#include <vector>

#include "ospflag/flags.hpp"
#include "ospflag/weights.hpp"

namespace ospflag {

inline VermaFlag mandatory_terms(const Weight& lam) {
    check(is_atypical(lam), "mandatory_terms expects an atypical weight");
    std::set<Weight, WeightOrder> seen;
    std::vector<Weight> work;
    const auto push = [&](const Weight& w) {
        if (seen.insert(w).second) work.push_back(w);
    };

    push(lam);
    const auto& iso = isotropic_positive_roots();
    for (const Root& beta : iso) {
        if (bilinear_q4(lam, beta.vec) != 0) continue;
        const Weight up = lam + beta.vec;
        push(up);
        for (const Root& gamma : iso) {
            if (gamma.height <= beta.height) continue;
            if (bilinear_q4(up, gamma.vec) == 0) push(up + gamma.vec);
        }
    }

    while (!work.empty()) {
        const Weight nu = work.back();
        work.pop_back();
        for (const Root& alpha : even_positive_roots()) {
            if (coroot_pairing(nu, alpha).num2 >= 0) continue;
            const Weight up = reflect(nu, alpha);
            check(dominance_lt(nu, up), "upward reflection failed to increase");
            push(up);
        }
    }

    VermaFlag out;
    for (const Weight& w : seen) out.add(w);
    return out;
}

}  // namespace ospflag
