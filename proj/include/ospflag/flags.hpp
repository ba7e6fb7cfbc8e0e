#pragma once

// Verma flags: exact Z>=0-linear combinations of Verma modules M_nu, the
// common currency of the whole engine.  A projective P_lambda is represented
// by the multiset of highest weights of its Verma filtration; tensoring with
// a finite-dimensional module and projecting onto a block are the two moves
// the translation-functor arguments are built from.
//
// sigma_sum implements the Sigma M_nu shorthand of the closed forms: with
// lambda0 the canonical antidominant point of the orbit of nu and sigma the
// minimal coset representative sending lambda0 to nu,
//     Sigma M_nu = sum over minimal representatives tau >= sigma (Bruhat
//                  order on W) of M_{tau . lambda0}.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospflag/linkage.hpp"
#include "ospflag/weights.hpp"
#include "ospflag/weyl.hpp"

namespace ospflag {

// Thrown when a subtraction would push a Verma multiplicity below zero:
// the probe/peel machinery uses this as the "hypothesis refuted" signal.
struct NegativeMultiplicity : std::runtime_error {
    Weight weight{};
    explicit NegativeMultiplicity(const Weight& w)
        : std::runtime_error("Verma multiplicity would become negative at (" +
                             std::to_string(w.da) + "/2, " + std::to_string(w.db) + "/2 | " +
                             std::to_string(w.dc) + "/2)"),
          weight(w) {}
};

class VermaFlag {
public:
    using Map = std::map<Weight, int, WeightOrder>;

    VermaFlag() = default;

    static VermaFlag single(const Weight& w, int mult = 1) {
        VermaFlag f;
        f.add(w, mult);
        return f;
    }

    int mult(const Weight& w) const {
        const auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Weight& w, int count = 1) {
        check(count > 0, "VermaFlag::add needs a positive count");
        bump(w, count);
    }

    VermaFlag& add_flag(const VermaFlag& other, int scale = 1) {
        check(scale > 0, "VermaFlag::add_flag needs a positive scale");
        for (const auto& [w, m] : other.terms_) bump(w, scale * m);
        return *this;
    }

    // Throws NegativeMultiplicity if `other` (scaled) is not a sub-multiset.
    VermaFlag& subtract_flag(const VermaFlag& other, int scale = 1) {
        check(scale > 0, "VermaFlag::subtract_flag needs a positive scale");
        for (const auto& [w, m] : other.terms_)
            if (mult(w) < scale * m) throw NegativeMultiplicity(w);
        for (const auto& [w, m] : other.terms_) bump(w, -scale * m);
        return *this;
    }

    VermaFlag scaled(int k) const {
        check(k > 0, "VermaFlag::scaled needs a positive factor");
        VermaFlag out = *this;
        for (auto& [w, m] : out.terms_) m *= k;
        return out;
    }

    // Number of Verma subquotients, counted with multiplicity.
    int length() const {
        int n = 0;
        for (const auto& [w, m] : terms_) n += m;
        return n;
    }

    std::size_t distinct() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    std::vector<Weight> support() const {
        std::vector<Weight> out;
        out.reserve(terms_.size());
        for (const auto& [w, m] : terms_) out.push_back(w);
        return out;
    }

    friend bool operator==(const VermaFlag&, const VermaFlag&) = default;

private:
    void bump(const Weight& w, int delta) {
        const int now = mult(w) + delta;
        if (now < 0) throw NegativeMultiplicity(w);
        if (now == 0)
            terms_.erase(w);
        else
            terms_[w] = now;
    }

    Map terms_;
};

// A <= B as multisets.
inline bool flag_leq(const VermaFlag& sub, const VermaFlag& super) {
    for (const auto& [w, m] : sub.terms())
        if (super.mult(w) < m) return false;
    return true;
}

// Support weights minimal for the dominance order (callers keep flags inside
// a single block, where dominance is the Bruhat order on highest weights).
inline std::vector<Weight> minimal_weights(const VermaFlag& f) {
    std::vector<Weight> out;
    for (const auto& [w, m] : f.terms()) {
        bool minimal = true;
        for (const auto& [v, k] : f.terms())
            if (dominance_lt(v, w)) minimal = false;
        if (minimal) out.push_back(w);
    }
    return out;
}

// Finite-dimensional translation datum: the multiset of weights of one of
// the three tensoring modules, as rho-free even lattice vectors.
struct FiniteRep {
    const char* name = "";
    int dim = 0;
    std::vector<std::pair<Weight, int>> weights;
};

// Natural module, dim (3|4) = 7: +-delta1, +-delta2, +-epsilon and one zero.
inline const FiniteRep& rep_natural() {
    static const FiniteRep rep = [] {
        FiniteRep r{"natural", 7, {}};
        for (const Weight v : {Weight{2, 0, 0}, Weight{0, 2, 0}, Weight{0, 0, 2}}) {
            r.weights.push_back({v, 1});
            r.weights.push_back({v * -1, 1});
        }
        r.weights.push_back({Weight{0, 0, 0}, 1});
        return r;
    }();
    return rep;
}

// Super-symmetric square of the natural module, dim 24.
inline const FiniteRep& rep_sym2() {
    static const FiniteRep rep = [] {
        FiniteRep r{"sym2", 24, {}};
        for (const Weight v :
             {Weight{2, 2, 0}, Weight{2, -2, 0}, Weight{2, 0, 2}, Weight{2, 0, -2},
              Weight{2, 0, 0}, Weight{0, 2, 2}, Weight{0, 2, -2}, Weight{0, 2, 0},
              Weight{0, 0, 4}, Weight{0, 0, 2}}) {
            r.weights.push_back({v, 1});
            r.weights.push_back({v * -1, 1});
        }
        r.weights.push_back({Weight{0, 0, 0}, 4});
        return r;
    }();
    return rep;
}

// Adjoint module, dim 25: all roots with multiplicity one plus a rank-3 zero.
inline const FiniteRep& rep_adjoint() {
    static const FiniteRep rep = [] {
        FiniteRep r{"adjoint", 25, {}};
        for (const Weight v :
             {Weight{4, 0, 0}, Weight{0, 4, 0}, Weight{2, 2, 0}, Weight{2, -2, 0},
              Weight{2, 0, 2}, Weight{2, 0, -2}, Weight{0, 2, 2}, Weight{0, 2, -2},
              Weight{2, 0, 0}, Weight{0, 2, 0}, Weight{0, 0, 2}}) {
            r.weights.push_back({v, 1});
            r.weights.push_back({v * -1, 1});
        }
        r.weights.push_back({Weight{0, 0, 0}, 3});
        return r;
    }();
    return rep;
}

inline const FiniteRep& rep_by_name(const std::string& name) {
    if (name == "natural") return rep_natural();
    if (name == "sym2") return rep_sym2();
    if (name == "adjoint") return rep_adjoint();
    throw std::invalid_argument("ospflag: unknown finite-dimensional module '" + name + "'");
}

// Verma flag of F (x) E: every flag weight is shifted by every weight of E.
// The length multiplies by dim E exactly.
inline VermaFlag tensor_flag(const VermaFlag& f, const FiniteRep& rep) {
    VermaFlag out;
    for (const auto& [w, m] : f.terms())
        for (const auto& [v, k] : rep.weights) out.add(w + v, m * k);
    check(out.length() == f.length() * rep.dim, "tensor identity length violated");
    return out;
}

// Restriction to the terms lying in the given block.
inline VermaFlag project_flag(const VermaFlag& f, const BlockLabel& label) {
    VermaFlag out;
    for (const auto& [w, m] : f.terms())
        if (block_label(w) == label) out.add(w, m);
    return out;
}

// Sigma M_nu (see file comment).  Always a set (multiplicity one each).
inline VermaFlag sigma_sum(const Weight& nu) {
    check(is_valid_weight(nu), "sigma_sum expects an odd (shifted) weight");
    const Weight lambda0 = canonical_antidominant(nu);
    const std::vector<WeylElement> reps = min_coset_reps(lambda0);
    const WeylElement sigma = find_coset_rep(lambda0, nu);
    VermaFlag out;
    for (const WeylElement& tau : reps)
        if (bruhat_leq_group(sigma, tau)) out.add(apply(tau, lambda0));
    return out;
}

// Verma flag of a typical projective: P_{w . lambda0} has flag Sigma M_w,
// one Verma for each coset representative above w.
inline VermaFlag typical_projective(const Weight& w) {
    check(!is_atypical(w), "typical_projective expects a typical weight");
    return sigma_sum(w);
}

}  // namespace ospflag
