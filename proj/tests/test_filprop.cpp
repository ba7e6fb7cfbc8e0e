#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ospflag/filprop.hpp"

using namespace ospflag;

namespace {
std::set<std::array<int, 3>> support_set(const VermaFlag& f) {
    std::set<std::array<int, 3>> out;
    for (const auto& [w, m] : f.terms()) out.insert({w.da, w.db, w.dc});
    return out;
}
}  // namespace

TEST_CASE("floor of the all-negative-halves weight is its whole orbit") {
    const VermaFlag floor = mandatory_terms(Weight{-1, -1, -1});
    CHECK(floor.length() == 8);
    std::set<std::array<int, 3>> expected;
    for (int sa : {-1, 1})
        for (int sb : {-1, 1})
            for (int sc : {-1, 1}) expected.insert({sa, sb, sc});
    CHECK(support_set(floor) == expected);
}

TEST_CASE("floor of (1/2,-1/2|1/2): isotropic seeds incl. a double step") {
    // Besides the single seeds (3/2,-1/2|3/2) and (1/2,1/2|-1/2), the pair
    // beta = delta2-epsilon, gamma = delta1-epsilon is orthogonal in turn,
    // forcing (3/2,1/2|-3/2) as well.
    const VermaFlag floor = mandatory_terms(Weight{1, -1, 1});
    CHECK(support_set(floor) ==
          std::set<std::array<int, 3>>{
              {1, -1, 1}, {1, 1, -1}, {1, 1, 1}, {3, -1, 3}, {3, 1, -3}, {3, 1, 3}});
    CHECK(floor.length() == 6);
}

TEST_CASE("floor of (-1/2,-3/2|1/2) reaches ten weights") {
    const VermaFlag floor = mandatory_terms(Weight{-1, -3, 1});
    CHECK(floor.length() == 10);
    CHECK(support_set(floor) ==
          std::set<std::array<int, 3>>{{-1, -3, 1},
                                       {1, -3, -1},
                                       {-1, 3, 1},
                                       {1, -3, 1},
                                       {1, 3, -1},
                                       {3, -1, -1},
                                       {1, 3, 1},
                                       {3, -1, 1},
                                       {3, 1, -1},
                                       {3, 1, 1}});
}

TEST_CASE("floor of (-3/2,-1/2|1/2) covers fourteen weights incl. forced joins") {
    const VermaFlag floor = mandatory_terms(Weight{-3, -1, 1});
    CHECK(floor.length() == 14);
    // The p-containment weight (1/2,3/2|1/2) is forced, which is what later
    // pins the join at that weight during derivation.
    CHECK(floor.mult(Weight{1, 3, 1}) == 1);
    CHECK(floor.mult(Weight{-3, 1, -1}) == 1);
    CHECK(floor.mult(Weight{-3, -3, 3}) == 0);  // other-c-orbit weights are not forced
}

TEST_CASE("floor properties over a box") {
    for (int da = -5; da <= 5; da += 2)
        for (int db = -5; db <= 5; db += 2)
            for (int dc = -5; dc <= 5; dc += 2) {
                const Weight lam{da, db, dc};
                if (!is_atypical(lam)) continue;
                const VermaFlag floor = mandatory_terms(lam);
                CHECK(floor.mult(lam) == 1);
                CHECK(floor.length() >= 2);  // at least one isotropic seed survives
                for (const auto& [w, m] : floor.terms()) {
                    CHECK(m == 1);
                    CHECK(dominance_leq(lam, w));
                    CHECK(linked(w, lam));
                }
            }
}

TEST_CASE("typical weights are rejected") {
    CHECK_THROWS_AS((void)mandatory_terms(Weight{3, -1, 5}), std::logic_error);
}
