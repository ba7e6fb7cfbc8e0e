#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ospflag/weyl.hpp"

using namespace ospflag;

namespace {

// Reduced word of g in the generators, as composable elements.
std::vector<WeylElement> reduced_word(const WeylElement& g) {
    static const std::vector<std::vector<int>> dihedral_words = {
        {}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2}, {1, 2, 1, 2}};
    std::vector<WeylElement> letters;
    for (int d : dihedral_words[static_cast<std::size_t>(g.d)]) letters.push_back({d, false});
    if (g.t) letters.push_back(weyl_t());
    return letters;
}

// Independent Bruhat oracle: u <= v iff some subsequence of a reduced word
// of v multiplies to u.
bool bruhat_leq_by_subwords(const WeylElement& u, const WeylElement& v) {
    const std::vector<WeylElement> wv = reduced_word(v);
    const std::size_t n = wv.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        WeylElement prod = weyl_e();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) prod = compose(prod, wv[i]);
        if (prod == u) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("dihedral actions are the expected signed permutations") {
    const Weight w{3, 1, 5};
    auto img = [&](int d, bool t = false) { return apply(WeylElement{d, t}, w); };
    CHECK(img(0) == Weight{3, 1, 5});    // e
    CHECK(img(1) == Weight{1, 3, 5});    // r: swap
    CHECK(img(2) == Weight{3, -1, 5});   // s: negate b
    CHECK(img(3) == Weight{-1, 3, 5});   // rs
    CHECK(img(4) == Weight{1, -3, 5});   // sr
    CHECK(img(5) == Weight{-3, 1, 5});   // rsr
    CHECK(img(6) == Weight{-1, -3, 5});  // srs
    CHECK(img(7) == Weight{-3, -1, 5});  // rsrs
    CHECK(img(0, true) == Weight{3, 1, -5});
    CHECK(img(7, true) == Weight{-3, -1, -5});
}

TEST_CASE("composition, identity, inverses") {
    const WeylElement e = weyl_e(), r = weyl_r(), s = weyl_s(), t = weyl_t();
    CHECK(compose(r, s) == WeylElement{3, false});  // rs
    CHECK(compose(s, r) == WeylElement{4, false});  // sr
    CHECK(compose(r, r) == e);
    CHECK(compose(compose(r, s), compose(s, r)) == e);  // sr = (rs)^-1
    for (const WeylElement& g : all_weyl_elements()) {
        CHECK(compose(g, e) == g);
        CHECK(compose(e, g) == g);
        CHECK(compose(g, inverse(g)) == e);
        CHECK(compose(inverse(g), g) == e);
        // Composition really is composition of actions.
        const Weight w{3, 1, 5};
        for (const WeylElement& h : all_weyl_elements())
            CHECK(apply(compose(g, h), w) == apply(g, apply(h, w)));
    }
}

TEST_CASE("presentation r^2 = s^2 = t^2 = e, (rs)^4 = e, t central") {
    const WeylElement e = weyl_e(), r = weyl_r(), s = weyl_s(), t = weyl_t();
    CHECK(compose(r, r) == e);
    CHECK(compose(s, s) == e);
    CHECK(compose(t, t) == e);
    WeylElement rs4 = e;
    for (int i = 0; i < 4; ++i) rs4 = compose(rs4, compose(r, s));
    CHECK(rs4 == e);
    CHECK(compose(compose(r, t), compose(r, t)) == e);
    CHECK(compose(compose(s, t), compose(s, t)) == e);
    for (const WeylElement& g : all_weyl_elements()) CHECK(compose(g, t) == compose(t, g));
}

TEST_CASE("lengths match the inversion count on positive even roots") {
    const std::array<int, 16> expected_by_index = {0, 1, 1, 2, 2, 3, 3, 4,
                                                   1, 2, 2, 3, 3, 4, 4, 5};
    int idx = 0;
    for (const WeylElement& g : all_weyl_elements()) {
        CHECK(length(g) == expected_by_index[static_cast<std::size_t>(idx++)]);
        int inversions = 0;
        for (const Root& alpha : even_positive_roots()) {
            const Weight img = apply(g, alpha.vec);
            // W permutes the even roots, so "negative" = minus a positive one.
            bool is_negative = false;
            for (const Root& beta : even_positive_roots())
                if (img == beta.vec * -1) is_negative = true;
            if (is_negative) ++inversions;
        }
        CHECK(length(g) == inversions);
    }
}

TEST_CASE("words are reduced and name the elements") {
    CHECK(word(weyl_e()) == "e");
    CHECK(word(weyl_t()) == "t");
    CHECK(word(WeylElement{3, false}) == "rs");
    CHECK(word(WeylElement{6, true}) == "srst");
    CHECK(word(WeylElement{7, true}) == "rsrst");
    for (const WeylElement& g : all_weyl_elements()) {
        WeylElement prod = weyl_e();
        for (const WeylElement& letter : reduced_word(g)) prod = compose(prod, letter);
        CHECK(prod == g);
        CHECK(static_cast<int>(reduced_word(g).size()) == length(g));
    }
}

TEST_CASE("Bruhat order agrees with the subword oracle on all 256 pairs") {
    for (const WeylElement& u : all_weyl_elements())
        for (const WeylElement& v : all_weyl_elements())
            CHECK(bruhat_leq_group(u, v) == bruhat_leq_by_subwords(u, v));
}

TEST_CASE("Bruhat order is a partial order with unique bottom and top") {
    const auto elems = all_weyl_elements();
    for (const WeylElement& u : elems) {
        CHECK(bruhat_leq_group(u, u));
        CHECK(bruhat_leq_group(weyl_e(), u));
        CHECK(bruhat_leq_group(u, WeylElement{7, true}));
        for (const WeylElement& v : elems) {
            if (bruhat_leq_group(u, v) && bruhat_leq_group(v, u)) CHECK(u == v);
            for (const WeylElement& w : elems)
                if (bruhat_leq_group(u, v) && bruhat_leq_group(v, w))
                    CHECK(bruhat_leq_group(u, w));
        }
    }
    // Same-length dihedral elements are incomparable.
    CHECK_FALSE(bruhat_leq_group(WeylElement{3, false}, WeylElement{4, false}));
    CHECK_FALSE(bruhat_leq_group(WeylElement{4, false}, WeylElement{3, false}));
    // t only increases.
    CHECK_FALSE(bruhat_leq_group(weyl_t(), weyl_r()));
    CHECK(bruhat_leq_group(weyl_t(), WeylElement{1, true}));
}

TEST_CASE("stabilizers on shifted weights") {
    // Regular weight: trivial stabiliser.
    CHECK(stabilizer(Weight{-3, -1, -1}).size() == 1);
    // |a| = |b| with equal signs: fixed by the swap r.
    const auto stab = stabilizer(Weight{-1, -1, -1});
    REQUIRE(stab.size() == 2);
    CHECK(stab[0] == weyl_e());
    CHECK(stab[1] == weyl_r());
    // |a| = |b| with opposite signs: fixed by the conjugate reflection srs.
    const auto stab2 = stabilizer(Weight{-3, 3, -1});
    REQUIRE(stab2.size() == 2);
    CHECK(stab2[1] == WeylElement{6, false});
}

TEST_CASE("minimal coset representatives: regular orbit") {
    const Weight lam0{-3, -1, -1};
    const auto reps = min_coset_reps(lam0);
    REQUIRE(reps.size() == 16);
    std::set<std::pair<std::pair<int, int>, int>> images;
    for (const WeylElement& g : reps) {
        const Weight img = apply(g, lam0);
        images.insert({{img.da, img.db}, img.dc});
    }
    CHECK(images.size() == 16);
}

TEST_CASE("minimal coset representatives: singular orbit") {
    const Weight lam0{-1, -1, -1};
    const auto reps = min_coset_reps(lam0);
    REQUIRE(reps.size() == 8);
    // Frozen roster: {e, s, rs, srs} x {1, t}.
    std::set<std::pair<int, bool>> expected = {{0, false}, {2, false}, {3, false}, {6, false},
                                              {0, true},  {2, true},  {3, true},  {6, true}};
    std::set<std::pair<int, bool>> got;
    for (const WeylElement& g : reps) got.insert({g.d, g.t});
    CHECK(got == expected);
    // Each representative is strictly shorter than the other member of its
    // coset, and images exhaust the orbit.
    std::set<std::pair<std::pair<int, int>, int>> images;
    for (const WeylElement& g : reps) {
        const Weight img = apply(g, lam0);
        images.insert({{img.da, img.db}, img.dc});
        for (const WeylElement& h : all_weyl_elements())
            if (!(h == g) && apply(h, lam0) == img) CHECK(length(g) < length(h));
    }
    CHECK(images.size() == 8);
}

TEST_CASE("find_coset_rep locates sigma and rejects foreign weights") {
    const Weight lam0{-3, -1, -1};
    CHECK(find_coset_rep(lam0, Weight{-3, -1, -1}) == weyl_e());
    CHECK(find_coset_rep(lam0, Weight{-3, -1, 1}) == weyl_t());
    CHECK(find_coset_rep(lam0, Weight{-1, -3, 1}) == WeylElement{1, true});  // rt
    CHECK(find_coset_rep(lam0, Weight{3, 1, 1}) == WeylElement{7, true});
    CHECK_THROWS_AS((void)find_coset_rep(lam0, Weight{-5, -1, -1}), std::invalid_argument);
}
