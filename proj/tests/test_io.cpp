#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ospflag/io.hpp"
#include "ospflag/table.hpp"

using namespace ospflag;
using nlohmann::json;

TEST_CASE("weight text form") {
    CHECK(weight_text(Weight{3, -1, 1}) == "3/2,-1/2|1/2");
    CHECK(weight_text(Weight{-7, 11, -5}) == "-7/2,11/2|-5/2");
    CHECK(parse_weight("3/2,-1/2|1/2") == Weight{3, -1, 1});
    CHECK(parse_weight(" 3/2 , -1/2 | 1/2 ") == Weight{3, -1, 1});
    CHECK(parse_weight("+3/2,-1/2|1/2") == Weight{3, -1, 1});
}

TEST_CASE("malformed input is a ParseError") {
    CHECK_THROWS_AS((void)parse_weight("x,y|z"), ParseError);
    CHECK_THROWS_AS((void)parse_weight(""), ParseError);
    CHECK_THROWS_AS((void)parse_weight("1/2,1/2"), ParseError);
    CHECK_THROWS_AS((void)parse_weight("1/2|1/2|1/2"), ParseError);
    CHECK_THROWS_AS((void)parse_weight("1/2,1/2,1/2"), ParseError);
    CHECK_THROWS_AS((void)parse_weight("1/3,1/2|1/2"), ParseError);
}

TEST_CASE("integers are rejected with the shift hint") {
    for (const char* s : {"1,1|1", "1/2,2|1/2", "1/2,4/2|1/2", "0,1/2|1/2"}) {
        try {
            (void)parse_weight(s);
            FAIL("no ParseError for ", s);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("half-integral") != std::string::npos);
        }
    }
}

TEST_CASE("round-trip through every format") {
    for (int da = -7; da <= 7; da += 2)
        for (int db = -7; db <= 7; db += 2)
            for (int dc = -7; dc <= 7; dc += 2) {
                const Weight w{da, db, dc};
                for (const OutputFormat f : {OutputFormat::text, OutputFormat::json,
                                             OutputFormat::tsv, OutputFormat::latex})
                    CHECK(parse_weight(render_weight(w, f), f) == w);
            }
}

TEST_CASE("JSON schemas") {
    CHECK(weight_json(Weight{3, -1, 1}) == json::array({3, -1, 1}));
    CHECK(weight_from_json(json::array({3, -1, 1})) == Weight{3, -1, 1});
    CHECK_THROWS_AS((void)weight_from_json(json::array({3, -1})), ParseError);
    CHECK_THROWS_AS((void)weight_from_json(json::array({2, 0, 0})), ParseError);

    CHECK(weyl_json(WeylElement{0, false}) == json({{"dihedral", 0}, {"t", 0}}));
    CHECK(weyl_json(WeylElement{5, true}) == json({{"dihedral", 5}, {"t", 1}}));

    CHECK(block_json(block_label(Weight{3, -1, 1})) ==
          json({{"kind", "atypical"}, {"t", 3}}));
    CHECK(block_json(block_label(Weight{7, 3, 5})) ==
          json({{"kind", "typical"}, {"canonical", json::array({7, 3, 5})}}));
}

TEST_CASE("flag document mirrors into the JH document") {
    const Weight lam{7, 3, 7};
    const json flag = flag_json_document(lam, table_flag(lam));
    CHECK(flag["weight"] == json::array({7, 3, 7}));
    CHECK(flag["block"]["kind"] == "atypical");
    CHECK(flag["length"] == 2);
    CHECK(flag["entries"] ==
          json::array({{{"weight", json::array({7, 3, 7})}, {"mult", 1}},
                       {{"weight", json::array({9, 3, 9})}, {"mult", 1}}}));

    const json jh = jh_json_document(jh_multiplicities(Weight{-1, 5, 1}));
    CHECK(jh["verma"] == json::array({-1, 5, 1}));
    CHECK(jh["block"] == json({{"kind", "atypical"}, {"t", 5}}));
    CHECK(jh["total"] == 15);
    CHECK(jh.contains("factors"));
    CHECK(!jh.contains("entries"));
    // same entry schema on both sides
    for (const json& e : jh["factors"]) {
        CHECK(e.contains("weight"));
        CHECK(e.contains("mult"));
    }
}

TEST_CASE("sum renderers") {
    const VermaFlag two = table_flag(Weight{7, 3, 7});
    CHECK(weighted_sum_text(two.terms(), "M") == "M(7/2,3/2|7/2) + M(9/2,3/2|9/2)");
    CHECK(weighted_sum_latex(two.terms(), "M") == "M_{7/2,3/2|7/2} + M_{9/2,3/2|9/2}");
    CHECK(weighted_sum_tsv(two.terms()) ==
          "a\tb\tc\tmult\n7/2\t3/2\t7/2\t1\n9/2\t3/2\t9/2\t1\n");

    // multiplicities prefix the symbol
    const VermaFlag nine = table_flag(Weight{1, -1, 1});
    CHECK(weighted_sum_text(nine.terms(), "M").find("2M(3/2,1/2|3/2)") !=
          std::string::npos);

    // the four-term Sigma expansion
    CHECK(weighted_sum_text(sigma_sum(Weight{1, -3, 1}).terms(), "M") ==
          "M(1/2,-3/2|1/2) + M(3/2,-1/2|1/2) + M(1/2,3/2|1/2) + M(3/2,1/2|1/2)");

    CHECK(weighted_sum_text({}, "M") == "0");
}

TEST_CASE("format names") {
    CHECK(format_from_name("text") == OutputFormat::text);
    CHECK(format_from_name("latex") == OutputFormat::latex);
    CHECK(std::string(format_name(OutputFormat::tsv)) == "tsv");
    CHECK_THROWS_AS((void)format_from_name("yaml"), std::invalid_argument);
}
