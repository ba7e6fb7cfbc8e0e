#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ospflag/engine.hpp"

namespace ospflag {

/// A frozen translation-functor identity: projecting (sum of P(source)) (x) rep
/// onto `block` must equal the stated sum of projective covers.
struct GoldenIdentity {
    std::string name;
    BlockLabel block = atypical_block(1);
    const FiniteRep* rep = nullptr;
    std::vector<PeelComponent> source;
    std::vector<PeelComponent> target;
};

/// Hand-checked decompositions pr_block(P (x) E) = sum P', exercising every
/// arbitration mechanism of the derivation engine: the adjoint probe that
/// separates the seven- from the nine-term flag at (1/2,-1/2|1/2), the
/// symmetric-square overcount at b = -5/2, the threefold route collapse at
/// (-1/2,-1/2|-1/2), and three single-step natural translations.
inline const char* golden_corpus_json() {
    return R"json({
  "identities": [
    {
      "name": "adjoint-probe-resolution",
      "block": {"kind": "atypical", "t": 5},
      "rep": "adjoint",
      "source": [{"weight": [1, -1, 1], "mult": 1}],
      "target": [
        {"weight": [1, -5, 1], "mult": 1},
        {"weight": [1, 5, -1], "mult": 1},
        {"weight": [5, -1, 1], "mult": 1},
        {"weight": [3, 5, 3], "mult": 1}
      ]
    },
    {
      "name": "sym2-overcount",
      "block": {"kind": "atypical", "t": 5},
      "rep": "sym2",
      "source": [{"weight": [-3, -5, -3], "mult": 1}],
      "target": [
        {"weight": [-5, -5, -5], "mult": 1},
        {"weight": [-3, -5, -3], "mult": 4},
        {"weight": [-1, -5, -1], "mult": 4},
        {"weight": [3, -5, -3], "mult": 1}
      ]
    },
    {
      "name": "natural-threefold",
      "block": {"kind": "atypical", "t": 1},
      "rep": "natural",
      "source": [{"weight": [-1, -1, 1], "mult": 1}],
      "target": [
        {"weight": [-1, -1, -1], "mult": 3},
        {"weight": [-1, 1, 1], "mult": 2}
      ]
    },
    {
      "name": "split-pair",
      "block": {"kind": "atypical", "t": 3},
      "rep": "natural",
      "source": [{"weight": [-1, -1, 1], "mult": 1}],
      "target": [
        {"weight": [-3, -1, 1], "mult": 1},
        {"weight": [1, 3, 1], "mult": 1}
      ]
    },
    {
      "name": "chain-step",
      "block": {"kind": "atypical", "t": 3},
      "rep": "natural",
      "source": [{"weight": [-5, -1, 1], "mult": 1}],
      "target": [
        {"weight": [-5, 3, 5], "mult": 1},
        {"weight": [-3, -1, 1], "mult": 1}
      ]
    },
    {
      "name": "orbit-base-step",
      "block": {"kind": "atypical", "t": 3},
      "rep": "natural",
      "source": [{"weight": [-1, -1, -1], "mult": 1}],
      "target": [{"weight": [-3, -1, -1], "mult": 1}]
    }
  ]
})json";
}

inline std::vector<GoldenIdentity> golden_identities() {
    const nlohmann::json doc = nlohmann::json::parse(golden_corpus_json());
    const auto read_components = [](const nlohmann::json& arr) {
        std::vector<PeelComponent> out;
        for (const auto& item : arr) {
            const auto& w = item.at("weight");
            out.push_back({Weight{w.at(0).get<int>(), w.at(1).get<int>(), w.at(2).get<int>()},
                           item.at("mult").get<int>()});
        }
        return out;
    };
    std::vector<GoldenIdentity> out;
    for (const auto& entry : doc.at("identities")) {
        GoldenIdentity g;
        g.name = entry.at("name").get<std::string>();
        check(entry.at("block").at("kind").get<std::string>() == "atypical",
              "golden corpus blocks are atypical");
        g.block = atypical_block(entry.at("block").at("t").get<int>());
        g.rep = &rep_by_name(entry.at("rep").get<std::string>());
        g.source = read_components(entry.at("source"));
        g.target = read_components(entry.at("target"));
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace ospflag
