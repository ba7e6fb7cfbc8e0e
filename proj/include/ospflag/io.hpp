#pragma once

// Text, TSV, LaTeX and JSON forms of the core objects.
//
//   Weight       text "a,b|c" with halves as fractions ("3/2,-1/2|1/2");
//                JSON array [da, db, dc] of doubled integers.
//   WeylElement  JSON {"dihedral": 0..7, "t": 0|1} (text form is word()).
//   BlockLabel   JSON {"kind":"atypical","t":dt} or
//                     {"kind":"typical","canonical":[da,db,dc]}.
//   Verma flag   JSON [{"weight":[da,db,dc],"mult":m}, ...] in canonical
//                order; text mirrors the sum notation "M(..) + 2M(..)".
//   JH content   mirrors the flag document with "factors" for "entries".
//
// Parsing accepts exactly the rendered forms.  Integer coordinates are
// rejected with a hint: in these coordinates every weight of the system is
// half-integral (the shift by the Weyl vector is built in), so an integer
// almost certainly means the shift was forgotten.

#include <cctype>
#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ospflag/jh.hpp"
#include "ospflag/linkage.hpp"
#include "ospflag/weights.hpp"
#include "ospflag/weyl.hpp"

namespace ospflag {

enum class OutputFormat { text, json, tsv, latex };

inline const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::tsv: return "tsv";
        case OutputFormat::latex: return "latex";
    }
    throw std::logic_error("unreachable: bad OutputFormat");
}

inline OutputFormat format_from_name(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "tsv") return OutputFormat::tsv;
    if (name == "latex") return OutputFormat::latex;
    throw std::invalid_argument("unknown output format '" + name +
                                "' (choose text, json, tsv or latex)");
}

// Malformed external input (weights, JSON documents).  Domain violations of
// well-formed input keep their own types (std::invalid_argument etc.).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Half-integer atoms

// Doubled coordinate -> fraction text: 3 -> "3/2", -1 -> "-1/2".
inline std::string half_text(int d) { return std::to_string(d) + "/2"; }

namespace detail_io {

inline std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

[[noreturn]] inline void integer_hint(const std::string& tok) {
    throw ParseError("coordinate '" + tok +
                     "' is an integer, but shifted weights are half-integral: "
                     "write odd fractions over 2, e.g. \"3/2,-1/2|1/2\"");
}

}  // namespace detail_io

// Fraction token -> doubled coordinate: "3/2" -> 3.  Integer tokens (bare
// or even-over-2) get the shift hint; anything else is a plain ParseError.
inline int parse_half(const std::string& raw) {
    const std::string tok = detail_io::trimmed(raw);
    static const std::regex integer_re("[+-]?[0-9]+");
    static const std::regex fraction_re("([+-]?[0-9]+)\\s*/\\s*2");
    if (std::regex_match(tok, integer_re)) detail_io::integer_hint(tok);
    std::smatch m;
    if (!std::regex_match(tok, m, fraction_re))
        throw ParseError("cannot read '" + tok + "' as a half-integer like \"3/2\"");
    const int d = std::stoi(m[1].str());
    if (d % 2 == 0) detail_io::integer_hint(tok);
    return d;
}

// ---------------------------------------------------------------------------
// Weights

inline std::string weight_text(const Weight& w) {
    return half_text(w.da) + "," + half_text(w.db) + "|" + half_text(w.dc);
}

inline std::string weight_tsv(const Weight& w) {
    return half_text(w.da) + "\t" + half_text(w.db) + "\t" + half_text(w.dc);
}

// Compilable math-mode fragment.
inline std::string weight_latex(const Weight& w) {
    return "\\left(" + half_text(w.da) + "," + half_text(w.db) +
           "\\,\\middle|\\," + half_text(w.dc) + "\\right)";
}

inline nlohmann::json weight_json(const Weight& w) {
    return nlohmann::json::array({w.da, w.db, w.dc});
}

inline std::string render_weight(const Weight& w, OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return weight_text(w);
        case OutputFormat::json: return weight_json(w).dump();
        case OutputFormat::tsv: return weight_tsv(w);
        case OutputFormat::latex: return weight_latex(w);
    }
    throw std::logic_error("unreachable: bad OutputFormat");
}

inline Weight weight_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer() ||
        !j[1].is_number_integer() || !j[2].is_number_integer())
        throw ParseError("weight JSON must be an array of three doubled integers");
    const Weight w{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
    if (w.da % 2 == 0 || w.db % 2 == 0 || w.dc % 2 == 0)
        detail_io::integer_hint(j.dump());
    return w;
}

// Text form "a,b|c".
inline Weight parse_weight(const std::string& s) {
    const std::vector<std::string> bar = detail_io::split(s, '|');
    if (bar.size() != 2)
        throw ParseError("expected \"a,b|c\" with exactly one '|' in '" + s + "'");
    const std::vector<std::string> comma = detail_io::split(bar[0], ',');
    if (comma.size() != 2)
        throw ParseError("expected \"a,b|c\" with exactly one ',' before '|' in '" + s + "'");
    return Weight{parse_half(comma[0]), parse_half(comma[1]), parse_half(bar[1])};
}

inline Weight parse_weight(const std::string& s, OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return parse_weight(s);
        case OutputFormat::json: {
            nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
            if (j.is_discarded()) throw ParseError("invalid JSON weight '" + s + "'");
            return weight_from_json(j);
        }
        case OutputFormat::tsv: {
            const std::vector<std::string> cols = detail_io::split(s, '\t');
            if (cols.size() != 3)
                throw ParseError("expected three tab-separated halves in '" + s + "'");
            return Weight{parse_half(cols[0]), parse_half(cols[1]), parse_half(cols[2])};
        }
        case OutputFormat::latex: {
            static const std::regex fraction_re("([+-]?[0-9]+)\\s*/\\s*2");
            std::vector<int> ds;
            for (auto it = std::sregex_iterator(s.begin(), s.end(), fraction_re);
                 it != std::sregex_iterator(); ++it)
                ds.push_back(std::stoi((*it)[1].str()));
            if (ds.size() != 3)
                throw ParseError("expected three halves in the LaTeX fragment '" + s + "'");
            for (const int d : ds)
                if (d % 2 == 0) detail_io::integer_hint(s);
            return Weight{ds[0], ds[1], ds[2]};
        }
    }
    throw std::logic_error("unreachable: bad OutputFormat");
}

// ---------------------------------------------------------------------------
// Weyl elements and block labels

inline nlohmann::json weyl_json(const WeylElement& g) {
    return {{"dihedral", g.d}, {"t", g.t ? 1 : 0}};
}

inline nlohmann::json block_json(const BlockLabel& label) {
    if (label.kind == BlockLabel::Kind::atypical)
        return {{"kind", "atypical"}, {"t", label.dt}};
    return {{"kind", "typical"}, {"canonical", weight_json(label.canonical)}};
}

// ---------------------------------------------------------------------------
// Weighted sums of modules (Verma flags, composition series)

// "M(7/2,3/2|7/2) + 2M(3/2,1/2|3/2)"; empty sums print "0".
inline std::string weighted_sum_text(const std::map<Weight, int, WeightOrder>& terms,
                                     const std::string& symbol) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, m] : terms) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m);
        out += symbol + "(" + weight_text(w) + ")";
    }
    return out;
}

// "M_{7/2,3/2|7/2} + 2M_{3/2,1/2|3/2}" as a math-mode fragment.
inline std::string weighted_sum_latex(const std::map<Weight, int, WeightOrder>& terms,
                                      const std::string& symbol) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, m] : terms) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m);
        out += symbol + "_{" + half_text(w.da) + "," + half_text(w.db) + "|" +
               half_text(w.dc) + "}";
    }
    return out;
}

// Header line plus one row per term.
inline std::string weighted_sum_tsv(const std::map<Weight, int, WeightOrder>& terms) {
    std::string out = "a\tb\tc\tmult\n";
    for (const auto& [w, m] : terms) out += weight_tsv(w) + "\t" + std::to_string(m) + "\n";
    return out;
}

inline nlohmann::json weighted_sum_json(const std::map<Weight, int, WeightOrder>& terms) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, m] : terms) out.push_back({{"weight", weight_json(w)}, {"mult", m}});
    return out;
}

// ---------------------------------------------------------------------------
// Whole documents

// {"weight":…, "block":…, "length":n, "entries":[{"weight":…,"mult":…},…]}
inline nlohmann::json flag_json_document(const Weight& lam, const VermaFlag& flag) {
    return {{"weight", weight_json(lam)},
            {"block", block_json(block_label(lam))},
            {"length", flag.length()},
            {"entries", weighted_sum_json(flag.terms())}};
}

// Mirrors the flag document with "factors" in place of "entries".
inline nlohmann::json jh_json_document(const JHDecomposition& d) {
    return {{"verma", weight_json(d.verma)},
            {"block", block_json(block_label(d.verma))},
            {"total", d.total()},
            {"factors", weighted_sum_json(d.factors)}};
}

}  // namespace ospflag
