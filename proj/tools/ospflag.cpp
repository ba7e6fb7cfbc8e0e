// Command-line surface: queries against the closed-form tables, composition
// series by reciprocity, block listings, sigma expansions, and the batch
// re-derivation check.  Exit codes: 0 ok, 1 verification failure, 2 parse
// error, 3 inconclusive derivation.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ospflag/engine.hpp"
#include "ospflag/io.hpp"

namespace {

using namespace ospflag;
using nlohmann::json;

std::string sum_for(const std::map<Weight, int, WeightOrder>& terms,
                    const std::string& symbol, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::text: return weighted_sum_text(terms, symbol);
        case OutputFormat::latex: return weighted_sum_latex(terms, symbol);
        case OutputFormat::tsv: return weighted_sum_tsv(terms);
        case OutputFormat::json: return weighted_sum_json(terms).dump(2);
    }
    return {};
}

std::string peel_list(const std::vector<PeelComponent>& parts, const std::string& symbol) {
    if (parts.empty()) return "none";
    std::string out;
    for (const PeelComponent& p : parts) {
        if (!out.empty()) out += ", ";
        out += symbol + "(" + weight_text(p.weight) + ") x" + std::to_string(p.count);
    }
    return out;
}

json peel_json(const std::vector<PeelComponent>& parts) {
    json out = json::array();
    for (const PeelComponent& p : parts)
        out.push_back({{"weight", weight_json(p.weight)}, {"count", p.count}});
    return out;
}

void print_derivation(const DeriveRecord& rec, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json doc{{"target", weight_json(rec.target)},
                 {"case", table_case_name(rec.tcase)},
                 {"pivot", weight_json(rec.pivot)},
                 {"rep", rec.rep->name},
                 {"block", block_json(block_label(rec.target))},
                 {"projected", weighted_sum_json(rec.projected.terms())},
                 {"copies", rec.copies},
                 {"standalone", peel_json(rec.standalone)},
                 {"joined", peel_json(rec.joined)},
                 {"result", weighted_sum_json(rec.result.terms())}};
        if (rec.ambiguity) {
            doc["ambiguity"] = {{"candidates", rec.ambiguity->candidates.size()},
                                {"probe", rec.ambiguity->probe},
                                {"chosen", rec.ambiguity->chosen}};
        }
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "target     " << weight_text(rec.target) << "  [" << table_case_name(rec.tcase)
              << "]\n"
              << "pivot      P(" << weight_text(rec.pivot) << ") (x) " << rec.rep->name
              << " -> block t=" << half_text(block_label(rec.target).dt) << "\n"
              << "projected  length " << rec.projected.length() << ": "
              << weighted_sum_text(rec.projected.terms(), "M") << "\n"
              << "copies     " << rec.copies << "\n"
              << "standalone " << peel_list(rec.standalone, "P") << "\n"
              << "joined     " << peel_list(rec.joined, "M") << "\n";
    if (rec.ambiguity)
        std::cout << "ambiguity  " << rec.ambiguity->candidates.size() << " candidates; probe "
                  << rec.ambiguity->probe << "; kept #" << rec.ambiguity->chosen + 1 << "\n";
    std::cout << "result     " << weighted_sum_text(rec.result.terms(), "M") << "\n";
}

int run_flag(const std::string& arg, OutputFormat fmt, bool derive_mode) {
    const Weight w = parse_weight(arg);
    if (!is_atypical(w)) {
        std::cerr << "note: " << weight_text(w)
                  << " is typical; printing the orbit flag of its projective cover\n";
        const VermaFlag f = typical_projective(w);
        if (fmt == OutputFormat::json)
            std::cout << flag_json_document(w, f).dump(2) << "\n";
        else
            std::cout << sum_for(f.terms(), "M", fmt) << "\n";
        return 0;
    }
    if (derive_mode) {
        DeriveEngine engine;
        print_derivation(engine.derive(w), fmt);
        return 0;
    }
    const VermaFlag f = table_flag(w);
    if (fmt == OutputFormat::json)
        std::cout << flag_json_document(w, f).dump(2) << "\n";
    else
        std::cout << sum_for(f.terms(), "M", fmt) << "\n";
    return 0;
}

int run_jh(const std::string& arg, OutputFormat fmt) {
    const Weight w = parse_weight(arg);
    const JHDecomposition d = is_atypical(w) ? jh_multiplicities(w) : jh_typical(w);
    if (!is_atypical(w))
        std::cerr << "note: " << weight_text(w)
                  << " is typical; composition factors follow from the orbit flags\n";
    if (fmt == OutputFormat::json)
        std::cout << jh_json_document(d).dump(2) << "\n";
    else
        std::cout << sum_for(d.factors, "L", fmt) << "\n";
    return 0;
}

int run_block(const std::string& arg, int bound, OutputFormat fmt) {
    BlockLabel label;
    try {
        label = block_label(parse_weight(arg));
    } catch (const ParseError&) {
        label = atypical_block(parse_half(arg));
    }
    const std::vector<Weight> members = enumerate_block(label, bound);
    switch (fmt) {
        case OutputFormat::json: {
            json doc{{"block", block_json(label)}, {"bound", bound}, {"members", json::array()}};
            for (const Weight& w : members) doc["members"].push_back(weight_json(w));
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::tsv:
            std::cout << "a\tb\tc\n";
            for (const Weight& w : members) std::cout << weight_tsv(w) << "\n";
            break;
        case OutputFormat::latex:
            for (const Weight& w : members) std::cout << weight_latex(w) << "\n";
            break;
        case OutputFormat::text:
            for (const Weight& w : members) std::cout << weight_text(w) << "\n";
            break;
    }
    return 0;
}

int run_expand(const std::string& arg, OutputFormat fmt) {
    const Weight w = parse_weight(arg);
    std::cout << sum_for(sigma_sum(w).terms(), "M", fmt) << "\n";
    return 0;
}

int run_verify(int bound, OutputFormat fmt) {
    const VerifyReport flags = verify_range(bound);
    std::vector<Weight> jh_failures;
    int jh_checked = 0;
    for (int da = -bound; da <= bound; da += 2)
        for (int db = -bound; db <= bound; db += 2) {
            const std::set<int> cs{std::abs(da), -std::abs(da), std::abs(db), -std::abs(db)};
            for (const int dc : cs) {
                const Weight mu{da, db, dc};
                ++jh_checked;
                if (!thm41_check(mu)) jh_failures.push_back(mu);
            }
        }
    const bool ok = flags.ok() && jh_failures.empty();
    if (fmt == OutputFormat::json) {
        json doc{{"bound", bound},
                 {"flags_checked", flags.checked},
                 {"jh_checked", jh_checked},
                 {"failures", json::array()}};
        for (const Weight& w : flags.mismatches) doc["failures"].push_back(weight_json(w));
        for (const Weight& w : jh_failures) doc["failures"].push_back(weight_json(w));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << flags.checked << " weights checked, "
                  << flags.mismatches.size() + jh_failures.size() << " failures\n";
        if (!flags.mismatches.empty())
            std::cout << "first flag mismatch at " << weight_text(flags.mismatches.front())
                      << "\n";
        if (!jh_failures.empty())
            std::cout << "first composition mismatch at " << weight_text(jh_failures.front())
                      << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verma flags of projective covers and Jordan-Hoelder multiplicities "
                 "for the integral blocks of category O over osp(3|4)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv", "latex"}));

    std::string weight_arg;
    bool derive_mode = false;
    CLI::App* flag_cmd = app.add_subcommand("flag", "Verma flag of the projective cover P(a,b|c)");
    flag_cmd->add_option("weight", weight_arg, "weight as \"a,b|c\" with half-integer entries")
        ->required();
    flag_cmd->add_flag("--derive", derive_mode,
                       "derive by translation functors and print the full trace");

    CLI::App* jh_cmd = app.add_subcommand("jh", "composition factors of the Verma module M(a,b|c)");
    jh_cmd->add_option("weight", weight_arg, "weight as \"a,b|c\" with half-integer entries")
        ->required();

    std::string block_arg;
    int bound = 11;
    CLI::App* block_cmd = app.add_subcommand("block", "list block members up to a bound");
    block_cmd->add_option("label", block_arg, "atypical parameter t (e.g. \"1/2\") or any member weight")
        ->required();
    block_cmd->add_option("--bound", bound, "doubled coordinate bound")->check(CLI::PositiveNumber);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "re-derive all flags in a box and cross-check compositions");
    verify_cmd->add_option("--bound", bound, "doubled coordinate bound")->check(CLI::PositiveNumber);

    CLI::App* expand_cmd = app.add_subcommand("expand", "Sigma expansion of one orbit seed");
    expand_cmd->add_option("weight", weight_arg, "weight as \"a,b|c\" with half-integer entries")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const OutputFormat fmt = format_from_name(format);
        if (app.got_subcommand(flag_cmd)) return run_flag(weight_arg, fmt, derive_mode);
        if (app.got_subcommand(jh_cmd)) return run_jh(weight_arg, fmt);
        if (app.got_subcommand(block_cmd)) return run_block(block_arg, bound, fmt);
        if (app.got_subcommand(verify_cmd)) return run_verify(bound, fmt);
        if (app.got_subcommand(expand_cmd)) return run_expand(weight_arg, fmt);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DeriveInconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
