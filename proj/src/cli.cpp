#include "hnt/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hnt/analysis.hpp"
#include "hnt/claims.hpp"
#include "hnt/io.hpp"

namespace hnt {

namespace {

using nlohmann::json;

void emit_code(const Code& code, const std::string& out_path) {
    if (out_path.empty())
        write_code(std::cout, code);
    else
        write_code_file(out_path, code);
}

void emit_group(const GroupGens& group, const std::string& out_path) {
    if (out_path.empty())
        write_group(std::cout, group);
    else
        write_group_file(out_path, group);
}

std::vector<std::uint32_t> parse_block(const std::string& text) {
    std::vector<std::uint32_t> entries;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            entries.push_back(static_cast<std::uint32_t>(std::stoul(token)));
        } catch (const std::exception&) {
            throw ParameterError("--block expects comma-separated entry indices");
        }
    }
    if (entries.empty()) throw ParameterError("--block expects at least one entry");
    return entries;
}

struct BuildOptions {
    std::string family;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t l = 0;
    std::string inner_path;
    std::string out_path;
};

int do_build(const BuildOptions& opt) {
    CodeFamilySpec spec;
    spec.m = opt.m;
    spec.q = opt.q;
    spec.p = opt.p;
    spec.l = opt.l;
    if (opt.family == "rep") {
        spec.family = CodeFamily::Rep;
    } else if (opt.family == "singleton") {
        spec.family = CodeFamily::Singleton;
    } else if (opt.family == "inj") {
        spec.family = CodeFamily::Inj;
    } else if (opt.family == "w") {
        spec.family = CodeFamily::W;
    } else if (opt.family == "all") {
        spec.family = CodeFamily::All;
    } else if (opt.family == "prod" || opt.family == "repl") {
        spec.family = opt.family == "prod" ? CodeFamily::Prod : CodeFamily::RepL;
        if (opt.inner_path.empty())
            throw ParameterError(opt.family + " requires --inner <code file>");
        spec.inner = read_code_file(opt.inner_path);
    } else {
        throw ParameterError("unknown family '" + opt.family + "'");
    }
    emit_code(build_family(spec), opt.out_path);
    return 0;
}

struct GroupOptions {
    std::string name;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::uint32_t l = 0;
    std::string inner_path;
    std::string out_path;
    std::uint64_t budget = kDefaultGroupBudget;
};

int do_group(const GroupOptions& opt) {
    if (opt.name == "diag") {
        emit_group(diag_full_group(opt.m, opt.q), opt.out_path);
    } else if (opt.name == "k2") {
        if (opt.q < 5)
            std::cerr << "note: the paired-block construction is intended for "
                         "q >= 5\n";
        emit_group(k2_group(opt.l, opt.q), opt.out_path);
    } else if (opt.name == "section4") {
        const GroupGens inner = opt.inner_path.empty()
                                    ? diag_full_group(opt.m, opt.q)
                                    : read_group_file(opt.inner_path);
        emit_group(section4_group(inner, opt.l, std::nullopt, opt.budget),
                   opt.out_path);
    } else {
        throw ParameterError("unknown group '" + opt.name + "'");
    }
    return 0;
}

json report_to_json(const NtReport& report) {
    json levels = json::array();
    for (const LevelVerdict& level : report.levels)
        levels.push_back({{"r", level.r},
                          {"size", level.size},
                          {"transitive", level.transitive}});
    json out{{"m", report.params.m()},
             {"q", report.params.q()},
             {"code_size", report.code_size},
             {"delta", report.delta ? json(*report.delta) : json(nullptr)},
             {"rho", report.rho},
             {"levels", levels},
             {"diagonal", report.diagonal},
             {"entry_transitive", report.entry_transitive},
             {"alphabet_group_order", report.alphabet_group_order
                                          ? json(*report.alphabet_group_order)
                                          : json(nullptr)},
             {"almost_simple", report.alphabet_almost_simple
                                   ? json(*report.alphabet_almost_simple)
                                   : json(nullptr)},
             {"verdict", report.verdict}};
    return out;
}

int do_analyze(const std::string& code_path, const std::string& group_path,
               std::uint32_t s, bool as_json, std::uint64_t budget) {
    const Code code = read_code_file(code_path);
    const GroupGens group = read_group_file(group_path);
    NtReport report = is_s_neighbour_transitive(group, code, s, budget);
    try {
        const AlphabetAnalysis alphabet = alphabet_stabilizer_analysis(group, 0, budget);
        report.alphabet_group_order = alphabet.order;
        report.alphabet_almost_simple = alphabet.almost_simple;
    } catch (const BudgetError&) {
        // leave the alphabet fields unset
    }
    if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
        return 0;
    }
    std::cout << "H(" << report.params.m() << "," << report.params.q() << ")"
              << "  code size " << report.code_size;
    if (report.delta)
        std::cout << "  delta " << *report.delta;
    else
        std::cout << "  delta undefined (|C|=1)";
    std::cout << "  rho " << report.rho << "\n";
    for (const LevelVerdict& level : report.levels)
        std::cout << "level " << level.r << ": size " << level.size
                  << "  transitive " << (level.transitive ? "yes" : "no") << "\n";
    std::cout << "diagonal " << (report.diagonal ? "yes" : "no")
              << "  entry-transitive " << (report.entry_transitive ? "yes" : "no")
              << "\n";
    if (report.alphabet_group_order)
        std::cout << "alphabet stabilizer order " << *report.alphabet_group_order
                  << "  almost simple "
                  << (*report.alphabet_almost_simple ? "yes" : "no") << "\n";
    std::cout << "verdict: transitive on every cell up to s=" << report.s << ": "
              << (report.verdict ? "yes" : "no") << "\n";
    return 0;
}

int do_verify(const std::string& row, std::uint32_t m, std::uint64_t q,
              std::uint32_t p, bool as_json, std::uint64_t budget) {
    WitnessFamily family;
    if (row == "singleton")
        family = WitnessFamily::Singleton;
    else if (row == "rep")
        family = WitnessFamily::Rep;
    else if (row == "inj")
        family = WitnessFamily::Inj;
    else if (row == "allq")
        family = WitnessFamily::AllQQ;
    else if (row == "allpq")
        family = WitnessFamily::AllPQ;
    else
        throw ParameterError("unknown row '" + row + "'");
    if (family == WitnessFamily::AllQQ && m == 0) m = static_cast<std::uint32_t>(q);
    if (family == WitnessFamily::AllPQ && m == 0)
        m = static_cast<std::uint32_t>(p * q);
    const WitnessReport report = separating_witnesses(family, m, q, p, budget);
    if (as_json) {
        std::cout << json{{"row", row},
                          {"m", m},
                          {"q", q},
                          {"mu", to_string(report.mu)},
                          {"nu", to_string(report.nu)},
                          {"dist_mu", report.dist_mu},
                          {"dist_nu", report.dist_nu},
                          {"num_mu", to_string(report.profile_mu)},
                          {"num_nu", to_string(report.profile_nu)},
                          {"profiles_differ", report.profiles_differ},
                          {"orbit_separated", report.orbit_separated},
                          {"pass", report.pass}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "row " << row << " in H(" << m << "," << q << ")\n"
                  << "mu = " << to_string(report.mu) << "  distance " << report.dist_mu
                  << "  profile " << to_string(report.profile_mu) << "\n"
                  << "nu = " << to_string(report.nu) << "  distance " << report.dist_nu
                  << "  profile " << to_string(report.profile_nu) << "\n"
                  << "profiles differ: " << (report.profiles_differ ? "yes" : "no")
                  << "  orbit separates: " << (report.orbit_separated ? "yes" : "no")
                  << "\n"
                  << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? 0 : 1;
}

int do_classify(std::uint32_t m, std::uint64_t q, const std::string& strategy,
                bool as_json) {
    const ClassifyStrategy strat = strategy == "all-subsets"
                                       ? ClassifyStrategy::AllSubsets
                                       : ClassifyStrategy::SubgroupOrbits;
    const ClassifyResult result = classify_diagonal_2nt(m, q, strat);
    if (as_json) {
        json codes = json::array();
        for (const Code& code : result.codes) {
            json words = json::array();
            for (std::size_t i = 0; i < code.size(); ++i)
                words.push_back(code.word(i).symbols());
            codes.push_back({{"size", code.size()}, {"words", words}});
        }
        std::cout << json{{"m", m},
                          {"q", q},
                          {"strategy", strategy},
                          {"candidates_checked", result.candidates_checked},
                          {"qualifying_before_dedup", result.qualifying_before_dedup},
                          {"generator_cap_stable", result.generator_cap_stable},
                          {"classes", codes}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "classification in H(" << m << "," << q << ") via " << strategy
              << "\n"
              << "checked " << result.candidates_checked << " candidates, "
              << result.qualifying_before_dedup << " qualifying, "
              << result.codes.size() << " classes up to equivalence\n";
    for (std::size_t i = 0; i < result.codes.size(); ++i) {
        const Code& code = result.codes[i];
        std::cout << "class " << i << " (size " << code.size() << "):";
        for (std::size_t w = 0; w < code.size(); ++w)
            std::cout << " " << to_string(code.word(w));
        std::cout << "\n";
    }
    if (strat == ClassifyStrategy::SubgroupOrbits)
        std::cout << "generator cap stable: "
                  << (result.generator_cap_stable ? "yes" : "no") << "\n";
    return 0;
}

int do_claims(const std::string& filter, std::uint64_t budget, std::uint64_t seed,
              bool as_json) {
    const ClaimSuiteResult suite = run_claims(filter, budget, seed);
    if (as_json) {
        json out = json::array();
        for (const ClaimResult& r : suite.results)
            out.push_back({{"id", r.id},
                           {"summary", r.summary},
                           {"criterion", r.criterion},
                           {"status", to_string(r.status)},
                           {"elapsed_ms", r.elapsed_ms},
                           {"detail", r.detail}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const ClaimResult& r : suite.results) {
            std::cout << to_string(r.status) << "\t" << r.id << "\t("
                      << static_cast<std::uint64_t>(r.elapsed_ms) << " ms)";
            if (!r.detail.empty()) std::cout << "\t" << r.detail;
            std::cout << "\n";
        }
        std::cout << suite.count(ClaimStatus::Pass) << " passed, "
                  << suite.count(ClaimStatus::Fail) << " failed, "
                  << suite.count(ClaimStatus::Skipped) << " skipped\n";
    }
    return suite.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact computation with codes in Hamming graphs and subgroups "
                 "of their automorphism groups"};
    app.set_version_flag("--version", "hnt 1.0.0");
    app.require_subcommand(1);

    BuildOptions build_opt;
    CLI::App* build = app.add_subcommand("build", "construct a code family");
    build->add_option("family", build_opt.family,
                      "one of rep|singleton|inj|w|all|prod|repl")
        ->required();
    build->add_option("--m", build_opt.m, "number of entries");
    build->add_option("--q", build_opt.q, "alphabet size");
    build->add_option("--p", build_opt.p, "per-symbol multiplicity (all)");
    build->add_option("--l", build_opt.l, "number of factors (prod/repl)");
    build->add_option("--inner", build_opt.inner_path, "inner code file (prod/repl)");
    build->add_option("-o,--out", build_opt.out_path, "output code file");

    GroupOptions group_opt;
    CLI::App* group = app.add_subcommand("group", "construct a generator set");
    group->add_option("name", group_opt.name, "one of diag|k2|section4")->required();
    group->add_option("--m", group_opt.m, "number of entries (diag) or block size "
                                          "(section4)");
    group->add_option("--q", group_opt.q, "alphabet size");
    group->add_option("--l", group_opt.l, "number of blocks (k2/section4)");
    group->add_option("--inner", group_opt.inner_path,
                      "inner group file (section4)");
    group->add_option("--budget", group_opt.budget, "enumeration budget");
    group->add_option("-o,--out", group_opt.out_path, "output group file");

    std::string analyze_code, analyze_group;
    std::uint32_t analyze_s = 0;
    bool analyze_json = false;
    std::uint64_t analyze_budget = kDefaultVertexBudget;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "check neighbour transitivity of a group on a code");
    analyze->add_option("--code", analyze_code, "code file")->required();
    analyze->add_option("--group", analyze_group, "group file")->required();
    analyze->add_option("--s", analyze_s, "levels to check")->required();
    analyze->add_flag("--json", analyze_json, "machine-readable output");
    analyze->add_option("--budget", analyze_budget, "vertex enumeration budget");

    std::string verify_row;
    std::uint32_t verify_m = 0, verify_p = 0;
    std::uint64_t verify_q = 0;
    bool verify_json = false;
    std::uint64_t verify_budget = kDefaultVertexBudget;
    CLI::App* verify = app.add_subcommand("verify", "run built-in verifications");
    CLI::App* table1 = verify->add_subcommand(
        "table1", "check one separating witness row");
    table1->add_option("--row", verify_row, "singleton|rep|inj|allq|allpq")
        ->required();
    table1->add_option("--m", verify_m, "number of entries");
    table1->add_option("--q", verify_q, "alphabet size")->required();
    table1->add_option("--p", verify_p, "per-symbol multiplicity (allpq)");
    table1->add_flag("--json", verify_json, "machine-readable output");
    table1->add_option("--budget", verify_budget, "vertex enumeration budget");
    verify->require_subcommand(1);

    std::uint32_t classify_m = 0;
    std::uint64_t classify_q = 0;
    std::string classify_strategy;
    bool classify_json = false;
    CLI::App* classify = app.add_subcommand(
        "classify", "classify diagonally 2-neighbour-transitive codes");
    classify->add_option("--m", classify_m, "number of entries")->required();
    classify->add_option("--q", classify_q, "alphabet size")->required();
    classify->add_option("--strategy", classify_strategy, "search strategy")
        ->required()
        ->check(CLI::IsMember({"all-subsets", "subgroup-orbits"}));
    classify->add_flag("--json", classify_json, "machine-readable output");

    std::string project_code_path, project_block, project_out;
    CLI::App* project = app.add_subcommand("project", "project a code onto a "
                                                      "set of entries");
    project->add_option("--code", project_code_path, "code file")->required();
    project->add_option("--block", project_block, "comma-separated entries")
        ->required();
    project->add_option("-o,--out", project_out, "output code file");

    std::string claims_filter;
    std::uint64_t claims_budget = kDefaultClaimBudget;
    std::uint64_t claims_seed = 0;
    bool claims_json = false;
    CLI::App* claims = app.add_subcommand("claims", "run the built-in claim "
                                                    "regression suite");
    claims->add_option("--filter", claims_filter, "claim id pattern ('*' wildcards)");
    claims->add_option("--budget", claims_budget, "budget; costlier claims are "
                                                  "skipped");
    claims->add_option("--seed", claims_seed, "seed for randomized claims");
    claims->add_flag("--json", claims_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return do_build(build_opt);
        if (group->parsed()) return do_group(group_opt);
        if (analyze->parsed())
            return do_analyze(analyze_code, analyze_group, analyze_s, analyze_json,
                              analyze_budget);
        if (verify->parsed())
            return do_verify(verify_row, verify_m, verify_q, verify_p, verify_json,
                             verify_budget);
        if (classify->parsed())
            return do_classify(classify_m, classify_q, classify_strategy,
                               classify_json);
        if (project->parsed()) {
            const Code code = read_code_file(project_code_path);
            emit_code(project_code(code, parse_block(project_block)), project_out);
            return 0;
        }
        if (claims->parsed())
            return do_claims(claims_filter, claims_budget, claims_seed, claims_json);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}

}  // namespace hnt
