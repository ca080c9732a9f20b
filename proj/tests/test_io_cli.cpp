#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hnt/claims.hpp"
#include "hnt/cli.hpp"
#include "hnt/constructions.hpp"
#include "hnt/io.hpp"

using namespace hnt;

namespace {

Code roundtrip(const Code& code) {
    std::stringstream buffer;
    write_code(buffer, code);
    return read_code(buffer);
}

GroupGens roundtrip(const GroupGens& group) {
    std::stringstream buffer;
    write_group(buffer, group);
    return read_group(buffer);
}

int cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"hnt"};
    argv.insert(argv.end(), args.begin(), args.end());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("hnt-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("code files round-trip") {
    CHECK(roundtrip(rep(3, 5)) == rep(3, 5));
    CHECK(roundtrip(w_code(5)) == w_code(5));
    std::mt19937_64 rng(37);
    GraphParams params(4, 6);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::uint64_t> encodings;
        for (int w = 0; w < 10; ++w) encodings.push_back(rng() % params.vertex_count());
        const Code code =
            Code::from_encodings(params, std::move(encodings), DuplicatePolicy::Collapse);
        CHECK(roundtrip(code) == code);
    }
}

TEST_CASE("code files reject malformed input") {
    auto parse = [](const std::string& text) {
        std::stringstream buffer(text);
        return read_code(buffer);
    };
    CHECK_THROWS_AS(parse(""), ParameterError);
    CHECK_THROWS_AS(parse("2\n0 0\n"), ParameterError);       // bad header
    CHECK_THROWS_AS(parse("2 3\n0\n"), ParameterError);       // wrong arity
    CHECK_THROWS_AS(parse("2 3\n0 3\n"), ParameterError);     // symbol out of range
    CHECK_THROWS_AS(parse("2 3\n0 1\n0 1\n"), ParameterError);  // duplicate line
    CHECK_THROWS_AS(parse("2 3\n0 x\n"), ParameterError);     // not a number
    const Code commented = parse("# header\n2 3\n\n# word\n0 1\n2 2\n");
    CHECK(commented.size() == 2);
}

TEST_CASE("group files round-trip") {
    for (const GroupGens& group :
         {diag_full_group(3, 5), k2_group(2, 3), GroupGens::trivial(GraphParams(2, 2))}) {
        const GroupGens back = roundtrip(group);
        CHECK(back.params == group.params);
        CHECK(back.gens == group.gens);
    }
}

TEST_CASE("group files reject malformed input") {
    auto parse = [](const std::string& text) {
        std::stringstream buffer(text);
        return read_group(buffer);
    };
    CHECK_THROWS_AS(parse("2 3\n"), ParameterError);                  // no generators
    CHECK_THROWS_AS(parse("2 3\n0 1 2; 0 1 2\n"), ParameterError);    // missing '|'
    CHECK_THROWS_AS(parse("2 3\n0 1 2 | 0 1\n"), ParameterError);     // one base perm
    CHECK_THROWS_AS(parse("2 3\n0 1 2; 0 1 1 | 0 1\n"), ParameterError);  // not bijective
    const GroupGens ok = parse("2 3\n# a diagonal swap\n1 0 2; 1 0 2 | 0 1\n");
    CHECK(ok.gens.size() == 1);
    CHECK(ok.gens[0].is_diagonal());
}

TEST_CASE("image notation parses and prints") {
    const Perm p = Perm::from_images({0, 2, 1});
    CHECK(image_string(p) == "0 2 1");
    CHECK(perm_from_images_text("0 2 1", 3) == p);
    CHECK_THROWS_AS(perm_from_images_text("0 2", 3), ParameterError);
}

TEST_CASE("claim ids are unique and filterable") {
    const auto ids = claim_ids();
    CHECK(ids.size() >= 25);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) CHECK(ids[i] != ids[j]);

    const ClaimSuiteResult nothing = run_claims("does-not-exist-*");
    CHECK(nothing.results.empty());
    CHECK(nothing.all_passed());

    const ClaimSuiteResult one = run_claims("rep3-complete-q5");
    REQUIRE(one.results.size() == 1);
    CHECK(one.results[0].status == ClaimStatus::Pass);

    const ClaimSuiteResult witnesses = run_claims("table1-*");
    CHECK(witnesses.results.size() == 5);
    CHECK(witnesses.all_passed());

    // A tiny budget skips the claims that need more.
    const ClaimSuiteResult skipped = run_claims("search-h35-delta3", 1000);
    REQUIRE(skipped.results.size() == 1);
    CHECK(skipped.results[0].status == ClaimStatus::Skipped);
}

TEST_CASE("cli builds, analyzes and projects") {
    TempDir dir;
    const std::string code_path = dir.file("rep35.hc");
    const std::string group_path = dir.file("diag35.hg");
    CHECK(cli({"build", "rep", "--m", "3", "--q", "5", "-o", code_path.c_str()}) == 0);
    CHECK(read_code_file(code_path) == rep(3, 5));

    CHECK(cli({"group", "diag", "--m", "3", "--q", "5", "-o", group_path.c_str()}) == 0);
    const GroupGens group = read_group_file(group_path);
    CHECK(enumerate_group(group).order() == 720);

    CHECK(cli({"analyze", "--code", code_path.c_str(), "--group",
               group_path.c_str(), "--s", "2"}) == 0);
    // s beyond the covering radius is a domain error.
    CHECK(cli({"analyze", "--code", code_path.c_str(), "--group",
               group_path.c_str(), "--s", "3"}) == 4);

    const std::string proj_path = dir.file("proj.hc");
    CHECK(cli({"project", "--code", code_path.c_str(), "--block", "0,1", "-o",
               proj_path.c_str()}) == 0);
    CHECK(read_code_file(proj_path) == rep(2, 5));

    // Usage errors exit with 2.
    CHECK(cli({"build", "nonsense-family", "--m", "3", "--q", "5"}) == 4);
    CHECK(cli({"unknown-subcommand"}) == 2);
    CHECK(cli({"classify", "--m", "2", "--q", "2", "--strategy", "bogus"}) == 2);

    // Budget errors exit with 3.
    const std::string big_code = dir.file("big.hc");
    CHECK(cli({"build", "rep", "--m", "10", "--q", "5", "-o", big_code.c_str()}) == 0);
    const std::string big_group = dir.file("big.hg");
    CHECK(cli({"group", "diag", "--m", "10", "--q", "5", "-o", big_group.c_str()}) == 0);
    CHECK(cli({"analyze", "--code", big_code.c_str(), "--group", big_group.c_str(),
               "--s", "1", "--budget", "1000"}) == 3);
}

TEST_CASE("cli verify and classify exit codes") {
    CHECK(cli({"verify", "table1", "--row", "rep", "--m", "4", "--q", "3"}) == 0);
    CHECK(cli({"verify", "table1", "--row", "rep", "--m", "3", "--q", "3"}) == 4);
    CHECK(cli({"classify", "--m", "2", "--q", "2", "--strategy", "all-subsets"}) == 0);
    CHECK(cli({"claims", "--filter", "table1-singleton"}) == 0);
}
