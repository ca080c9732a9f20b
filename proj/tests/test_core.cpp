#include <random>

#include "doctest.h"
#include "hnt/code.hpp"
#include "hnt/constructions.hpp"

using namespace hnt;

namespace {

Vertex v(const GraphParams& params, std::vector<Symbol> symbols) {
    return Vertex(params, std::move(symbols));
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t out = 1;
    while (e--) out *= b;
    return out;
}

}  // namespace

TEST_CASE("graph parameters validate their ranges") {
    CHECK_THROWS_AS(GraphParams(0, 2), ParameterError);
    CHECK_THROWS_AS(GraphParams(3, 1), ParameterError);
    CHECK_THROWS_AS(GraphParams(63, 2), ParameterError);  // 2^63 > 2^62
    CHECK(GraphParams(62, 2).vertex_count() == (std::uint64_t{1} << 62));
    CHECK(GraphParams(3, 5).vertex_count() == 125);
}

TEST_CASE("vertex encoding is a radix-q bijection") {
    GraphParams params(3, 5);
    CHECK(v(params, {1, 1, 2}).encode() == 1 + 5 + 2 * 25);
    for (std::uint64_t enc = 0; enc < params.vertex_count(); ++enc)
        CHECK(Vertex::decode(params, enc).encode() == enc);
    CHECK_THROWS_AS(v(params, {0, 0, 5}), ParameterError);
    CHECK_THROWS_AS(v(params, {0, 0}), ParameterError);
    CHECK_THROWS_AS(Vertex::decode(params, 125), ParameterError);
}

TEST_CASE("hamming distance counts differing entries") {
    GraphParams p35(3, 5);
    CHECK(hamming_distance(v(p35, {0, 0, 0}), v(p35, {0, 0, 0})) == 0);
    CHECK(hamming_distance(v(p35, {0, 0, 0}), v(p35, {0, 1, 2})) == 2);
    CHECK(hamming_distance(v(p35, {1, 1, 1}), v(p35, {2, 2, 2})) == 3);
    GraphParams p45(4, 5);
    CHECK_THROWS_AS(hamming_distance(v(p35, {0, 0, 0}), v(p45, {0, 0, 0, 0})),
                    ParameterError);
}

TEST_CASE("metric axioms on random triples") {
    GraphParams params(5, 4);
    std::mt19937_64 rng(0);
    for (int t = 0; t < 300; ++t) {
        const Vertex a = Vertex::decode(params, rng() % params.vertex_count());
        const Vertex b = Vertex::decode(params, rng() % params.vertex_count());
        const Vertex c = Vertex::decode(params, rng() % params.vertex_count());
        CHECK(hamming_distance(a, b) == hamming_distance(b, a));
        CHECK((hamming_distance(a, b) == 0) == (a == b));
        CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
    }
}

TEST_CASE("composition lists occurring symbols with counts") {
    GraphParams p35(3, 5);
    using pair_list = std::vector<std::pair<Symbol, std::uint32_t>>;
    CHECK(composition(v(p35, {1, 1, 2})) == pair_list{{1, 2}, {2, 1}});
    GraphParams p45(4, 5);
    CHECK(composition(v(p45, {0, 0, 0, 0})) == pair_list{{0, 4}});
    CHECK(composition(v(p45, {2, 3, 1, 1})) == pair_list{{1, 2}, {2, 1}, {3, 1}});
}

TEST_CASE("num profiles group the composition by multiplicity") {
    GraphParams p45(4, 5);
    using pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    CHECK(num_profile(v(p45, {2, 3, 1, 1})).pairs() == pairs{{1, 2}, {2, 1}});
    CHECK(num_profile(v(p45, {2, 2, 1, 1})).pairs() == pairs{{2, 2}});
    CHECK(num_profile(v(p45, {1, 1, 1, 4})).pairs() == pairs{{1, 1}, {3, 1}});
}

TEST_CASE("num profile is blind to entry order and uniform relabelling") {
    GraphParams params(5, 4);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const Vertex a = Vertex::decode(params, rng() % params.vertex_count());
        std::vector<Symbol> shuffled = a.symbols();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(num_profile(a) == num_profile(v(params, shuffled)));
        std::vector<Symbol> relabel{0, 1, 2, 3};
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<Symbol> relabelled;
        for (Symbol s : a.symbols()) relabelled.push_back(relabel[s]);
        CHECK(num_profile(a) == num_profile(v(params, relabelled)));
    }
}

TEST_CASE("codes reject duplicates and emptiness") {
    GraphParams params(2, 2);
    CHECK_THROWS_AS(Code::from_encodings(params, {}), ParameterError);
    CHECK_THROWS_AS(Code::from_encodings(params, {1, 1}), ParameterError);
    const Code collapsed =
        Code::from_encodings(params, {1, 1, 2}, DuplicatePolicy::Collapse);
    CHECK(collapsed.size() == 2);
    CHECK(collapsed.contains(2));
    CHECK_FALSE(collapsed.contains(0));
}

TEST_CASE("minimum distance over the worked families") {
    CHECK(min_distance(rep(3, 5)) == 3);
    CHECK(min_distance(prod_code(rep(2, 5), 2)) == 2);
    CHECK(min_distance(inj(3, 4)) == 1);
    CHECK_THROWS_WITH_AS(min_distance(singleton_code(3, 5)),
                         "min_distance undefined (|C|=1)", ParameterError);
}

TEST_CASE("distance to a code") {
    GraphParams p35(3, 5);
    const Code code = rep(3, 5);
    CHECK(dist_to_code(v(p35, {1, 1, 1}), code) == 0);
    CHECK(dist_to_code(v(p35, {1, 1, 2}), code) == 1);
    CHECK(dist_to_code(v(p35, {2, 3, 1}), code) == 2);
    GraphParams p25(2, 5);
    CHECK_THROWS_AS(dist_to_code(Vertex(p25, {0, 0}), code), ParameterError);
}

TEST_CASE("spheres have the product-of-binomials size") {
    GraphParams p35(3, 5);
    const Vertex center = v(p35, {1, 2, 3});
    CHECK(sphere(center, 0) == std::vector<Vertex>{center});
    CHECK(sphere(center, 1).size() == 12);
    CHECK(sphere(center, 2).size() == 48);
    CHECK(sphere(center, 4).empty());
    for (std::uint32_t r = 0; r <= 3; ++r) {
        const auto shell = sphere(center, r);
        CHECK(shell.size() == binom(3, r) * ipow(4, r));
        for (const Vertex& w : shell) CHECK(hamming_distance(center, w) == r);
    }
    GraphParams p42(4, 2);
    const Vertex origin = v(p42, {0, 0, 0, 0});
    for (std::uint32_t r = 0; r <= 4; ++r)
        CHECK(sphere(origin, r).size() == binom(4, r));
}

TEST_CASE("distance partition agrees with the per-vertex oracle") {
    // Oracle: classify every vertex by direct minimisation over codewords,
    // independently of the BFS used by distance_partition.
    auto oracle_cells = [](const Code& code) {
        std::vector<std::vector<std::uint64_t>> cells;
        for (std::uint64_t enc = 0; enc < code.params().vertex_count(); ++enc) {
            const std::uint32_t d = dist_to_code(Vertex::decode(code.params(), enc), code);
            if (cells.size() <= d) cells.resize(d + 1);
            cells[d].push_back(enc);
        }
        return cells;
    };
    for (const Code& code : {rep(3, 5), all_code(1, 3), w_code(5),
                             prod_code(rep(2, 5), 2), singleton_code(4, 2)}) {
        const DistancePartition partition = distance_partition(code);
        CHECK(partition.cells() == oracle_cells(code));
        std::uint64_t total = 0;
        for (const auto& cell : partition.cells()) {
            CHECK(!cell.empty());
            total += cell.size();
        }
        CHECK(total == code.params().vertex_count());
    }
}

TEST_CASE("distance partition cell sizes for the worked examples") {
    const DistancePartition rep35 = distance_partition(rep(3, 5));
    CHECK(rep35.rho() == 2);
    CHECK(rep35.cell(0).size() == 5);
    CHECK(rep35.cell(1).size() == 60);
    CHECK(rep35.cell(2).size() == 60);

    const DistancePartition single = distance_partition(singleton_code(4, 2));
    CHECK(single.rho() == 4);
    for (std::uint32_t r = 0; r <= 4; ++r)
        CHECK(single.cell(r).size() == binom(4, r));

    const DistancePartition all33 = distance_partition(all_code(1, 3));
    CHECK(all33.rho() == 2);
    CHECK(all33.cell(0).size() == 6);
    CHECK(all33.cell(1).size() == 18);
    CHECK(all33.cell(2).size() == 3);
    CHECK(all33.cell(2) == rep(3, 3).encodings());
}

TEST_CASE("covering radius of the worked families") {
    CHECK(covering_radius(rep(3, 5)) == 2);
    CHECK(covering_radius(prod_code(rep(2, 5), 2)) == 2);
    CHECK(covering_radius(inj(2, 3)) == 1);
    CHECK(covering_radius(rep(3, 2)) == 1);
    CHECK(covering_radius(w_code(3)) == 1);
}

TEST_CASE("disjoint spheres when the minimum distance allows") {
    // For delta >= 2i+1 the radius-i balls around codewords are disjoint.
    const Code code = rep(5, 2);  // delta = 5
    const DistancePartition partition = distance_partition(code);
    for (std::uint32_t i = 1; 2 * i + 1 <= 5; ++i)
        CHECK(partition.cell(i).size() == code.size() * binom(5, i) * ipow(1, i));
    const Code rep43 = rep(4, 3);  // delta = 4, so i = 1 only
    CHECK(distance_partition(rep43).cell(1).size() == 3 * binom(4, 1) * 2);
}

TEST_CASE("whole-graph sweeps respect the vertex budget") {
    const Code code = rep(4, 5);  // 625 vertices
    CHECK_THROWS_AS(covering_radius(code, 100), BudgetError);
    CHECK_THROWS_AS(distance_partition(code, 100), BudgetError);
    CHECK(covering_radius(code, 625) == 3);
}
