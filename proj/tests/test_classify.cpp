#include "doctest.h"
#include "hnt/analysis.hpp"

using namespace hnt;

namespace {

bool equivalent(const Code& a, const Code& b) {
    return is_equivalent(a, b).outcome == EquivOutcome::Equivalent;
}

}  // namespace

TEST_CASE("strategy preconditions carry explicit bounds") {
    CHECK_THROWS_AS(classify_diagonal_2nt(4, 2, ClassifyStrategy::AllSubsets),
                    ParameterError);  // 2^4 = 16 > 12
    CHECK_THROWS_AS(classify_diagonal_2nt(5, 5, ClassifyStrategy::SubgroupOrbits),
                    ParameterError);  // 5! * 5! = 14400 exceeds 10^4
}

TEST_CASE("exhaustive classification in tiny graphs") {
    const ClassifyResult h22 = classify_diagonal_2nt(2, 2, ClassifyStrategy::AllSubsets);
    REQUIRE(h22.codes.size() == 1);
    CHECK(equivalent(h22.codes[0], singleton_code(2, 2)));
    CHECK(h22.candidates_checked == 15);

    // Only the singleton survives in H(3,2): the repetition and middle-weight
    // codes cover the graph to radius one, so their distance-2 cells are
    // empty, which disqualifies them.
    const ClassifyResult h32 = classify_diagonal_2nt(3, 2, ClassifyStrategy::AllSubsets);
    REQUIRE(h32.codes.size() == 1);
    CHECK(equivalent(h32.codes[0], singleton_code(3, 2)));
    CHECK(covering_radius(rep(3, 2)) == 1);
    CHECK(covering_radius(w_code(3)) == 1);

    const ClassifyResult h23 = classify_diagonal_2nt(2, 3, ClassifyStrategy::AllSubsets);
    CHECK(h23.codes.empty());
    CHECK(h23.candidates_checked == 511);
}

TEST_CASE("subgroup-orbit classification in H(3,3)") {
    const ClassifyResult result =
        classify_diagonal_2nt(3, 3, ClassifyStrategy::SubgroupOrbits);
    REQUIRE(result.codes.size() == 2);
    CHECK(equivalent(result.codes[0], rep(3, 3)));
    CHECK(equivalent(result.codes[1], all_code(1, 3)));
    // The ambient group contains a subgroup needing three generators, so the
    // two-generator census is genuinely smaller.
    CHECK_FALSE(result.generator_cap_stable);
}

TEST_CASE("classification output is diagonally 2-NT (oracle soundness)") {
    for (const auto& [m, q, strategy] :
         std::vector<std::tuple<std::uint32_t, std::uint64_t, ClassifyStrategy>>{
             {3, 2, ClassifyStrategy::AllSubsets},
             {3, 3, ClassifyStrategy::SubgroupOrbits}}) {
        const ClassifyResult result = classify_diagonal_2nt(m, q, strategy);
        const EnumeratedGroup ambient = enumerate_group(diag_full_group(m, q));
        for (const Code& code : result.codes) {
            const EnumeratedGroup stabilizer = setwise_stabilizer(ambient, code);
            CHECK(is_diagonally_nt(stabilizer.gens, code, 2));
        }
    }
}

TEST_CASE("negative instances rejected by the oracle") {
    // The three-word cyclic subcode of All(3,3) is transitive at distances 0
    // and 1 but its distance-2 cell mixes two frequency classes.
    GraphParams p33(3, 3);
    const Code cyclic = Code::from_vertices(
        p33, {Vertex(p33, {0, 1, 2}), Vertex(p33, {1, 2, 0}), Vertex(p33, {2, 0, 1})});
    const EnumeratedGroup ambient = enumerate_group(diag_full_group(3, 3));
    const EnumeratedGroup stabilizer = setwise_stabilizer(ambient, cyclic);
    const DistancePartition partition = distance_partition(cyclic);
    CHECK(partition.rho() == 2);
    CHECK(is_transitive_on(stabilizer.gens, partition.cell(0)));
    CHECK_FALSE(is_transitive_on(stabilizer.gens, partition.cell(2)));

    // The singleton with q >= 3 fails at distance 2.
    const EnumeratedGroup stab_single =
        setwise_stabilizer(ambient, singleton_code(3, 3));
    const DistancePartition single_partition =
        distance_partition(singleton_code(3, 3));
    CHECK_FALSE(is_transitive_on(stab_single.gens, single_partition.cell(2)));
}

TEST_CASE("the subgroup census covers the full lattice") {
    const SubgroupCensus census =
        subgroup_census(enumerate_group(diag_full_group(2, 2)));
    // Diag_2(S_2) x S_2 is elementary abelian of order 4: five subgroups.
    CHECK(census.subgroups.size() == 5);
    CHECK(census.stable_at_three);

    const SubgroupCensus census33 =
        subgroup_census(enumerate_group(diag_full_group(3, 3)));
    CHECK_FALSE(census33.stable_at_three);
    // Lagrange: every subgroup order divides 36.
    for (const auto& subgroup : census33.subgroups)
        CHECK(36 % subgroup.size() == 0);
}
