#include <random>

#include "doctest.h"
#include "hnt/analysis.hpp"

using namespace hnt;

TEST_CASE("vertex and code projections") {
    GraphParams p45(4, 5);
    const Vertex vert(p45, {2, 3, 1, 1});
    CHECK(project_vertex(vert, {0, 1, 2, 3}) == Vertex(p45, {2, 3, 1, 1}));
    GraphParams p25(2, 5);
    CHECK(project_vertex(vert, {0, 1}) == Vertex(p25, {2, 3}));
    CHECK(project_vertex(vert, {2, 3}) == Vertex(p25, {1, 1}));
    CHECK_THROWS_AS(project_vertex(vert, {}), ParameterError);
    CHECK_THROWS_AS(project_vertex(vert, {1, 1}), ParameterError);
    CHECK_THROWS_AS(project_vertex(vert, {4}), ParameterError);

    CHECK(project_code(rep(3, 5), {0, 1}) == rep(2, 5));
    CHECK(project_code(prod_code(rep(2, 5), 2), {0, 2}).size() == 25);
    CHECK(project_code(prod_code(rep(2, 5), 2), {0, 1}) == rep(2, 5));
}

TEST_CASE("chi restricts block stabilizers and satisfies its identity") {
    GraphParams p45(4, 5);
    const std::vector<std::uint32_t> block{1, 3};
    CHECK(chi(AutElem::identity(p45), block).is_identity());
    const Perm h = Perm::full_cycle(5);
    CHECK(chi(AutElem::diagonal(p45, h), block) ==
          AutElem::diagonal(GraphParams(2, 5), h));
    const AutElem breaks_block =
        AutElem::pure_top(p45, Perm::transposition(4, 0, 1));
    CHECK_THROWS_AS(chi(breaks_block, block), ParameterError);

    // Defining identity over random block-stabilizing elements of the
    // paired-block group.
    const GroupGens group = k2_group(2, 5);
    const EnumeratedGroup enumerated = enumerate_group(group, 200'000);
    std::mt19937_64 rng(31);
    const std::vector<std::uint32_t> first_block{0, 1};
    int checked = 0;
    while (checked < 100) {
        const AutElem& x = enumerated.elements[rng() % enumerated.order()];
        if (mu(x)[0] > 1 || mu(x)[1] > 1) continue;
        ++checked;
        const AutElem restricted = chi(x, first_block);
        const Vertex v = Vertex::decode(group.params, rng() % group.params.vertex_count());
        CHECK(apply_aut(restricted, project_vertex(v, first_block)) ==
              project_vertex(apply_aut(x, v), first_block));
    }

    // chi is a homomorphism on the block stabilizer.
    int pairs = 0;
    while (pairs < 50) {
        const AutElem& x = enumerated.elements[rng() % enumerated.order()];
        const AutElem& y = enumerated.elements[rng() % enumerated.order()];
        if (mu(x)[0] > 1 || mu(y)[0] > 1) continue;
        ++pairs;
        CHECK(chi(compose_aut(x, y), first_block) ==
              compose_aut(chi(x, first_block), chi(y, first_block)));
    }
}

TEST_CASE("chi_group projects the setwise stabilizer") {
    const EnumeratedGroup k2 = enumerate_group(k2_group(2, 5), 200'000);
    const GroupGens image = chi_group(k2, {0, 1});
    CHECK(image.all_diagonal());
    const EnumeratedGroup image_enum = enumerate_group(image);
    CHECK(image_enum.order() == 240);  // Diag_2(S_5) x entry swap

    std::size_t stabilizer_size = 0;
    for (const AutElem& x : k2.elements)
        if (mu(x)[0] <= 1 && mu(x)[1] <= 1) ++stabilizer_size;
    CHECK(stabilizer_size == 57'600);
    CHECK(stabilizer_size % image_enum.order() == 0);

    // Projecting along the whole entry set re-expresses the group itself.
    const EnumeratedGroup small = enumerate_group(diag_full_group(2, 3));
    const GroupGens full_image = chi_group(small, {0, 1});
    CHECK(enumerate_group(full_image).order() == small.order());
}

TEST_CASE("neighbour-transitivity reports") {
    const NtReport report =
        is_s_neighbour_transitive(diag_full_group(3, 5), rep(3, 5), 2);
    CHECK(report.verdict);
    CHECK(report.rho == 2);
    CHECK(report.delta == 3);
    CHECK(report.diagonal);
    CHECK(report.entry_transitive);
    CHECK(report.levels.size() == 3);
    for (const LevelVerdict& level : report.levels) CHECK(level.transitive);

    const NtReport failing =
        is_s_neighbour_transitive(diag_full_group(4, 3), rep(4, 3), 2);
    CHECK_FALSE(failing.verdict);
    CHECK(failing.levels[0].transitive);
    CHECK(failing.levels[1].transitive);
    CHECK_FALSE(failing.levels[2].transitive);

    CHECK_THROWS_AS(is_s_neighbour_transitive(diag_full_group(3, 5), rep(3, 5), 3),
                    ParameterError);

    // s = 0 only asks for transitivity on the code itself.
    CHECK(is_s_neighbour_transitive(diag_full_group(4, 3), rep(4, 3), 0).verdict);
}

TEST_CASE("complete transitivity of the worked families") {
    CHECK(is_completely_transitive(diag_full_group(3, 5), rep(3, 5)));
    CHECK(is_completely_transitive(k2_group(2, 5), prod_code(rep(2, 5), 2)));
    CHECK_FALSE(is_completely_transitive(GroupGens::trivial(GraphParams(2, 2)),
                                         rep(2, 2)));
}

TEST_CASE("diagonal neighbour transitivity requires diagonal generators") {
    CHECK(is_diagonally_nt(diag_full_group(3, 5), rep(3, 5), 2));
    CHECK(is_diagonally_nt(diag_full_group(3, 3), all_code(1, 3), 2));
    // The paired-block group moves blocks independently, so it is not
    // diagonal even though it is 2-NT on the product code.
    CHECK_FALSE(is_diagonally_nt(k2_group(2, 5), prod_code(rep(2, 5), 2), 2));
}

TEST_CASE("alphabet-almost-simple recognition") {
    CHECK(is_alphabet_almost_simple_nt(diag_full_group(3, 5), rep(3, 5), 2));
    CHECK_FALSE(is_alphabet_almost_simple_nt(diag_full_group(3, 4), rep(3, 4), 2));
    CHECK(is_alphabet_almost_simple_nt(k2_group(2, 5), prod_code(rep(2, 5), 2), 2));
    const AlphabetAnalysis analysis =
        alphabet_stabilizer_analysis(diag_full_group(3, 5), 0);
    CHECK(analysis.order == 120);
    CHECK(analysis.almost_simple);
}

TEST_CASE("projection trichotomy") {
    // One-block partition of a 2-NT code reproduces the code itself.
    const EnumeratedGroup diag35 = enumerate_group(diag_full_group(3, 5));
    const auto whole =
        projection_cases(rep(3, 5), diag35, trivial_partition_whole(3));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].kind == ProjectionKind::TwoNT);
    CHECK(whole[0].rho == 2);
    CHECK(whole[0].delta == 3);

    // The paired-block code projects to Rep(2,5): covering radius one.
    const EnumeratedGroup k2 = enumerate_group(k2_group(2, 5), 200'000);
    const auto paired = projection_cases(prod_code(rep(2, 5), 2), k2,
                                         consecutive_blocks(2, 2));
    REQUIRE(paired.size() == 2);
    for (const ProjectionCase& pc : paired) {
        CHECK(pc.kind == ProjectionKind::RadiusOneNT);
        CHECK(pc.delta == 2);
        CHECK(pc.rho == 1);
    }

    // A partition that the group does not preserve is rejected.
    CHECK_THROWS_AS(projection_cases(prod_code(rep(2, 5), 2), k2,
                                     EntryPartition{{0, 2}, {1, 3}}),
                    ParameterError);
}

TEST_CASE("separating witnesses for the non-transitive families") {
    const WitnessReport rep_row = separating_witnesses(WitnessFamily::Rep, 4, 3);
    CHECK(rep_row.pass);
    CHECK(rep_row.profile_mu == NumProfile({{2, 2}}));
    CHECK(rep_row.profile_nu == NumProfile({{1, 2}, {2, 1}}));

    const WitnessReport inj_row = separating_witnesses(WitnessFamily::Inj, 4, 5);
    CHECK(inj_row.pass);
    CHECK(inj_row.mu == Vertex(GraphParams(4, 5), {0, 0, 0, 3}));
    CHECK(inj_row.nu == Vertex(GraphParams(4, 5), {0, 0, 2, 2}));
    CHECK(inj_row.profile_mu == NumProfile({{3, 1}, {1, 1}}));
    CHECK(inj_row.profile_nu == NumProfile({{2, 2}}));

    const WitnessReport pq_row = separating_witnesses(WitnessFamily::AllPQ, 6, 3, 2);
    CHECK(pq_row.pass);
    CHECK(pq_row.mu == Vertex(GraphParams(6, 3), {0, 0, 0, 0, 1, 2}));
    CHECK(pq_row.nu == Vertex(GraphParams(6, 3), {0, 0, 2, 0, 0, 2}));

    CHECK_THROWS_AS(separating_witnesses(WitnessFamily::Rep, 3, 3), ParameterError);
    CHECK_THROWS_AS(separating_witnesses(WitnessFamily::Inj, 3, 5), ParameterError);
    CHECK_THROWS_AS(separating_witnesses(WitnessFamily::AllPQ, 6, 2, 3),
                    ParameterError);
}

TEST_CASE("code equivalence search") {
    GraphParams p22(2, 2);
    const Code r22 = rep(2, 2);
    const EquivResult self = is_equivalent(r22, r22);
    CHECK(self.outcome == EquivOutcome::Equivalent);
    CHECK(self.witness->is_identity());

    const Code flipped =
        Code::from_vertices(p22, {Vertex(p22, {0, 1}), Vertex(p22, {1, 0})});
    const EquivResult eq = is_equivalent(r22, flipped);
    REQUIRE(eq.outcome == EquivOutcome::Equivalent);
    for (std::uint64_t enc : r22.encodings())
        CHECK(flipped.contains(apply_aut(*eq.witness, enc)));

    CHECK(is_equivalent(rep(3, 3), all_code(1, 3)).outcome ==
          EquivOutcome::NotEquivalent);

    // Equivalent by relabelling one entry in H(3,5).
    GraphParams p35(3, 5);
    std::vector<std::uint64_t> twisted;
    const Perm g = Perm::full_cycle(5);
    for (Symbol a = 0; a < 5; ++a)
        twisted.push_back(Vertex(p35, {a, a, g[a]}).encode());
    const Code twisted_code = Code::from_encodings(p35, std::move(twisted));
    const EquivResult tw = is_equivalent(rep(3, 5), twisted_code);
    REQUIRE(tw.outcome == EquivOutcome::Equivalent);
    for (std::uint64_t enc : rep(3, 5).encodings())
        CHECK(twisted_code.contains(apply_aut(*tw.witness, enc)));

    // Same size and signatures, inequivalent: a distance-3 pair vs a
    // distance-1 pair cannot be related by a distance-preserving map.
    const Code far = Code::from_vertices(
        GraphParams(3, 2), {Vertex(GraphParams(3, 2), {0, 0, 0}),
                            Vertex(GraphParams(3, 2), {1, 1, 1})});
    const Code near = Code::from_vertices(
        GraphParams(3, 2), {Vertex(GraphParams(3, 2), {0, 0, 0}),
                            Vertex(GraphParams(3, 2), {1, 0, 0})});
    CHECK(is_equivalent(far, near).outcome == EquivOutcome::NotEquivalent);
}

TEST_CASE("code stabilizer generators") {
    const Code r35 = rep(3, 5);
    const CodeStabilizer stabilizer = code_stabilizer(r35);
    CHECK(stabilizer.free_gens.empty());  // every column carries all symbols
    CHECK(stabilizer.kernel_nontrivial());
    const GroupGens gens(r35.params(), stabilizer.all_gens());
    CHECK(enumerate_group(gens).order() == 720);
    CHECK(is_transitive_on(gens, r35.encodings()));

    // A pair code leaves three symbols free in every column.
    GraphParams p35(3, 5);
    const Code pair = Code::from_vertices(
        p35, {Vertex(p35, {0, 0, 0}), Vertex(p35, {1, 1, 1})});
    const CodeStabilizer pair_stab = code_stabilizer(pair);
    CHECK_FALSE(pair_stab.free_gens.empty());
    CHECK(pair_stab.kernel_nontrivial());
    // |Aut(C)| = (2 * 6^3) for the base parts times 6 entry permutations.
    CHECK(enumerate_group(GroupGens(p35, pair_stab.all_gens()), 10'000).order() ==
          2 * 6 * 6 * 6 * 6);
}

TEST_CASE("full automorphism sweeps") {
    GraphParams p22(2, 2);
    std::size_t count = 0;
    full_aut_for_each(p22, [&count](const AutElem&) {
        ++count;
        return true;
    });
    CHECK(count == 8);  // (2!)^2 * 2!
    CHECK_THROWS_AS(full_aut_for_each(GraphParams(3, 5),
                                      [](const AutElem&) { return true; }, 1000),
                    BudgetError);
}
