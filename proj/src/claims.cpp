#include "hnt/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "hnt/analysis.hpp"

namespace hnt {

namespace {

struct ClaimContext {
    std::uint64_t budget;
    std::uint64_t seed;
};

// A claim body returns an empty string on success and a description of the
// first failures otherwise.
struct Claim {
    std::string id;
    std::string summary;
    int criterion;
    std::uint64_t required_budget;
    std::function<std::string(const ClaimContext&)> run;
};

class Checker {
 public:
    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (!failures_.empty()) failures_ += "; ";
        failures_ += what;
    }
    std::string failures() const { return failures_; }

 private:
    std::string failures_;
};

Perm random_perm(std::mt19937_64& rng, std::uint32_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Perm::from_images(std::move(images));
}

AutElem random_aut(std::mt19937_64& rng, const GraphParams& params) {
    std::vector<Perm> base;
    base.reserve(params.m());
    for (std::uint32_t j = 0; j < params.m(); ++j)
        base.push_back(random_perm(rng, static_cast<std::uint32_t>(params.q())));
    return AutElem(params, std::move(base), random_perm(rng, params.m()));
}

AutElem random_diag_aut(std::mt19937_64& rng, const GraphParams& params) {
    const Perm h = random_perm(rng, static_cast<std::uint32_t>(params.q()));
    return AutElem(params, std::vector<Perm>(params.m(), h),
                   random_perm(rng, params.m()));
}

// ---- criterion 1 & 2: complete transitivity of the worked families ----

std::string check_rep3_complete(std::uint64_t q) {
    Checker c;
    const Code code = rep(3, q);
    c.require(covering_radius(code) == 2, "covering radius of Rep(3," +
                                              std::to_string(q) + ") is not 2");
    c.require(is_completely_transitive(diag_full_group(3, q), code),
              "diagonal group is not completely transitive on Rep(3," +
                  std::to_string(q) + ")");
    return c.failures();
}

std::string check_prod_rep2_complete(std::uint32_t l) {
    Checker c;
    const Code code = prod_code(rep(2, 5), l);
    c.require(covering_radius(code) == l, "covering radius is not " + std::to_string(l));
    c.require(is_completely_transitive(k2_group(l, 5), code),
              "paired-block group is not completely transitive");
    return c.failures();
}

// ---- criterion 3: the five separating witness rows ----

std::string check_witness_row(WitnessFamily family, std::uint32_t m, std::uint64_t q,
                              std::uint32_t p) {
    const WitnessReport report = separating_witnesses(family, m, q, p);
    Checker c;
    c.require(report.dist_mu == 2, "mu " + to_string(report.mu) + " is at distance " +
                                       std::to_string(report.dist_mu) + ", not 2");
    c.require(report.dist_nu == 2, "nu " + to_string(report.nu) + " is at distance " +
                                       std::to_string(report.dist_nu) + ", not 2");
    c.require(report.profiles_differ, "profiles coincide: " + to_string(report.profile_mu));
    c.require(report.orbit_separated, "a diagonal element maps mu to nu");
    return c.failures();
}

// ---- criterion 4: families that are diagonally 2-neighbour transitive ----

std::string check_positive_singleton_h42() {
    GraphParams params(4, 2);
    const GroupGens tops(params, {AutElem::pure_top(params, Perm::transposition(4, 0, 1)),
                                  AutElem::pure_top(params, Perm::full_cycle(4))});
    Checker c;
    c.require(is_diagonally_nt(tops, singleton_code(4, 2), 2),
              "entry group is not diagonally 2-NT on the singleton in H(4,2)");
    return c.failures();
}

std::string check_positive_rep_binary(std::uint32_t m) {
    Checker c;
    const Code code = rep(m, 2);
    c.require(covering_radius(code) == 2, "covering radius is not 2");
    c.require(is_completely_transitive(diag_full_group(m, 2), code),
              "not completely transitive");
    c.require(is_diagonally_nt(diag_full_group(m, 2), code, 2), "not diagonally 2-NT");
    return c.failures();
}

std::string check_positive_inj3(std::uint64_t q) {
    Checker c;
    c.require(is_diagonally_nt(diag_full_group(3, q), inj(3, q), 2),
              "Inj(3," + std::to_string(q) + ") is not diagonally 2-NT");
    return c.failures();
}

std::string check_positive_w5() {
    Checker c;
    c.require(is_completely_transitive(diag_full_group(5, 2), w_code(5)),
              "middle-weight code in H(5,2) is not completely transitive");
    return c.failures();
}

std::string check_positive_all_binary(std::uint32_t p) {
    Checker c;
    c.require(is_diagonally_nt(diag_full_group(2 * p, 2), all_code(p, 2), 2),
              "balanced binary code with p=" + std::to_string(p) +
                  " is not diagonally 2-NT");
    return c.failures();
}

std::string check_positive_all33() {
    Checker c;
    const Code code = all_code(1, 3);
    c.require(is_diagonally_nt(diag_full_group(3, 3), code, 2),
              "balanced code in H(3,3) is not diagonally 2-NT");
    const DistancePartition dp = distance_partition(code);
    c.require(dp.rho() == 2, "covering radius is not 2");
    c.require(dp.cell(2) == rep(3, 3).encodings(),
              "distance-2 cell is not the repetition code");
    return c.failures();
}

// ---- criterion 5: the classification oracle at desk scale ----

std::string check_classification(std::uint32_t m, std::uint64_t q,
                                 ClassifyStrategy strategy,
                                 const std::vector<Code>& expected) {
    const ClassifyResult result = classify_diagonal_2nt(m, q, strategy);
    Checker c;
    c.require(result.codes.size() == expected.size(),
              "expected " + std::to_string(expected.size()) + " classes, got " +
                  std::to_string(result.codes.size()));
    if (result.codes.size() == expected.size()) {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const EquivResult eq = is_equivalent(result.codes[i], expected[i]);
            c.require(eq.outcome == EquivOutcome::Equivalent,
                      "class " + std::to_string(i) + " is not the expected code");
        }
    }
    // Oracle soundness: each returned code really is diagonally 2-NT.
    const EnumeratedGroup ambient = enumerate_group(diag_full_group(m, q));
    for (const Code& code : result.codes) {
        const EnumeratedGroup stabilizer = setwise_stabilizer(ambient, code);
        c.require(is_diagonally_nt(stabilizer.gens, code, 2),
                  "a returned code fails the direct 2-NT check");
    }
    return c.failures();
}

// ---- criterion 6: invariance of the frequency profile ----

std::string check_num_invariant_random(const ClaimContext& ctx) {
    std::mt19937_64 rng(ctx.seed + 0x6e756d);
    Checker c;
    for (const auto& [m, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{
             {3, 5}, {4, 3}, {6, 3}}) {
        GraphParams params(m, q);
        std::uint64_t bad = 0;
        for (int t = 0; t < 1000; ++t) {
            const AutElem x = random_diag_aut(rng, params);
            const Vertex v = Vertex::decode(params, rng() % params.vertex_count());
            if (!(num_profile(apply_aut(x, v)) == num_profile(v))) ++bad;
        }
        c.require(bad == 0, "profile changed for " + std::to_string(bad) +
                                "/1000 draws in H(" + std::to_string(m) + "," +
                                std::to_string(q) + ")");
    }
    return c.failures();
}

std::string check_num_invariant_exhaustive() {
    GraphParams params(3, 3);
    const EnumeratedGroup group = enumerate_group(diag_full_group(3, 3));
    Checker c;
    std::uint64_t bad = 0;
    for (const AutElem& x : group.elements)
        for (std::uint64_t enc = 0; enc < params.vertex_count(); ++enc) {
            const Vertex v = Vertex::decode(params, enc);
            if (!(num_profile(apply_aut(x, v)) == num_profile(v))) ++bad;
        }
    c.require(bad == 0, std::to_string(bad) + " violations over all of H(3,3)");
    return c.failures();
}

// ---- criterion 7: the orbit machinery against brute-force oracles ----

std::vector<std::pair<std::string, GroupGens>> oracle_groups() {
    GraphParams p32(3, 2);
    std::vector<std::pair<std::string, GroupGens>> groups;
    groups.emplace_back("diag(3,5)", diag_full_group(3, 5));
    groups.emplace_back("diag(4,3)", diag_full_group(4, 3));
    groups.emplace_back("k2(2,5)", k2_group(2, 5));
    groups.emplace_back("trivial", GroupGens::trivial(p32));
    return groups;
}

std::string check_orbit_matches_filter(const ClaimContext& ctx) {
    std::mt19937_64 rng(ctx.seed + 0x6f7262);
    Checker c;
    for (const auto& [name, gens] : oracle_groups()) {
        const EnumeratedGroup group = enumerate_group(gens);
        for (int t = 0; t < 50; ++t) {
            const std::uint64_t seed_enc = rng() % gens.params.vertex_count();
            std::vector<std::uint64_t> filtered;
            filtered.reserve(group.order());
            for (const AutElem& x : group.elements)
                filtered.push_back(apply_aut(x, seed_enc));
            std::sort(filtered.begin(), filtered.end());
            filtered.erase(std::unique(filtered.begin(), filtered.end()), filtered.end());
            if (vertex_orbit(gens, seed_enc) != filtered) {
                c.require(false, name + ": orbit BFS disagrees with the element filter");
                break;
            }
        }
    }
    return c.failures();
}

std::string check_orbit_stabilizer_identity() {
    Checker c;
    for (const auto& [name, gens] : oracle_groups()) {
        const std::uint64_t order = enumerate_group(gens).order();
        const std::uint64_t stab = enumerate_group(point_stabilizer(gens, 0)).order();
        const std::uint64_t orbit = entry_orbit(gens, 0).size();
        c.require(stab * orbit == order,
                  name + ": |stabilizer| * |orbit| = " + std::to_string(stab * orbit) +
                      " but |group| = " + std::to_string(order));
    }
    return c.failures();
}

std::string check_action_axioms(const ClaimContext& ctx) {
    std::mt19937_64 rng(ctx.seed + 0x617861);
    GraphParams params(3, 5);
    const AutElem id = AutElem::identity(params);
    Checker c;
    std::uint64_t bad = 0;
    for (int t = 0; t < 10'000; ++t) {
        const AutElem x = random_aut(rng, params);
        const AutElem y = random_aut(rng, params);
        const Vertex v = Vertex::decode(params, rng() % params.vertex_count());
        const Vertex w = Vertex::decode(params, rng() % params.vertex_count());
        if (!(apply_aut(id, v) == v)) ++bad;
        if (!(apply_aut(compose_aut(x, y), v) == apply_aut(y, apply_aut(x, v)))) ++bad;
        if (hamming_distance(apply_aut(x, v), apply_aut(x, w)) != hamming_distance(v, w))
            ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " axiom violations in 10^4 triples");
    return c.failures();
}

// ---- criterion 8: the product code preserving two partitions ----

std::string check_product_two_partitions() {
    GraphParams p35(3, 5);
    const GroupGens inner = diag_full_group(3, 5);
    const std::vector<AutElem> kernel{
        AutElem::diagonal(p35, Perm::transposition(5, 0, 1)),
        AutElem::diagonal(p35, Perm::full_cycle(5))};
    const GroupGens product_group = section4_group(inner, 2, kernel);
    const Code code = prod_code(rep(3, 5), 2);
    const EntryPartition blocks = consecutive_blocks(3, 2);
    const EntryPartition positions = position_classes(3, 2);

    Checker c;
    c.require(partition_invariant(product_group, blocks),
              "the block partition is not invariant");
    c.require(partition_invariant(product_group, positions),
              "the position partition is not invariant");
    const DistancePartition dp = distance_partition(code);
    c.require(is_transitive_on(product_group, dp.cell(0)),
              "the group is not transitive on the code");
    c.require(is_transitive_on(product_group, dp.cell(1)),
              "the group is not transitive on the distance-1 cell");
    const EnumeratedGroup enumerated = enumerate_group(product_group);
    for (const ProjectionCase& pc : projection_cases(code, enumerated, positions))
        c.require(pc.kind == ProjectionKind::CompleteCode,
                  "projection onto a position class is not the complete code");
    return c.failures();
}

// ---- criterion 9: witness pairs separated inside the block-diagonal group ----

std::string check_block_witness(std::uint32_t k) {
    GraphParams params(2 * k, 5);
    const Code code = k >= 3 ? prod_code(rep(k, 5), 2) : rep_l_code(rep(2, 5), 2);
    std::vector<Symbol> mu_syms(2 * k, 0);
    mu_syms[0] = 1;
    mu_syms[1] = 2;
    std::vector<Symbol> nu_syms(2 * k, 0);
    nu_syms[0] = 1;
    nu_syms[k] = 1;
    const Vertex mu(params, mu_syms);
    const Vertex nu(params, nu_syms);

    Checker c;
    c.require(dist_to_code(mu, code) == 2, "mu is not at distance 2");
    c.require(dist_to_code(nu, code) == 2, "nu is not at distance 2");
    const auto orbit = vertex_orbit(block_diag_group(k, 2, 5), mu.encode());
    c.require(!std::binary_search(orbit.begin(), orbit.end(), nu.encode()),
              "a block-diagonal element maps mu to nu");
    return c.failures();
}

// ---- criterion 10: minimum-distance-3 search in H(3,5) ----

// Every code with minimum distance 3 in H(3,5) containing the all-0 and
// all-1 words is the base pair extended by a clique of pairwise-distance-3
// vertices taken from {2,3,4}^3. A code admits a qualifying group when some
// subgroup of its stabilizer is transitive on C_0, C_1, C_2, meets the base
// group nontrivially, acts transitively on entries, and has an almost-simple
// alphabet action of the entry stabilizer.
std::string check_delta3_search() {
    GraphParams params(3, 5);
    const Code repetition = rep(3, 5);
    const Vertex zero(params, {0, 0, 0});
    const Vertex one(params, {1, 1, 1});

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t enc = 0; enc < params.vertex_count(); ++enc) {
        const Vertex v = Vertex::decode(params, enc);
        if (hamming_distance(v, zero) == 3 && hamming_distance(v, one) == 3)
            candidates.push_back(enc);
    }

    Checker c;
    c.require(candidates.size() == 27, "expected 27 candidate extensions, got " +
                                           std::to_string(candidates.size()));

    std::uint64_t examined = 0;
    std::vector<std::string> violations;
    auto examine = [&](const std::vector<std::uint64_t>& words) {
        ++examined;
        std::vector<std::uint64_t> sorted = words;
        std::sort(sorted.begin(), sorted.end());
        const Code code = Code::from_encodings(params, sorted);
        const CodeStabilizer stabilizer = code_stabilizer(code);
        const GroupGens aut_gens(params, stabilizer.all_gens());
        const DistancePartition dp = distance_partition(code);
        if (dp.rho() < 2) {
            violations.push_back("a distance-3 code with covering radius < 2");
            return;
        }
        bool transitive = true;
        for (std::uint32_t r = 0; r <= 2 && transitive; ++r)
            transitive = is_transitive_on(aut_gens, dp.cell(r));
        if (!transitive) return;              // no subgroup can do better
        if (!stabilizer.kernel_nontrivial()) return;
        if (is_equivalent(code, repetition).outcome == EquivOutcome::Equivalent) return;

        // A non-repetition code whose stabilizer is transitive with a
        // nontrivial kernel: decide exactly by scanning its subgroups.
        const EnumeratedGroup full = enumerate_group(aut_gens);
        for (const auto& subgroup : subgroup_census(full).subgroups) {
            if (subgroup.size() < 2) continue;
            const GroupGens sub_gens(params, subgroup);
            bool sub_transitive = true;
            for (std::uint32_t r = 0; r <= 2 && sub_transitive; ++r)
                sub_transitive = is_transitive_on(sub_gens, dp.cell(r));
            if (!sub_transitive) continue;
            bool kernel = false;
            for (const AutElem& x : subgroup)
                if (mu(x).is_identity() && !x.is_identity()) kernel = true;
            if (!kernel) continue;
            if (entry_orbit(sub_gens, 0).size() != params.m()) continue;
            if (!alphabet_stabilizer_analysis(sub_gens, 0).almost_simple) continue;
            violations.push_back("code of size " + std::to_string(code.size()) +
                                 " admits a qualifying group but is not the "
                                 "repetition code");
            return;
        }
    };

    std::vector<std::uint64_t> current{zero.encode(), one.encode()};
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        examine(current);
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const Vertex v = Vertex::decode(params, candidates[i]);
            bool clique = true;
            for (std::uint64_t enc : current)
                if (hamming_distance(v, Vertex::decode(params, enc)) != 3) {
                    clique = false;
                    break;
                }
            if (!clique) continue;
            current.push_back(candidates[i]);
            extend(i + 1);
            current.pop_back();
        }
    };
    extend(0);

    c.require(examined == 172, "expected 172 distance-3 codes, examined " +
                                   std::to_string(examined));
    for (const std::string& violation : violations) c.require(false, violation);
    return c.failures();
}

// ---- registry ----

std::vector<Claim> build_registry() {
    std::vector<Claim> claims;
    auto add = [&claims](std::string id, std::string summary, int criterion,
                         std::uint64_t required_budget,
                         std::function<std::string(const ClaimContext&)> run) {
        claims.push_back({std::move(id), std::move(summary), criterion,
                          required_budget, std::move(run)});
    };

    for (std::uint64_t q : {5, 6, 7})
        add("rep3-complete-q" + std::to_string(q),
            "Rep(3," + std::to_string(q) + ") has covering radius 2 and is "
            "completely transitive under its diagonal group",
            1, 100'000, [q](const ClaimContext&) { return check_rep3_complete(q); });

    for (std::uint32_t l : {2u, 3u})
        add("prod-rep2-complete-l" + std::to_string(l),
            "Prod(Rep(2,5)," + std::to_string(l) + ") has covering radius " +
            std::to_string(l) + " and is completely transitive under the "
            "paired-block group",
            2, 100'000,
            [l](const ClaimContext&) { return check_prod_rep2_complete(l); });

    add("table1-singleton", "witness pair splits the distance-2 cell of the "
        "singleton in H(3,3)",
        3, 100'000, [](const ClaimContext&) {
            return check_witness_row(WitnessFamily::Singleton, 3, 3, 0);
        });
    add("table1-rep", "witness pair splits the distance-2 cell of Rep(4,3)", 3,
        100'000, [](const ClaimContext&) {
            return check_witness_row(WitnessFamily::Rep, 4, 3, 0);
        });
    add("table1-inj", "witness pair splits the distance-2 cell of Inj(4,5)", 3,
        100'000, [](const ClaimContext&) {
            return check_witness_row(WitnessFamily::Inj, 4, 5, 0);
        });
    add("table1-all-qq", "witness pair splits the distance-2 cell of All(4,4)", 3,
        100'000, [](const ClaimContext&) {
            return check_witness_row(WitnessFamily::AllQQ, 4, 4, 1);
        });
    add("table1-all-pq", "witness pair splits the distance-2 cell of All(6,3)", 3,
        100'000, [](const ClaimContext&) {
            return check_witness_row(WitnessFamily::AllPQ, 6, 3, 2);
        });

    add("positive-singleton-h42", "the singleton in H(4,2) is diagonally 2-NT", 4,
        100'000, [](const ClaimContext&) { return check_positive_singleton_h42(); });
    for (std::uint32_t m : {4u, 5u})
        add("positive-rep-m" + std::to_string(m) + "-q2",
            "Rep(" + std::to_string(m) + ",2) is completely transitive",
            4, 100'000,
            [m](const ClaimContext&) { return check_positive_rep_binary(m); });
    add("positive-rep-m3-q5", "Rep(3,5) is diagonally 2-NT", 4, 100'000,
        [](const ClaimContext&) {
            Checker c;
            c.require(is_diagonally_nt(diag_full_group(3, 5), rep(3, 5), 2),
                      "Rep(3,5) is not diagonally 2-NT");
            return c.failures();
        });
    for (std::uint64_t q : {4, 5})
        add("positive-inj3-q" + std::to_string(q),
            "Inj(3," + std::to_string(q) + ") is diagonally 2-NT", 4, 100'000,
            [q](const ClaimContext&) { return check_positive_inj3(q); });
    add("positive-w-m5", "the middle-weight code in H(5,2) is completely "
        "transitive", 4, 100'000,
        [](const ClaimContext&) { return check_positive_w5(); });
    for (std::uint32_t p : {2u, 3u})
        add("positive-all-p" + std::to_string(p) + "-q2",
            "All(" + std::to_string(2 * p) + ",2) is diagonally 2-NT", 4, 100'000,
            [p](const ClaimContext&) { return check_positive_all_binary(p); });
    add("positive-all33", "All(3,3) is diagonally 2-NT with the repetition code "
        "as its distance-2 cell", 4, 100'000,
        [](const ClaimContext&) { return check_positive_all33(); });

    add("classify-2-2", "exhaustive classification in H(2,2) finds exactly the "
        "singleton", 5, 1'000'000, [](const ClaimContext&) {
            return check_classification(2, 2, ClassifyStrategy::AllSubsets,
                                        {singleton_code(2, 2)});
        });
    add("classify-3-2", "exhaustive classification in H(3,2) finds exactly the "
        "singleton (the other families have empty distance-2 cells)", 5,
        1'000'000, [](const ClaimContext&) {
            return check_classification(3, 2, ClassifyStrategy::AllSubsets,
                                        {singleton_code(3, 2)});
        });
    add("classify-2-3", "exhaustive classification in H(2,3) finds nothing", 5,
        1'000'000, [](const ClaimContext&) {
            return check_classification(2, 3, ClassifyStrategy::AllSubsets, {});
        });
    add("classify-3-3", "subgroup-orbit classification in H(3,3) finds exactly "
        "the repetition and balanced codes", 5, 1'000'000, [](const ClaimContext&) {
            return check_classification(3, 3, ClassifyStrategy::SubgroupOrbits,
                                        {rep(3, 3), all_code(1, 3)});
        });

    add("num-invariant-random", "frequency profiles survive 1000 random "
        "diagonal moves in H(3,5), H(4,3) and H(6,3)", 6, 100'000,
        check_num_invariant_random);
    add("num-invariant-exhaustive-3-3", "frequency profiles survive every "
        "diagonal move in H(3,3)", 6, 100'000,
        [](const ClaimContext&) { return check_num_invariant_exhaustive(); });

    add("orbit-matches-filter", "orbit BFS agrees with the full-group filter on "
        "50 random seeds per enumerable group", 7, 1'000'000,
        check_orbit_matches_filter);
    add("orbit-stabilizer-identity", "stabilizer order times orbit length equals "
        "group order", 7, 1'000'000,
        [](const ClaimContext&) { return check_orbit_stabilizer_identity(); });
    add("action-axioms", "identity, composition and distance preservation hold "
        "on 10^4 random triples", 7, 100'000, check_action_axioms);

    add("product-two-partitions", "the doubled Rep(3,5) group preserves both "
        "partitions and projects onto complete codes by position", 8, 1'000'000,
        [](const ClaimContext&) { return check_product_two_partitions(); });

    add("block-witness-k3", "the two distance-2 witnesses in H(6,5) lie in "
        "different block-diagonal orbits", 9, 100'000,
        [](const ClaimContext&) { return check_block_witness(3); });
    add("block-witness-k2", "the two distance-2 witnesses in H(4,5) lie in "
        "different block-diagonal orbits", 9, 100'000,
        [](const ClaimContext&) { return check_block_witness(2); });

    add("search-h35-delta3", "every distance-3 code in H(3,5) through the base "
        "pair that admits a transitive group with nontrivial kernel and "
        "almost-simple alphabet stabilizer is the repetition code", 10,
        kDefaultClaimBudget,
        [](const ClaimContext&) { return check_delta3_search(); });

    return claims;
}

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = build_registry();
    return claims;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    if (pattern.empty()) return true;
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

}  // namespace

bool ClaimSuiteResult::all_passed() const {
    for (const ClaimResult& r : results)
        if (r.status == ClaimStatus::Fail) return false;
    return true;
}

std::size_t ClaimSuiteResult::count(ClaimStatus status) const {
    std::size_t n = 0;
    for (const ClaimResult& r : results)
        if (r.status == status) ++n;
    return n;
}

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const Claim& claim : registry()) ids.push_back(claim.id);
    return ids;
}

ClaimSuiteResult run_claims(const std::string& filter, std::uint64_t budget,
                            std::uint64_t seed) {
    ClaimSuiteResult suite;
    const ClaimContext ctx{budget, seed};
    for (const Claim& claim : registry()) {
        if (!glob_match(filter, claim.id)) continue;
        ClaimResult result{claim.id, claim.summary, claim.criterion,
                           ClaimStatus::Pass, 0.0, ""};
        if (claim.required_budget > budget) {
            result.status = ClaimStatus::Skipped;
            result.detail = "requires budget " + std::to_string(claim.required_budget);
            suite.results.push_back(std::move(result));
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        try {
            const std::string failures = claim.run(ctx);
            if (!failures.empty()) {
                result.status = ClaimStatus::Fail;
                result.detail = failures;
            }
        } catch (const std::exception& e) {
            result.status = ClaimStatus::Fail;
            result.detail = std::string("exception: ") + e.what();
        }
        const auto end = std::chrono::steady_clock::now();
        result.elapsed_ms =
            std::chrono::duration<double, std::milli>(end - start).count();
        suite.results.push_back(std::move(result));
    }
    return suite;
}

const char* to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::Pass:
            return "PASS";
        case ClaimStatus::Fail:
            return "FAIL";
        case ClaimStatus::Skipped:
            return "SKIPPED";
    }
    return "?";
}

}  // namespace hnt
