#pragma once

#include <functional>
#include <optional>

#include "hnt/constructions.hpp"
#include "hnt/group.hpp"

namespace hnt {

// ---- Projections ----

// The |J|-tuple of entries of v indexed by J, traversed in increasing order.
Vertex project_vertex(const Vertex& v, const std::vector<std::uint32_t>& entries);

// The image of the code under entrywise projection (duplicates collapse).
Code project_code(const Code& code, const std::vector<std::uint32_t>& entries);

// The automorphism of H(|J|,q) induced by x on the block J; defined only when
// x stabilizes J setwise. Satisfies
//   project_vertex(v, J)^chi(x,J) == project_vertex(v^x, J)   for all v.
AutElem chi(const AutElem& x, const std::vector<std::uint32_t>& entries);

// The image under chi of the setwise stabilizer of J inside the enumerated
// group, with the deduplicated image set as generators.
GroupGens chi_group(const EnumeratedGroup& group, const std::vector<std::uint32_t>& entries);

// ---- Neighbour transitivity ----

struct LevelVerdict {
    std::uint32_t r;
    std::uint64_t size;
    bool transitive;
};

struct NtReport {
    GraphParams params;
    std::size_t code_size = 0;
    std::optional<std::uint32_t> delta;  // absent for singleton codes
    std::uint32_t rho = 0;
    std::uint32_t s = 0;
    std::vector<LevelVerdict> levels;  // one per r in 0..s
    bool diagonal = false;
    bool entry_transitive = false;
    std::optional<std::uint64_t> alphabet_group_order;
    std::optional<bool> alphabet_almost_simple;
    bool verdict = false;  // transitive on every cell C_0,...,C_s

    NtReport(GraphParams p) : params(p) {}
};

// Checks transitivity of the group on each of C_0,...,C_s. Throws
// ParameterError when s exceeds the covering radius (the level sets beyond
// the covering radius are empty, which disqualifies rather than passes).
NtReport is_s_neighbour_transitive(const GroupGens& group, const Code& code,
                                   std::uint32_t s,
                                   std::uint64_t vertex_budget = kDefaultVertexBudget);

// Neighbour transitivity at every level up to the covering radius.
bool is_completely_transitive(const GroupGens& group, const Code& code,
                              std::uint64_t vertex_budget = kDefaultVertexBudget);

// As is_s_neighbour_transitive, additionally requiring every generator to be
// diagonal (equal alphabet permutations in all entries).
bool is_diagonally_nt(const GroupGens& group, const Code& code, std::uint32_t s,
                      std::uint64_t vertex_budget = kDefaultVertexBudget);

struct AlphabetAnalysis {
    std::uint64_t order;
    bool almost_simple;
};

// The alphabet action of the stabilizer of one entry: its order and whether
// it is almost simple.
AlphabetAnalysis alphabet_stabilizer_analysis(const GroupGens& group,
                                              std::uint32_t entry,
                                              std::uint64_t group_budget = kDefaultGroupBudget);

// s-neighbour transitivity with a transitive entry action and an
// almost-simple alphabet action of the entry stabilizer.
bool is_alphabet_almost_simple_nt(const GroupGens& group, const Code& code,
                                  std::uint32_t s,
                                  std::uint64_t vertex_budget = kDefaultVertexBudget,
                                  std::uint64_t group_budget = kDefaultGroupBudget);

// ---- Projection trichotomy ----

enum class ProjectionKind { CompleteCode, RadiusOneNT, TwoNT };

struct ProjectionCase {
    std::vector<std::uint32_t> block;
    ProjectionKind kind;
    std::optional<std::uint32_t> delta;  // of the projected code
    std::uint32_t rho;                   // of the projected code
};

// For each block of an invariant entry partition, classifies the projected
// code as the complete code, a covering-radius-one neighbour-transitive code
// with minimum distance 2 or 3, or a 2-neighbour-transitive code, verifying
// the matching transitivity clause under the projected group. Throws when the
// partition is not invariant or when no clause verifies.
std::vector<ProjectionCase> projection_cases(const Code& code, const EnumeratedGroup& group,
                                             const EntryPartition& partition,
                                             std::uint64_t vertex_budget = kDefaultVertexBudget);

// ---- Separating witness pairs ----

// Families of diagonally neighbour-transitive codes that fail transitivity at
// distance 2, witnessed by a pair of distance-2 vertices with different
// frequency profiles.
enum class WitnessFamily { Singleton, Rep, Inj, AllQQ, AllPQ };

struct WitnessReport {
    Code code;
    Vertex mu;
    Vertex nu;
    std::uint32_t dist_mu = 0;
    std::uint32_t dist_nu = 0;
    NumProfile profile_mu;
    NumProfile profile_nu;
    bool profiles_differ = false;
    bool orbit_separated = false;  // nu outside the diagonal-group orbit of mu
    bool pass = false;

    WitnessReport(Code c, Vertex m, Vertex n)
        : code(std::move(c)), mu(std::move(m)), nu(std::move(n)) {}
};

// Builds the family's witness pair mu, nu at the given parameters, checks
// both lie at distance exactly 2 from the code, that their frequency
// profiles differ, and that no diagonal-with-entry-permutation element maps
// mu to nu (by direct orbit computation). Parameters outside the family's
// condition range raise ParameterError.
WitnessReport separating_witnesses(WitnessFamily family, std::uint32_t m,
                                   std::uint64_t q, std::uint32_t p = 0,
                                   std::uint64_t vertex_budget = kDefaultVertexBudget);

// ---- Equivalence of codes ----

enum class EquivOutcome { Equivalent, NotEquivalent, Inconclusive };

struct EquivResult {
    EquivOutcome outcome;
    std::optional<AutElem> witness;
};

// Searches for an automorphism of H(m,q) mapping one code onto the other:
// backtracking over the entry permutation (pruned by column frequency
// signatures) and per-entry alphabet maps (grown word by word), falling back
// to a sweep of the full automorphism group when its order fits the budget.
// Returns Inconclusive only when both routes exceed the budget.
EquivResult is_equivalent(const Code& a, const Code& b,
                          std::uint64_t budget = kDefaultGroupBudget);

// Generators of the setwise stabilizer of the code in the full automorphism
// group of H(m,q): all constrained solutions of the self-equivalence search
// plus, per entry, the permutations fixing the column's symbols pointwise.
// Intended for small codes; the search is exhaustive.
struct CodeStabilizer {
    std::vector<AutElem> solution_gens;  // completed constrained solutions
    std::vector<AutElem> free_gens;      // pure base, fix all column symbols

    std::vector<AutElem> all_gens() const;
    bool kernel_nontrivial() const;  // contains a nontrivial pure-base element
};

CodeStabilizer code_stabilizer(const Code& code,
                               std::uint64_t node_budget = kDefaultGroupBudget);

// Calls fn for every element of the full automorphism group of H(m,q),
// iterating its product structure directly; fn returns false to stop early.
// Throws BudgetError when (q!)^m * m! exceeds the budget.
void full_aut_for_each(const GraphParams& params,
                       const std::function<bool(const AutElem&)>& fn,
                       std::uint64_t budget = kDefaultGroupBudget);

// ---- Classification of diagonally 2-neighbour-transitive codes ----

// Every subgroup of a fully enumerated group, built by extending each known
// subgroup with one extra generator until nothing new appears. Round r of
// that process adds exactly the subgroups needing r generators, so
// stable_at_three records whether capping generating sets at three elements
// would already have produced the full list.
struct SubgroupCensus {
    std::vector<std::vector<AutElem>> subgroups;
    bool stable_at_three = true;
};

SubgroupCensus subgroup_census(const EnumeratedGroup& group);

enum class ClassifyStrategy { AllSubsets, SubgroupOrbits };

struct ClassifyResult {
    std::vector<Code> codes;  // representatives up to equivalence
    bool generator_cap_stable = true;
    std::uint64_t candidates_checked = 0;
    std::uint64_t qualifying_before_dedup = 0;
};

// All codes C in H(m,q) with covering radius at least 2 whose setwise
// stabilizer inside the full diagonal-with-entry-permutations group is
// transitive on C_0, C_1 and C_2, up to equivalence. Any group witnessing
// diagonal 2-neighbour transitivity lies inside that stabilizer, and the
// stabilizer itself witnesses it, so this oracle is exact.
//
// AllSubsets filters every nonempty vertex subset (requires q^m <= 12);
// SubgroupOrbits takes the orbits of every subgroup generated by at most
// three elements as candidates (requires q!*m! <= 10^4) and reports whether
// the subgroup census was stable when moving from two to three generators.
ClassifyResult classify_diagonal_2nt(std::uint32_t m, std::uint64_t q,
                                     ClassifyStrategy strategy);

}  // namespace hnt
