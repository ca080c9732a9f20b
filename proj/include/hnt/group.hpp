#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hnt/aut.hpp"
#include "hnt/code.hpp"

namespace hnt {

// Element-enumeration ceiling for group closures. Overridable per call.
inline constexpr std::uint64_t kDefaultGroupBudget = 1'000'000;

// A subgroup of Aut(H(m,q)) given by a nonempty generating list.
struct GroupGens {
    GraphParams params;
    std::vector<AutElem> gens;

    GroupGens(GraphParams p, std::vector<AutElem> g);

    static GroupGens trivial(const GraphParams& params);
    bool all_diagonal() const;
};

// A fully enumerated subgroup: element list closed under composition and
// inverse, sorted by canonical key, together with the generators it came from.
struct EnumeratedGroup {
    GroupGens gens;
    std::vector<AutElem> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const AutElem& x) const;
};

// ---- Orbits ----

// Orbit of a vertex (as radix encoding) under the vertex action; sorted.
std::vector<std::uint64_t> vertex_orbit(const GroupGens& group, std::uint64_t seed);

// Orbit of an entry index under the induced entry action; sorted.
std::vector<std::uint32_t> entry_orbit(const GroupGens& group, std::uint32_t entry);

// Orbit of an ordered pair of points under a set of permutations; sorted.
std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_orbit(
    const std::vector<Perm>& gens, std::pair<std::uint32_t, std::uint32_t> seed);

// True iff the orbit of one element of the sorted cell is exactly the cell
// (this checks invariance and single-orbit simultaneously).
bool is_transitive_on(const GroupGens& group, const std::vector<std::uint64_t>& cell);

// ---- Group structure ----

EnumeratedGroup enumerate_group(const GroupGens& group,
                                std::uint64_t budget = kDefaultGroupBudget);

// Generators of the stabilizer of one entry under the entry action, via the
// orbit of the entry and its Schreier generators.
GroupGens point_stabilizer(const GroupGens& group, std::uint32_t entry);

// Elements acting trivially on the entries (the intersection with the base
// group); a normal subgroup.
EnumeratedGroup kernel_on_entries(const EnumeratedGroup& group);

// Elements mapping the code onto itself.
EnumeratedGroup setwise_stabilizer(const EnumeratedGroup& group, const Code& code);

// ---- Permutation groups on the alphabet ----

std::vector<Perm> enumerate_perm_group(const std::vector<Perm>& gens,
                                       std::uint64_t budget = kDefaultGroupBudget);

// True iff the action on ordered pairs of distinct points is a single orbit
// of size degree*(degree-1).
bool is_2_transitive(const std::vector<Perm>& gens, std::uint32_t degree);

// True iff the group has a unique minimal normal subgroup which is nonabelian
// and simple. Takes the full element list of the group.
bool is_almost_simple(const std::vector<Perm>& elements);

// ---- Block systems of the entry action ----

// A partition of the entry set {0,...,m-1}: disjoint nonempty sorted blocks,
// ordered by their smallest element, covering every entry.
using EntryPartition = std::vector<std::vector<std::uint32_t>>;

EntryPartition trivial_partition_singletons(std::uint32_t m);
EntryPartition trivial_partition_whole(std::uint32_t m);

// All block systems of the entry action, including the two trivial ones.
// Requires the entry action to be transitive. Computed from the minimal
// block systems through each pair {0,i}, closed under partition joins.
std::vector<EntryPartition> invariant_partitions(const GroupGens& group);

// True iff every generator's entry action maps each block onto a block.
bool partition_invariant(const GroupGens& group, const EntryPartition& partition);

}  // namespace hnt
