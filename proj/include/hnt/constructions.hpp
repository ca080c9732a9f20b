#pragma once

#include <optional>

#include "hnt/code.hpp"
#include "hnt/group.hpp"

namespace hnt {

// ---- Code families ----

// The q constant words (a,...,a) in H(m,q).
Code rep(std::uint32_t m, std::uint64_t q);

// One constant word (value,...,value) in H(m,q).
Code singleton_code(std::uint32_t m, std::uint64_t q, Symbol value = 0);

// All words with pairwise-distinct entries; requires m < q. Size q!/(q-m)!.
Code inj(std::uint32_t m, std::uint64_t q);

// All binary words of weight (m-1)/2 or (m+1)/2; requires m odd, m >= 3.
Code w_code(std::uint32_t m);

// All words of H(pq,q) in which every symbol occurs exactly p times.
// Size (pq)!/(p!)^q.
Code all_code(std::uint32_t p, std::uint64_t q);

// All l-fold concatenations of codewords; lives in H(ml,q), size |C|^l.
Code prod_code(const Code& code, std::uint32_t l);

// The l-fold diagonal copies (w,...,w); lives in H(ml,q), size |C|.
Code rep_l_code(const Code& code, std::uint32_t l);

enum class CodeFamily { Rep, Inj, W, All, Prod, RepL, Singleton };

struct CodeFamilySpec {
    CodeFamily family;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t l = 0;
    std::optional<Code> inner;  // Prod / RepL only
};

Code build_family(const CodeFamilySpec& spec);

// ---- Groups ----

// Generators of Diag_m(S_q) x S_m acting on H(m,q): a diagonal transposition
// and diagonal q-cycle plus top-group generators. Generated order q! * m!.
GroupGens diag_full_group(std::uint32_t m, std::uint64_t q);

// Generators of Diag_k(S_q)^l semidirect (S_k wr S_l) on H(kl,q): per-block
// diagonal alphabet generators, within-block entry permutations, and
// order-preserving block permutations.
GroupGens block_diag_group(std::uint32_t k, std::uint32_t l, std::uint64_t q);

// The block_diag_group specialisation with blocks of size 2; requires l >= 2.
// Generated order (q!)^l * 2^l * l!.
GroupGens k2_group(std::uint32_t l, std::uint64_t q);

// For a group X on H(k,q), generators of the group on H(kl,q) generated by
// the kernel of X planted independently in each block, the diagonal copies
// of X across blocks, and order-preserving block permutations. The kernel
// generators may be supplied; otherwise X is enumerated (within budget) and
// its trivial-top elements are used.
GroupGens section4_group(const GroupGens& inner, std::uint32_t l,
                         std::optional<std::vector<AutElem>> kernel_gens = std::nullopt,
                         std::uint64_t budget = kDefaultGroupBudget);

// The two entry partitions preserved by section4_group: l blocks of k
// consecutive entries, and the k position classes across blocks.
EntryPartition consecutive_blocks(std::uint32_t k, std::uint32_t l);
EntryPartition position_classes(std::uint32_t k, std::uint32_t l);

}  // namespace hnt
