#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hnt/params.hpp"

namespace hnt {

// One vertex of H(m,q): an m-tuple of symbols from {0,...,q-1}.
class Vertex {
 public:
    Vertex(GraphParams params, std::vector<Symbol> symbols);

    const GraphParams& params() const { return params_; }
    std::uint32_t size() const { return params_.m(); }
    Symbol operator[](std::uint32_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    // Radix-q value sum_i symbols[i] * q^i; a bijection onto [0, q^m).
    std::uint64_t encode() const;
    static Vertex decode(const GraphParams& params, std::uint64_t enc);

    friend bool operator==(const Vertex& a, const Vertex& b) {
        return a.params_ == b.params_ && a.symbols_ == b.symbols_;
    }

 private:
    GraphParams params_;
    std::vector<Symbol> symbols_;
};

std::uint32_t hamming_distance(const Vertex& a, const Vertex& b);

// For each symbol occurring in v, its occurrence count; sorted by symbol.
// Counts sum to m; absent symbols are omitted.
std::vector<std::pair<Symbol, std::uint32_t>> composition(const Vertex& v);

// The composition grouped by multiplicity: a pair (p, s) records that s
// distinct symbols each occur exactly p times. Invariant under entry
// permutations and under relabelling the alphabet uniformly in all entries.
class NumProfile {
 public:
    NumProfile() = default;
    explicit NumProfile(std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

    // Sorted by multiplicity p; all p distinct, all s positive.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs() const {
        return pairs_;
    }

    friend bool operator==(const NumProfile&, const NumProfile&) = default;
    friend bool operator<(const NumProfile& a, const NumProfile& b) {
        return a.pairs_ < b.pairs_;
    }

 private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

NumProfile num_profile(const Vertex& v);

std::string to_string(const Vertex& v);
std::string to_string(const NumProfile& profile);

}  // namespace hnt
