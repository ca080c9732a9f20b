#pragma once

#include <cstdint>
#include <vector>

#include "hnt/vertex.hpp"

namespace hnt {

enum class DuplicatePolicy { Reject, Collapse };

// A nonempty set of vertices of a common H(m,q), stored as sorted unique
// radix-q encodings.
class Code {
 public:
    static Code from_vertices(const GraphParams& params,
                              const std::vector<Vertex>& words,
                              DuplicatePolicy policy = DuplicatePolicy::Reject);
    static Code from_encodings(const GraphParams& params,
                               std::vector<std::uint64_t> encodings,
                               DuplicatePolicy policy = DuplicatePolicy::Reject);

    const GraphParams& params() const { return params_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::uint64_t>& encodings() const { return words_; }
    bool contains(std::uint64_t enc) const;
    Vertex word(std::size_t i) const { return Vertex::decode(params_, words_[i]); }

    friend bool operator==(const Code&, const Code&) = default;

 private:
    Code(GraphParams params, std::vector<std::uint64_t> words)
        : params_(params), words_(std::move(words)) {}

    GraphParams params_;
    std::vector<std::uint64_t> words_;
};

// Vertex-enumeration ceiling for whole-graph sweeps (covering radius,
// distance partitions). Overridable per call.
inline constexpr std::uint64_t kDefaultVertexBudget = 10'000'000;

// Minimum pairwise distance; requires at least two codewords.
std::uint32_t min_distance(const Code& code);

std::uint32_t dist_to_code(const Vertex& v, const Code& code);

// All vertices at distance exactly r from v (empty when r > m).
std::vector<Vertex> sphere(const Vertex& v, std::uint32_t r);

// The cells C_0,...,C_rho of vertices grouped by distance to the code;
// together they partition the whole vertex set.
class DistancePartition {
 public:
    DistancePartition(GraphParams params, std::vector<std::vector<std::uint64_t>> cells)
        : params_(params), cells_(std::move(cells)) {}

    const GraphParams& params() const { return params_; }
    std::uint32_t rho() const { return static_cast<std::uint32_t>(cells_.size()) - 1; }
    const std::vector<std::vector<std::uint64_t>>& cells() const { return cells_; }
    const std::vector<std::uint64_t>& cell(std::uint32_t r) const { return cells_[r]; }

 private:
    GraphParams params_;
    std::vector<std::vector<std::uint64_t>> cells_;
};

DistancePartition distance_partition(const Code& code,
                                     std::uint64_t budget = kDefaultVertexBudget);
std::uint32_t covering_radius(const Code& code,
                              std::uint64_t budget = kDefaultVertexBudget);

}  // namespace hnt
