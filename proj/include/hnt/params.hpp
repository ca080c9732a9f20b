#pragma once

#include <cstdint>

#include "hnt/errors.hpp"

namespace hnt {

using Symbol = std::uint32_t;

// Parameters (m, q) of the graph H(m,q), whose vertices are the m-tuples
// over a q-letter alphabet {0,...,q-1}. The total vertex count q^m must fit
// comfortably in 64-bit arithmetic so that vertices can be addressed by
// their radix-q encoding.
class GraphParams {
 public:
    GraphParams(std::uint32_t m, std::uint64_t q);

    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t vertex_count() const { return vertex_count_; }

    friend bool operator==(const GraphParams&, const GraphParams&) = default;

 private:
    std::uint32_t m_;
    std::uint64_t q_;
    std::uint64_t vertex_count_;
};

// Throws ParameterError unless both values live in the same H(m,q).
void require_same_params(const GraphParams& a, const GraphParams& b);

}  // namespace hnt
