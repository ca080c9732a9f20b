#include "hnt/params.hpp"

#include <string>

namespace hnt {

namespace {

constexpr std::uint64_t kMaxVertexCount = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxAlphabet = std::uint64_t{1} << 31;

}  // namespace

GraphParams::GraphParams(std::uint32_t m, std::uint64_t q) : m_(m), q_(q) {
    if (m < 1) throw ParameterError("GraphParams: m must be at least 1");
    if (q < 2) throw ParameterError("GraphParams: q must be at least 2");
    if (q > kMaxAlphabet)
        throw ParameterError("GraphParams: alphabet size " + std::to_string(q) +
                             " exceeds 2^31");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (count > kMaxVertexCount / q)
            throw ParameterError("GraphParams: q^m exceeds 2^62 for m=" +
                                 std::to_string(m) + ", q=" + std::to_string(q));
        count *= q;
    }
    vertex_count_ = count;
}

void require_same_params(const GraphParams& a, const GraphParams& b) {
    if (!(a == b))
        throw ParameterError("mismatched graph parameters: H(" +
                             std::to_string(a.m()) + "," + std::to_string(a.q()) +
                             ") vs H(" + std::to_string(b.m()) + "," +
                             std::to_string(b.q()) + ")");
}

}  // namespace hnt
