#include "hnt/code.hpp"

#include <algorithm>
#include <string>

namespace hnt {

Code Code::from_vertices(const GraphParams& params, const std::vector<Vertex>& words,
                         DuplicatePolicy policy) {
    std::vector<std::uint64_t> encodings;
    encodings.reserve(words.size());
    for (const Vertex& w : words) {
        require_same_params(params, w.params());
        encodings.push_back(w.encode());
    }
    return from_encodings(params, std::move(encodings), policy);
}

Code Code::from_encodings(const GraphParams& params,
                          std::vector<std::uint64_t> encodings,
                          DuplicatePolicy policy) {
    if (encodings.empty()) throw ParameterError("Code: a code must be nonempty");
    for (std::uint64_t enc : encodings)
        if (enc >= params.vertex_count())
            throw ParameterError("Code: encoding out of range");
    std::sort(encodings.begin(), encodings.end());
    auto dup = std::adjacent_find(encodings.begin(), encodings.end());
    if (dup != encodings.end()) {
        if (policy == DuplicatePolicy::Reject)
            throw ParameterError("Code: duplicate word " +
                                 to_string(Vertex::decode(params, *dup)));
        encodings.erase(std::unique(encodings.begin(), encodings.end()),
                        encodings.end());
    }
    return Code(params, std::move(encodings));
}

bool Code::contains(std::uint64_t enc) const {
    return std::binary_search(words_.begin(), words_.end(), enc);
}

std::uint32_t min_distance(const Code& code) {
    if (code.size() < 2)
        throw ParameterError("min_distance undefined (|C|=1)");
    std::vector<Vertex> words;
    words.reserve(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) words.push_back(code.word(i));
    std::uint32_t best = code.params().m();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, hamming_distance(words[i], words[j]));
    return best;
}

std::uint32_t dist_to_code(const Vertex& v, const Code& code) {
    require_same_params(v.params(), code.params());
    std::uint32_t best = v.params().m() + 1;
    for (std::size_t i = 0; i < code.size() && best > 0; ++i)
        best = std::min(best, hamming_distance(v, code.word(i)));
    return best;
}

namespace {

void sphere_rec(const Vertex& center, std::uint32_t r, std::uint32_t from,
                std::vector<Symbol>& current, std::vector<Vertex>& out) {
    if (r == 0) {
        out.emplace_back(center.params(), current);
        return;
    }
    const std::uint32_t m = center.size();
    if (from + r > m) return;
    for (std::uint32_t i = from; i + r <= m; ++i) {
        for (Symbol s = 0; s < center.params().q(); ++s) {
            if (s == center[i]) continue;
            current[i] = s;
            sphere_rec(center, r - 1, i + 1, current, out);
            current[i] = center[i];
        }
    }
}

}  // namespace

std::vector<Vertex> sphere(const Vertex& v, std::uint32_t r) {
    std::vector<Vertex> out;
    if (r > v.size()) return out;
    std::vector<Symbol> current = v.symbols();
    sphere_rec(v, r, 0, current, out);
    std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) {
        return a.encode() < b.encode();
    });
    return out;
}

namespace {

constexpr std::uint8_t kUnreached = 0xFF;

// Multi-source BFS in H(m,q) from all codewords; BFS layers are exactly the
// distance-to-code values because graph distance equals Hamming distance.
std::vector<std::uint8_t> bfs_distances(const Code& code, std::uint64_t budget) {
    const GraphParams& params = code.params();
    const std::uint64_t n = params.vertex_count();
    if (n > budget)
        throw BudgetError("vertex enumeration budget exceeded: q^m = " +
                          std::to_string(n) + " > " + std::to_string(budget));
    std::vector<std::uint64_t> place(params.m());
    place[0] = 1;
    for (std::uint32_t i = 1; i < params.m(); ++i) place[i] = place[i - 1] * params.q();

    std::vector<std::uint8_t> dist(n, kUnreached);
    std::vector<std::uint64_t> frontier = code.encodings();
    for (std::uint64_t enc : frontier) dist[enc] = 0;
    std::uint8_t level = 0;
    std::vector<std::uint64_t> next;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint64_t enc : frontier) {
            for (std::uint32_t i = 0; i < params.m(); ++i) {
                const std::uint64_t cur = (enc / place[i]) % params.q();
                const std::uint64_t stripped = enc - cur * place[i];
                for (std::uint64_t s = 0; s < params.q(); ++s) {
                    if (s == cur) continue;
                    const std::uint64_t neighbour = stripped + s * place[i];
                    if (dist[neighbour] == kUnreached) {
                        dist[neighbour] = static_cast<std::uint8_t>(level + 1);
                        next.push_back(neighbour);
                    }
                }
            }
        }
        frontier.swap(next);
        ++level;
    }
    return dist;
}

}  // namespace

DistancePartition distance_partition(const Code& code, std::uint64_t budget) {
    std::vector<std::uint8_t> dist = bfs_distances(code, budget);
    std::uint8_t rho = 0;
    for (std::uint8_t d : dist) rho = std::max(rho, d);
    std::vector<std::vector<std::uint64_t>> cells(rho + 1);
    for (std::uint64_t enc = 0; enc < dist.size(); ++enc)
        cells[dist[enc]].push_back(enc);  // ascending enc keeps cells sorted
    return DistancePartition(code.params(), std::move(cells));
}

std::uint32_t covering_radius(const Code& code, std::uint64_t budget) {
    std::vector<std::uint8_t> dist = bfs_distances(code, budget);
    std::uint8_t rho = 0;
    for (std::uint8_t d : dist) rho = std::max(rho, d);
    return rho;
}

}  // namespace hnt
