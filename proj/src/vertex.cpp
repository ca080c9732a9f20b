#include "hnt/vertex.hpp"

#include <algorithm>
#include <map>

namespace hnt {

Vertex::Vertex(GraphParams params, std::vector<Symbol> symbols)
    : params_(params), symbols_(std::move(symbols)) {
    if (symbols_.size() != params_.m())
        throw ParameterError("Vertex: expected " + std::to_string(params_.m()) +
                             " symbols, got " + std::to_string(symbols_.size()));
    for (Symbol s : symbols_)
        if (s >= params_.q())
            throw ParameterError("Vertex: symbol " + std::to_string(s) +
                                 " outside alphabet of size " +
                                 std::to_string(params_.q()));
}

std::uint64_t Vertex::encode() const {
    std::uint64_t value = 0;
    std::uint64_t place = 1;
    for (Symbol s : symbols_) {
        value += s * place;
        place *= params_.q();
    }
    return value;
}

Vertex Vertex::decode(const GraphParams& params, std::uint64_t enc) {
    if (enc >= params.vertex_count())
        throw ParameterError("Vertex::decode: encoding out of range");
    std::vector<Symbol> symbols(params.m());
    for (std::uint32_t i = 0; i < params.m(); ++i) {
        symbols[i] = static_cast<Symbol>(enc % params.q());
        enc /= params.q();
    }
    return Vertex(params, std::move(symbols));
}

std::uint32_t hamming_distance(const Vertex& a, const Vertex& b) {
    require_same_params(a.params(), b.params());
    std::uint32_t d = 0;
    for (std::uint32_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

std::vector<std::pair<Symbol, std::uint32_t>> composition(const Vertex& v) {
    std::map<Symbol, std::uint32_t> counts;
    for (Symbol s : v.symbols()) ++counts[s];
    return {counts.begin(), counts.end()};
}

NumProfile::NumProfile(std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs)
    : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].first == 0 || pairs_[i].second == 0)
            throw ParameterError("NumProfile: zero multiplicity or symbol count");
        if (i > 0 && pairs_[i].first == pairs_[i - 1].first)
            throw ParameterError("NumProfile: duplicate multiplicity");
    }
}

NumProfile num_profile(const Vertex& v) {
    std::map<std::uint32_t, std::uint32_t> by_multiplicity;
    for (const auto& [symbol, count] : composition(v)) ++by_multiplicity[count];
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(
        by_multiplicity.begin(), by_multiplicity.end());
    return NumProfile(std::move(pairs));
}

std::string to_string(const Vertex& v) {
    std::string out = "(";
    for (std::uint32_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string to_string(const NumProfile& profile) {
    std::string out = "{";
    bool first = true;
    for (const auto& [p, s] : profile.pairs()) {
        if (!first) out += ",";
        first = false;
        out += "(" + std::to_string(p) + "," + std::to_string(s) + ")";
    }
    return out + "}";
}

}  // namespace hnt
