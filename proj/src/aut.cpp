#include "hnt/aut.hpp"

namespace hnt {

AutElem::AutElem(GraphParams p, std::vector<Perm> b, Perm t)
    : params(p), base(std::move(b)), top(std::move(t)) {
    if (base.size() != params.m())
        throw ParameterError("AutElem: expected one alphabet permutation per entry");
    for (const Perm& h : base)
        if (h.degree() != params.q())
            throw ParameterError("AutElem: alphabet permutation of wrong degree");
    if (top.degree() != params.m())
        throw ParameterError("AutElem: entry permutation of wrong degree");
}

AutElem AutElem::identity(const GraphParams& params) {
    return AutElem(params,
                   std::vector<Perm>(params.m(), Perm(static_cast<std::uint32_t>(params.q()))),
                   Perm(params.m()));
}

AutElem AutElem::diagonal(const GraphParams& params, const Perm& h) {
    return AutElem(params, std::vector<Perm>(params.m(), h), Perm(params.m()));
}

AutElem AutElem::pure_top(const GraphParams& params, Perm sigma) {
    return AutElem(params,
                   std::vector<Perm>(params.m(), Perm(static_cast<std::uint32_t>(params.q()))),
                   std::move(sigma));
}

bool AutElem::is_identity() const {
    if (!top.is_identity()) return false;
    for (const Perm& h : base)
        if (!h.is_identity()) return false;
    return true;
}

bool AutElem::is_diagonal() const {
    for (std::uint32_t i = 1; i < base.size(); ++i)
        if (!(base[i] == base[0])) return false;
    return true;
}

std::string AutElem::key() const {
    std::string out;
    out.reserve((params.m() * params.q() + params.m()) * 4);
    auto push = [&out](std::uint32_t v) {
        out.push_back(static_cast<char>(v & 0xFF));
        out.push_back(static_cast<char>((v >> 8) & 0xFF));
        out.push_back(static_cast<char>((v >> 16) & 0xFF));
        out.push_back(static_cast<char>((v >> 24) & 0xFF));
    };
    for (const Perm& h : base)
        for (std::uint32_t v : h.images()) push(v);
    for (std::uint32_t v : top.images()) push(v);
    return out;
}

Vertex apply_aut(const AutElem& x, const Vertex& v) {
    require_same_params(x.params, v.params());
    const std::uint32_t m = x.params.m();
    const Perm top_inv = x.top.inverse();
    std::vector<Symbol> out(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::uint32_t j = top_inv[i];
        out[i] = x.base[j][v[j]];
    }
    return Vertex(x.params, std::move(out));
}

std::uint64_t apply_aut(const AutElem& x, std::uint64_t enc) {
    return apply_aut(x, Vertex::decode(x.params, enc)).encode();
}

AutElem compose_aut(const AutElem& x, const AutElem& y) {
    require_same_params(x.params, y.params);
    std::vector<Perm> base;
    base.reserve(x.params.m());
    for (std::uint32_t j = 0; j < x.params.m(); ++j)
        base.push_back(x.base[j].then(y.base[x.top[j]]));
    return AutElem(x.params, std::move(base), x.top.then(y.top));
}

AutElem inverse_aut(const AutElem& x) {
    const Perm top_inv = x.top.inverse();
    std::vector<Perm> base;
    base.reserve(x.params.m());
    for (std::uint32_t j = 0; j < x.params.m(); ++j)
        base.push_back(x.base[top_inv[j]].inverse());
    return AutElem(x.params, std::move(base), top_inv);
}

const Perm& mu(const AutElem& x) { return x.top; }

const Perm& phi(const AutElem& x, std::uint32_t entry) {
    if (entry >= x.params.m())
        throw ParameterError("phi: entry index out of range");
    if (x.top[entry] != entry)
        throw ParameterError("phi: element does not stabilize entry " +
                             std::to_string(entry));
    return x.base[entry];
}

}  // namespace hnt
