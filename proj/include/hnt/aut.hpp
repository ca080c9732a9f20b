#pragma once

#include <string>
#include <vector>

#include "hnt/perm.hpp"
#include "hnt/vertex.hpp"

namespace hnt {

// One automorphism of H(m,q) in base-then-top normal form: m alphabet
// permutations h_0,...,h_{m-1} (the base part) followed by one entry
// permutation sigma (the top part). Acting on a vertex v, entry i of the
// image is v[j]^{h_j} where j = i^{sigma^{-1}}.
struct AutElem {
    GraphParams params;
    std::vector<Perm> base;  // m permutations of degree q
    Perm top;                // degree m

    AutElem(GraphParams p, std::vector<Perm> b, Perm t);

    static AutElem identity(const GraphParams& params);
    // Base part (h,...,h) with trivial top.
    static AutElem diagonal(const GraphParams& params, const Perm& h);
    // Trivial base with the given entry permutation.
    static AutElem pure_top(const GraphParams& params, Perm sigma);

    bool is_identity() const;
    // All m base permutations equal (element of Diag_m(S_q) x top).
    bool is_diagonal() const;

    // Canonical byte key for hashing and deterministic ordering.
    std::string key() const;

    friend bool operator==(const AutElem& a, const AutElem& b) {
        return a.params == b.params && a.base == b.base && a.top == b.top;
    }
};

Vertex apply_aut(const AutElem& x, const Vertex& v);
std::uint64_t apply_aut(const AutElem& x, std::uint64_t enc);

// Composition "x then y": apply(compose_aut(x,y), v) == apply(y, apply(x, v)).
AutElem compose_aut(const AutElem& x, const AutElem& y);
AutElem inverse_aut(const AutElem& x);

// Induced action on the set of entries.
const Perm& mu(const AutElem& x);

// Induced action on the alphabet in entry i; defined only when x fixes i.
const Perm& phi(const AutElem& x, std::uint32_t entry);

}  // namespace hnt
