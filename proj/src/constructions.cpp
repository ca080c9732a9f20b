#include "hnt/constructions.hpp"

#include <algorithm>
#include <string>

namespace hnt {

Code rep(std::uint32_t m, std::uint64_t q) {
    GraphParams params(m, q);
    std::vector<Vertex> words;
    words.reserve(q);
    for (Symbol a = 0; a < q; ++a)
        words.emplace_back(params, std::vector<Symbol>(m, a));
    return Code::from_vertices(params, words);
}

Code singleton_code(std::uint32_t m, std::uint64_t q, Symbol value) {
    GraphParams params(m, q);
    return Code::from_vertices(params, {Vertex(params, std::vector<Symbol>(m, value))});
}

namespace {

void inj_rec(const GraphParams& params, std::vector<Symbol>& word,
             std::vector<bool>& used, std::uint32_t at, std::vector<Vertex>& out) {
    if (at == params.m()) {
        out.emplace_back(params, word);
        return;
    }
    for (Symbol s = 0; s < params.q(); ++s) {
        if (used[s]) continue;
        used[s] = true;
        word[at] = s;
        inj_rec(params, word, used, at + 1, out);
        used[s] = false;
    }
}

}  // namespace

Code inj(std::uint32_t m, std::uint64_t q) {
    if (m >= q)
        throw ParameterError("inj(m,q) requires m < q");
    GraphParams params(m, q);
    std::vector<Vertex> words;
    std::vector<Symbol> word(m);
    std::vector<bool> used(q, false);
    inj_rec(params, word, used, 0, words);
    return Code::from_vertices(params, words);
}

namespace {

void weight_rec(const GraphParams& params, std::vector<Symbol>& word,
                std::uint32_t at, std::uint32_t ones_left, std::vector<Vertex>& out) {
    if (at == params.m()) {
        if (ones_left == 0) out.emplace_back(params, word);
        return;
    }
    if (params.m() - at < ones_left) return;
    word[at] = 0;
    weight_rec(params, word, at + 1, ones_left, out);
    if (ones_left > 0) {
        word[at] = 1;
        weight_rec(params, word, at + 1, ones_left - 1, out);
    }
}

}  // namespace

Code w_code(std::uint32_t m) {
    if (m % 2 == 0 || m < 3)
        throw ParameterError("w_code(m) requires odd m >= 3");
    GraphParams params(m, 2);
    std::vector<Vertex> words;
    std::vector<Symbol> word(m);
    weight_rec(params, word, 0, (m - 1) / 2, words);
    weight_rec(params, word, 0, (m + 1) / 2, words);
    return Code::from_vertices(params, words);
}

namespace {

void all_code_rec(const GraphParams& params, std::vector<Symbol>& word,
                  std::vector<std::uint32_t>& remaining, std::uint32_t at,
                  std::vector<Vertex>& out) {
    if (at == params.m()) {
        out.emplace_back(params, word);
        return;
    }
    for (Symbol s = 0; s < params.q(); ++s) {
        if (remaining[s] == 0) continue;
        --remaining[s];
        word[at] = s;
        all_code_rec(params, word, remaining, at + 1, out);
        ++remaining[s];
    }
}

}  // namespace

Code all_code(std::uint32_t p, std::uint64_t q) {
    if (p < 1) throw ParameterError("all_code(p,q) requires p >= 1");
    const std::uint64_t m64 = static_cast<std::uint64_t>(p) * q;
    if (m64 > 64) throw ParameterError("all_code(p,q): pq entries do not fit H(m,q)");
    GraphParams params(static_cast<std::uint32_t>(m64), q);
    std::vector<Vertex> words;
    std::vector<Symbol> word(params.m());
    std::vector<std::uint32_t> remaining(q, p);
    all_code_rec(params, word, remaining, 0, words);
    return Code::from_vertices(params, words);
}

Code prod_code(const Code& code, std::uint32_t l) {
    if (l < 1) throw ParameterError("prod_code requires l >= 1");
    const std::uint32_t k = code.params().m();
    if (static_cast<std::uint64_t>(k) * l > 64)
        throw ParameterError("prod_code: kl entries do not fit H(m,q)");
    GraphParams params(k * l, code.params().q());
    std::vector<std::uint64_t> encodings{0};
    std::uint64_t block_place = 1;
    for (std::uint32_t i = 0; i < k; ++i) block_place *= code.params().q();
    // Extend one block at a time; each factor shifts by q^k.
    std::uint64_t place = 1;
    for (std::uint32_t t = 0; t < l; ++t) {
        std::vector<std::uint64_t> next;
        next.reserve(encodings.size() * code.size());
        for (std::uint64_t prefix : encodings)
            for (std::uint64_t w : code.encodings()) next.push_back(prefix + w * place);
        encodings.swap(next);
        place *= block_place;
    }
    return Code::from_encodings(params, std::move(encodings));
}

Code rep_l_code(const Code& code, std::uint32_t l) {
    if (l < 1) throw ParameterError("rep_l_code requires l >= 1");
    const std::uint32_t k = code.params().m();
    if (static_cast<std::uint64_t>(k) * l > 64)
        throw ParameterError("rep_l_code: kl entries do not fit H(m,q)");
    GraphParams params(k * l, code.params().q());
    std::uint64_t block_place = 1;
    for (std::uint32_t i = 0; i < k; ++i) block_place *= code.params().q();
    std::vector<std::uint64_t> encodings;
    encodings.reserve(code.size());
    for (std::uint64_t w : code.encodings()) {
        std::uint64_t enc = 0;
        std::uint64_t place = 1;
        for (std::uint32_t t = 0; t < l; ++t) {
            enc += w * place;
            place *= block_place;
        }
        encodings.push_back(enc);
    }
    return Code::from_encodings(params, std::move(encodings));
}

Code build_family(const CodeFamilySpec& spec) {
    switch (spec.family) {
        case CodeFamily::Rep:
            return rep(spec.m, spec.q);
        case CodeFamily::Singleton:
            return singleton_code(spec.m, spec.q);
        case CodeFamily::Inj:
            return inj(spec.m, spec.q);
        case CodeFamily::W:
            return w_code(spec.m);
        case CodeFamily::All:
            return all_code(spec.p, spec.q);
        case CodeFamily::Prod:
            if (!spec.inner)
                throw ParameterError("Prod requires an inner code");
            return prod_code(*spec.inner, spec.l);
        case CodeFamily::RepL:
            if (!spec.inner)
                throw ParameterError("RepL requires an inner code");
            return rep_l_code(*spec.inner, spec.l);
    }
    throw ParameterError("unknown code family");
}

// ---- Groups ----

namespace {

// Standard generators of S_n: the transposition (0 1) and the full cycle.
std::vector<Perm> symmetric_gens(std::uint32_t n) {
    std::vector<Perm> gens;
    if (n >= 2) gens.push_back(Perm::transposition(n, 0, 1));
    if (n >= 3) gens.push_back(Perm::full_cycle(n));
    if (gens.empty()) gens.push_back(Perm(n));
    return gens;
}

}  // namespace

GroupGens diag_full_group(std::uint32_t m, std::uint64_t q) {
    GraphParams params(m, q);
    std::vector<AutElem> gens;
    for (const Perm& h : symmetric_gens(static_cast<std::uint32_t>(q)))
        gens.push_back(AutElem::diagonal(params, h));
    for (const Perm& sigma : symmetric_gens(m))
        if (!sigma.is_identity()) gens.push_back(AutElem::pure_top(params, sigma));
    return GroupGens(params, std::move(gens));
}

GroupGens block_diag_group(std::uint32_t k, std::uint32_t l, std::uint64_t q) {
    if (k < 1 || l < 1)
        throw ParameterError("block_diag_group requires k >= 1 and l >= 1");
    if (static_cast<std::uint64_t>(k) * l > 64)
        throw ParameterError("block_diag_group: kl entries do not fit H(m,q)");
    GraphParams params(k * l, q);
    const Perm id_q(static_cast<std::uint32_t>(q));
    std::vector<AutElem> gens;

    // Diagonal alphabet generators acting on one block at a time.
    for (std::uint32_t t = 0; t < l; ++t) {
        for (const Perm& h : symmetric_gens(static_cast<std::uint32_t>(q))) {
            std::vector<Perm> base(params.m(), id_q);
            for (std::uint32_t j = 0; j < k; ++j) base[t * k + j] = h;
            gens.emplace_back(params, std::move(base), Perm(params.m()));
        }
    }
    // Within-block entry permutations.
    for (std::uint32_t t = 0; t < l; ++t) {
        if (k >= 2)
            gens.push_back(AutElem::pure_top(
                params, Perm::transposition(params.m(), t * k, t * k + 1)));
        if (k >= 3) {
            std::vector<std::uint32_t> images(params.m());
            for (std::uint32_t e = 0; e < params.m(); ++e) images[e] = e;
            for (std::uint32_t j = 0; j < k; ++j)
                images[t * k + j] = t * k + (j + 1) % k;
            gens.push_back(AutElem::pure_top(params, Perm::from_images(std::move(images))));
        }
    }
    // Order-preserving block permutations: a block swap and, for l >= 3, a
    // block cycle.
    auto block_perm = [&](const Perm& rho) {
        std::vector<std::uint32_t> images(params.m());
        for (std::uint32_t t = 0; t < l; ++t)
            for (std::uint32_t j = 0; j < k; ++j) images[t * k + j] = rho[t] * k + j;
        return AutElem::pure_top(params, Perm::from_images(std::move(images)));
    };
    for (const Perm& rho : symmetric_gens(l))
        if (!rho.is_identity()) gens.push_back(block_perm(rho));

    return GroupGens(params, std::move(gens));
}

GroupGens k2_group(std::uint32_t l, std::uint64_t q) {
    if (l < 2) throw ParameterError("k2_group requires l >= 2");
    return block_diag_group(2, l, q);
}

GroupGens section4_group(const GroupGens& inner, std::uint32_t l,
                         std::optional<std::vector<AutElem>> kernel_gens,
                         std::uint64_t budget) {
    if (l < 1) throw ParameterError("section4_group requires l >= 1");
    const std::uint32_t k = inner.params.m();
    if (static_cast<std::uint64_t>(k) * l > 64)
        throw ParameterError("section4_group: kl entries do not fit H(m,q)");
    GraphParams params(k * l, inner.params.q());
    const Perm id_q(static_cast<std::uint32_t>(inner.params.q()));

    std::vector<AutElem> kernel;
    if (kernel_gens) {
        kernel = std::move(*kernel_gens);
        for (const AutElem& b : kernel) {
            require_same_params(b.params, inner.params);
            if (!mu(b).is_identity())
                throw ParameterError("section4_group: supplied kernel generator "
                                     "acts nontrivially on entries");
        }
    } else {
        kernel = kernel_on_entries(enumerate_group(inner, budget)).elements;
    }

    std::vector<AutElem> gens;
    // Kernel generators planted independently in each block.
    for (std::uint32_t t = 0; t < l; ++t) {
        for (const AutElem& b : kernel) {
            if (b.is_identity()) continue;
            std::vector<Perm> base(params.m(), id_q);
            for (std::uint32_t j = 0; j < k; ++j) base[t * k + j] = b.base[j];
            gens.emplace_back(params, std::move(base), Perm(params.m()));
        }
    }
    // Diagonal copies of the inner generators across all blocks.
    for (const AutElem& x : inner.gens) {
        std::vector<Perm> base;
        base.reserve(params.m());
        std::vector<std::uint32_t> images(params.m());
        for (std::uint32_t t = 0; t < l; ++t)
            for (std::uint32_t j = 0; j < k; ++j) {
                base.push_back(x.base[j]);
                images[t * k + j] = t * k + mu(x)[j];
            }
        gens.emplace_back(params, std::move(base), Perm::from_images(std::move(images)));
    }
    // Order-preserving block permutations.
    for (const Perm& rho : symmetric_gens(l)) {
        if (rho.is_identity()) continue;
        std::vector<std::uint32_t> images(params.m());
        for (std::uint32_t t = 0; t < l; ++t)
            for (std::uint32_t j = 0; j < k; ++j) images[t * k + j] = rho[t] * k + j;
        gens.push_back(AutElem::pure_top(params, Perm::from_images(std::move(images))));
    }
    if (gens.empty()) gens.push_back(AutElem::identity(params));
    return GroupGens(params, std::move(gens));
}

EntryPartition consecutive_blocks(std::uint32_t k, std::uint32_t l) {
    EntryPartition out;
    for (std::uint32_t t = 0; t < l; ++t) {
        std::vector<std::uint32_t> block;
        for (std::uint32_t j = 0; j < k; ++j) block.push_back(t * k + j);
        out.push_back(std::move(block));
    }
    return out;
}

EntryPartition position_classes(std::uint32_t k, std::uint32_t l) {
    EntryPartition out;
    for (std::uint32_t j = 0; j < k; ++j) {
        std::vector<std::uint32_t> block;
        for (std::uint32_t t = 0; t < l; ++t) block.push_back(t * k + j);
        out.push_back(std::move(block));
    }
    return out;
}

}  // namespace hnt
