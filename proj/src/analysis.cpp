#include "hnt/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace hnt {

// ---- Projections ----

namespace {

void validate_entry_set(const GraphParams& params,
                        const std::vector<std::uint32_t>& entries) {
    if (entries.empty())
        throw ParameterError("projection: entry set must be nonempty");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] >= params.m())
            throw ParameterError("projection: entry " + std::to_string(entries[i]) +
                                 " out of range");
        if (i > 0 && entries[i] <= entries[i - 1])
            throw ParameterError("projection: entries must be strictly increasing");
    }
}

}  // namespace

Vertex project_vertex(const Vertex& v, const std::vector<std::uint32_t>& entries) {
    validate_entry_set(v.params(), entries);
    GraphParams sub(static_cast<std::uint32_t>(entries.size()), v.params().q());
    std::vector<Symbol> symbols;
    symbols.reserve(entries.size());
    for (std::uint32_t j : entries) symbols.push_back(v[j]);
    return Vertex(sub, std::move(symbols));
}

Code project_code(const Code& code, const std::vector<std::uint32_t>& entries) {
    validate_entry_set(code.params(), entries);
    GraphParams sub(static_cast<std::uint32_t>(entries.size()), code.params().q());
    std::vector<std::uint64_t> encodings;
    encodings.reserve(code.size());
    for (std::size_t i = 0; i < code.size(); ++i)
        encodings.push_back(project_vertex(code.word(i), entries).encode());
    return Code::from_encodings(sub, std::move(encodings), DuplicatePolicy::Collapse);
}

AutElem chi(const AutElem& x, const std::vector<std::uint32_t>& entries) {
    validate_entry_set(x.params, entries);
    const std::uint32_t k = static_cast<std::uint32_t>(entries.size());
    std::vector<std::uint32_t> induced(k);
    for (std::uint32_t a = 0; a < k; ++a) {
        const std::uint32_t target = mu(x)[entries[a]];
        const auto it = std::lower_bound(entries.begin(), entries.end(), target);
        if (it == entries.end() || *it != target)
            throw ParameterError("chi: element does not stabilize the entry set");
        induced[a] = static_cast<std::uint32_t>(it - entries.begin());
    }
    std::vector<Perm> base;
    base.reserve(k);
    for (std::uint32_t j : entries) base.push_back(x.base[j]);
    GraphParams sub(k, x.params.q());
    return AutElem(sub, std::move(base), Perm::from_images(std::move(induced)));
}

GroupGens chi_group(const EnumeratedGroup& group, const std::vector<std::uint32_t>& entries) {
    validate_entry_set(group.gens.params, entries);
    std::vector<AutElem> images;
    std::unordered_set<std::string> seen;
    for (const AutElem& x : group.elements) {
        bool stabilizes = true;
        for (std::uint32_t j : entries) {
            if (!std::binary_search(entries.begin(), entries.end(), mu(x)[j])) {
                stabilizes = false;
                break;
            }
        }
        if (!stabilizes) continue;
        AutElem image = chi(x, entries);
        if (seen.insert(image.key()).second) images.push_back(std::move(image));
    }
    GraphParams sub(static_cast<std::uint32_t>(entries.size()), group.gens.params.q());
    return GroupGens(sub, std::move(images));
}

// ---- Neighbour transitivity ----

namespace {

NtReport nt_core(const GroupGens& group, const Code& code, std::uint32_t s,
                 const DistancePartition& partition) {
    NtReport report(code.params());
    report.code_size = code.size();
    if (code.size() >= 2) report.delta = min_distance(code);
    report.rho = partition.rho();
    if (s > partition.rho())
        throw ParameterError("level s=" + std::to_string(s) +
                             " exceeds covering radius " +
                             std::to_string(partition.rho()));
    report.s = s;
    report.diagonal = group.all_diagonal();
    report.entry_transitive =
        entry_orbit(group, 0).size() == code.params().m();
    report.verdict = true;
    for (std::uint32_t r = 0; r <= s; ++r) {
        const bool transitive = is_transitive_on(group, partition.cell(r));
        report.levels.push_back({r, partition.cell(r).size(), transitive});
        if (!transitive) report.verdict = false;
    }
    return report;
}

}  // namespace

NtReport is_s_neighbour_transitive(const GroupGens& group, const Code& code,
                                   std::uint32_t s, std::uint64_t vertex_budget) {
    require_same_params(group.params, code.params());
    return nt_core(group, code, s, distance_partition(code, vertex_budget));
}

bool is_completely_transitive(const GroupGens& group, const Code& code,
                              std::uint64_t vertex_budget) {
    require_same_params(group.params, code.params());
    const DistancePartition partition = distance_partition(code, vertex_budget);
    return nt_core(group, code, partition.rho(), partition).verdict;
}

bool is_diagonally_nt(const GroupGens& group, const Code& code, std::uint32_t s,
                      std::uint64_t vertex_budget) {
    if (!group.all_diagonal()) return false;
    return is_s_neighbour_transitive(group, code, s, vertex_budget).verdict;
}

AlphabetAnalysis alphabet_stabilizer_analysis(const GroupGens& group,
                                              std::uint32_t entry,
                                              std::uint64_t group_budget) {
    const GroupGens stabilizer = point_stabilizer(group, entry);
    std::vector<Perm> alphabet_gens;
    alphabet_gens.reserve(stabilizer.gens.size());
    for (const AutElem& x : stabilizer.gens) alphabet_gens.push_back(phi(x, entry));
    const std::vector<Perm> elements = enumerate_perm_group(alphabet_gens, group_budget);
    return {elements.size(), is_almost_simple(elements)};
}

bool is_alphabet_almost_simple_nt(const GroupGens& group, const Code& code,
                                  std::uint32_t s, std::uint64_t vertex_budget,
                                  std::uint64_t group_budget) {
    const NtReport report = is_s_neighbour_transitive(group, code, s, vertex_budget);
    if (!report.verdict || !report.entry_transitive) return false;
    return alphabet_stabilizer_analysis(group, 0, group_budget).almost_simple;
}

// ---- Projection trichotomy ----

namespace {

void validate_partition(const GraphParams& params, const EntryPartition& partition) {
    std::vector<bool> seen(params.m(), false);
    for (const auto& block : partition) {
        validate_entry_set(params, block);
        for (std::uint32_t e : block) {
            if (seen[e])
                throw ParameterError("partition blocks are not disjoint");
            seen[e] = true;
        }
    }
    for (std::uint32_t e = 0; e < params.m(); ++e)
        if (!seen[e]) throw ParameterError("partition does not cover every entry");
}

}  // namespace

std::vector<ProjectionCase> projection_cases(const Code& code,
                                             const EnumeratedGroup& group,
                                             const EntryPartition& partition,
                                             std::uint64_t vertex_budget) {
    require_same_params(group.gens.params, code.params());
    validate_partition(code.params(), partition);
    if (!partition_invariant(group.gens, partition))
        throw ParameterError("projection_cases: partition is not invariant "
                             "under the entry action");

    std::vector<ProjectionCase> cases;
    for (const auto& block : partition) {
        const Code projected = project_code(code, block);
        const DistancePartition dp = distance_partition(projected, vertex_budget);
        const GroupGens induced = chi_group(group, block);
        ProjectionCase result{block, ProjectionKind::TwoNT, std::nullopt, dp.rho()};
        if (projected.size() >= 2) result.delta = min_distance(projected);

        bool clause = false;
        if (dp.rho() == 0) {
            result.kind = ProjectionKind::CompleteCode;
            clause = result.delta == 1 && is_transitive_on(induced, projected.encodings());
        } else if (dp.rho() == 1) {
            result.kind = ProjectionKind::RadiusOneNT;
            clause = result.delta && (*result.delta == 2 || *result.delta == 3) &&
                     is_transitive_on(induced, dp.cell(0)) &&
                     is_transitive_on(induced, dp.cell(1));
        } else {
            result.kind = ProjectionKind::TwoNT;
            clause = is_transitive_on(induced, dp.cell(0)) &&
                     is_transitive_on(induced, dp.cell(1)) &&
                     is_transitive_on(induced, dp.cell(2));
        }
        if (!clause)
            throw ParameterError("projection trichotomy clause failed on block "
                                 "starting at entry " + std::to_string(block.front()));
        cases.push_back(std::move(result));
    }
    return cases;
}

// ---- Separating witness pairs ----

namespace {

std::vector<Symbol> witness_two_touched(std::uint32_t m, Symbol first, Symbol second) {
    std::vector<Symbol> v(m, 0);
    v[0] = first;
    v[1] = second;
    return v;
}

// 0-based form of (1,1,1,4,5,...,n): three equal leading symbols, identity tail.
std::vector<Symbol> witness_triple_repeat(std::uint32_t n) {
    std::vector<Symbol> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = (i < 3) ? 0 : i;
    return v;
}

// 0-based form of (1,1,3,3,5,6,...,n): two repeated pairs, identity tail.
std::vector<Symbol> witness_double_pair(std::uint32_t n) {
    std::vector<Symbol> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = (i < 2) ? 0 : (i < 4) ? 2 : i;
    return v;
}

// 0-based form of (1,1,3,4,5,...,n): one repeated pair, identity tail.
std::vector<Symbol> witness_single_pair(std::uint32_t n) {
    std::vector<Symbol> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = (i < 2) ? 0 : i;
    return v;
}

std::vector<Symbol> concat(std::vector<Symbol> head, const std::vector<Symbol>& tail,
                           std::uint32_t copies) {
    for (std::uint32_t t = 0; t < copies; ++t)
        head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

WitnessReport separating_witnesses(WitnessFamily family, std::uint32_t m,
                                   std::uint64_t q, std::uint32_t p,
                                   std::uint64_t vertex_budget) {
    std::optional<Code> code;
    std::vector<Symbol> mu_syms;
    std::vector<Symbol> nu_syms;
    switch (family) {
        case WitnessFamily::Singleton:
            if (q < 3 || m < 2)
                throw ParameterError("singleton witnesses require q >= 3 and m >= 2");
            code = singleton_code(m, q);
            mu_syms = witness_two_touched(m, 1, 1);
            nu_syms = witness_two_touched(m, 1, 2);
            break;
        case WitnessFamily::Rep:
            if (q < 3 || m <= q)
                throw ParameterError("repetition witnesses require m > q >= 3");
            code = rep(m, q);
            mu_syms = witness_two_touched(m, 1, 1);
            nu_syms = witness_two_touched(m, 1, 2);
            break;
        case WitnessFamily::Inj:
            if (m < 4 || m >= q)
                throw ParameterError("injective witnesses require 4 <= m < q");
            code = inj(m, q);
            mu_syms = witness_triple_repeat(m);
            nu_syms = witness_double_pair(m);
            break;
        case WitnessFamily::AllQQ:
            if (q < 4 || m != q)
                throw ParameterError("balanced witnesses with p=1 require m = q >= 4");
            code = all_code(1, q);
            mu_syms = witness_triple_repeat(m);
            nu_syms = witness_double_pair(m);
            break;
        case WitnessFamily::AllPQ: {
            if (p < 2 || q <= p)
                throw ParameterError("balanced witnesses require q > p >= 2");
            if (m != p * q)
                throw ParameterError("balanced witnesses require m = pq");
            code = all_code(p, q);
            std::vector<Symbol> alpha(static_cast<std::uint32_t>(q));
            for (std::uint32_t i = 0; i < q; ++i) alpha[i] = i;
            mu_syms = concat(witness_triple_repeat(static_cast<std::uint32_t>(q)),
                             alpha, p - 1);
            nu_syms = concat(concat(witness_single_pair(static_cast<std::uint32_t>(q)),
                                    witness_single_pair(static_cast<std::uint32_t>(q)), 1),
                             alpha, p - 2);
            break;
        }
    }
    const GraphParams& params = code->params();
    WitnessReport report(*code, Vertex(params, std::move(mu_syms)),
                         Vertex(params, std::move(nu_syms)));
    report.dist_mu = dist_to_code(report.mu, report.code);
    report.dist_nu = dist_to_code(report.nu, report.code);
    report.profile_mu = num_profile(report.mu);
    report.profile_nu = num_profile(report.nu);
    report.profiles_differ = !(report.profile_mu == report.profile_nu);
    if (params.vertex_count() > vertex_budget)
        throw BudgetError("witness orbit check exceeds the vertex budget");
    const auto orbit = vertex_orbit(diag_full_group(m, q), report.mu.encode());
    report.orbit_separated =
        !std::binary_search(orbit.begin(), orbit.end(), report.nu.encode());
    report.pass = report.dist_mu == 2 && report.dist_nu == 2 &&
                  report.profiles_differ && report.orbit_separated;
    return report;
}

// ---- Equivalence of codes ----

namespace {

constexpr Symbol kUnset = ~Symbol{0};

// Backtracking search for automorphisms mapping code A onto code B: choose an
// entry permutation column by column (columns must have equal frequency
// signatures), then grow per-entry alphabet maps word by word.
class EquivSearch {
 public:
    EquivSearch(const Code& a, const Code& b, std::uint64_t node_budget)
        : params_(a.params()),
          m_(params_.m()),
          q_(static_cast<std::uint32_t>(params_.q())),
          node_budget_(node_budget) {
        decode(a, words_a_);
        decode(b, words_b_);
        freq_a_ = frequencies(words_a_);
        freq_b_ = frequencies(words_b_);
        sig_a_ = signatures(freq_a_);
        sig_b_ = signatures(freq_b_);
    }

    // Sorted multisets of column signatures; unequal multisets rule out any
    // equivalence.
    bool signatures_compatible() const {
        std::vector<std::vector<std::uint32_t>> a = sig_a_;
        std::vector<std::vector<std::uint32_t>> b = sig_b_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    // Runs the search, invoking on_solution for each complete assignment;
    // stops early when the callback returns true. Returns true when stopped
    // by the callback.
    bool run(const std::function<bool(const AutElem&)>& on_solution) {
        on_solution_ = &on_solution;
        sigma_.assign(m_, 0);
        column_used_.assign(m_, false);
        forward_.assign(m_, std::vector<Symbol>(q_, kUnset));
        backward_.assign(m_, std::vector<Symbol>(q_, kUnset));
        word_used_.assign(words_b_.size(), false);
        nodes_ = 0;
        exhausted_ = false;
        return assign_column(0);
    }

    bool exhausted() const { return exhausted_; }

 private:
    static void decode(const Code& code, std::vector<std::vector<Symbol>>& out) {
        out.reserve(code.size());
        for (std::size_t i = 0; i < code.size(); ++i)
            out.push_back(code.word(i).symbols());
    }

    std::vector<std::vector<std::uint32_t>> frequencies(
        const std::vector<std::vector<Symbol>>& words) const {
        std::vector<std::vector<std::uint32_t>> freq(m_,
                                                     std::vector<std::uint32_t>(q_, 0));
        for (const auto& w : words)
            for (std::uint32_t j = 0; j < m_; ++j) ++freq[j][w[j]];
        return freq;
    }

    std::vector<std::vector<std::uint32_t>> signatures(
        const std::vector<std::vector<std::uint32_t>>& freq) const {
        std::vector<std::vector<std::uint32_t>> sigs(m_);
        for (std::uint32_t j = 0; j < m_; ++j) {
            for (std::uint32_t count : freq[j])
                if (count > 0) sigs[j].push_back(count);
            std::sort(sigs[j].begin(), sigs[j].end());
        }
        return sigs;
    }

    bool spend_node() {
        if (++nodes_ > node_budget_) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    bool assign_column(std::uint32_t j) {
        if (exhausted_) return true;
        if (j == m_) return match_word(0);
        for (std::uint32_t t = 0; t < m_; ++t) {
            if (column_used_[t] || sig_a_[j] != sig_b_[t]) continue;
            if (!spend_node()) return true;
            sigma_[j] = t;
            column_used_[t] = true;
            if (assign_column(j + 1)) return true;
            column_used_[t] = false;
        }
        return false;
    }

    bool match_word(std::size_t wi) {
        if (exhausted_) return true;
        if (wi == words_a_.size()) return (*on_solution_)(build_witness());
        const std::vector<Symbol>& w = words_a_[wi];
        for (std::size_t b = 0; b < words_b_.size(); ++b) {
            if (word_used_[b]) continue;
            if (!spend_node()) return true;
            const std::vector<Symbol>& image = words_b_[b];
            std::vector<std::uint32_t> touched;
            bool ok = true;
            for (std::uint32_t j = 0; j < m_; ++j) {
                const Symbol from = w[j];
                const Symbol to = image[sigma_[j]];
                if (freq_a_[j][from] != freq_b_[sigma_[j]][to]) {
                    ok = false;
                    break;
                }
                if (forward_[j][from] == kUnset && backward_[j][to] == kUnset) {
                    forward_[j][from] = to;
                    backward_[j][to] = from;
                    touched.push_back(j);
                } else if (forward_[j][from] != to) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                word_used_[b] = true;
                if (match_word(wi + 1)) return true;
                word_used_[b] = false;
            }
            for (auto it = touched.rbegin(); it != touched.rend(); ++it) {
                const std::uint32_t j = *it;
                backward_[j][forward_[j][w[j]]] = kUnset;
                forward_[j][w[j]] = kUnset;
            }
        }
        return false;
    }

    // Complete the partial alphabet maps: unmapped symbols go to unmapped
    // targets in increasing order.
    AutElem build_witness() const {
        std::vector<Perm> base;
        base.reserve(m_);
        for (std::uint32_t j = 0; j < m_; ++j) {
            std::vector<std::uint32_t> images(q_, kUnset);
            std::vector<bool> taken(q_, false);
            for (Symbol s = 0; s < q_; ++s)
                if (forward_[j][s] != kUnset) {
                    images[s] = forward_[j][s];
                    taken[forward_[j][s]] = true;
                }
            Symbol next = 0;
            for (Symbol s = 0; s < q_; ++s) {
                if (images[s] != kUnset) continue;
                while (taken[next]) ++next;
                images[s] = next;
                taken[next] = true;
            }
            base.push_back(Perm::from_images(std::move(images)));
        }
        std::vector<std::uint32_t> top(sigma_.begin(), sigma_.end());
        return AutElem(params_, std::move(base), Perm::from_images(std::move(top)));
    }

    GraphParams params_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::uint64_t node_budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;

    std::vector<std::vector<Symbol>> words_a_;
    std::vector<std::vector<Symbol>> words_b_;
    std::vector<std::vector<std::uint32_t>> freq_a_;
    std::vector<std::vector<std::uint32_t>> freq_b_;
    std::vector<std::vector<std::uint32_t>> sig_a_;
    std::vector<std::vector<std::uint32_t>> sig_b_;

    std::vector<std::uint32_t> sigma_;
    std::vector<bool> column_used_;
    std::vector<std::vector<Symbol>> forward_;
    std::vector<std::vector<Symbol>> backward_;
    std::vector<bool> word_used_;
    const std::function<bool(const AutElem&)>* on_solution_ = nullptr;
};

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > ~std::uint64_t{0} / a) return std::nullopt;
    return a * b;
}

std::optional<std::uint64_t> factorial64(std::uint64_t n) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        auto next = checked_mul(out, i);
        if (!next) return std::nullopt;
        out = *next;
    }
    return out;
}

// (q!)^m * m!, or nullopt on overflow.
std::optional<std::uint64_t> full_aut_order(const GraphParams& params) {
    auto qf = factorial64(params.q());
    if (!qf) return std::nullopt;
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < params.m(); ++i) {
        auto next = checked_mul(out, *qf);
        if (!next) return std::nullopt;
        out = *next;
    }
    auto mf = factorial64(params.m());
    if (!mf) return std::nullopt;
    return checked_mul(out, *mf);
}

std::vector<Perm> all_perms(std::uint32_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace

void full_aut_for_each(const GraphParams& params,
                       const std::function<bool(const AutElem&)>& fn,
                       std::uint64_t budget) {
    const auto order = full_aut_order(params);
    if (!order || *order > budget)
        throw BudgetError("full automorphism group of H(" + std::to_string(params.m()) +
                          "," + std::to_string(params.q()) +
                          ") exceeds the budget of " + std::to_string(budget));
    const std::vector<Perm> alphabet = all_perms(static_cast<std::uint32_t>(params.q()));
    const std::vector<Perm> tops = all_perms(params.m());
    std::vector<std::size_t> odometer(params.m(), 0);
    for (const Perm& top : tops) {
        std::fill(odometer.begin(), odometer.end(), 0);
        while (true) {
            std::vector<Perm> base;
            base.reserve(params.m());
            for (std::size_t idx : odometer) base.push_back(alphabet[idx]);
            if (!fn(AutElem(params, std::move(base), top))) return;
            std::uint32_t at = 0;
            while (at < params.m()) {
                if (++odometer[at] < alphabet.size()) break;
                odometer[at] = 0;
                ++at;
            }
            if (at == params.m()) break;
        }
    }
}

EquivResult is_equivalent(const Code& a, const Code& b, std::uint64_t budget) {
    require_same_params(a.params(), b.params());
    if (a.encodings() == b.encodings())
        return {EquivOutcome::Equivalent, AutElem::identity(a.params())};
    if (a.size() != b.size()) return {EquivOutcome::NotEquivalent, std::nullopt};

    EquivSearch search(a, b, budget);
    if (!search.signatures_compatible())
        return {EquivOutcome::NotEquivalent, std::nullopt};

    std::optional<AutElem> witness;
    const bool stopped = search.run([&witness](const AutElem& x) {
        witness = x;
        return true;
    });
    if (stopped && witness) return {EquivOutcome::Equivalent, witness};
    if (!search.exhausted()) return {EquivOutcome::NotEquivalent, std::nullopt};

    // The backtracking ran out of nodes; sweep the full group when affordable.
    const auto order = full_aut_order(a.params());
    if (order && *order <= budget) {
        std::optional<AutElem> found;
        full_aut_for_each(a.params(), [&](const AutElem& x) {
            for (std::uint64_t enc : a.encodings())
                if (!b.contains(apply_aut(x, enc))) return true;
            found = x;
            return false;
        }, budget);
        if (found) return {EquivOutcome::Equivalent, found};
        return {EquivOutcome::NotEquivalent, std::nullopt};
    }
    return {EquivOutcome::Inconclusive, std::nullopt};
}

std::vector<AutElem> CodeStabilizer::all_gens() const {
    std::vector<AutElem> out = solution_gens;
    out.insert(out.end(), free_gens.begin(), free_gens.end());
    return out;
}

bool CodeStabilizer::kernel_nontrivial() const {
    if (!free_gens.empty()) return true;
    for (const AutElem& x : solution_gens)
        if (mu(x).is_identity() && !x.is_identity()) return true;
    return false;
}

CodeStabilizer code_stabilizer(const Code& code, std::uint64_t node_budget) {
    CodeStabilizer stabilizer;
    EquivSearch search(code, code, node_budget);
    std::unordered_set<std::string> seen;
    search.run([&](const AutElem& x) {
        if (seen.insert(x.key()).second) stabilizer.solution_gens.push_back(x);
        return false;
    });
    if (search.exhausted())
        throw BudgetError("code_stabilizer: node budget of " +
                          std::to_string(node_budget) + " exceeded");

    const GraphParams& params = code.params();
    const std::uint32_t q = static_cast<std::uint32_t>(params.q());
    for (std::uint32_t j = 0; j < params.m(); ++j) {
        std::vector<bool> present(q, false);
        for (std::size_t i = 0; i < code.size(); ++i)
            present[code.word(i)[j]] = true;
        std::vector<Symbol> missing;
        for (Symbol s = 0; s < q; ++s)
            if (!present[s]) missing.push_back(s);
        if (missing.size() < 2) continue;
        auto plant = [&](const Perm& h) {
            std::vector<Perm> base(params.m(), Perm(q));
            base[j] = h;
            stabilizer.free_gens.emplace_back(params, std::move(base), Perm(params.m()));
        };
        plant(Perm::transposition(q, missing[0], missing[1]));
        if (missing.size() > 2) {
            std::vector<std::uint32_t> images(q);
            for (std::uint32_t s = 0; s < q; ++s) images[s] = s;
            for (std::size_t i = 0; i < missing.size(); ++i)
                images[missing[i]] = missing[(i + 1) % missing.size()];
            plant(Perm::from_images(std::move(images)));
        }
    }
    return stabilizer;
}

// ---- Classification ----

namespace {

// Index-based view of an enumerated group, for subgroup closures.
class ElemTable {
 public:
    explicit ElemTable(const std::vector<AutElem>& elements) : elems_(elements) {
        for (std::uint32_t i = 0; i < elems_.size(); ++i) {
            index_.emplace(elems_[i].key(), i);
            if (elems_[i].is_identity()) id_ = i;
        }
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
    std::uint32_t identity() const { return id_; }
    const AutElem& at(std::uint32_t i) const { return elems_[i]; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto it = index_.find(compose_aut(elems_[a], elems_[b]).key());
        if (it == index_.end())
            throw ParameterError("ElemTable: element list is not closed");
        return it->second;
    }

    std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const {
        std::set<std::uint32_t> seen{id_};
        std::vector<std::uint32_t> frontier{id_};
        while (!frontier.empty()) {
            const std::uint32_t at = frontier.back();
            frontier.pop_back();
            for (std::uint32_t g : gens) {
                const std::uint32_t image = mul(at, g);
                if (seen.insert(image).second) frontier.push_back(image);
            }
        }
        return {seen.begin(), seen.end()};
    }

 private:
    const std::vector<AutElem>& elems_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::uint32_t id_ = 0;
};

}  // namespace

SubgroupCensus subgroup_census(const EnumeratedGroup& group) {
    ElemTable table(group.elements);
    std::vector<std::uint32_t> everyone(table.size());
    for (std::uint32_t i = 0; i < table.size(); ++i) everyone[i] = i;

    std::set<std::vector<std::uint32_t>> census{table.closure({})};
    std::vector<std::vector<std::uint32_t>> layer{table.closure({})};
    std::size_t count_after_two = 0;
    std::size_t count_after_three = 0;
    for (int round = 1; !layer.empty(); ++round) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& subgroup : layer) {
            for (std::uint32_t g : everyone) {
                if (std::binary_search(subgroup.begin(), subgroup.end(), g)) continue;
                std::vector<std::uint32_t> gens = subgroup;
                gens.push_back(g);
                std::vector<std::uint32_t> extended = table.closure(gens);
                if (census.insert(extended).second) next.push_back(std::move(extended));
            }
        }
        layer = std::move(next);
        if (round == 2) count_after_two = census.size();
        if (round == 3) count_after_three = census.size();
    }
    if (count_after_two == 0) count_after_two = census.size();
    if (count_after_three == 0) count_after_three = census.size();

    SubgroupCensus result;
    result.stable_at_three = count_after_two == count_after_three;
    for (const auto& subgroup : census) {
        std::vector<AutElem> elements;
        elements.reserve(subgroup.size());
        for (std::uint32_t idx : subgroup) elements.push_back(table.at(idx));
        result.subgroups.push_back(std::move(elements));
    }
    return result;
}

ClassifyResult classify_diagonal_2nt(std::uint32_t m, std::uint64_t q,
                                     ClassifyStrategy strategy) {
    GraphParams params(m, q);
    const GroupGens ambient_gens = diag_full_group(m, q);

    if (strategy == ClassifyStrategy::AllSubsets) {
        if (params.vertex_count() > 12)
            throw ParameterError("all-subsets strategy requires q^m <= 12, got " +
                                 std::to_string(params.vertex_count()));
    } else {
        const auto qf = factorial64(q);
        const auto mf = factorial64(m);
        const auto order = (qf && mf) ? checked_mul(*qf, *mf) : std::nullopt;
        if (!order || *order > 10'000)
            throw ParameterError("subgroup-orbits strategy requires q!*m! <= 10^4");
    }

    const EnumeratedGroup ambient = enumerate_group(ambient_gens);
    ClassifyResult result;
    std::vector<Code> qualifying;

    auto consider = [&](Code candidate) {
        ++result.candidates_checked;
        const DistancePartition dp = distance_partition(candidate);
        if (dp.rho() < 2) return;
        const EnumeratedGroup stabilizer = setwise_stabilizer(ambient, candidate);
        for (std::uint32_t r = 0; r <= 2; ++r)
            if (!is_transitive_on(stabilizer.gens, dp.cell(r))) return;
        qualifying.push_back(std::move(candidate));
    };

    if (strategy == ClassifyStrategy::AllSubsets) {
        const std::uint32_t n = static_cast<std::uint32_t>(params.vertex_count());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::uint64_t> encodings;
            for (std::uint32_t v = 0; v < n; ++v)
                if (mask & (std::uint64_t{1} << v)) encodings.push_back(v);
            consider(Code::from_encodings(params, std::move(encodings)));
        }
    } else {
        const SubgroupCensus census = subgroup_census(ambient);
        result.generator_cap_stable = census.stable_at_three;

        std::set<std::vector<std::uint64_t>> candidates;
        for (const auto& subgroup : census.subgroups) {
            std::vector<bool> visited(params.vertex_count(), false);
            for (std::uint64_t seed = 0; seed < params.vertex_count(); ++seed) {
                if (visited[seed]) continue;
                std::set<std::uint64_t> orbit;
                for (const AutElem& x : subgroup) orbit.insert(apply_aut(x, seed));
                for (std::uint64_t enc : orbit) visited[enc] = true;
                candidates.emplace(orbit.begin(), orbit.end());
            }
        }
        for (const auto& encodings : candidates)
            consider(Code::from_encodings(
                params, std::vector<std::uint64_t>(encodings.begin(), encodings.end())));
    }

    result.qualifying_before_dedup = qualifying.size();
    for (Code& candidate : qualifying) {
        bool duplicate = false;
        for (const Code& representative : result.codes) {
            if (representative.size() != candidate.size()) continue;
            const EquivResult eq = is_equivalent(representative, candidate);
            if (eq.outcome == EquivOutcome::Inconclusive)
                throw Error("classification deduplication was inconclusive");
            if (eq.outcome == EquivOutcome::Equivalent) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) result.codes.push_back(std::move(candidate));
    }
    std::sort(result.codes.begin(), result.codes.end(),
              [](const Code& x, const Code& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x.encodings() < y.encodings();
              });
    return result;
}

}  // namespace hnt
