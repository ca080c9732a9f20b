#include "hnt/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace hnt {

GroupGens::GroupGens(GraphParams p, std::vector<AutElem> g)
    : params(p), gens(std::move(g)) {
    if (gens.empty())
        throw ParameterError("GroupGens: generator list must be nonempty");
    for (const AutElem& x : gens) require_same_params(params, x.params);
}

GroupGens GroupGens::trivial(const GraphParams& params) {
    return GroupGens(params, {AutElem::identity(params)});
}

bool GroupGens::all_diagonal() const {
    for (const AutElem& x : gens)
        if (!x.is_diagonal()) return false;
    return true;
}

bool EnumeratedGroup::contains(const AutElem& x) const {
    const std::string k = x.key();
    auto it = std::lower_bound(elements.begin(), elements.end(), k,
                               [](const AutElem& e, const std::string& key) {
                                   return e.key() < key;
                               });
    return it != elements.end() && it->key() == k;
}

std::vector<std::uint64_t> vertex_orbit(const GroupGens& group, std::uint64_t seed) {
    if (seed >= group.params.vertex_count())
        throw ParameterError("vertex_orbit: seed encoding out of range");
    std::unordered_set<std::uint64_t> seen{seed};
    std::deque<std::uint64_t> frontier{seed};
    while (!frontier.empty()) {
        const std::uint64_t enc = frontier.front();
        frontier.pop_front();
        for (const AutElem& g : group.gens) {
            const std::uint64_t image = apply_aut(g, enc);
            if (seen.insert(image).second) frontier.push_back(image);
        }
    }
    std::vector<std::uint64_t> orbit(seen.begin(), seen.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<std::uint32_t> entry_orbit(const GroupGens& group, std::uint32_t entry) {
    if (entry >= group.params.m())
        throw ParameterError("entry_orbit: entry index out of range");
    std::vector<bool> seen(group.params.m(), false);
    seen[entry] = true;
    std::deque<std::uint32_t> frontier{entry};
    while (!frontier.empty()) {
        const std::uint32_t e = frontier.front();
        frontier.pop_front();
        for (const AutElem& g : group.gens) {
            const std::uint32_t image = mu(g)[e];
            if (!seen[image]) {
                seen[image] = true;
                frontier.push_back(image);
            }
        }
    }
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t e = 0; e < group.params.m(); ++e)
        if (seen[e]) orbit.push_back(e);
    return orbit;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_orbit(
    const std::vector<Perm>& gens, std::pair<std::uint32_t, std::uint32_t> seed) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen{seed};
    std::deque<std::pair<std::uint32_t, std::uint32_t>> frontier{seed};
    while (!frontier.empty()) {
        const auto [a, b] = frontier.front();
        frontier.pop_front();
        for (const Perm& g : gens) {
            const std::pair<std::uint32_t, std::uint32_t> image{g[a], g[b]};
            if (seen.insert(image).second) frontier.push_back(image);
        }
    }
    return {seen.begin(), seen.end()};
}

bool is_transitive_on(const GroupGens& group, const std::vector<std::uint64_t>& cell) {
    if (cell.empty())
        throw ParameterError("is_transitive_on: empty set");
    const std::vector<std::uint64_t> orbit = vertex_orbit(group, cell.front());
    return orbit == cell;
}

EnumeratedGroup enumerate_group(const GroupGens& group, std::uint64_t budget) {
    std::unordered_set<std::string> seen;
    std::vector<AutElem> elements;
    std::deque<std::size_t> frontier;

    auto add = [&](AutElem x) {
        if (!seen.insert(x.key()).second) return;
        if (seen.size() > budget)
            throw BudgetError("group enumeration budget of " + std::to_string(budget) +
                              " elements exceeded");
        elements.push_back(std::move(x));
        frontier.push_back(elements.size() - 1);
    };

    add(AutElem::identity(group.params));
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop_front();
        for (const AutElem& g : group.gens) add(compose_aut(elements[at], g));
    }
    std::sort(elements.begin(), elements.end(),
              [](const AutElem& a, const AutElem& b) { return a.key() < b.key(); });
    return EnumeratedGroup{group, std::move(elements)};
}

GroupGens point_stabilizer(const GroupGens& group, std::uint32_t entry) {
    if (entry >= group.params.m())
        throw ParameterError("point_stabilizer: entry index out of range");
    const std::uint32_t m = group.params.m();
    std::vector<std::optional<AutElem>> transversal(m);
    transversal[entry] = AutElem::identity(group.params);
    std::deque<std::uint32_t> frontier{entry};
    std::vector<std::uint32_t> orbit{entry};
    while (!frontier.empty()) {
        const std::uint32_t b = frontier.front();
        frontier.pop_front();
        for (const AutElem& s : group.gens) {
            const std::uint32_t c = mu(s)[b];
            if (!transversal[c]) {
                transversal[c] = compose_aut(*transversal[b], s);
                frontier.push_back(c);
                orbit.push_back(c);
            }
        }
    }
    std::unordered_set<std::string> seen;
    std::vector<AutElem> stab_gens;
    for (std::uint32_t b : orbit) {
        for (const AutElem& s : group.gens) {
            const std::uint32_t c = mu(s)[b];
            AutElem schreier = compose_aut(compose_aut(*transversal[b], s),
                                           inverse_aut(*transversal[c]));
            if (schreier.is_identity()) continue;
            if (seen.insert(schreier.key()).second)
                stab_gens.push_back(std::move(schreier));
        }
    }
    if (stab_gens.empty()) stab_gens.push_back(AutElem::identity(group.params));
    return GroupGens(group.params, std::move(stab_gens));
}

EnumeratedGroup kernel_on_entries(const EnumeratedGroup& group) {
    std::vector<AutElem> kernel;
    for (const AutElem& x : group.elements)
        if (mu(x).is_identity()) kernel.push_back(x);
    return EnumeratedGroup{GroupGens(group.gens.params, kernel), kernel};
}

EnumeratedGroup setwise_stabilizer(const EnumeratedGroup& group, const Code& code) {
    require_same_params(group.gens.params, code.params());
    std::vector<AutElem> stab;
    for (const AutElem& x : group.elements) {
        bool preserves = true;
        for (std::uint64_t enc : code.encodings()) {
            if (!code.contains(apply_aut(x, enc))) {
                preserves = false;
                break;
            }
        }
        if (preserves) stab.push_back(x);
    }
    return EnumeratedGroup{GroupGens(group.gens.params, stab), stab};
}

// ---- Permutation groups on the alphabet ----

namespace {

std::string perm_key(const Perm& p) {
    std::string out;
    out.reserve(p.degree() * 4);
    for (std::uint32_t v : p.images()) {
        out.push_back(static_cast<char>(v & 0xFF));
        out.push_back(static_cast<char>((v >> 8) & 0xFF));
        out.push_back(static_cast<char>((v >> 16) & 0xFF));
        out.push_back(static_cast<char>((v >> 24) & 0xFF));
    }
    return out;
}

}  // namespace

std::vector<Perm> enumerate_perm_group(const std::vector<Perm>& gens,
                                       std::uint64_t budget) {
    if (gens.empty())
        throw ParameterError("enumerate_perm_group: generator list must be nonempty");
    const std::uint32_t degree = gens.front().degree();
    for (const Perm& g : gens)
        if (g.degree() != degree)
            throw ParameterError("enumerate_perm_group: mixed degrees");

    std::unordered_set<std::string> seen;
    std::vector<Perm> elements;
    std::deque<std::size_t> frontier;
    auto add = [&](Perm p) {
        if (!seen.insert(perm_key(p)).second) return;
        if (seen.size() > budget)
            throw BudgetError("group enumeration budget of " + std::to_string(budget) +
                              " elements exceeded");
        elements.push_back(std::move(p));
        frontier.push_back(elements.size() - 1);
    };
    add(Perm(degree));
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop_front();
        for (const Perm& g : gens) add(elements[at].then(g));
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

bool is_2_transitive(const std::vector<Perm>& gens, std::uint32_t degree) {
    if (degree < 2)
        throw ParameterError("is_2_transitive: degree must be at least 2");
    for (const Perm& g : gens)
        if (g.degree() != degree)
            throw ParameterError("is_2_transitive: generator of wrong degree");
    const auto orbit = pair_orbit(gens, {0u, 1u});
    return orbit.size() == static_cast<std::size_t>(degree) * (degree - 1);
}

namespace {

// Index-based view of a fully enumerated permutation group.
class PermTable {
 public:
    explicit PermTable(const std::vector<Perm>& elements) : elems_(elements) {
        for (std::uint32_t i = 0; i < elems_.size(); ++i) {
            index_.emplace(perm_key(elems_[i]), i);
            if (elems_[i].is_identity()) id_ = i;
        }
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
    std::uint32_t identity() const { return id_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return lookup(elems_[a].then(elems_[b]));
    }
    std::uint32_t inv(std::uint32_t a) const { return lookup(elems_[a].inverse()); }
    std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
        return lookup(elems_[g].inverse().then(elems_[x]).then(elems_[g]));
    }
    bool commute(std::uint32_t a, std::uint32_t b) const {
        return elems_[a].then(elems_[b]) == elems_[b].then(elems_[a]);
    }

    // Conjugacy class of x under conjugation by the subset `by`.
    std::vector<std::uint32_t> conjugacy_class(std::uint32_t x,
                                               const std::vector<std::uint32_t>& by) const {
        std::set<std::uint32_t> cls;
        for (std::uint32_t g : by) cls.insert(conj(x, g));
        return {cls.begin(), cls.end()};
    }

    // Subgroup generated by `gens` (indices), as a sorted index list.
    std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const {
        std::set<std::uint32_t> seen{id_};
        std::deque<std::uint32_t> frontier{id_};
        while (!frontier.empty()) {
            const std::uint32_t at = frontier.front();
            frontier.pop_front();
            for (std::uint32_t g : gens) {
                const std::uint32_t im = mul(at, g);
                if (seen.insert(im).second) frontier.push_back(im);
            }
        }
        return {seen.begin(), seen.end()};
    }

 private:
    std::uint32_t lookup(const Perm& p) const {
        auto it = index_.find(perm_key(p));
        if (it == index_.end())
            throw ParameterError("PermTable: element list is not closed");
        return it->second;
    }

    const std::vector<Perm>& elems_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::uint32_t id_ = 0;
};

// Normal closures of single elements inside the subgroup `ambient` (a sorted
// index list closed under the table's operations), one per conjugacy class.
std::vector<std::vector<std::uint32_t>> normal_closures(const PermTable& table,
                                                        const std::vector<std::uint32_t>& ambient) {
    std::vector<std::vector<std::uint32_t>> closures;
    std::set<std::uint32_t> classified{table.identity()};
    for (std::uint32_t x : ambient) {
        if (classified.count(x)) continue;
        const std::vector<std::uint32_t> cls = table.conjugacy_class(x, ambient);
        classified.insert(cls.begin(), cls.end());
        // The class is conjugation-closed, so its closure is normal in ambient.
        closures.push_back(table.closure(cls));
    }
    std::sort(closures.begin(), closures.end());
    closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
    return closures;
}

bool is_simple_subgroup(const PermTable& table, const std::vector<std::uint32_t>& subgroup) {
    if (subgroup.size() < 2) return false;
    for (const auto& closure : normal_closures(table, subgroup))
        if (closure.size() != subgroup.size()) return false;
    return true;
}

}  // namespace

bool is_almost_simple(const std::vector<Perm>& elements) {
    if (elements.empty())
        throw ParameterError("is_almost_simple: empty element list");
    PermTable table(elements);
    std::vector<std::uint32_t> whole(elements.size());
    std::iota(whole.begin(), whole.end(), 0u);

    std::vector<std::vector<std::uint32_t>> closures = normal_closures(table, whole);
    // Keep the inclusion-minimal normal closures; every minimal normal
    // subgroup is the normal closure of each of its nontrivial elements, so
    // it appears in this list.
    std::vector<std::vector<std::uint32_t>> minimal;
    for (const auto& candidate : closures) {
        bool is_min = true;
        for (const auto& other : closures) {
            if (other.size() < candidate.size() &&
                std::includes(candidate.begin(), candidate.end(), other.begin(),
                              other.end())) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(candidate);
    }
    if (minimal.size() != 1) return false;
    const std::vector<std::uint32_t>& socle = minimal.front();

    for (std::uint32_t a : socle)
        for (std::uint32_t b : socle)
            if (!table.commute(a, b))
                return is_simple_subgroup(table, socle);
    return false;  // abelian minimal normal subgroup
}

// ---- Block systems ----

namespace {

class UnionFind {
 public:
    explicit UnionFind(std::uint32_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }
    std::uint32_t find(std::uint32_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

 private:
    std::vector<std::uint32_t> parent_;
};

EntryPartition partition_from(UnionFind& uf, std::uint32_t m) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t i = 0; i < m; ++i) blocks[uf.find(i)].push_back(i);
    EntryPartition out;
    for (auto& [root, block] : blocks) out.push_back(std::move(block));
    return out;
}

// Finest entry partition invariant under the generators' entry actions in
// which a and b share a block.
EntryPartition minimal_block_system(const GroupGens& group, std::uint32_t a,
                                    std::uint32_t b) {
    const std::uint32_t m = group.params.m();
    UnionFind uf(m);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> work{{a, b}};
    uf.unite(a, b);
    while (!work.empty()) {
        const auto [u, v] = work.back();
        work.pop_back();
        for (const AutElem& g : group.gens) {
            const std::uint32_t gu = mu(g)[u];
            const std::uint32_t gv = mu(g)[v];
            if (uf.unite(gu, gv)) work.emplace_back(gu, gv);
        }
    }
    return partition_from(uf, m);
}

EntryPartition join(const EntryPartition& p1, const EntryPartition& p2,
                    std::uint32_t m) {
    UnionFind uf(m);
    for (const auto& block : p1)
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    for (const auto& block : p2)
        for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    return partition_from(uf, m);
}

}  // namespace

EntryPartition trivial_partition_singletons(std::uint32_t m) {
    EntryPartition out;
    for (std::uint32_t i = 0; i < m; ++i) out.push_back({i});
    return out;
}

EntryPartition trivial_partition_whole(std::uint32_t m) {
    std::vector<std::uint32_t> block(m);
    std::iota(block.begin(), block.end(), 0u);
    return {block};
}

std::vector<EntryPartition> invariant_partitions(const GroupGens& group) {
    const std::uint32_t m = group.params.m();
    if (entry_orbit(group, 0).size() != m)
        throw ParameterError("invariant_partitions: entry action is not transitive");

    std::set<EntryPartition> all;
    all.insert(trivial_partition_singletons(m));
    all.insert(trivial_partition_whole(m));
    for (std::uint32_t i = 1; i < m; ++i)
        all.insert(minimal_block_system(group, 0, i));

    // Every block system is a join of minimal ones, so closing under joins
    // yields the complete list.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<EntryPartition> current(all.begin(), all.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (all.insert(join(current[i], current[j], m)).second) grew = true;
    }

    std::vector<EntryPartition> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(),
              [](const EntryPartition& x, const EntryPartition& y) {
                  if (x.size() != y.size()) return x.size() > y.size();
                  return x < y;
              });
    return out;
}

bool partition_invariant(const GroupGens& group, const EntryPartition& partition) {
    std::set<std::vector<std::uint32_t>> blocks(partition.begin(), partition.end());
    for (const AutElem& g : group.gens) {
        for (const auto& block : partition) {
            std::vector<std::uint32_t> image;
            image.reserve(block.size());
            for (std::uint32_t e : block) image.push_back(mu(g)[e]);
            std::sort(image.begin(), image.end());
            if (!blocks.count(image)) return false;
        }
    }
    return true;
}

}  // namespace hnt
