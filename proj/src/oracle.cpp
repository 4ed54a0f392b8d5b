#include "modec/oracle.hpp"

#include <algorithm>

#include "modec/errors.hpp"

namespace modec {

std::string to_string(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::Prime: return "prime";
        case ModuleKind::Series: return "series";
        case ModuleKind::Parallel: return "parallel";
        case ModuleKind::Ordered: return "ordered";
    }
    return "unknown";
}

namespace {

ModuleSet canonical_set(const Digraph& g, ModuleSet m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (VertexId v : m)
        if (v >= g.vertex_count()) throw UnknownVertexError("vertex id " + std::to_string(v));
    if (m.empty()) throw Error("module set must be nonempty");
    return m;
}

void require_bound(const Digraph& g, std::size_t bound) {
    if (g.vertex_count() > bound)
        throw OracleBoundError("graph has " + std::to_string(g.vertex_count()) +
                               " vertices, oracle bound is " + std::to_string(bound));
}

// Adjacency as per-vertex bitmasks; only valid under the oracle bound.
struct MaskView {
    std::vector<std::uint32_t> succ, pred;

    explicit MaskView(const Digraph& g)
        : succ(g.vertex_count(), 0), pred(g.vertex_count(), 0) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId w : g.successors(v)) {
                succ[v] |= 1u << w;
                pred[w] |= 1u << v;
            }
    }

    bool is_module(std::uint32_t m, std::size_t n) const {
        for (VertexId x = 0; x < n; ++x) {
            if (m & (1u << x)) continue;
            std::uint32_t s = succ[x] & m;
            if (s != 0 && s != m) return false;
            std::uint32_t p = pred[x] & m;
            if (p != 0 && p != m) return false;
        }
        return true;
    }
};

ModuleSet mask_to_set(std::uint32_t mask, std::size_t n) {
    ModuleSet out;
    for (VertexId v = 0; v < n; ++v)
        if (mask & (1u << v)) out.push_back(v);
    return out;
}

bool overlaps(std::uint32_t a, std::uint32_t b) {
    std::uint32_t both = a & b;
    return both != 0 && both != a && both != b;
}

std::vector<std::uint32_t> module_masks(const Digraph& g, std::size_t bound) {
    require_bound(g, bound);
    const std::size_t n = g.vertex_count();
    MaskView view(g);
    std::vector<std::uint32_t> masks;
    const std::uint32_t all = n == 32 ? 0xffffffffu : (1u << n) - 1;
    for (std::uint32_t m = 1; m <= all && m != 0; ++m)
        if (view.is_module(m, n)) masks.push_back(m);
    return masks;
}

std::vector<ModuleSet> masks_to_sets(const std::vector<std::uint32_t>& masks, std::size_t n) {
    std::vector<ModuleSet> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) out.push_back(mask_to_set(m, n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_module(const Digraph& g, const ModuleSet& m) {
    ModuleSet members = canonical_set(g, m);
    std::vector<bool> inside(g.vertex_count(), false);
    for (VertexId v : members) inside[v] = true;
    const VertexId probe = members.front();
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (inside[x]) continue;
        bool to_probe = g.has_edge(x, probe);
        bool from_probe = g.has_edge(probe, x);
        for (VertexId a : members) {
            if (g.has_edge(x, a) != to_probe) return false;
            if (g.has_edge(a, x) != from_probe) return false;
        }
    }
    return true;
}

std::vector<ModuleSet> all_modules(const Digraph& g, std::size_t bound) {
    return masks_to_sets(module_masks(g, bound), g.vertex_count());
}

std::vector<ModuleSet> strong_modules(const Digraph& g, std::size_t bound) {
    auto masks = module_masks(g, bound);
    std::vector<std::uint32_t> strong;
    for (std::uint32_t m : masks) {
        bool overlapped = false;
        for (std::uint32_t other : masks)
            if (overlaps(m, other)) {
                overlapped = true;
                break;
            }
        if (!overlapped) strong.push_back(m);
    }
    return masks_to_sets(strong, g.vertex_count());
}

Digraph quotient(const Digraph& g, const Partition& p) {
    for (const auto& block : p.blocks)
        if (!is_module(g, block))
            throw NotCongruenceError("partition block is not a module of the graph");

    const std::size_t k = p.blocks.size();
    std::vector<VertexId> rep(k);
    std::vector<std::string> labels(k);
    for (std::size_t b = 0; b < k; ++b) {
        rep[b] = p.blocks[b].front();
        for (VertexId v : p.blocks[b]) {
            if (!labels[b].empty()) labels[b] += '+';
            labels[b] += g.label(v);
        }
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && g.has_edge(rep[a], rep[b]))
                edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    return Digraph(k, std::move(edges), std::move(labels));
}

namespace {

bool is_clique(const Digraph& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = 0; b < g.vertex_count(); ++b)
            if (a != b && !g.has_edge(a, b)) return false;
    return true;
}

bool is_transitive_tournament(const Digraph& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b)
            if (g.has_edge(a, b) == g.has_edge(b, a)) return false;
    return is_transitive(g);
}

}  // namespace

ModuleKind module_kind(const Digraph& g, const ModuleSet& m, std::size_t bound) {
    ModuleSet members = canonical_set(g, m);
    if (members.size() < 2) throw Error("module_kind is undefined for singletons");
    if (!is_module(g, members)) throw NotAModuleError();

    Digraph sub = induced_subgraph(g, members);
    auto strong = strong_modules(sub, bound);
    std::vector<ModuleSet> maximal;
    for (const auto& s : strong) {
        if (s.size() == sub.vertex_count()) continue;
        bool dominated = false;
        for (const auto& t : strong)
            if (t.size() != sub.vertex_count() && t.size() > s.size() &&
                std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }
    Digraph q = quotient(sub, Partition::over(sub.vertex_count(), std::move(maximal)));
    if (q.edge_count() == 0) return ModuleKind::Parallel;
    if (is_clique(q)) return ModuleKind::Series;
    if (is_transitive_tournament(q)) return ModuleKind::Ordered;
    return ModuleKind::Prime;
}

ModuleSet minimal_strong_superset(const Digraph& g, const ModuleSet& m, std::size_t bound) {
    ModuleSet members = canonical_set(g, m);
    if (!is_module(g, members)) throw NotAModuleError();
    auto strong = strong_modules(g, bound);
    const ModuleSet* best = nullptr;
    for (const auto& s : strong) {
        if (!std::includes(s.begin(), s.end(), members.begin(), members.end())) continue;
        if (best == nullptr || s.size() < best->size()) best = &s;
    }
    // V itself is strong, so a superset always exists.
    return *best;
}

}  // namespace modec
