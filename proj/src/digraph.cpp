#include "modec/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stack>

#include "modec/errors.hpp"

namespace modec {

Digraph::Digraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : succ_(n) {
    for (const Edge& e : edges) {
        if (e.src >= n || e.dst >= n)
            throw Error("edge endpoint out of range: (" + std::to_string(e.src) + ", " +
                        std::to_string(e.dst) + ") with n = " + std::to_string(n));
        if (e.src == e.dst) throw SelfLoopError(0, std::to_string(e.src));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const Edge& e : edges) succ_[e.src].push_back(e.dst);
    edge_count_ = edges.size();

    if (labels.empty()) {
        labels_.reserve(n);
        for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    } else {
        if (labels.size() != n) throw Error("label count does not match vertex count");
        labels_ = std::move(labels);
    }
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        auto [it, inserted] = label_index_.emplace(labels_[v], static_cast<VertexId>(v));
        if (!inserted) throw Error("duplicate vertex label '" + labels_[v] + "'");
    }
}

std::span<const VertexId> Digraph::successors(VertexId v) const {
    if (v >= succ_.size()) throw UnknownVertexError("vertex id " + std::to_string(v));
    return succ_[v];
}

bool Digraph::has_edge(VertexId a, VertexId b) const {
    if (a >= succ_.size() || b >= succ_.size()) return false;
    return std::binary_search(succ_[a].begin(), succ_[a].end(), b);
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < succ_.size(); ++v)
        for (VertexId w : succ_[v]) out.push_back({v, w});
    return out;
}

std::vector<std::vector<VertexId>> Digraph::predecessor_lists() const {
    std::vector<std::vector<VertexId>> pred(vertex_count());
    for (VertexId v = 0; v < succ_.size(); ++v)
        for (VertexId w : succ_[v]) pred[w].push_back(v);
    return pred;
}

const std::string& Digraph::label(VertexId v) const {
    if (v >= labels_.size()) throw UnknownVertexError("vertex id " + std::to_string(v));
    return labels_[v];
}

std::optional<VertexId> Digraph::vertex_by_label(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

Partition Partition::over(std::size_t n, std::vector<std::vector<VertexId>> blocks) {
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    for (auto& block : blocks) {
        if (block.empty()) throw Error("partition block is empty");
        std::sort(block.begin(), block.end());
        for (VertexId v : block) {
            if (v >= n) throw Error("partition member out of range");
            if (seen[v]) throw Error("partition blocks are not disjoint");
            seen[v] = true;
            ++covered;
        }
    }
    if (covered != n) throw Error("partition does not cover the vertex set");
    return Partition{std::move(blocks)};
}

Digraph inverse(const Digraph& g) {
    std::vector<Edge> flipped;
    flipped.reserve(g.edge_count());
    for (const Edge& e : g.edges()) flipped.push_back({e.dst, e.src});
    return Digraph(g.vertex_count(), std::move(flipped), g.labels());
}

Digraph undirected_closure(const Digraph& g) {
    std::vector<Edge> both;
    both.reserve(2 * g.edge_count());
    for (const Edge& e : g.edges()) {
        both.push_back(e);
        both.push_back({e.dst, e.src});
    }
    return Digraph(g.vertex_count(), std::move(both), g.labels());
}

Digraph complement(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            if (a != b && !g.has_edge(a, b)) edges.push_back({a, b});
    return Digraph(n, std::move(edges), g.labels());
}

Digraph undirected_complement(const Digraph& g) { return complement(undirected_closure(g)); }

namespace {

// Reachable-from sets by nontrivial paths, as one bit row per vertex.
detail::BitMatrix reachability(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    detail::BitMatrix reach(n, n);
    std::vector<VertexId> stack;
    std::vector<bool> visited(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), false);
        stack.clear();
        for (VertexId w : g.successors(s)) stack.push_back(w);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (visited[v]) continue;
            visited[v] = true;
            reach.set(s, v);
            for (VertexId w : g.successors(v))
                if (!visited[w]) stack.push_back(w);
        }
    }
    return reach;
}

}  // namespace

Digraph transitive_closure(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    detail::BitMatrix reach = reachability(g);
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            if (a != b && reach.test(a, b)) edges.push_back({a, b});
    return Digraph(n, std::move(edges), g.labels());
}

Digraph transitive_reduction(const Digraph& g) {
    if (!is_acyclic(g)) throw CyclicInputError("transitive reduction requires a DAG");
    const std::size_t n = g.vertex_count();
    detail::BitMatrix reach = reachability(g);
    std::vector<Edge> kept;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b : g.successors(a)) {
            bool redundant = false;
            for (VertexId w : g.successors(a)) {
                if (w != b && reach.test(w, b)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back({a, b});
        }
    }
    return Digraph(n, std::move(kept), g.labels());
}

bool is_transitive(const Digraph& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b : g.successors(a))
            for (VertexId c : g.successors(b))
                if (a != c && !g.has_edge(a, c)) return false;
    return true;
}

bool is_acyclic(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    // Kahn's algorithm; leftover vertices mean a cycle.
    std::vector<std::size_t> indeg(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.successors(v)) ++indeg[w];
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t seen = 0;
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        ++seen;
        for (VertexId w : g.successors(v))
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

bool is_oriented(const Digraph& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b : g.successors(a))
            if (g.has_edge(b, a)) return false;
    return true;
}

bool is_undirected(const Digraph& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b : g.successors(a))
            if (!g.has_edge(b, a)) return false;
    return true;
}

namespace {

// Iterative Tarjan SCC. Components come out in reverse topological order;
// we renumber them by minimum member id for deterministic output.
std::vector<std::vector<VertexId>> strongly_connected_components(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::uint32_t kUnvisited = 0xffffffffu;
    std::vector<std::uint32_t> index(n, kUnvisited), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> components;

    struct Frame {
        VertexId v;
        std::size_t next_child;
    };
    std::vector<Frame> call_stack;
    std::uint32_t counter = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            auto succ = g.successors(frame.v);
            if (frame.next_child < succ.size()) {
                VertexId w = succ[frame.next_child++];
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[frame.v] = std::min(lowlink[frame.v], index[w]);
                }
            } else {
                VertexId v = frame.v;
                call_stack.pop_back();
                if (!call_stack.empty())
                    lowlink[call_stack.back().v] = std::min(lowlink[call_stack.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::vector<VertexId> comp;
                    while (true) {
                        VertexId w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

}  // namespace

std::pair<Digraph, Partition> scc_contract(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    auto components = strongly_connected_components(g);
    std::vector<VertexId> block_of(n, 0);
    for (std::size_t b = 0; b < components.size(); ++b)
        for (VertexId v : components[b]) block_of[v] = static_cast<VertexId>(b);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        VertexId a = block_of[e.src], b = block_of[e.dst];
        if (a != b) edges.push_back({a, b});
    }
    std::vector<std::string> labels;
    labels.reserve(components.size());
    for (const auto& comp : components) {
        std::string joined;
        for (VertexId v : comp) {
            if (!joined.empty()) joined += '+';
            joined += g.label(v);
        }
        labels.push_back(std::move(joined));
    }
    Digraph quotient(components.size(), std::move(edges), std::move(labels));
    return {std::move(quotient), Partition::over(n, std::move(components))};
}

Digraph induced_subgraph(const Digraph& g, const std::vector<VertexId>& vs) {
    std::vector<VertexId> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<VertexId> local(g.vertex_count(), 0);
    std::vector<bool> keep(g.vertex_count(), false);
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= g.vertex_count())
            throw UnknownVertexError("vertex id " + std::to_string(sorted[i]));
        local[sorted[i]] = static_cast<VertexId>(i);
        keep[sorted[i]] = true;
        labels.push_back(g.label(sorted[i]));
    }
    std::vector<Edge> edges;
    for (VertexId v : sorted)
        for (VertexId w : g.successors(v))
            if (keep[w]) edges.push_back({local[v], local[w]});
    return Digraph(sorted.size(), std::move(edges), std::move(labels));
}

namespace detail {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void BitMatrix::set(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
}

bool BitMatrix::test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
}

std::span<std::uint64_t> BitMatrix::row(std::size_t r) {
    return {bits_.data() + r * words_, words_};
}

std::span<const std::uint64_t> BitMatrix::row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
}

BitMatrix successor_bits(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    BitMatrix m(n, n);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.successors(v)) m.set(v, w);
    return m;
}

BitMatrix predecessor_bits(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    BitMatrix m(n, n);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.successors(v)) m.set(w, v);
    return m;
}

}  // namespace detail

}  // namespace modec
