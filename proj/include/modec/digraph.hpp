#ifndef MODEC_DIGRAPH_HPP
#define MODEC_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modec {

using VertexId = std::uint32_t;

struct Edge {
    VertexId src{};
    VertexId dst{};

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple directed graph over dense vertex ids [0, n).
///
/// No self-loops, no duplicate edges; successor lists are kept sorted
/// ascending. Values are immutable after construction, so graphs can be
/// shared freely across threads. Every vertex carries a label; when none
/// are supplied the decimal id is used.
class Digraph {
public:
    Digraph() = default;

    /// Duplicate edges are silently deduplicated; self-loops are rejected.
    Digraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::size_t vertex_count() const { return succ_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> successors(VertexId v) const;
    bool has_edge(VertexId a, VertexId b) const;

    /// All edges sorted by (src, dst).
    std::vector<Edge> edges() const;

    /// Predecessor lists, derived from the successor view. Sorted ascending.
    std::vector<std::vector<VertexId>> predecessor_lists() const;

    const std::string& label(VertexId v) const;
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> vertex_by_label(const std::string& label) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.succ_ == b.succ_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::vector<VertexId>> succ_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> label_index_;
    std::size_t edge_count_ = 0;
};

/// Partition of [0, n) into disjoint nonempty blocks covering every vertex.
struct Partition {
    std::vector<std::vector<VertexId>> blocks;

    /// Validates disjointness and coverage of [0, n).
    static Partition over(std::size_t n, std::vector<std::vector<VertexId>> blocks);
};

Digraph inverse(const Digraph& g);
Digraph undirected_closure(const Digraph& g);
Digraph complement(const Digraph& g);

/// complement(undirected_closure(g)); always undirected.
Digraph undirected_complement(const Digraph& g);

/// Minimal transitive supergraph: adds (a, c) for every nontrivial path a to c.
Digraph transitive_closure(const Digraph& g);

/// Unique minimal edge subset with the same transitive closure.
/// Throws CyclicInputError unless g is a DAG.
Digraph transitive_reduction(const Digraph& g);

bool is_transitive(const Digraph& g);
bool is_acyclic(const Digraph& g);
bool is_oriented(const Digraph& g);
bool is_undirected(const Digraph& g);

/// Condensation: contracts every strongly connected component to one vertex.
/// Blocks are ordered by minimum member id; the quotient drops in-block edges
/// and dedups cross-block edges. Super-vertex labels join member labels with
/// '+' in ascending id order.
std::pair<Digraph, Partition> scc_contract(const Digraph& g);

/// Subgraph induced by vs; vertices are reindexed by ascending original id,
/// labels carried over. Duplicates in vs are ignored.
Digraph induced_subgraph(const Digraph& g, const std::vector<VertexId>& vs);

namespace detail {

/// Row-per-vertex bit matrix used by the set-heavy algorithms.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    void set(std::size_t r, std::size_t c);
    bool test(std::size_t r, std::size_t c) const;
    std::span<std::uint64_t> row(std::size_t r);
    std::span<const std::uint64_t> row(std::size_t r) const;
    std::size_t words_per_row() const { return words_; }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

BitMatrix successor_bits(const Digraph& g);
BitMatrix predecessor_bits(const Digraph& g);

}  // namespace detail

}  // namespace modec

#endif
