#ifndef MODEC_MDTREE_HPP
#define MODEC_MDTREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modec/digraph.hpp"
#include "modec/oracle.hpp"

namespace modec {

enum class NodeKind { Leaf, Prime, Series, Parallel, Ordered };

std::string to_string(NodeKind kind);
NodeKind to_node_kind(ModuleKind kind);

struct MDNode {
    NodeKind kind = NodeKind::Leaf;
    VertexId vertex = 0;                  // leaves only
    std::vector<std::uint32_t> children;  // node indices; sequence meaningful for Ordered
    std::vector<VertexId> vertex_set;     // sorted ascending; derived in build()

    friend bool operator==(const MDNode&, const MDNode&) = default;
};

/// Modular decomposition tree (or an unreduced fragment of one).
///
/// Nodes are stored in preorder with the root at index 0; children of
/// Prime/Series/Parallel nodes are sorted by minimum contained vertex id,
/// Ordered children keep their sequence. Two trees built through this class
/// are equal iff operator== says so.
class MDTree {
public:
    MDTree() = default;

    static MDTree leaf(VertexId v, std::vector<std::string> labels);

    /// Normalizes an arbitrary node soup into canonical form: derives vertex
    /// sets, sorts unordered children, renumbers in preorder from root, drops
    /// unreachable nodes. Internal nodes must have >= 2 children.
    static MDTree build(std::vector<MDNode> nodes, std::uint32_t root,
                        std::vector<std::string> labels);

    std::size_t node_count() const { return nodes_.size(); }
    const MDNode& node(std::uint32_t i) const { return nodes_.at(i); }
    std::uint32_t root() const { return 0; }
    bool empty() const { return nodes_.empty(); }
    std::size_t leaf_count() const;
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const MDTree& a, const MDTree& b) {
        return a.nodes_ == b.nodes_ && a.labels_ == b.labels_;
    }

private:
    std::vector<MDNode> nodes_;
    std::vector<std::string> labels_;
};

/// Joins subtrees under a fresh internal node, splicing any part whose root
/// already has the same degenerate kind (Series/Parallel/Ordered). Parts must
/// share the label space and cover disjoint vertex sets.
MDTree compose(NodeKind kind, const std::vector<MDTree>& parts,
               std::vector<std::string> labels);

/// Replaces every leaf v of t by replacement_by_vertex[v], whose leaves live
/// in the vertex space of `labels`. No same-kind splicing happens at graft
/// points; run prune afterwards if reduced form is wanted.
MDTree substitute_leaves(const MDTree& t, const std::vector<MDTree>& replacement_by_vertex,
                         std::vector<std::string> labels);

/// Modular decomposition of an undirected graph. Node vertex-sets are its
/// strong modules; kinds follow the child quotient (Ordered cannot occur).
MDTree decompose_undirected(const Digraph& ug);

/// Modular decomposition of a transitive DAG. Same strong modules as the
/// undirected closure; clique child quotients become Ordered nodes whose
/// child sequence is the unique topological order of the quotient.
MDTree decompose_transitive_dag(const Digraph& g);

/// Modular decomposition of transitive_closure(g) for an arbitrary digraph:
/// contract SCCs, decompose the contracted closure, then expand each
/// contracted super-vertex into a Series node over its component.
MDTree decompose_digraph(const Digraph& g);

/// Flattens Series/Parallel/Ordered nodes into same-kind parents until the
/// reduced form holds. Ordered splices keep the child sequence position.
MDTree prune(const MDTree& t);

/// Quotient of g restricted to an internal node's vertex set by that node's
/// children. Child order defines the quotient's vertex ids.
Digraph child_quotient(const Digraph& g, const MDTree& t, std::uint32_t node);

std::string to_text(const MDTree& t);
std::string to_structured(const MDTree& t);
std::string to_dot(const MDTree& t);

}  // namespace modec

#endif
