#include "modec/mdtree.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "modec/errors.hpp"

namespace modec {

std::string to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Prime: return "prime";
        case NodeKind::Series: return "series";
        case NodeKind::Parallel: return "parallel";
        case NodeKind::Ordered: return "ordered";
    }
    return "unknown";
}

NodeKind to_node_kind(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::Prime: return NodeKind::Prime;
        case ModuleKind::Series: return NodeKind::Series;
        case ModuleKind::Parallel: return NodeKind::Parallel;
        case ModuleKind::Ordered: return NodeKind::Ordered;
    }
    return NodeKind::Prime;
}

MDTree MDTree::leaf(VertexId v, std::vector<std::string> labels) {
    MDNode nd;
    nd.kind = NodeKind::Leaf;
    nd.vertex = v;
    return build({nd}, 0, std::move(labels));
}

MDTree MDTree::build(std::vector<MDNode> nodes, std::uint32_t root,
                     std::vector<std::string> labels) {
    if (nodes.empty()) throw Error("tree has no nodes");
    if (root >= nodes.size()) throw Error("tree root out of range");

    // Derive vertex sets bottom-up. state: 0 unseen, 1 children pending, 2 done.
    std::vector<char> state(nodes.size(), 0);
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
        std::uint32_t i = stack.back();
        MDNode& nd = nodes[i];
        if (state[i] == 2) {
            stack.pop_back();
            continue;
        }
        if (state[i] == 0) {
            if (nd.kind == NodeKind::Leaf) {
                if (nd.vertex >= labels.size())
                    throw Error("leaf vertex " + std::to_string(nd.vertex) + " out of range");
                nd.vertex_set = {nd.vertex};
                state[i] = 2;
                stack.pop_back();
                continue;
            }
            if (nd.children.size() < 2)
                throw Error("internal tree node needs at least 2 children");
            state[i] = 1;
            for (std::uint32_t c : nd.children) {
                if (c >= nodes.size()) throw Error("tree child index out of range");
                if (state[c] == 1) throw Error("tree contains a cycle");
                if (state[c] == 0) stack.push_back(c);
            }
            continue;
        }
        nd.vertex_set.clear();
        for (std::uint32_t c : nd.children)
            nd.vertex_set.insert(nd.vertex_set.end(), nodes[c].vertex_set.begin(),
                                 nodes[c].vertex_set.end());
        std::sort(nd.vertex_set.begin(), nd.vertex_set.end());
        if (std::adjacent_find(nd.vertex_set.begin(), nd.vertex_set.end()) !=
            nd.vertex_set.end())
            throw Error("child vertex sets overlap");
        state[i] = 2;
        stack.pop_back();
    }

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (state[i] != 2) continue;  // unreachable; dropped below
        MDNode& nd = nodes[i];
        if (nd.kind == NodeKind::Ordered || nd.kind == NodeKind::Leaf) continue;
        std::sort(nd.children.begin(), nd.children.end(),
                  [&](std::uint32_t a, std::uint32_t b) {
                      return nodes[a].vertex_set.front() < nodes[b].vertex_set.front();
                  });
    }

    // Preorder renumbering; unreachable nodes drop out.
    std::vector<MDNode> out;
    out.reserve(nodes.size());
    std::function<std::uint32_t(std::uint32_t)> copy = [&](std::uint32_t i) -> std::uint32_t {
        std::uint32_t my = static_cast<std::uint32_t>(out.size());
        out.push_back(nodes[i]);
        out[my].children.clear();
        for (std::uint32_t c : nodes[i].children) {
            std::uint32_t nc = copy(c);
            out[my].children.push_back(nc);
        }
        return my;
    };
    copy(root);

    MDTree t;
    t.nodes_ = std::move(out);
    t.labels_ = std::move(labels);
    return t;
}

std::size_t MDTree::leaf_count() const {
    std::size_t k = 0;
    for (const MDNode& nd : nodes_)
        if (nd.kind == NodeKind::Leaf) ++k;
    return k;
}

MDTree compose(NodeKind kind, const std::vector<MDTree>& parts,
               std::vector<std::string> labels) {
    if (kind == NodeKind::Leaf) throw Error("compose needs an internal node kind");
    if (parts.size() < 2) throw Error("compose needs at least 2 parts");
    std::vector<MDNode> nodes(1);
    nodes[0].kind = kind;
    for (const MDTree& p : parts) {
        if (p.empty()) throw Error("compose part is empty");
        std::uint32_t offset = static_cast<std::uint32_t>(nodes.size());
        for (std::uint32_t i = 0; i < p.node_count(); ++i) {
            MDNode nd = p.node(i);
            for (std::uint32_t& c : nd.children) c += offset;
            nodes.push_back(std::move(nd));
        }
        const MDNode& proot = nodes[offset];
        if (proot.kind == kind && kind != NodeKind::Prime) {
            for (std::uint32_t c : proot.children) nodes[0].children.push_back(c);
        } else {
            nodes[0].children.push_back(offset);
        }
    }
    return MDTree::build(std::move(nodes), 0, std::move(labels));
}

MDTree substitute_leaves(const MDTree& t, const std::vector<MDTree>& replacement_by_vertex,
                         std::vector<std::string> labels) {
    if (t.empty()) throw Error("tree has no nodes");
    std::vector<MDNode> nodes;
    std::function<std::uint32_t(std::uint32_t)> copy = [&](std::uint32_t i) -> std::uint32_t {
        const MDNode& nd = t.node(i);
        if (nd.kind == NodeKind::Leaf) {
            if (nd.vertex >= replacement_by_vertex.size() ||
                replacement_by_vertex[nd.vertex].empty())
                throw Error("no replacement for leaf " + std::to_string(nd.vertex));
            const MDTree& r = replacement_by_vertex[nd.vertex];
            std::uint32_t offset = static_cast<std::uint32_t>(nodes.size());
            for (std::uint32_t j = 0; j < r.node_count(); ++j) {
                MDNode copied = r.node(j);
                for (std::uint32_t& c : copied.children) c += offset;
                copied.vertex_set.clear();
                nodes.push_back(std::move(copied));
            }
            return offset;
        }
        std::uint32_t my = static_cast<std::uint32_t>(nodes.size());
        MDNode fresh;
        fresh.kind = nd.kind;
        nodes.push_back(std::move(fresh));
        for (std::uint32_t c : nd.children) {
            std::uint32_t nc = copy(c);
            nodes[my].children.push_back(nc);
        }
        return my;
    };
    std::uint32_t root = copy(t.root());
    return MDTree::build(std::move(nodes), root, std::move(labels));
}

namespace {

// Vertex sets as raw bit words for the splitter-closure computation.
using Words = std::vector<std::uint64_t>;

bool test_bit(const Words& w, VertexId v) { return (w[v / 64] >> (v % 64)) & 1; }
void set_bit(Words& w, VertexId v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }

std::size_t popcount(const Words& w) {
    std::size_t k = 0;
    for (std::uint64_t x : w) k += static_cast<std::size_t>(std::popcount(x));
    return k;
}

// True iff row ∩ w is neither empty nor all of w.
bool splits(std::span<const std::uint64_t> row, const Words& w) {
    bool any = false, all = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t inter = row[i] & w[i];
        if (inter != 0) any = true;
        if (inter != w[i]) all = false;
    }
    return any && !all;
}

bool subset(const Words& a, const Words& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & b[i]) != a[i]) return false;
    return true;
}

bool overlap(const Words& a, const Words& b) {
    bool inter = false, a_in_b = true, b_in_a = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t both = a[i] & b[i];
        if (both != 0) inter = true;
        if (both != a[i]) a_in_b = false;
        if (both != b[i]) b_in_a = false;
    }
    return inter && !a_in_b && !b_in_a;
}

std::vector<VertexId> to_vertices(const Words& w, std::size_t n) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (test_bit(w, v)) out.push_back(v);
    return out;
}

// Smallest module containing both u and v: close {u,v} under splitters.
// Every module containing the pair also contains each splitter, so the
// closure is contained in all of them and is itself a module.
Words min_module(const detail::BitMatrix& succ, const detail::BitMatrix& pred, std::size_t n,
                 std::size_t words, VertexId u, VertexId v) {
    Words w(words, 0);
    set_bit(w, u);
    set_bit(w, v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId x = 0; x < n; ++x) {
            if (test_bit(w, x)) continue;
            if (splits(succ.row(x), w) || splits(pred.row(x), w)) {
                set_bit(w, x);
                changed = true;
            }
        }
    }
    return w;
}

// All strong modules of g, polynomially: the minimal modules of all vertex
// pairs, the trivial modules, and the unions of overlap-connected groups of
// those cover every strong module; a candidate is strong iff no member of
// the pair-module family overlaps it.
std::vector<Words> strong_family(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t words = (n + 63) / 64;
    detail::BitMatrix succ = detail::successor_bits(g);
    detail::BitMatrix pred = detail::predecessor_bits(g);

    std::vector<Words> family;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            family.push_back(min_module(succ, pred, n, words, u, v));
    for (VertexId v = 0; v < n; ++v) {
        Words w(words, 0);
        set_bit(w, v);
        family.push_back(std::move(w));
    }
    Words all(words, 0);
    for (VertexId v = 0; v < n; ++v) set_bit(all, v);
    family.push_back(std::move(all));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    // Union-find over overlap-connected members.
    std::vector<std::uint32_t> parent(family.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t i) -> std::uint32_t {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::uint32_t i = 0; i < family.size(); ++i)
        for (std::uint32_t j = i + 1; j < family.size(); ++j)
            if (overlap(family[i], family[j])) parent[find(i)] = find(j);

    std::vector<Words> candidates = family;
    {
        std::vector<Words> group_union(family.size());
        for (std::uint32_t i = 0; i < family.size(); ++i) {
            std::uint32_t r = find(i);
            if (group_union[r].empty()) group_union[r] = family[i];
            else
                for (std::size_t k = 0; k < words; ++k) group_union[r][k] |= family[i][k];
        }
        for (Words& w : group_union)
            if (!w.empty()) candidates.push_back(std::move(w));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Words> strong;
    for (const Words& c : candidates) {
        bool overlapped = false;
        for (const Words& f : family)
            if (overlap(f, c)) {
                overlapped = true;
                break;
            }
        if (!overlapped) strong.push_back(c);
    }
    return strong;
}

struct QuotientShape {
    NodeKind kind;
    std::vector<std::size_t> order;  // child ranks for Ordered, else empty
};

// Classifies the quotient over one representative per child.
QuotientShape classify_children(const Digraph& g, const std::vector<VertexId>& reps) {
    const std::size_t k = reps.size();
    std::size_t edge_count = 0;
    bool all_both = true, tournament = true;
    std::vector<std::size_t> outdeg(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            bool e = g.has_edge(reps[i], reps[j]);
            if (e) {
                ++edge_count;
                ++outdeg[i];
            }
            if (i < j) {
                bool f = g.has_edge(reps[j], reps[i]);
                if (!(e && f)) all_both = false;
                if (e == f) tournament = false;
            }
        }
    if (edge_count == 0) return {NodeKind::Parallel, {}};
    if (all_both) return {NodeKind::Series, {}};
    if (tournament) {
        // A tournament is a transitive total order iff all out-degrees differ.
        std::vector<bool> seen(k, false);
        bool distinct = true;
        for (std::size_t d : outdeg) {
            if (seen[d]) distinct = false;
            else seen[d] = true;
        }
        if (distinct) {
            std::vector<std::size_t> order(k);
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return outdeg[a] > outdeg[b]; });
            return {NodeKind::Ordered, std::move(order)};
        }
    }
    return {NodeKind::Prime, {}};
}

MDTree assemble(const Digraph& g, std::vector<Words> strong) {
    const std::size_t n = g.vertex_count();
    std::sort(strong.begin(), strong.end(), [](const Words& a, const Words& b) {
        std::size_t pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });

    std::vector<MDNode> nodes(strong.size());
    std::vector<std::vector<std::uint32_t>> children(strong.size());
    std::vector<std::vector<VertexId>> members(strong.size());
    for (std::uint32_t i = 0; i < strong.size(); ++i) members[i] = to_vertices(strong[i], n);

    for (std::uint32_t i = 1; i < strong.size(); ++i) {
        // Parent: the smallest strict superset. Scanning upward from i works
        // because the list is sorted by size descending.
        std::uint32_t best = 0;
        for (std::uint32_t j = i; j-- > 0;) {
            if (members[j].size() == members[i].size()) continue;
            if (subset(strong[i], strong[j])) {
                best = j;
                break;
            }
        }
        children[best].push_back(i);
    }

    for (std::uint32_t i = 0; i < strong.size(); ++i) {
        if (members[i].size() == 1) {
            nodes[i].kind = NodeKind::Leaf;
            nodes[i].vertex = members[i].front();
            continue;
        }
        std::vector<VertexId> reps;
        reps.reserve(children[i].size());
        for (std::uint32_t c : children[i]) reps.push_back(members[c].front());
        QuotientShape shape = classify_children(g, reps);
        nodes[i].kind = shape.kind;
        if (shape.kind == NodeKind::Ordered) {
            for (std::size_t r : shape.order) nodes[i].children.push_back(children[i][r]);
        } else {
            nodes[i].children = children[i];
        }
    }
    return MDTree::build(std::move(nodes), 0, g.labels());
}

MDTree decompose_closed(const Digraph& g) {
    if (g.vertex_count() == 0) throw Error("cannot decompose an empty graph");
    if (g.vertex_count() == 1) return MDTree::leaf(0, g.labels());
    return assemble(g, strong_family(g));
}

}  // namespace

MDTree decompose_undirected(const Digraph& ug) {
    if (!is_undirected(ug)) throw NotUndirectedError();
    return decompose_closed(ug);
}

MDTree decompose_transitive_dag(const Digraph& g) {
    if (!is_acyclic(g)) throw CyclicInputError();
    if (!is_transitive(g)) throw NotTransitiveError();
    return decompose_closed(g);
}

MDTree decompose_digraph(const Digraph& g) {
    if (g.vertex_count() == 0) throw Error("cannot decompose an empty graph");
    auto [contracted, partition] = scc_contract(g);
    Digraph closure = transitive_closure(contracted);
    MDTree skeleton = decompose_transitive_dag(closure);

    std::vector<MDTree> expansion;
    expansion.reserve(partition.blocks.size());
    for (const auto& block : partition.blocks) {
        if (block.size() == 1) {
            expansion.push_back(MDTree::leaf(block.front(), g.labels()));
            continue;
        }
        std::vector<MDNode> nodes(1 + block.size());
        nodes[0].kind = NodeKind::Series;
        for (std::uint32_t i = 0; i < block.size(); ++i) {
            nodes[1 + i].kind = NodeKind::Leaf;
            nodes[1 + i].vertex = block[i];
            nodes[0].children.push_back(1 + i);
        }
        expansion.push_back(MDTree::build(std::move(nodes), 0, g.labels()));
    }
    return prune(substitute_leaves(skeleton, expansion, g.labels()));
}

MDTree prune(const MDTree& t) {
    if (t.empty()) throw Error("tree has no nodes");
    std::vector<MDNode> nodes;
    std::function<std::uint32_t(std::uint32_t)> copy = [&](std::uint32_t i) -> std::uint32_t {
        const MDNode& nd = t.node(i);
        std::uint32_t my = static_cast<std::uint32_t>(nodes.size());
        MDNode fresh;
        fresh.kind = nd.kind;
        fresh.vertex = nd.vertex;
        nodes.push_back(std::move(fresh));
        for (std::uint32_t c : nd.children) {
            std::uint32_t nc = copy(c);
            bool splice = nodes[nc].kind == nd.kind && nd.kind != NodeKind::Prime;
            if (splice) {
                for (std::uint32_t gc : nodes[nc].children) nodes[my].children.push_back(gc);
            } else {
                nodes[my].children.push_back(nc);
            }
        }
        return my;
    };
    std::uint32_t root = copy(t.root());
    return MDTree::build(std::move(nodes), root, t.labels());
}

Digraph child_quotient(const Digraph& g, const MDTree& t, std::uint32_t node) {
    const MDNode& nd = t.node(node);
    if (nd.kind == NodeKind::Leaf) throw Error("leaf nodes have no child quotient");
    const std::size_t k = nd.children.size();
    std::vector<VertexId> reps;
    std::vector<std::string> labels;
    reps.reserve(k);
    labels.reserve(k);
    for (std::uint32_t c : nd.children) {
        const MDNode& child = t.node(c);
        reps.push_back(child.vertex_set.front());
        std::string joined;
        for (VertexId v : child.vertex_set) {
            if (!joined.empty()) joined += '+';
            joined += g.label(v);
        }
        labels.push_back(std::move(joined));
    }
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            if (i != j && g.has_edge(reps[i], reps[j]))
                edges.push_back({i, j});
    return Digraph(k, std::move(edges), std::move(labels));
}

namespace {

void text_node(const MDTree& t, std::uint32_t i, std::string& out) {
    const MDNode& nd = t.node(i);
    if (nd.kind == NodeKind::Leaf) {
        out += t.labels().at(nd.vertex);
        return;
    }
    out += to_string(nd.kind);
    out.push_back('[');
    const char* sep = nd.kind == NodeKind::Ordered ? " < " : ", ";
    for (std::size_t c = 0; c < nd.children.size(); ++c) {
        if (c > 0) out += sep;
        text_node(t, nd.children[c], out);
    }
    out.push_back(']');
}

}  // namespace

std::string to_text(const MDTree& t) {
    std::string out;
    if (!t.empty()) text_node(t, t.root(), out);
    return out;
}

std::string to_structured(const MDTree& t) {
    std::ostringstream out;
    for (std::uint32_t i = 0; i < t.node_count(); ++i) {
        const MDNode& nd = t.node(i);
        out << "node " << i << ' ';
        if (nd.kind == NodeKind::Leaf) {
            out << "leaf " << t.labels().at(nd.vertex);
        } else {
            out << to_string(nd.kind)
                << (nd.kind == NodeKind::Ordered ? " order" : " children");
            for (std::uint32_t c : nd.children) out << ' ' << c;
        }
        out << '\n';
    }
    out << "root 0\n";
    return out.str();
}

std::string to_dot(const MDTree& t) {
    std::ostringstream out;
    out << "digraph {\n";
    for (std::uint32_t i = 0; i < t.node_count(); ++i) {
        const MDNode& nd = t.node(i);
        if (nd.kind == NodeKind::Leaf) {
            std::string label = t.labels().at(nd.vertex);
            std::string quoted;
            for (char c : label) {
                if (c == '"' || c == '\\') quoted.push_back('\\');
                quoted.push_back(c);
            }
            out << "  n" << i << " [label=\"" << quoted << "\" shape=box];\n";
        } else {
            out << "  n" << i << " [label=\"" << to_string(nd.kind) << "\"];\n";
        }
    }
    for (std::uint32_t i = 0; i < t.node_count(); ++i) {
        const MDNode& nd = t.node(i);
        for (std::size_t c = 0; c < nd.children.size(); ++c) {
            out << "  n" << i << " -> n" << nd.children[c];
            if (nd.kind == NodeKind::Ordered) out << " [label=\"" << (c + 1) << "\"]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace modec
