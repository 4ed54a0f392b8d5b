#include "modec/orient.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "modec/errors.hpp"
#include "modec/mdtree.hpp"

namespace modec {

EdgeOrientation inverse(const EdgeOrientation& o) {
    EdgeOrientation out;
    out.edges.reserve(o.edges.size());
    for (const Edge& e : o.edges) out.edges.push_back({e.dst, e.src});
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool gamma(const Digraph& ug, Edge e1, Edge e2) {
    if (!ug.has_edge(e1.src, e1.dst))
        throw EdgeNotInGraphError("edge (" + std::to_string(e1.src) + ", " +
                                  std::to_string(e1.dst) + ") not in graph");
    if (!ug.has_edge(e2.src, e2.dst))
        throw EdgeNotInGraphError("edge (" + std::to_string(e2.src) + ", " +
                                  std::to_string(e2.dst) + ") not in graph");
    if (e1.src == e2.src && !ug.has_edge(e1.dst, e2.dst)) return true;
    if (e1.dst == e2.dst && !ug.has_edge(e1.src, e2.src)) return true;
    return false;
}

namespace {

// Forcing-relation component of seed within ug, by BFS. Shared tail: other
// edges out of the tail whose heads are non-adjacent; shared head likewise.
std::vector<Edge> forcing_class(const Digraph& ug, Edge seed) {
    std::map<Edge, bool> in_class;
    std::vector<Edge> queue{seed}, out;
    in_class[seed] = true;
    while (!queue.empty()) {
        Edge e = queue.back();
        queue.pop_back();
        out.push_back(e);
        for (VertexId d : ug.successors(e.src)) {
            if (d == e.dst || ug.has_edge(e.dst, d)) continue;
            Edge f{e.src, d};
            if (!in_class[f]) {
                in_class[f] = true;
                queue.push_back(f);
            }
        }
        for (VertexId c : ug.successors(e.dst)) {
            if (c == e.src || ug.has_edge(e.src, c)) continue;
            Edge f{c, e.dst};
            if (!in_class[f]) {
                in_class[f] = true;
                queue.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<Edge>> implication_classes(const Digraph& ug) {
    if (!is_undirected(ug)) throw NotUndirectedError();
    std::vector<std::vector<Edge>> classes;
    std::map<Edge, bool> seen;
    for (const Edge& e : ug.edges()) {
        if (seen[e]) continue;
        std::vector<Edge> cls = forcing_class(ug, e);
        for (const Edge& f : cls) seen[f] = true;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

std::string to_string(OrientationSource s) {
    return s == OrientationSource::Lifted ? "lifted" : "direct";
}

std::string describe(const OrientationFailure& failure, const Digraph& g) {
    std::ostringstream out;
    if (const auto* cls = std::get_if<SelfInverseClass>(&failure)) {
        out << "implication class forces an edge both ways:";
        for (const Edge& e : cls->edges)
            out << ' ' << g.label(e.src) << "->" << g.label(e.dst);
    } else {
        const auto& t = std::get<NonTransitiveTriple>(failure);
        out << "orientation is not transitive: " << g.label(t.a) << "->" << g.label(t.b)
            << " and " << g.label(t.b) << "->" << g.label(t.c) << " without "
            << g.label(t.a) << "->" << g.label(t.c);
    }
    return out.str();
}

namespace {

// Orientation of one prime child quotient: repeatedly seed the smallest
// unoriented pair, close it under forcing restricted to the still-unoriented
// subgraph, and fail if a class captures both directions of some pair.
struct QuotientOrientation {
    std::vector<Edge> edges;                 // chosen directions, quotient ids
    std::optional<std::vector<Edge>> stuck;  // self-inverse class on failure
};

QuotientOrientation orient_prime_quotient(const Digraph& q) {
    const std::size_t k = q.vertex_count();
    std::vector<std::vector<bool>> rem(k, std::vector<bool>(k, false));
    std::size_t remaining = 0;
    for (const Edge& e : q.edges()) {
        rem[e.src][e.dst] = true;
        if (e.src < e.dst) ++remaining;
    }

    QuotientOrientation result;
    while (remaining > 0) {
        Edge seed{0, 0};
        bool found = false;
        for (VertexId i = 0; i < k && !found; ++i)
            for (VertexId j = 0; j < k && !found; ++j)
                if (i != j && rem[i][j]) {
                    seed = {i, j};
                    found = true;
                }

        // -1 none, 0 forward in class, 1 backward in class
        std::vector<std::vector<signed char>> state(k, std::vector<signed char>(k, -1));
        std::vector<Edge> cls{seed}, queue{seed};
        state[seed.src][seed.dst] = 0;
        state[seed.dst][seed.src] = 1;
        bool self_inverse = false;
        while (!queue.empty() && !self_inverse) {
            Edge e = queue.back();
            queue.pop_back();
            auto visit = [&](Edge f) {
                signed char s = state[f.src][f.dst];
                if (s == 0) return;
                if (s == 1) {
                    self_inverse = true;
                    cls.push_back(f);
                    return;
                }
                state[f.src][f.dst] = 0;
                state[f.dst][f.src] = 1;
                cls.push_back(f);
                queue.push_back(f);
            };
            for (VertexId d = 0; d < k && !self_inverse; ++d)
                if (d != e.src && d != e.dst && rem[e.src][d] && !rem[e.dst][d])
                    visit({e.src, d});
            for (VertexId c = 0; c < k && !self_inverse; ++c)
                if (c != e.src && c != e.dst && rem[c][e.dst] && !rem[e.src][c])
                    visit({c, e.dst});
        }
        if (self_inverse) {
            std::sort(cls.begin(), cls.end());
            result.stuck = std::move(cls);
            return result;
        }
        for (const Edge& e : cls) {
            rem[e.src][e.dst] = rem[e.dst][e.src] = false;
            --remaining;
            result.edges.push_back(e);
        }
    }
    return result;
}

}  // namespace

OrientationResult transitive_orientation(const Digraph& ug) {
    if (!is_undirected(ug)) throw NotUndirectedError();
    OrientationResult result;
    if (ug.vertex_count() == 0) {
        result.orientation = EdgeOrientation{};
        return result;
    }

    MDTree tree = decompose_undirected(ug);
    std::vector<Edge> oriented;
    for (std::uint32_t i = 0; i < tree.node_count(); ++i) {
        const MDNode& nd = tree.node(i);
        if (nd.kind == NodeKind::Leaf || nd.kind == NodeKind::Parallel) continue;
        if (nd.kind == NodeKind::Ordered)
            throw Error("unexpected ordered node in an undirected decomposition");

        const std::size_t k = nd.children.size();
        std::vector<const std::vector<VertexId>*> sets(k);
        for (std::size_t c = 0; c < k; ++c) sets[c] = &tree.node(nd.children[c]).vertex_set;

        std::vector<Edge> quotient_edges;
        if (nd.kind == NodeKind::Series) {
            for (VertexId a = 0; a < k; ++a)
                for (VertexId b = a + 1; b < k; ++b) quotient_edges.push_back({a, b});
        } else {
            Digraph q = child_quotient(ug, tree, i);
            QuotientOrientation qo = orient_prime_quotient(q);
            if (qo.stuck) {
                // Lift a conflicting quotient edge back to representatives and
                // report its forcing class in the input graph.
                Edge first = qo.stuck->front();
                Edge lifted{sets[first.src]->front(), sets[first.dst]->front()};
                result.failure = SelfInverseClass{forcing_class(ug, lifted)};
                return result;
            }
            quotient_edges = std::move(qo.edges);
        }
        for (const Edge& qe : quotient_edges)
            for (VertexId u : *sets[qe.src])
                for (VertexId v : *sets[qe.dst]) oriented.push_back({u, v});
    }

    std::sort(oriented.begin(), oriented.end());
    Digraph check(ug.vertex_count(), oriented, ug.labels());
    if (!is_oriented(check)) throw Error("orientation produced both directions of an edge");
    for (VertexId a = 0; a < check.vertex_count(); ++a)
        for (VertexId b : check.successors(a))
            for (VertexId c : check.successors(b))
                if (a != c && !check.has_edge(a, c)) {
                    result.failure = NonTransitiveTriple{a, b, c};
                    return result;
                }
    result.orientation = EdgeOrientation{std::move(oriented)};
    return result;
}

ComplementOrientationResult orient_complement(const Digraph& g) {
    ComplementOrientationResult result;
    Digraph full_complement = undirected_complement(g);
    Digraph closure = transitive_closure(g);
    Digraph target = undirected_complement(closure);

    OrientationResult lifted = transitive_orientation(full_complement);
    if (lifted.ok()) {
        std::vector<Edge> restricted;
        for (const Edge& e : lifted.orientation->edges)
            if (target.has_edge(e.src, e.dst)) restricted.push_back(e);
        Digraph check(g.vertex_count(), restricted, g.labels());
        if (!is_transitive(check))
            throw Error("restricted orientation lost transitivity");
        result.orientation = EdgeOrientation{std::move(restricted)};
        result.source = OrientationSource::Lifted;
        return result;
    }

    OrientationResult direct = transitive_orientation(target);
    if (direct.ok()) {
        result.orientation = std::move(direct.orientation);
        result.source = OrientationSource::Direct;
        return result;
    }
    result.failure = std::move(direct.failure);
    return result;
}

}  // namespace modec
