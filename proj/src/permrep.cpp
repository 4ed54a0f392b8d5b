#include "modec/permrep.hpp"

#include <algorithm>

#include "modec/errors.hpp"

namespace modec {

LinearOrder LinearOrder::of(std::vector<VertexId> sequence) {
    LinearOrder o;
    o.position.assign(sequence.size(), 0);
    std::vector<bool> seen(sequence.size(), false);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        VertexId v = sequence[i];
        if (v >= sequence.size() || seen[v]) throw Error("sequence is not a permutation");
        seen[v] = true;
        o.position[v] = static_cast<std::uint32_t>(i);
    }
    o.sequence = std::move(sequence);
    return o;
}

LinearOrder linearize(const Digraph& gstar, const EdgeOrientation& o) {
    const std::size_t n = gstar.vertex_count();
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<std::uint32_t> indegree(n, 0);
    auto add = [&](Edge e) {
        succ[e.src].push_back(e.dst);
        ++indegree[e.dst];
    };
    for (const Edge& e : gstar.edges()) add(e);
    for (const Edge& e : o.edges) add(e);

    // The union must be a total order, so exactly one source exists at every
    // step. Two sources mean some pair is unordered; no source means the
    // orientation contradicts the closure.
    std::vector<VertexId> sequence;
    sequence.reserve(n);
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        VertexId source = 0;
        int sources = 0;
        for (VertexId v = 0; v < n; ++v)
            if (!done[v] && indegree[v] == 0) {
                source = v;
                ++sources;
            }
        if (sources == 0) throw CyclicInputError("closure and orientation union has a cycle");
        if (sources > 1) throw NotTotalError();
        done[source] = true;
        sequence.push_back(source);
        for (VertexId w : succ[source]) --indegree[w];
    }
    return LinearOrder::of(std::move(sequence));
}

PermRep build_permrep(const Digraph& g) {
    if (!is_acyclic(g)) throw CyclicInputError();
    ComplementOrientationResult oriented = orient_complement(g);
    if (!oriented.ok())
        throw Error("closure complement is not transitively orientable: " +
                    describe(*oriented.failure, g));
    Digraph gstar = transitive_closure(g);
    PermRep pr;
    pr.l1 = linearize(gstar, *oriented.orientation);
    pr.l2 = linearize(gstar, inverse(*oriented.orientation));
    pr.labels = g.labels();
    return pr;
}

bool reachable(const PermRep& pr, VertexId u, VertexId v) {
    if (u >= pr.l1.position.size() || v >= pr.l1.position.size())
        throw UnknownVertexError();
    if (u == v) return false;
    return pr.l1.position[u] < pr.l1.position[v] && pr.l2.position[u] < pr.l2.position[v];
}

}  // namespace modec
