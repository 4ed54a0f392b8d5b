#ifndef MODEC_ORIENT_HPP
#define MODEC_ORIENT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modec/digraph.hpp"

namespace modec {

/// A chosen direction for every edge of some undirected target graph.
/// Each unordered adjacent pair appears exactly once.
struct EdgeOrientation {
    std::vector<Edge> edges;  // sorted by (src, dst)
};

/// Inverts every edge.
EdgeOrientation inverse(const EdgeOrientation& o);

/// An implication class that contains some edge together with its inverse,
/// so neither direction choice can satisfy the forcing relation.
struct SelfInverseClass {
    std::vector<Edge> edges;
};

/// An oriented a->b, b->c without an oriented a->c, certifying that the
/// produced orientation is not transitive.
struct NonTransitiveTriple {
    VertexId a = 0, b = 0, c = 0;
};

using OrientationFailure = std::variant<SelfInverseClass, NonTransitiveTriple>;

std::string describe(const OrientationFailure& failure, const Digraph& g);

struct OrientationResult {
    std::optional<EdgeOrientation> orientation;
    std::optional<OrientationFailure> failure;

    bool ok() const { return orientation.has_value(); }
};

/// Forcing relation on directed edges of an undirected graph: e1 and e2
/// force each other iff they share their tail and the heads are non-adjacent,
/// or share their head and the tails are non-adjacent.
bool gamma(const Digraph& ug, Edge e1, Edge e2);

/// Connected components of the forcing relation over all directed edges
/// (each adjacency contributes both directions). Classes are canonically
/// sorted; an edge and its inverse end up in one class only when forcing
/// wraps around an odd cycle.
std::vector<std::vector<Edge>> implication_classes(const Digraph& ug);

/// Transitive orientation of an undirected graph, or a witness that none
/// exists. Deterministic: series child quotients are directed by ascending
/// minimum vertex id, prime ones are seeded with their smallest directed
/// edge and closed under forcing. The result is verified transitive before
/// it is returned.
OrientationResult transitive_orientation(const Digraph& ug);

enum class OrientationSource { Lifted, Direct };

std::string to_string(OrientationSource s);

struct ComplementOrientationResult {
    std::optional<EdgeOrientation> orientation;  // over comp(U(G*))
    OrientationSource source = OrientationSource::Lifted;
    std::optional<OrientationFailure> failure;

    bool ok() const { return orientation.has_value(); }
};

/// Orients the complement of the input's undirected closure and restricts
/// the result to the complement of the closure's undirected closure
/// (source=Lifted); when the larger complement is not a comparability graph,
/// retries directly on the smaller one (source=Direct).
ComplementOrientationResult orient_complement(const Digraph& g);

}  // namespace modec

#endif
