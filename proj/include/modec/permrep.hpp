#ifndef MODEC_PERMREP_HPP
#define MODEC_PERMREP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modec/digraph.hpp"
#include "modec/orient.hpp"

namespace modec {

/// A permutation of the vertex ids together with its inverse rank map.
struct LinearOrder {
    std::vector<VertexId> sequence;
    std::vector<std::uint32_t> position;  // position[v] = index of v in sequence

    static LinearOrder of(std::vector<VertexId> sequence);
};

/// Two linear orders whose intersection is the reachability relation of the
/// graph the representation was built from. Labels carry the vertex names
/// for serialization.
struct PermRep {
    LinearOrder l1;
    LinearOrder l2;
    std::vector<std::string> labels;
};

/// Topologically sorts the union of a transitive DAG's edges and an
/// orientation of its complement. The union must order every pair: two
/// simultaneous sources raise NotTotalError, a cycle raises
/// CyclicInputError.
LinearOrder linearize(const Digraph& gstar, const EdgeOrientation& o);

/// Builds the two-order reachability index for an acyclic input: l1 merges
/// the transitive closure with a transitive orientation of its complement,
/// l2 with the inverse orientation. Cyclic inputs raise CyclicInputError;
/// inputs whose closure complement has no transitive orientation raise
/// Error with the witness rendered into the message.
PermRep build_permrep(const Digraph& g);

/// True iff u reaches v by a nontrivial path, answered by two rank
/// comparisons. reachable(pr, u, u) is false.
bool reachable(const PermRep& pr, VertexId u, VertexId v);

}  // namespace modec

#endif
