#ifndef MODEC_REDUCE_HPP
#define MODEC_REDUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modec/digraph.hpp"
#include "modec/mdtree.hpp"

namespace modec {

struct HashValue {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend HashValue operator^(HashValue a, HashValue b) {
        return {a.hi ^ b.hi, a.lo ^ b.lo};
    }
    friend auto operator<=>(const HashValue&, const HashValue&) = default;
};

/// Per-vertex basis value: a keyed cryptographic hash of the vertex id,
/// truncated to 128 bits. Stable across runs.
HashValue signature_basis(VertexId v);

/// Incremental neighborhood fingerprints: XOR of the basis values of the
/// predecessor respectively successor set. Signature equality is necessary
/// but never sufficient for a merge; exact set comparison always follows.
struct Signature {
    HashValue pred_sig, succ_sig;

    friend auto operator<=>(const Signature&, const Signature&) = default;
};

enum class Rule { Seq, Par };

std::string to_string(Rule r);

struct MergeStep {
    Rule rule;
    VertexId a = 0, b = 0;  // working super-vertex ids at merge time
    VertexId merged = 0;    // fresh id of the merged super-vertex
    std::vector<VertexId> a_vertices, b_vertices;  // input vertices inside each operand
};

/// Result of exhaustive rule application: an irreducible graph whose
/// vertices each carry the (possibly unreduced) decomposition fragment of
/// the input vertices merged into them.
struct Kernel {
    Digraph graph;
    std::vector<MDTree> fragments;  // indexed by kernel vertex id
    std::vector<MergeStep> merge_log;
};

struct ReduceOptions {
    /// Process the candidate worklist in seeded random order instead of FIFO.
    std::optional<std::uint64_t> shuffle_seed;
    /// Assert before every merge that no vertex is part of both an
    /// applicable seq pair and an applicable par pair.
    bool check_exclusivity = false;
    /// Test hook: replaces signature_basis for vertex ids below its size.
    std::vector<HashValue> basis_override;
};

/// Rule 1: b is the only successor of a and a the only predecessor of b.
bool seq_applicable(const Digraph& g, VertexId a, VertexId b);

/// Rule 2: a and b have exactly the same predecessor and successor sets.
bool par_applicable(const Digraph& g, VertexId a, VertexId b);

Kernel reduce(const Digraph& g);
Kernel reduce(const Digraph& g, const ReduceOptions& options);

/// Reduction-first decomposition: contract SCCs, optionally transitively
/// reduce, run the flow rules, decompose the kernel's transitive closure,
/// then graft the fragments and SCC series nodes back and prune. Produces
/// the same tree as decompose_digraph.
MDTree decompose_via_reduction(const Digraph& g, bool pre_reduce = false);

}  // namespace modec

#endif
