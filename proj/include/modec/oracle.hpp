#ifndef MODEC_ORACLE_HPP
#define MODEC_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "modec/digraph.hpp"

namespace modec {

/// A vertex set treated as a module candidate. Always sorted ascending in
/// values returned from this header.
using ModuleSet = std::vector<VertexId>;

enum class ModuleKind { Prime, Series, Parallel, Ordered };

std::string to_string(ModuleKind kind);

/// Vertex cap for the subset-enumerating operations below. Everything here
/// exists to be obviously correct, not fast; past this size it refuses to
/// run rather than silently degrade.
inline constexpr std::size_t kDefaultOracleBound = 14;

/// True iff no vertex outside m distinguishes two members of m, i.e. for
/// every x outside m the edges x->a and a->x are uniform over a in m.
bool is_module(const Digraph& g, const ModuleSet& m);

/// Every nonempty vertex subset passing is_module, by subset enumeration.
/// Throws OracleBoundError when vertex_count exceeds the bound.
std::vector<ModuleSet> all_modules(const Digraph& g,
                                   std::size_t bound = kDefaultOracleBound);

/// Modules that overlap no other module (overlap: intersecting, neither
/// containing the other). Same bound as all_modules.
std::vector<ModuleSet> strong_modules(const Digraph& g,
                                      std::size_t bound = kDefaultOracleBound);

/// Quotient by a congruence partition: one vertex per block, edge between
/// blocks iff the (uniform) cross pairs are edges. Block order defines the
/// quotient's vertex ids; labels join member labels with '+' ascending.
/// Throws NotCongruenceError when a block is not a module.
Digraph quotient(const Digraph& g, const Partition& p);

/// Classifies a module of size >= 2 by its child quotient graph, the
/// quotient of g|m by the maximal strong modules properly contained in m:
/// clique -> Series, edgeless -> Parallel, transitive tournament -> Ordered,
/// anything else -> Prime.
ModuleKind module_kind(const Digraph& g, const ModuleSet& m,
                       std::size_t bound = kDefaultOracleBound);

/// The unique smallest strong module containing m.
ModuleSet minimal_strong_superset(const Digraph& g, const ModuleSet& m,
                                  std::size_t bound = kDefaultOracleBound);

}  // namespace modec

#endif
