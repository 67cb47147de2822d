#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mcayley/cayley.hpp"
#include "mcayley/group.hpp"
#include "mcayley/perm.hpp"

namespace mcayley {

/// Vertex coloring; refinement only ever splits color classes.
struct ColorPartition {
  std::vector<std::uint32_t> color_of;
  bool stable = false;

  std::size_t color_count() const;
  static ColorPartition uniform(std::size_t vertex_count);
  static ColorPartition by_parts(const PartitionedDigraph& digraph);
};

/**
 * Coarsest equitable refinement of `initial`: afterwards two vertices share a
 * color only if, for every color c, they have the same number of
 * out-neighbours and of in-neighbours colored c. Colors of the result are
 * numbered by first appearance in the ordered cell sequence.
 */
ColorPartition refine(const PartitionedDigraph& digraph, const ColorPartition& initial);

struct AutSearchOptions {
  /// Only search for part-preserving automorphisms.
  bool respect_parts = false;
  std::size_t vertex_cap = 512;
  /// Abort as soon as the group is proven larger than this.
  std::optional<std::uint64_t> order_bound;
  /// Automorphisms already known (for instance R(G)); verified, then used to
  /// prune the top level of the search.
  std::vector<Permutation> known_automorphisms;
};

struct AutSearchResult {
  PermGroup group;
  /// Exact order, or a lower bound when `bound_exceeded`.
  GroupOrder order;
  bool bound_exceeded = false;
  std::uint64_t nodes_visited = 0;
};

/// Individualization-refinement search. The returned generators form a strong
/// generating set along the first path of the search tree and the order is the
/// product of the base-point orbit lengths.
AutSearchResult search_automorphisms(const PartitionedDigraph& digraph,
                                     const AutSearchOptions& options = {});

/// Full automorphism group. Part colors are ignored unless `respect_parts`.
/// Throws CapExceeded beyond `vertex_cap` vertices.
PermGroup automorphism_group(const PartitionedDigraph& digraph, bool respect_parts = false,
                             std::size_t vertex_cap = 512);

bool is_automorphism(const PartitionedDigraph& digraph, const Permutation& p);

/// Every automorphism by trying all permutations; at most 8 vertices, else
/// TooLarge. The generator list is the whole group.
PermGroup brute_force_automorphisms(const PartitionedDigraph& digraph);

/// True iff Aut(digraph) = R(G), decided by comparing |Aut| with |G| (R(G) is
/// always contained in Aut). Stops early once |Aut| > |G| is proven.
bool equals_RG(const PartitionedDigraph& digraph, const FiniteGroup& group,
               std::size_t vertex_cap = 512);

}  // namespace mcayley
