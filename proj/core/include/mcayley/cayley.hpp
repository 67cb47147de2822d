#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcayley/group.hpp"
#include "mcayley/perm.hpp"

namespace mcayley {

/**
 * The m x m array of connection sets (T_{i,j}) of an m-Cayley digraph.
 *
 * Parts are 0-based here: sets(i, j) is T_{i+1,j+1}. Each set is kept sorted
 * and duplicate-free.
 */
class ConnectionMatrix {
 public:
  ConnectionMatrix() = default;
  explicit ConnectionMatrix(std::size_t parts);

  std::size_t parts() const noexcept { return parts_; }

  const std::vector<Element>& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::vector<Element> elements);
  void insert(std::size_t i, std::size_t j, Element element);

  /// Sum of all set sizes.
  std::size_t total_size() const noexcept;
  bool diagonal_empty() const noexcept;

  friend bool operator==(const ConnectionMatrix&, const ConnectionMatrix&) = default;

 private:
  std::size_t parts_ = 0;
  std::vector<std::vector<Element>> sets_;
};

/// Throws InvalidMatrix if an element is out of range or the identity lies
/// on the diagonal.
void validate(const ConnectionMatrix& matrix, const FiniteGroup& group);

/**
 * A digraph whose vertices carry a part index. Cayley digraphs number vertex
 * (g, i) as i * n + g with 0-based part i.
 */
class PartitionedDigraph {
 public:
  PartitionedDigraph() = default;
  /// Generic constructor; duplicate arcs collapse.
  PartitionedDigraph(std::size_t parts, std::size_t group_order, std::vector<Vertex> part_of,
                     const std::vector<std::pair<Vertex, Vertex>>& arcs);

  /// Single-part digraph on `vertex_count` vertices.
  static PartitionedDigraph from_arcs(std::size_t vertex_count,
                                      const std::vector<std::pair<Vertex, Vertex>>& arcs);

  std::size_t vertex_count() const noexcept { return part_of_.size(); }
  std::size_t parts() const noexcept { return parts_; }
  std::size_t group_order() const noexcept { return group_order_; }
  std::size_t arc_count() const noexcept { return arc_count_; }
  Vertex part_of(Vertex v) const noexcept { return part_of_[v]; }
  const std::vector<Vertex>& parts_of() const noexcept { return part_of_; }

  const std::vector<Vertex>& out(Vertex v) const noexcept { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const noexcept { return in_[v]; }
  bool has_arc(Vertex u, Vertex v) const noexcept;
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

 private:
  std::size_t parts_ = 0;
  std::size_t group_order_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<Vertex> part_of_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

inline Vertex vertex_id(std::size_t group_order, Element g, std::size_t part) {
  return static_cast<Vertex>(part * group_order + g);
}

/// Arc (g, i) -> (t g, j) for every t in T_{i,j}: connection elements act on
/// the left, while R(G) acts on the right.
PartitionedDigraph build(const FiniteGroup& group, const ConnectionMatrix& matrix);

/// T_{i,j} and T_{j,i}^{-1} disjoint for every ordered pair, including i = j.
bool is_oriented(const ConnectionMatrix& matrix, const FiniteGroup& group);
/// No loops and no pair of opposite arcs.
bool is_oriented(const PartitionedDigraph& digraph);

/// Common valency when every in- and out-valency agree.
std::optional<std::size_t> regular_valency(const PartitionedDigraph& digraph);
bool is_regular(const PartitionedDigraph& digraph);

/// Empty diagonal, regular and oriented.
bool is_m_haar_oriented(const ConnectionMatrix& matrix, const FiniteGroup& group);

bool is_weakly_connected(const PartitionedDigraph& digraph);
bool is_strongly_connected(const PartitionedDigraph& digraph);

/// R(g): (x, i) -> (x g, i) on m copies of the group.
Permutation right_translation(const FiniteGroup& group, std::size_t parts, Element g);
/// R(G), generated by the right translations of a generating set; the order
/// |G| is recorded.
PermGroup right_translation_group(const FiniteGroup& group, std::size_t parts);

/// {"m": int, "order": int, "sets": [[[int...]...]...]} with sorted sets.
std::string to_json(const ConnectionMatrix& matrix, std::size_t group_order);
/// Throws ParseError on malformed JSON and DimensionMismatch when `order`
/// disagrees with `expected_order` (if given) or the sets array is not m x m.
ConnectionMatrix matrix_from_json(std::string_view text,
                                  std::optional<std::size_t> expected_order = std::nullopt);

}  // namespace mcayley
