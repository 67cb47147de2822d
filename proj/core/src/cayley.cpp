#include "mcayley/cayley.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "mcayley/error.hpp"

namespace mcayley {

namespace {

std::size_t reach_count(const PartitionedDigraph& d, bool forward, bool backward) {
  const std::size_t n = d.vertex_count();
  if (n == 0) return 0;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  auto visit = [&](Vertex w) {
    if (!seen[w]) {
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  };
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (forward)
      for (const Vertex w : d.out(v)) visit(w);
    if (backward)
      for (const Vertex w : d.in(v)) visit(w);
  }
  return count;
}

}  // namespace

ConnectionMatrix::ConnectionMatrix(std::size_t parts) : parts_(parts), sets_(parts * parts) {}

const std::vector<Element>& ConnectionMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= parts_ || j >= parts_) throw OutOfRange("connection matrix index out of range");
  return sets_[i * parts_ + j];
}

void ConnectionMatrix::set(std::size_t i, std::size_t j, std::vector<Element> elements) {
  if (i >= parts_ || j >= parts_) throw OutOfRange("connection matrix index out of range");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  sets_[i * parts_ + j] = std::move(elements);
}

void ConnectionMatrix::insert(std::size_t i, std::size_t j, Element element) {
  if (i >= parts_ || j >= parts_) throw OutOfRange("connection matrix index out of range");
  auto& s = sets_[i * parts_ + j];
  const auto it = std::lower_bound(s.begin(), s.end(), element);
  if (it == s.end() || *it != element) s.insert(it, element);
}

std::size_t ConnectionMatrix::total_size() const noexcept {
  std::size_t total = 0;
  for (const auto& s : sets_) total += s.size();
  return total;
}

bool ConnectionMatrix::diagonal_empty() const noexcept {
  for (std::size_t i = 0; i < parts_; ++i) {
    if (!sets_[i * parts_ + i].empty()) return false;
  }
  return true;
}

void validate(const ConnectionMatrix& matrix, const FiniteGroup& group) {
  for (std::size_t i = 0; i < matrix.parts(); ++i) {
    for (std::size_t j = 0; j < matrix.parts(); ++j) {
      for (const Element t : matrix.at(i, j)) {
        if (t >= group.order()) {
          throw InvalidMatrix("T_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              "} contains " + std::to_string(t) + ", outside a group of order " +
                              std::to_string(group.order()));
        }
      }
    }
    const auto& diag = matrix.at(i, i);
    if (std::binary_search(diag.begin(), diag.end(), group.identity())) {
      throw InvalidMatrix("identity lies in diagonal set T_{" + std::to_string(i + 1) + "," +
                          std::to_string(i + 1) + "}");
    }
  }
}

PartitionedDigraph::PartitionedDigraph(std::size_t parts, std::size_t group_order,
                                       std::vector<Vertex> part_of,
                                       const std::vector<std::pair<Vertex, Vertex>>& arcs)
    : parts_(parts), group_order_(group_order), part_of_(std::move(part_of)) {
  const std::size_t n = part_of_.size();
  out_.assign(n, {});
  in_.assign(n, {});
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) throw OutOfRange("arc endpoint out of range");
    out_[u].push_back(v);
  }
  for (std::size_t u = 0; u < n; ++u) {
    auto& list = out_[u];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    arc_count_ += list.size();
    for (const Vertex v : list) in_[v].push_back(static_cast<Vertex>(u));
  }
}

PartitionedDigraph PartitionedDigraph::from_arcs(
    std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  return PartitionedDigraph(1, vertex_count, std::vector<Vertex>(vertex_count, 0), arcs);
}

bool PartitionedDigraph::has_arc(Vertex u, Vertex v) const noexcept {
  const auto& list = out_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> PartitionedDigraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(arc_count_);
  for (std::size_t u = 0; u < out_.size(); ++u)
    for (const Vertex v : out_[u]) result.emplace_back(static_cast<Vertex>(u), v);
  return result;
}

PartitionedDigraph build(const FiniteGroup& group, const ConnectionMatrix& matrix) {
  validate(matrix, group);
  const std::size_t n = group.order();
  const std::size_t m = matrix.parts();
  std::vector<Vertex> part_of(n * m);
  for (std::size_t v = 0; v < n * m; ++v) part_of[v] = static_cast<Vertex>(v / n);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(n * matrix.total_size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const Element t : matrix.at(i, j)) {
        for (Element g = 0; g < n; ++g) {
          arcs.emplace_back(vertex_id(n, g, i), vertex_id(n, group.mul(t, g), j));
        }
      }
    }
  }
  return PartitionedDigraph(m, n, std::move(part_of), arcs);
}

bool is_oriented(const ConnectionMatrix& matrix, const FiniteGroup& group) {
  for (std::size_t i = 0; i < matrix.parts(); ++i) {
    for (std::size_t j = 0; j < matrix.parts(); ++j) {
      const auto& back = matrix.at(j, i);
      for (const Element t : matrix.at(i, j)) {
        if (std::binary_search(back.begin(), back.end(), group.inverse(t))) return false;
      }
    }
  }
  return true;
}

bool is_oriented(const PartitionedDigraph& digraph) {
  for (Vertex u = 0; u < digraph.vertex_count(); ++u) {
    for (const Vertex v : digraph.out(u)) {
      if (u == v || digraph.has_arc(v, u)) return false;
    }
  }
  return true;
}

std::optional<std::size_t> regular_valency(const PartitionedDigraph& digraph) {
  if (digraph.vertex_count() == 0) return 0;
  const std::size_t k = digraph.out(0).size();
  for (Vertex v = 0; v < digraph.vertex_count(); ++v) {
    if (digraph.out(v).size() != k || digraph.in(v).size() != k) return std::nullopt;
  }
  return k;
}

bool is_regular(const PartitionedDigraph& digraph) { return regular_valency(digraph).has_value(); }

bool is_m_haar_oriented(const ConnectionMatrix& matrix, const FiniteGroup& group) {
  return matrix.diagonal_empty() && is_oriented(matrix, group) &&
         is_regular(build(group, matrix));
}

bool is_weakly_connected(const PartitionedDigraph& digraph) {
  return digraph.vertex_count() > 0 && reach_count(digraph, true, true) == digraph.vertex_count();
}

bool is_strongly_connected(const PartitionedDigraph& digraph) {
  const std::size_t n = digraph.vertex_count();
  return n > 0 && reach_count(digraph, true, false) == n && reach_count(digraph, false, true) == n;
}

Permutation right_translation(const FiniteGroup& group, std::size_t parts, Element g) {
  if (g >= group.order()) throw OutOfRange("element index out of range");
  const std::size_t n = group.order();
  std::vector<Vertex> images(n * parts);
  for (std::size_t i = 0; i < parts; ++i)
    for (Element x = 0; x < n; ++x) images[vertex_id(n, x, i)] = vertex_id(n, group.mul(x, g), i);
  return Permutation(std::move(images));
}

PermGroup right_translation_group(const FiniteGroup& group, std::size_t parts) {
  // Greedy generating set: add elements outside the current closure.
  std::vector<Element> gens;
  std::vector<Element> current{group.identity()};
  for (Element g = 1; g < group.order() && current.size() < group.order(); ++g) {
    if (std::binary_search(current.begin(), current.end(), g)) continue;
    gens.push_back(g);
    current = closure(group, gens);
  }
  std::vector<Permutation> perms;
  perms.reserve(gens.size());
  for (const Element g : gens) perms.push_back(right_translation(group, parts, g));
  return PermGroup(group.order() * parts, std::move(perms), GroupOrder(group.order()));
}

std::string to_json(const ConnectionMatrix& matrix, std::size_t group_order) {
  nlohmann::ordered_json doc;
  doc["m"] = matrix.parts();
  doc["order"] = group_order;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < matrix.parts(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < matrix.parts(); ++j) row.push_back(matrix.at(i, j));
    rows.push_back(std::move(row));
  }
  doc["sets"] = std::move(rows);
  return doc.dump();
}

ConnectionMatrix matrix_from_json(std::string_view text, std::optional<std::size_t> expected_order) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("connection matrix JSON: ") + e.what());
  }
  try {
    const auto m = doc.at("m").get<std::size_t>();
    const auto order = doc.at("order").get<std::size_t>();
    if (expected_order && order != *expected_order) {
      throw DimensionMismatch("matrix is for a group of order " + std::to_string(order) +
                              ", group has order " + std::to_string(*expected_order));
    }
    const auto& rows = doc.at("sets");
    if (!rows.is_array() || rows.size() != m) {
      throw DimensionMismatch("sets must have " + std::to_string(m) + " rows");
    }
    ConnectionMatrix matrix(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (!rows[i].is_array() || rows[i].size() != m) {
        throw DimensionMismatch("row " + std::to_string(i + 1) + " must have " +
                                std::to_string(m) + " sets");
      }
      for (std::size_t j = 0; j < m; ++j) {
        auto elements = rows[i][j].get<std::vector<Element>>();
        for (const Element e : elements) {
          if (e >= order) {
            throw DimensionMismatch("element " + std::to_string(e) + " outside a group of order " +
                                    std::to_string(order));
          }
        }
        matrix.set(i, j, std::move(elements));
      }
    }
    return matrix;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("connection matrix JSON: ") + e.what());
  }
}

}  // namespace mcayley
