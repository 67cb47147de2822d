#include "mcayley/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mcayley/error.hpp"

namespace mcayley {

namespace {

constexpr std::size_t kBruteForceLimit = 8;

std::uint64_t mix(std::uint64_t h, std::uint64_t value) {
  // splitmix64 finaliser folded into a running hash.
  value += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (value ^ (value >> 31));
}

// Ordered partition of the vertex set. Cells are contiguous ranges of
// `elems`, identified by their start position.
struct Partition {
  std::vector<Vertex> elems;
  std::vector<std::uint32_t> pos_of;
  std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
  std::vector<std::uint32_t> cell_end;  // start -> one past the end
  std::size_t cells = 0;
  std::uint64_t trace = 0;

  std::size_t size() const noexcept { return elems.size(); }
  bool discrete() const noexcept { return cells == elems.size(); }
};

class Refiner {
 public:
  explicit Refiner(const PartitionedDigraph& d)
      : d_(d), count_out_(d.vertex_count(), 0), count_in_(d.vertex_count(), 0),
        queued_(d.vertex_count(), 0), cell_touched_(d.vertex_count(), 0) {}

  // Cells ordered by color id; all cells queued, then refined.
  Partition initial(const ColorPartition& coloring) {
    const std::size_t n = d_.vertex_count();
    Partition p;
    p.elems.resize(n);
    std::iota(p.elems.begin(), p.elems.end(), Vertex{0});
    std::stable_sort(p.elems.begin(), p.elems.end(), [&](Vertex a, Vertex b) {
      return coloring.color_of[a] < coloring.color_of[b];
    });
    p.pos_of.resize(n);
    p.cell_of.resize(n);
    p.cell_end.assign(n, 0);
    std::vector<std::uint32_t> starts;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && coloring.color_of[p.elems[j]] == coloring.color_of[p.elems[i]]) ++j;
      for (std::size_t k = i; k < j; ++k) p.cell_of[p.elems[k]] = static_cast<std::uint32_t>(i);
      p.cell_end[i] = static_cast<std::uint32_t>(j);
      starts.push_back(static_cast<std::uint32_t>(i));
      p.trace = mix(p.trace, (static_cast<std::uint64_t>(i) << 32) | (j - i));
      ++p.cells;
      i = j;
    }
    for (std::size_t k = 0; k < n; ++k) p.pos_of[p.elems[k]] = static_cast<std::uint32_t>(k);
    refine(p, starts);
    return p;
  }

  Partition individualize(const Partition& parent, Vertex v) {
    Partition p = parent;
    const std::uint32_t s = p.cell_of[v];
    const std::uint32_t e = p.cell_end[s];
    const std::uint32_t at = p.pos_of[v];
    std::swap(p.elems[s], p.elems[at]);
    p.pos_of[p.elems[at]] = at;
    p.pos_of[v] = s;
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for (std::uint32_t k = s + 1; k < e; ++k) p.cell_of[p.elems[k]] = s + 1;
    ++p.cells;
    p.trace = mix(p.trace, 0xfeed0000ULL ^ s);
    refine(p, {s});
    return p;
  }

 private:
  void refine(Partition& p, std::vector<std::uint32_t> initial_queue) {
    std::deque<std::uint32_t> queue;
    for (const auto s : initial_queue) {
      queue.push_back(s);
      queued_[s] = 1;
    }
    std::vector<Vertex> touched;
    std::vector<std::uint32_t> touched_cells;
    while (!queue.empty() && !p.discrete()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      queued_[w] = 0;
      const std::uint32_t w_end = p.cell_end[w];

      touched.clear();
      auto touch = [&](Vertex v) {
        if (count_out_[v] == 0 && count_in_[v] == 0) touched.push_back(v);
      };
      for (std::uint32_t k = w; k < w_end; ++k) {
        const Vertex x = p.elems[k];
        for (const Vertex v : d_.in(x)) {
          touch(v);
          ++count_out_[v];
        }
        for (const Vertex v : d_.out(x)) {
          touch(v);
          ++count_in_[v];
        }
      }

      touched_cells.clear();
      for (const Vertex v : touched) {
        const std::uint32_t c = p.cell_of[v];
        if (!cell_touched_[c]) {
          cell_touched_[c] = 1;
          touched_cells.push_back(c);
        }
      }
      std::sort(touched_cells.begin(), touched_cells.end());
      p.trace = mix(p.trace, (static_cast<std::uint64_t>(w) << 32) | touched_cells.size());

      for (const std::uint32_t s : touched_cells) {
        cell_touched_[s] = 0;
        split_cell(p, s, queue);
      }
      for (const Vertex v : touched) {
        count_out_[v] = 0;
        count_in_[v] = 0;
      }
    }
    for (const auto s : queue) queued_[s] = 0;
  }

  void split_cell(Partition& p, std::uint32_t s, std::deque<std::uint32_t>& queue) {
    const std::uint32_t e = p.cell_end[s];
    auto key = [&](Vertex v) {
      return (static_cast<std::uint64_t>(count_out_[v]) << 32) | count_in_[v];
    };
    if (e - s == 1) {
      p.trace = mix(p.trace, key(p.elems[s]));
      return;
    }
    auto first = p.elems.begin() + s;
    auto last = p.elems.begin() + e;
    std::sort(first, last, [&](Vertex a, Vertex b) { return key(a) < key(b); });

    std::uint32_t start = s;
    bool split = false;
    for (std::uint32_t k = s; k < e; ++k) {
      p.pos_of[p.elems[k]] = k;
      const bool boundary = k + 1 == e || key(p.elems[k + 1]) != key(p.elems[k]);
      if (!boundary) continue;
      const std::uint32_t end = k + 1;
      p.trace = mix(p.trace, key(p.elems[k]) ^ (static_cast<std::uint64_t>(end - start) << 48));
      if (start != s || end != e) split = true;
      p.cell_end[start] = end;
      for (std::uint32_t j = start; j < end; ++j) p.cell_of[p.elems[j]] = start;
      if (start != s) ++p.cells;
      start = end;
    }
    if (!split) return;
    for (std::uint32_t c = s; c < e; c = p.cell_end[c]) {
      if (!queued_[c]) {
        queued_[c] = 1;
        queue.push_back(c);
      }
    }
  }

  const PartitionedDigraph& d_;
  std::vector<std::uint32_t> count_out_;
  std::vector<std::uint32_t> count_in_;
  std::vector<char> queued_;
  std::vector<char> cell_touched_;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void apply(const Permutation& g) {
    for (std::size_t v = 0; v < parent_.size(); ++v) unite(v, g(static_cast<Vertex>(v)));
  }

 private:
  std::vector<std::size_t> parent_;
};

class AutSearch {
 public:
  AutSearch(const PartitionedDigraph& d, const AutSearchOptions& options)
      : d_(d), options_(options), refiner_(d) {}

  AutSearchResult run() {
    const std::size_t n = d_.vertex_count();
    AutSearchResult result;
    const ColorPartition coloring =
        options_.respect_parts ? ColorPartition::by_parts(d_) : ColorPartition::uniform(n);
    for (const auto& seed : options_.known_automorphisms) {
      if (seed.size() != n || !is_automorphism(d_, seed)) {
        throw Error("supplied known automorphism does not preserve the arc set");
      }
      if (options_.respect_parts) {
        for (Vertex v = 0; v < n; ++v) {
          if (d_.part_of(seed(v)) != d_.part_of(v)) {
            throw Error("supplied known automorphism does not preserve the parts");
          }
        }
      }
    }
    if (n == 0) {
      result.group = PermGroup(0, {}, GroupOrder(1));
      result.order = GroupOrder(1);
      return result;
    }

    path_.push_back(refiner_.initial(coloring));
    while (!path_.back().discrete()) {
      const std::uint32_t s = target_cell(path_.back());
      const Vertex b = path_.back().elems[s];
      targets_.push_back(s);
      base_.push_back(b);
      path_.push_back(refiner_.individualize(path_.back(), b));
    }
    const std::size_t depth = base_.size();
    leaf_ = path_.back().elems;

    std::vector<Permutation> generators;
    GroupOrder order;
    for (std::size_t level = depth; level-- > 0;) {
      const bool top = level == 0;
      UnionFind orbit(n);
      for (const auto& g : generators) orbit.apply(g);
      if (top)
        for (const auto& g : options_.known_automorphisms) orbit.apply(g);

      const Partition& node = path_[level];
      const std::uint32_t s = targets_[level];
      const Vertex base = base_[level];
      std::vector<Vertex> failed;
      for (std::uint32_t k = s; k < node.cell_end[s]; ++k) {
        const Vertex w = node.elems[k];
        if (orbit.find(w) == orbit.find(base)) continue;
        const bool known_bad = std::any_of(failed.begin(), failed.end(), [&](Vertex f) {
          return orbit.find(f) == orbit.find(w);
        });
        if (known_bad) continue;
        std::optional<Permutation> found;
        Partition child = refiner_.individualize(node, w);
        ++nodes_;
        if (child.trace == path_[level + 1].trace) found = descend(child, level + 1);
        if (found) {
          orbit.apply(*found);
          generators.push_back(std::move(*found));
        } else {
          failed.push_back(w);
        }
      }
      std::uint64_t orbit_length = 0;
      for (std::uint32_t k = s; k < node.cell_end[s]; ++k) {
        if (orbit.find(node.elems[k]) == orbit.find(base)) ++orbit_length;
      }
      order.multiply(orbit_length);
      if (options_.order_bound && order.exceeds(*options_.order_bound)) {
        result.bound_exceeded = true;
        break;
      }
    }

    if (!options_.known_automorphisms.empty()) {
      generators.insert(generators.end(), options_.known_automorphisms.begin(),
                        options_.known_automorphisms.end());
    }
    result.order = order;
    result.group = PermGroup(n, std::move(generators),
                             result.bound_exceeded ? std::nullopt : std::optional(order));
    result.nodes_visited = nodes_;
    return result;
  }

 private:
  // Smallest non-singleton cell, lowest start position on ties.
  static std::uint32_t target_cell(const Partition& p) {
    std::uint32_t best = 0;
    std::uint32_t best_size = UINT32_MAX;
    for (std::uint32_t s = 0; s < p.size(); s = p.cell_end[s]) {
      const std::uint32_t size = p.cell_end[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  std::optional<Permutation> descend(const Partition& node, std::size_t level) {
    if (level == base_.size()) {
      if (!node.discrete()) return std::nullopt;
      std::vector<Vertex> images(node.size());
      for (std::size_t k = 0; k < node.size(); ++k) images[leaf_[k]] = node.elems[k];
      Permutation candidate(std::move(images));
      if (is_automorphism(d_, candidate)) return candidate;
      return std::nullopt;
    }
    const std::uint32_t s = targets_[level];
    if (node.cell_end[s] != path_[level].cell_end[s]) return std::nullopt;
    for (std::uint32_t k = s; k < node.cell_end[s]; ++k) {
      Partition child = refiner_.individualize(node, node.elems[k]);
      ++nodes_;
      if (child.trace != path_[level + 1].trace) continue;
      if (auto found = descend(child, level + 1)) return found;
    }
    return std::nullopt;
  }

  const PartitionedDigraph& d_;
  const AutSearchOptions& options_;
  Refiner refiner_;
  std::vector<Partition> path_;
  std::vector<std::uint32_t> targets_;
  std::vector<Vertex> base_;
  std::vector<Vertex> leaf_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::size_t ColorPartition::color_count() const {
  std::vector<std::uint32_t> sorted = color_of;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

ColorPartition ColorPartition::uniform(std::size_t vertex_count) {
  return ColorPartition{std::vector<std::uint32_t>(vertex_count, 0), false};
}

ColorPartition ColorPartition::by_parts(const PartitionedDigraph& digraph) {
  return ColorPartition{
      std::vector<std::uint32_t>(digraph.parts_of().begin(), digraph.parts_of().end()), false};
}

ColorPartition refine(const PartitionedDigraph& digraph, const ColorPartition& initial) {
  if (initial.color_of.size() != digraph.vertex_count()) {
    throw Error("coloring size does not match vertex count");
  }
  ColorPartition result;
  result.stable = true;
  if (digraph.vertex_count() == 0) return result;
  Refiner refiner(digraph);
  const Partition p = refiner.initial(initial);
  result.color_of.assign(digraph.vertex_count(), 0);
  std::uint32_t color = 0;
  for (std::uint32_t s = 0; s < p.size(); s = p.cell_end[s], ++color) {
    for (std::uint32_t k = s; k < p.cell_end[s]; ++k) result.color_of[p.elems[k]] = color;
  }
  return result;
}

AutSearchResult search_automorphisms(const PartitionedDigraph& digraph,
                                     const AutSearchOptions& options) {
  if (digraph.vertex_count() > options.vertex_cap) {
    throw CapExceeded("digraph has " + std::to_string(digraph.vertex_count()) +
                      " vertices, automorphism search cap is " +
                      std::to_string(options.vertex_cap));
  }
  return AutSearch(digraph, options).run();
}

PermGroup automorphism_group(const PartitionedDigraph& digraph, bool respect_parts,
                             std::size_t vertex_cap) {
  AutSearchOptions options;
  options.respect_parts = respect_parts;
  options.vertex_cap = vertex_cap;
  return search_automorphisms(digraph, options).group;
}

bool is_automorphism(const PartitionedDigraph& digraph, const Permutation& p) {
  if (p.size() != digraph.vertex_count()) return false;
  for (Vertex u = 0; u < digraph.vertex_count(); ++u) {
    const auto& out = digraph.out(u);
    const Vertex pu = p(u);
    if (digraph.out(pu).size() != out.size()) return false;
    for (const Vertex v : out) {
      if (!digraph.has_arc(pu, p(v))) return false;
    }
  }
  return true;
}

PermGroup brute_force_automorphisms(const PartitionedDigraph& digraph) {
  const std::size_t n = digraph.vertex_count();
  if (n > kBruteForceLimit) {
    throw TooLarge("brute force automorphisms limited to " + std::to_string(kBruteForceLimit) +
                   " vertices, got " + std::to_string(n));
  }
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::vector<Permutation> all;
  do {
    Permutation p(images);
    if (is_automorphism(digraph, p)) all.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  const auto count = all.size();
  return PermGroup(n, std::move(all), GroupOrder(count));
}

bool equals_RG(const PartitionedDigraph& digraph, const FiniteGroup& group,
               std::size_t vertex_cap) {
  if (digraph.group_order() != group.order() ||
      digraph.vertex_count() != group.order() * digraph.parts()) {
    throw DimensionMismatch("digraph was not built over " + group.label());
  }
  AutSearchOptions options;
  options.vertex_cap = vertex_cap;
  options.order_bound = group.order();
  options.known_automorphisms = right_translation_group(group, digraph.parts()).generators();
  const auto result = search_automorphisms(digraph, options);
  return !result.bound_exceeded && result.order.value() == group.order();
}

}  // namespace mcayley
