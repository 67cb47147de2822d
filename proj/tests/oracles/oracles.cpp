#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace oracle {

std::set<Arc> cayley_arcs(const mcayley::FiniteGroup& g, const mcayley::ConnectionMatrix& cm) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  const auto table = g.table();
  std::set<Arc> arcs;
  for (std::uint32_t i = 0; i < cm.parts(); ++i)
    for (std::uint32_t j = 0; j < cm.parts(); ++j)
      for (std::uint32_t t : cm.at(i, j))
        for (std::uint32_t x = 0; x < n; ++x) arcs.insert({i * n + x, j * n + table[t * n + x]});
  return arcs;
}

std::uint64_t automorphism_count(std::size_t n, const std::set<Arc>& arcs) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : arcs) {
      if (!arcs.count({p[u], p[v]})) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::uint64_t closure_order(const std::vector<std::vector<std::uint32_t>>& gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().size();
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::queue<std::vector<std::uint32_t>> todo;
  todo.push(id);
  while (!todo.empty()) {
    auto p = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> q(n);
      for (std::size_t v = 0; v < n; ++v) q[v] = g[p[v]];
      if (seen.insert(q).second) todo.push(q);
    }
  }
  return seen.size();
}

namespace {

std::size_t subgroup_size(const mcayley::FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
  const std::size_t n = g.order();
  std::set<std::uint32_t> seen{0};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint32_t> now(seen.begin(), seen.end());
    for (auto a : now)
      for (auto b : gens)
        if (seen.insert(g.table()[a * n + b]).second) grew = true;
  }
  return seen.size();
}

}  // namespace

std::size_t min_generators(const mcayley::FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::uint32_t> gens;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) gens.push_back(static_cast<std::uint32_t>(i));
      if (subgroup_size(g, gens) == n) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

std::vector<std::uint32_t> quaternion_units_table() {
  // Quaternion (w, x, y, z) with integer entries in {-1, 0, 1}.
  using Q = std::array<int, 4>;
  auto mul = [](const Q& a, const Q& b) {
    return Q{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
             a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
             a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
             a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  };
  const Q one{1, 0, 0, 0}, qi{0, 1, 0, 0}, qj{0, 0, 1, 0};
  std::vector<Q> elems(8);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      Q q = one;
      for (int s = 0; s < a; ++s) q = mul(q, qi);
      if (b) q = mul(q, qj);
      elems[a + 4 * b] = q;
    }
  }
  std::vector<std::uint32_t> table(64);
  for (std::uint32_t u = 0; u < 8; ++u) {
    for (std::uint32_t v = 0; v < 8; ++v) {
      const Q p = mul(elems[u], elems[v]);
      table[u * 8 + v] =
          static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  }
  return table;
}

bool oriented(const std::set<Arc>& arcs) {
  for (const auto& [u, v] : arcs) {
    if (u == v || arcs.count({v, u})) return false;
  }
  return true;
}

int regular_degree(std::size_t n, const std::set<Arc>& arcs) {
  std::vector<int> out(n, 0), in(n, 0);
  for (const auto& [u, v] : arcs) {
    ++out[u];
    ++in[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (out[v] != out[0] || in[v] != out[0]) return -1;
  }
  return n ? out[0] : 0;
}

bool weakly_connected(std::size_t n, const std::set<Arc>& arcs) {
  if (n == 0) return true;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [u, v] : arcs) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::uint64_t count_matrices(const mcayley::FiniteGroup& g, std::size_t m, bool normalize,
                             bool regular) {
  const std::size_t n = g.order();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  std::vector<int> state(pairs.size() * n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k < state.size()) {
      for (int s = 0; s < 3; ++s) {
        state[k] = s;
        rec(k + 1);
      }
      return;
    }
    std::vector<std::vector<std::set<std::uint32_t>>> T(m, std::vector<std::set<std::uint32_t>>(m));
    for (std::size_t d = 0; d < state.size(); ++d) {
      const auto [i, j] = pairs[d / n];
      const auto x = static_cast<std::uint32_t>(d % n);
      if (state[d] == 1) T[i][j].insert(x);
      if (state[d] == 2) T[j][i].insert(g.inverse(x));
    }
    if (normalize && !T[0][1].empty() && !T[0][1].count(0)) return;
    if (regular) {
      const std::size_t k0 = [&] {
        std::size_t s = 0;
        for (std::size_t j = 0; j < m; ++j) s += T[0][j].size();
        return s;
      }();
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t out = 0, in = 0;
        for (std::size_t j = 0; j < m; ++j) {
          out += T[i][j].size();
          in += T[j][i].size();
        }
        if (out != k0 || in != k0) return;
      }
    }
    ++count;
  };
  rec(0);
  return count;
}

}  // namespace oracle
