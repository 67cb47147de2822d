#include "mcayley/constructions.hpp"

#include <algorithm>
#include <string>

#include "mcayley/error.hpp"

namespace mcayley {

namespace {

std::vector<Element> sorted_set(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Builds a set from the listed products and insists that all of them are
// distinct.
std::vector<Element> exact_set(const char* name, std::vector<Element> listed) {
  const std::size_t want = listed.size();
  auto set = sorted_set(std::move(listed));
  if (set.size() != want) {
    throw SetInvariantViolated(std::string("set ") + name + " has " + std::to_string(set.size()) +
                               " distinct elements, expected " + std::to_string(want));
  }
  return set;
}

void require_disjoint_from_inverse(const FiniteGroup& g, const char* a_name,
                                   const std::vector<Element>& a, const char* b_name,
                                   const std::vector<Element>& b) {
  for (Element x : b) {
    if (std::binary_search(a.begin(), a.end(), g.inverse(x))) {
      throw SetInvariantViolated(std::string(a_name) + " meets " + b_name + "^-1 at element " +
                                 std::to_string(g.inverse(x)));
    }
  }
}

void check_elements(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element x : gens) {
    if (x >= g.order()) throw OutOfRange("generator " + std::to_string(x) + " out of range");
  }
}

// 1-based setter, matching how the layouts are written.
struct Layout {
  ConnectionMatrix cm;
  explicit Layout(std::size_t m) : cm(m) {}
  void put(std::size_t i, std::size_t j, const std::vector<Element>& s) {
    for (Element x : s) cm.insert(i - 1, j - 1, x);
  }
  void put(std::size_t i, std::size_t j, Element x) { cm.insert(i - 1, j - 1, x); }
};

ConnectionMatrix finish(const FiniteGroup& g, Layout&& layout, const char* family) {
  if (!is_oriented(layout.cm, g) || !layout.cm.diagonal_empty()) {
    throw SetInvariantViolated(std::string(family) + ": resulting matrix is not m-Haar oriented");
  }
  return std::move(layout.cm);
}

void small_preconditions(const FiniteGroup& g, Element a, Element b, Element c) {
  const Element gens[] = {a, b, c};
  check_elements(g, gens);
  if (!generates(g, gens)) throw PreconditionViolated("(a, b, c) does not generate the group");
  if (g.element_order(a) < g.element_order(b)) throw PreconditionViolated("|a| < |b|");
  if (g.element_order(b) < 3) throw PreconditionViolated("|b| < 3");
}

void large_preconditions(const FiniteGroup& g, std::span<const Element> gens) {
  check_elements(g, gens);
  if (gens.size() < 4) throw PreconditionViolated("need at least 4 generators");
  if (!generates(g, gens)) throw PreconditionViolated("generators do not generate the group");
  if (g.element_order(gens[0]) < 3) throw PreconditionViolated("|h_1| < 3");
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (g.element_order(gens[i - 1]) < g.element_order(gens[i])) {
      throw PreconditionViolated("generator orders are not non-increasing");
    }
  }
}

}  // namespace

SmallGenSets small_gen_sets(const FiniteGroup& g, Element a, Element b, Element c) {
  small_preconditions(g, a, b, c);
  const Element ai = g.inverse(a);
  SmallGenSets sets;
  sets.S = exact_set("S", {0, a, ai, b});
  sets.T = exact_set("T", {b, c, g.mul(b, a), g.mul(c, b)});
  sets.L = exact_set("L", {b, c, g.mul(a, b), g.mul(ai, b)});
  require_disjoint_from_inverse(g, "S", sets.S, "T", sets.T);
  require_disjoint_from_inverse(g, "S", sets.S, "L", sets.L);
  return sets;
}

ConnectionMatrix gamma2_small(const FiniteGroup& g, Element a, Element b, Element c) {
  const auto s = small_gen_sets(g, a, b, c);
  Layout l(2);
  l.put(1, 2, s.S);
  l.put(2, 1, s.T);
  return finish(g, std::move(l), "gamma2_small");
}

ConnectionMatrix gamma3_small(const FiniteGroup& g, Element a, Element b, Element c) {
  const auto s = small_gen_sets(g, a, b, c);
  Layout l(3);
  l.put(1, 2, s.S);
  l.put(3, 1, s.S);
  l.put(3, 2, s.S);
  l.put(2, 1, s.T);
  l.put(2, 3, s.T);
  l.put(1, 3, s.L);
  return finish(g, std::move(l), "gamma3_small");
}

ConnectionMatrix gamma4_small(const FiniteGroup& g, Element a, Element b, Element c) {
  small_preconditions(g, a, b, c);
  Layout l(4);
  l.put(1, 4, 0);
  l.put(1, 3, 0);
  l.put(3, 4, 0);
  l.put(4, 2, 0);
  l.put(2, 1, a);
  l.put(3, 2, b);
  l.put(4, 1, b);
  l.put(2, 3, c);
  return finish(g, std::move(l), "gamma4_small");
}

ConnectionMatrix gammam_small(const FiniteGroup& g, Element a, Element b, Element c,
                              std::size_t m) {
  if (m < 5) throw PreconditionViolated("gammam_small needs m >= 5");
  small_preconditions(g, a, b, c);
  Layout l(m);
  for (std::size_t i = 1; i <= m; ++i) l.put(i, i % m + 1, 0);
  l.put(m, 1, a);
  l.put(1, m - 1, a);
  l.put(2, m, 0);
  l.put(3, 2, c);
  for (std::size_t i = 4; i <= m - 1; ++i) l.put(i, i - 1, b);
  return finish(g, std::move(l), "gammam_small");
}

LargeGenSets large_gen_sets(const FiniteGroup& g, std::span<const Element> gens) {
  large_preconditions(g, gens);
  const std::size_t t = gens.size();
  auto h = [&](std::size_t i) { return gens[i - 1]; };
  auto hh = [&](std::size_t i, std::size_t j) { return g.mul(h(i), h(j)); };

  LargeGenSets s;
  s.t = t;
  Element acc = 0;
  for (std::size_t i = 1; i <= t; ++i) {
    acc = g.mul(acc, h(i));
    s.hbar.push_back(acc);
  }
  for (std::size_t i = 1; i <= t; ++i) {
    Element p = 0;
    for (std::size_t j = 1; j <= t; ++j) {
      if (j != i) p = g.mul(p, h(j));
    }
    s.htilde.push_back(p);
  }
  auto hbar = [&](std::size_t i) { return s.hbar[i - 1]; };
  auto htilde = [&](std::size_t i) { return s.htilde[i - 1]; };

  std::vector<Element> v;
  v = {0};
  for (std::size_t i = 1; i <= t; ++i) v.push_back(h(i));
  s.S = exact_set("S", v);

  v = {hh(1, t)};
  for (std::size_t i = 1; i <= t; ++i) v.push_back(hbar(i));
  s.T = exact_set("T", v);

  v = {h(1), hh(2, 3)};
  for (std::size_t i = 2; i <= t; ++i) v.push_back(hh(1, i));
  s.L = exact_set("L", v);

  v = {hh(1, 3), hh(1, 4)};
  for (std::size_t i = 2; i <= t; ++i) v.push_back(hbar(i));
  s.M = exact_set("M", v);

  v = {hh(2, 3), hh(2, 4)};
  for (std::size_t i = 1; i <= t - 1; ++i) v.push_back(htilde(i));
  s.N = exact_set("N", v);

  v = {0, hh(1, 2)};
  for (std::size_t i = 1; i <= t; ++i) v.push_back(h(i));
  s.K = exact_set("K", v);

  v = {hh(1, t), hbar(t)};
  for (std::size_t i = 1; i <= t; ++i) v.push_back(htilde(i));
  s.Z = exact_set("Z", v);

  v = {0};
  for (std::size_t i = 1; i <= t - 1; ++i) v.push_back(h(i));
  s.E = exact_set("E", v);

  v.clear();
  for (std::size_t i = 1; i <= t; ++i) v.push_back(hbar(i));
  s.F = exact_set("F", v);

  require_disjoint_from_inverse(g, "S", s.S, "T", s.T);
  require_disjoint_from_inverse(g, "S", s.S, "L", s.L);
  require_disjoint_from_inverse(g, "M", s.M, "N", s.N);
  require_disjoint_from_inverse(g, "K", s.K, "Z", s.Z);
  require_disjoint_from_inverse(g, "E", s.E, "F", s.F);
  return s;
}

ConnectionMatrix gamma2_large(const FiniteGroup& g, std::span<const Element> gens) {
  const auto s = large_gen_sets(g, gens);
  Layout l(2);
  l.put(1, 2, s.S);
  l.put(2, 1, s.T);
  return finish(g, std::move(l), "gamma2_large");
}

ConnectionMatrix gamma3_large(const FiniteGroup& g, std::span<const Element> gens) {
  const auto s = large_gen_sets(g, gens);
  Layout l(3);
  l.put(1, 2, s.S);
  l.put(2, 3, s.S);
  l.put(3, 1, s.S);
  l.put(1, 3, s.L);
  l.put(3, 2, s.L);
  l.put(2, 1, s.T);
  return finish(g, std::move(l), "gamma3_large");
}

ConnectionMatrix gamma4_large(const FiniteGroup& g, std::span<const Element> gens) {
  const auto s = large_gen_sets(g, gens);
  const Element h1 = gens[0], h2 = gens[1];
  Layout l(4);
  l.put(1, 2, s.S);
  l.put(2, 1, s.T);
  l.put(3, 4, s.M);
  l.put(4, 3, s.N);
  l.put(1, 3, 0);
  l.put(1, 4, 0);
  l.put(2, 3, 0);
  l.put(2, 4, 0);
  l.put(3, 2, h2);
  l.put(3, 1, h1);
  l.put(4, 1, h1);
  l.put(4, 2, h1);
  return finish(g, std::move(l), "gamma4_large");
}

ConnectionMatrix gamma_even_large_as_printed(const FiniteGroup& g,
                                             std::span<const Element> gens, std::size_t m) {
  if (m < 6 || m % 2 != 0) throw PreconditionViolated("needs even m >= 6");
  const auto s = large_gen_sets(g, gens);
  const Element h1 = gens[0];
  Layout l(m);
  l.put(1, 2, s.S);
  l.put(2, 1, s.T);
  l.put(m - 1, m, s.K);
  l.put(m, m - 1, s.Z);
  l.put(1, 4, 0);
  l.put(2, 3, 0);
  for (std::size_t i = 1; i <= m - 2; ++i) l.put(i, i + 2, 0);
  for (std::size_t i = 3; i <= m; ++i) l.put(i, i - 2, h1);
  for (std::size_t i = 3; i <= m - 3; i += 2) l.put(i, i + 1, s.M);
  for (std::size_t i = 4; i <= m - 2; i += 2) l.put(i, i - 1, s.N);
  return finish(g, std::move(l), "gamma_even_large_as_printed");
}

// Parts 1..4 carry the m = 4 block with the pair (3, 4) switched to E / F so
// that parts 3 and 4 keep valency t + 3 once the chain T_{i,i+2} = {1},
// T_{i+2,i} = {h_1} continues through them. The rest follows the printed
// layout: M / N on (i, i+1) for odd 5 <= i <= m - 3 and K / Z on (m-1, m).
ConnectionMatrix gamma_even_large(const FiniteGroup& g, std::span<const Element> gens,
                                  std::size_t m) {
  if (m < 6 || m % 2 != 0) throw PreconditionViolated("needs even m >= 6");
  const auto s = large_gen_sets(g, gens);
  const Element h1 = gens[0], h2 = gens[1];
  Layout l(m);
  l.put(1, 2, s.S);
  l.put(2, 1, s.T);
  l.put(1, 3, 0);
  l.put(1, 4, 0);
  l.put(2, 3, 0);
  l.put(2, 4, 0);
  l.put(3, 1, h1);
  l.put(4, 1, h1);
  l.put(4, 2, h1);
  l.put(3, 2, h2);
  l.put(3, 4, s.E);
  l.put(4, 3, s.F);
  for (std::size_t i = 3; i <= m - 2; ++i) l.put(i, i + 2, 0);
  for (std::size_t i = 5; i <= m; ++i) l.put(i, i - 2, h1);
  for (std::size_t i = 5; i <= m - 3; i += 2) l.put(i, i + 1, s.M);
  for (std::size_t i = 6; i <= m - 2; i += 2) l.put(i, i - 1, s.N);
  l.put(m - 1, m, s.K);
  l.put(m, m - 1, s.Z);
  return finish(g, std::move(l), "gamma_even_large");
}

ConnectionMatrix gamma_odd_large(const FiniteGroup& g, std::span<const Element> gens,
                                 std::size_t m) {
  if (m < 5 || m % 2 == 0) throw PreconditionViolated("needs odd m >= 5");
  const auto s = large_gen_sets(g, gens);
  const Element h1 = gens[0];
  Layout l(m);
  l.put(1, 2, s.S);
  l.put(m - 1, m, s.S);
  l.put(m, m - 2, s.S);
  l.put(2, 1, s.T);
  for (std::size_t i = 1; i <= m - 3; ++i) l.put(i, i + 2, 0);
  l.put(m, m - 1, h1);
  l.put(m - 2, m, h1);
  for (std::size_t i = 3; i <= m - 1; ++i) l.put(i, i - 2, h1);
  for (std::size_t i = 3; i <= m - 2; i += 2) l.put(i, i + 1, s.E);
  for (std::size_t i = 4; i <= m - 3; i += 2) l.put(i, i - 1, s.F);
  return finish(g, std::move(l), "gamma_odd_large");
}

PosrWitness posr_witness(std::string_view name) {
  if (name == "Q8") {
    // x^i y^j is element i + 4j: {1, x, y} and {xy, x^2}.
    PosrWitness w{make_quaternion8(), ConnectionMatrix(2)};
    w.matrix.set(0, 1, {0, 1, 4});
    w.matrix.set(1, 0, {5, 2});
    return w;
  }
  if (name == "Z4") {
    PosrWitness w{make_cyclic(4), ConnectionMatrix(2)};
    w.matrix.set(0, 1, {0, 1});
    w.matrix.set(1, 0, {2});
    return w;
  }
  if (name == "Z5") {
    PosrWitness w{make_cyclic(5), ConnectionMatrix(2)};
    w.matrix.set(0, 1, {0, 1, 4});
    w.matrix.set(1, 0, {2});
    return w;
  }
  throw UnknownWitness("no POSR witness named '" + std::string(name) + "' (known: Q8, Z4, Z5)");
}

Construction construct_hor(const FiniteGroup& g, std::size_t m) {
  if (m < 2) throw PreconditionViolated("m must be at least 2");
  if (is_elementary_abelian_2(g)) {
    throw OutOfScope("elementary abelian 2-groups are not covered by these constructions");
  }
  const std::size_t d = minimal_generating_size(g);
  if (d <= 2) {
    throw OutOfScope("d(G) = " + std::to_string(d) +
                     " is not covered by these constructions (need d(G) >= 3)");
  }
  Construction c;
  c.generators = paper_generating_set(g);
  const auto& e = c.generators.elements;
  if (d == 3) {
    const Element a = e[0], b = e[1], cc = e[2];
    switch (m) {
      case 2:
        c.family = "gamma2_small";
        c.matrix = gamma2_small(g, a, b, cc);
        c.valency = 4;
        break;
      case 3:
        c.family = "gamma3_small";
        c.matrix = gamma3_small(g, a, b, cc);
        c.valency = 8;
        break;
      case 4:
        c.family = "gamma4_small";
        c.matrix = gamma4_small(g, a, b, cc);
        c.valency = 2;
        break;
      default:
        c.family = "gammam_small";
        c.matrix = gammam_small(g, a, b, cc, m);
        c.valency = 2;
    }
    return c;
  }
  const std::size_t t = d;
  if (m == 2) {
    c.family = "gamma2_large";
    c.matrix = gamma2_large(g, e);
    c.valency = t + 1;
  } else if (m == 3) {
    c.family = "gamma3_large";
    c.matrix = gamma3_large(g, e);
    c.valency = 2 * t + 2;
  } else if (m == 4) {
    c.family = "gamma4_large";
    c.matrix = gamma4_large(g, e);
    c.valency = t + 3;
  } else if (m % 2 == 0) {
    c.family = "gamma_even_large";
    c.matrix = gamma_even_large(g, e, m);
    c.valency = t + 3;
  } else {
    c.family = "gamma_odd_large";
    c.matrix = gamma_odd_large(g, e, m);
    c.valency = t + 2;
  }
  return c;
}

}  // namespace mcayley
