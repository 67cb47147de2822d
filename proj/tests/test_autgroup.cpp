#include <random>

#include "doctest.h"
#include "mcayley/autgroup.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/error.hpp"
#include "oracles/oracles.hpp"

using namespace mcayley;

namespace {

PartitionedDigraph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return PartitionedDigraph::from_arcs(n, arcs);
}

std::uint64_t search_order(const PartitionedDigraph& d) {
  return *search_automorphisms(d).order.value();
}

ConnectionMatrix two_parts(std::vector<Element> t12, std::vector<Element> t21) {
  ConnectionMatrix cm(2);
  cm.set(0, 1, std::move(t12));
  cm.set(1, 0, std::move(t21));
  return cm;
}

}  // namespace

TEST_CASE("refinement") {
  const auto c3 = refine(cycle(3), ColorPartition::uniform(3));
  CHECK(c3.stable);
  CHECK(c3.color_count() == 1);

  const auto arc = refine(PartitionedDigraph::from_arcs(2, {{0, 1}}), ColorPartition::uniform(2));
  CHECK(arc.color_count() == 2);
  CHECK(arc.color_of[0] != arc.color_of[1]);
}

TEST_CASE("refinement is equitable") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = 0; v < 9; ++v)
        if (u != v && rng() % 5 == 0) arcs.emplace_back(u, v);
    const auto d = PartitionedDigraph::from_arcs(9, arcs);
    const auto c = refine(d, ColorPartition::uniform(9));
    const auto k = c.color_count();
    auto profile = [&](Vertex v) {
      std::vector<int> p(2 * k, 0);
      for (auto w : d.out(v)) ++p[c.color_of[w]];
      for (auto w : d.in(v)) ++p[k + c.color_of[w]];
      return p;
    };
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = 0; v < 9; ++v)
        if (c.color_of[u] == c.color_of[v]) CHECK(profile(u) == profile(v));
  }
}

TEST_CASE("small automorphism groups") {
  CHECK(search_order(cycle(3)) == 3);
  CHECK(search_order(PartitionedDigraph::from_arcs(3, {})) == 6);
  CHECK(search_order(PartitionedDigraph::from_arcs(2, {})) == 2);
  const auto six = build(make_cyclic(3), two_parts({0}, {1}));
  CHECK(search_order(six) == 6);
  CHECK(group_order(brute_force_automorphisms(six)) == 6);
  CHECK(orbits(automorphism_group(six), 6).size() == 1);
  CHECK(is_semiregular(automorphism_group(six)));
  CHECK(search_order(PartitionedDigraph::from_arcs(10, {})) == 3628800);
}

TEST_CASE("generators are automorphisms and the order is exact") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && rng() % 3 == 0) arcs.emplace_back(u, v);
    const auto d = PartitionedDigraph::from_arcs(n, arcs);
    const auto result = search_automorphisms(d);
    for (const auto& g : result.group.generators()) CHECK(is_automorphism(d, g));
    CHECK(group_order(result.group) == *result.order.value());
    CHECK(*result.order.value() ==
          oracle::automorphism_count(n, std::set<oracle::Arc>(arcs.begin(), arcs.end())));
  }
}

TEST_CASE("parts-respecting search") {
  // Two isolated vertices in different parts cannot be swapped.
  const PartitionedDigraph d(2, 1, {0, 1}, {});
  CHECK(*search_automorphisms(d).order.value() == 2);
  AutSearchOptions opts;
  opts.respect_parts = true;
  CHECK(*search_automorphisms(d, opts).order.value() == 1);
}

TEST_CASE("order bound stops early") {
  AutSearchOptions opts;
  opts.order_bound = 5;
  const auto r = search_automorphisms(PartitionedDigraph::from_arcs(8, {}), opts);
  CHECK(r.bound_exceeded);
  CHECK(r.order.exceeds(5));
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(automorphism_group(PartitionedDigraph::from_arcs(20, {}), false, 10),
                  CapExceeded);
  CHECK_THROWS_AS(brute_force_automorphisms(PartitionedDigraph::from_arcs(9, {})), TooLarge);
}

TEST_CASE("equals_RG") {
  const auto z33 = make_power(make_cyclic(3), 3);
  const auto gs = paper_generating_set(z33).elements;
  const auto g2 = build(z33, gamma2_small(z33, gs[0], gs[1], gs[2]));
  CHECK(equals_RG(g2, z33));
  CHECK(group_order(automorphism_group(g2)) == 27);

  CHECK_FALSE(equals_RG(build(make_cyclic(3), two_parts({0}, {1})), make_cyclic(3)));

  // Trivial Aut, but not regular: equals_RG alone does not make a HOR.
  const auto z1 = make_cyclic(1);
  const auto arc = build(z1, two_parts({0}, {}));
  CHECK(equals_RG(arc, z1));
  CHECK_FALSE(is_regular(arc));

  CHECK_THROWS_AS(equals_RG(g2, make_cyclic(9)), DimensionMismatch);
}

TEST_CASE("automorphism orbits of the three-part construction") {
  const auto z33 = make_power(make_cyclic(3), 3);
  const auto gs = paper_generating_set(z33).elements;
  const auto d = build(z33, gamma3_small(z33, gs[0], gs[1], gs[2]));
  const auto parts = orbits(automorphism_group(d), d.vertex_count());
  REQUIRE(parts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (auto v : parts[i]) CHECK(d.part_of(v) == i);
  }
}
