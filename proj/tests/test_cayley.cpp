#include <random>

#include "doctest.h"
#include "mcayley/cayley.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/error.hpp"
#include "oracles/oracles.hpp"

using namespace mcayley;

namespace {

ConnectionMatrix two_parts(std::vector<Element> t12, std::vector<Element> t21) {
  ConnectionMatrix cm(2);
  cm.set(0, 1, std::move(t12));
  cm.set(1, 0, std::move(t21));
  return cm;
}

}  // namespace

TEST_CASE("build follows the definition") {
  const auto z1 = make_cyclic(1);
  const auto single = build(z1, two_parts({0}, {}));
  CHECK(single.vertex_count() == 2);
  CHECK(single.arc_count() == 1);
  CHECK(single.has_arc(0, 1));

  const auto q8 = make_quaternion8();
  const auto witness = build(q8, two_parts({0, 1, 4}, {5, 2}));
  CHECK(witness.vertex_count() == 16);
  CHECK(witness.arc_count() == 40);

  // 1_1 -> 1_2 -> x_1 -> x_2 -> x^2_1 -> x^2_2 -> 1_1
  const auto z3 = make_cyclic(3);
  const auto cycle = build(z3, two_parts({0}, {1}));
  const std::vector<Vertex> walk = {0, 3, 1, 4, 2, 5, 0};
  CHECK(cycle.arc_count() == 6);
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) CHECK(cycle.has_arc(walk[k], walk[k + 1]));
}

TEST_CASE("build agrees with the reference arc set") {
  std::mt19937_64 rng(7);
  for (const auto& g : {make_cyclic(5), make_quaternion8(), make_dihedral(3)}) {
    for (int round = 0; round < 20; ++round) {
      ConnectionMatrix cm(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (Element x = 0; x < g.order(); ++x)
            if (rng() % 4 == 0 && !(i == j && x == 0)) cm.insert(i, j, x);
      const auto d = build(g, cm);
      const auto arcs = d.arcs();
      CHECK(std::set<oracle::Arc>(arcs.begin(), arcs.end()) == oracle::cayley_arcs(g, cm));
      CHECK(d.arc_count() == g.order() * cm.total_size());
    }
  }
}

TEST_CASE("matrix validation") {
  const auto z3 = make_cyclic(3);
  ConnectionMatrix bad(2);
  bad.set(0, 0, {0});
  CHECK_THROWS_AS(validate(bad, z3), InvalidMatrix);
  CHECK_THROWS_AS(build(z3, bad), InvalidMatrix);
  ConnectionMatrix out_of_range(2);
  out_of_range.set(0, 1, {3});
  CHECK_THROWS_AS(validate(out_of_range, z3), InvalidMatrix);
}

TEST_CASE("orientation") {
  const auto z22 = make_elementary_abelian_2(2);
  CHECK(is_oriented(ConnectionMatrix(2), z22));
  ConnectionMatrix diag(2);
  diag.set(0, 0, {1});
  CHECK_FALSE(is_oriented(diag, z22));
  CHECK_FALSE(is_oriented(build(z22, diag)));

  const auto z34 = make_power(make_cyclic(3), 4);
  const auto sets = large_gen_sets(z34, paper_generating_set(z34).elements);
  CHECK(is_oriented(two_parts(sets.S, sets.T), z34));
  CHECK(is_oriented(build(z34, two_parts(sets.S, sets.T))));
}

TEST_CASE("regularity and m-Haar orientation") {
  const auto z3 = make_cyclic(3);
  CHECK(regular_valency(build(z3, two_parts({0}, {1}))) == 1u);

  const auto z33 = make_power(make_cyclic(3), 3);
  const auto gs = paper_generating_set(z33).elements;
  const auto g2 = gamma2_small(z33, gs[0], gs[1], gs[2]);
  CHECK(regular_valency(build(z33, g2)) == 4u);
  CHECK(is_m_haar_oriented(g2, z33));
  const auto g4 = gamma4_small(z33, gs[0], gs[1], gs[2]);
  CHECK(is_m_haar_oriented(g4, z33));
  CHECK(regular_valency(build(z33, g4)) == 2u);

  const auto z4 = make_cyclic(4);
  CHECK_FALSE(is_regular(build(z4, two_parts({0, 1}, {2}))));
  const auto q8 = make_quaternion8();
  CHECK_FALSE(is_m_haar_oriented(two_parts({0, 1, 4}, {5, 2}), q8));

  const ConnectionMatrix empty(2);
  CHECK(is_m_haar_oriented(empty, z3));
  CHECK(regular_valency(build(z3, empty)) == 0u);
  CHECK_FALSE(is_weakly_connected(build(z3, empty)));
}

TEST_CASE("connectivity") {
  const auto z1 = make_cyclic(1);
  CHECK(is_weakly_connected(build(z1, two_parts({0}, {}))));
  CHECK_FALSE(is_strongly_connected(build(z1, two_parts({0}, {}))));
  CHECK_FALSE(is_weakly_connected(PartitionedDigraph::from_arcs(3, {})));
  const auto z33 = make_power(make_cyclic(3), 3);
  const auto gs = paper_generating_set(z33).elements;
  const auto d = build(z33, gammam_small(z33, gs[0], gs[1], gs[2], 5));
  CHECK(is_weakly_connected(d));
  const auto arcs = d.arcs();
  CHECK(oracle::weakly_connected(d.vertex_count(), {arcs.begin(), arcs.end()}));
}

TEST_CASE("right translations") {
  const auto q8 = make_quaternion8();
  CHECK(right_translation(q8, 2, 0).is_identity());
  CHECK(group_order(right_translation_group(q8, 2)) == 8);
  std::mt19937_64 rng(11);
  for (const auto& g : {make_cyclic(6), q8, make_dihedral(5), make_power(make_cyclic(2), 3)}) {
    for (int k = 0; k < 250; ++k) {
      const Element a = static_cast<Element>(rng() % g.order());
      const Element b = static_cast<Element>(rng() % g.order());
      // (x, i) R(a) R(b) = (x a b, i): composition is left to right.
      CHECK(right_translation(g, 2, a) * right_translation(g, 2, b) ==
            right_translation(g, 2, g.mul(a, b)));
    }
  }
}

TEST_CASE("matrix JSON") {
  const auto q8 = make_quaternion8();
  const auto cm = two_parts({0, 1, 4}, {5, 2});
  const auto text = to_json(cm, 8);
  CHECK(matrix_from_json(text, 8) == cm);
  CHECK_THROWS_AS(matrix_from_json(text, 4), DimensionMismatch);
  CHECK_THROWS_AS(matrix_from_json("{\"m\": 2", 8), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"m":2,"order":8,"sets":[[[]]]})", 8), DimensionMismatch);
}
