#include <algorithm>

#include "doctest.h"
#include "mcayley/autgroup.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/error.hpp"
#include "mcayley/report.hpp"

using namespace mcayley;

namespace {

FiniteGroup z33() { return make_power(make_cyclic(3), 3); }
FiniteGroup z34() { return make_power(make_cyclic(3), 4); }
FiniteGroup z422() {
  return make_direct_product(make_direct_product(make_cyclic(4), make_cyclic(2)), make_cyclic(2));
}
FiniteGroup z4222() { return make_direct_product(z422(), make_cyclic(2)); }

std::vector<Vertex> out_of(const PartitionedDigraph& d, Vertex v) { return d.out(v); }

std::vector<Vertex> ids(std::size_t n, std::initializer_list<std::pair<Element, std::size_t>> xs) {
  std::vector<Vertex> v;
  for (const auto& [g, part] : xs) v.push_back(vertex_id(n, g, part));
  std::sort(v.begin(), v.end());
  return v;
}

void check_hor(const FiniteGroup& g, const ConnectionMatrix& cm, std::size_t valency) {
  VerifyOptions opts;
  opts.vertex_cap = 1024;
  const auto r = verify(g, cm, opts);
  CHECK(r.oriented);
  CHECK(r.m_partite);
  CHECK(r.valency == valency);
  CHECK(r.weakly_connected);
  CHECK(r.equals_RG);
  CHECK(r.hor());
  CHECK(r.semiregular_with_parts_as_orbits);
}

}  // namespace

TEST_CASE("small sets") {
  const auto g = z33();
  const Element a = 1, b = 3, c = 9;
  const auto s = small_gen_sets(g, a, b, c);
  CHECK(s.S.size() == 4);
  CHECK(s.T.size() == 4);
  CHECK(s.L.size() == 4);
  CHECK_THROWS_AS(small_gen_sets(make_elementary_abelian_2(3), 1, 2, 4), PreconditionViolated);
  CHECK_THROWS_AS(small_gen_sets(g, 1, 3, 1), PreconditionViolated);
  // In Dih(Z5) every admissible b is a^2 or a^-2, and then S meets T^-1 or L^-1.
  CHECK_THROWS_AS(small_gen_sets(make_generalized_dihedral(make_cyclic(5)), 1, 2, 5),
                  SetInvariantViolated);
}

TEST_CASE("small constructions: d(G) = 3") {
  for (const auto& g : {z33(), z422(), make_generalized_dihedral(make_power(make_cyclic(3), 2))}) {
    CAPTURE(g.label());
    const auto e = paper_generating_set(g).elements;
    check_hor(g, gamma2_small(g, e[0], e[1], e[2]), 4);
    check_hor(g, gamma3_small(g, e[0], e[1], e[2]), 8);
    check_hor(g, gamma4_small(g, e[0], e[1], e[2]), 2);
    for (std::size_t m = 5; m <= 8; ++m) check_hor(g, gammam_small(g, e[0], e[1], e[2], m), 2);
  }
}

TEST_CASE("sizes and neighbourhoods of the small constructions") {
  const auto g = z33();
  const auto e = paper_generating_set(g).elements;
  const Element a = e[0], c = e[2];
  const auto g2 = gamma2_small(g, a, e[1], c);
  CHECK(g2.at(0, 1).size() == 4);
  CHECK(g2.at(1, 0).size() == 4);
  CHECK(build(g, gamma3_small(g, a, e[1], c)).vertex_count() == 81);

  const auto d4 = build(g, gamma4_small(g, a, e[1], c));
  CHECK(d4.vertex_count() == 108);
  CHECK(out_of(d4, vertex_id(27, 0, 0)) == ids(27, {{0, 2}, {0, 3}}));
  CHECK(out_of(d4, vertex_id(27, 0, 1)) == ids(27, {{a, 0}, {c, 2}}));

  const auto m5 = gammam_small(g, a, e[1], c, 5);
  CHECK(m5.at(4, 0) == std::vector<Element>{0, a});
  const auto d5 = build(g, m5);
  CHECK(regular_valency(d5) == 2u);
  for (Element x = 0; x < 27; ++x) {
    CHECK(d5.has_arc(vertex_id(27, x, 0), vertex_id(27, x, 1)));
    CHECK(d5.has_arc(vertex_id(27, x, 1), vertex_id(27, x, 4)));
    CHECK(d5.has_arc(vertex_id(27, x, 4), vertex_id(27, x, 0)));
  }
  CHECK_THROWS_AS(gammam_small(g, a, e[1], c, 4), PreconditionViolated);
}

TEST_CASE("large sets") {
  const auto g = z34();
  const auto h = paper_generating_set(g).elements;
  const auto s = large_gen_sets(g, h);
  CHECK(s.S.size() == 5);
  CHECK(s.T.size() == 5);
  CHECK(s.L.size() == 5);
  CHECK(s.M.size() == 5);
  CHECK(s.N.size() == 5);
  CHECK(s.K.size() == 6);
  CHECK(s.Z.size() == 6);
  CHECK(s.E.size() == 4);
  CHECK(s.F.size() == 4);
  CHECK(s.hbar[1] == g.mul(h[0], h[1]));
  CHECK(s.htilde[0] == g.mul(g.mul(h[1], h[2]), h[3]));
  CHECK(s.htilde[3] == g.mul(g.mul(h[0], h[1]), h[2]));

  const Element z2_4[] = {1, 2, 4, 8};
  CHECK_THROWS_AS(large_gen_sets(make_elementary_abelian_2(4), z2_4), PreconditionViolated);
  const Element three[] = {1, 3, 9};
  CHECK_THROWS_AS(large_gen_sets(z33(), three), PreconditionViolated);
}

TEST_CASE("large constructions: d(G) = 4") {
  for (const auto& g : {z34(), z4222()}) {
    CAPTURE(g.label());
    const auto h = paper_generating_set(g).elements;
    check_hor(g, gamma2_large(g, h), 5);
    check_hor(g, gamma3_large(g, h), 10);
    check_hor(g, gamma4_large(g, h), 7);
    check_hor(g, gamma_odd_large(g, h, 5), 6);
    check_hor(g, gamma_odd_large(g, h, 7), 6);
    check_hor(g, gamma_even_large(g, h, 6), 7);
    check_hor(g, gamma_even_large(g, h, 8), 7);
  }
}

TEST_CASE("neighbourhoods of the large constructions") {
  const auto g = z34();
  const auto h = paper_generating_set(g).elements;
  const auto s = large_gen_sets(g, h);
  const std::size_t n = 81;

  const auto d4 = build(g, gamma4_large(g, h));
  std::vector<Vertex> expected;
  for (Element x : s.S) expected.push_back(vertex_id(n, x, 1));
  expected.push_back(vertex_id(n, 0, 2));
  expected.push_back(vertex_id(n, 0, 3));
  std::sort(expected.begin(), expected.end());
  CHECK(out_of(d4, vertex_id(n, 0, 0)) == expected);

  const auto d6 = build(g, gamma_even_large(g, h, 6));
  CHECK(d6.out(vertex_id(n, 0, 0)).size() == s.S.size() + 1 + 1);

  const auto d5 = build(g, gamma_odd_large(g, h, 5));
  CHECK(d5.has_arc(vertex_id(n, 0, 2), vertex_id(n, 0, 3)));
  CHECK(d5.has_arc(vertex_id(n, 0, 3), vertex_id(n, 0, 4)));
  CHECK(d5.has_arc(vertex_id(n, 0, 4), vertex_id(n, 0, 2)));

  CHECK_THROWS_AS(gamma_even_large(g, h, 5), PreconditionViolated);
  CHECK_THROWS_AS(gamma_odd_large(g, h, 6), PreconditionViolated);
}

TEST_CASE("the printed even layout is not regular") {
  for (const auto& g : {z34(), z4222()}) {
    const auto h = paper_generating_set(g).elements;
    const std::size_t t = h.size();
    for (std::size_t m : {6, 8}) {
      const auto cm = gamma_even_large_as_printed(g, h, m);
      std::vector<std::size_t> out(m, 0), in(m, 0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          out[i] += cm.at(i, j).size();
          in[j] += cm.at(i, j).size();
        }
      CHECK(out[0] == t + 3);
      CHECK(in[0] == t + 2);
      CHECK(in[1] == t + 2);
      CHECK(in[2] == t + 4);
      CHECK(in[3] == t + 4);
      CHECK_FALSE(is_regular(build(g, cm)));
    }
  }
}

TEST_CASE("POSR witnesses") {
  const auto q8 = posr_witness("Q8");
  CHECK(q8.matrix.at(0, 1) == std::vector<Element>{0, 1, 4});
  CHECK(q8.matrix.at(1, 0) == std::vector<Element>{2, 5});
  for (const char* name : {"Q8", "Z4", "Z5"}) {
    CAPTURE(name);
    const auto w = posr_witness(name);
    const auto r = verify(w.group, w.matrix);
    CHECK(r.posr());
    CHECK_FALSE(r.regular);
    CHECK(*r.aut_order.value() == w.group.order());
    CHECK(r.oriented);
    CHECK(r.m_partite);
  }
  CHECK_THROWS_AS(posr_witness("Z3"), UnknownWitness);
}

TEST_CASE("dispatch") {
  const auto c = construct_hor(z33(), 5);
  CHECK(c.family == "gammam_small");
  CHECK(c.valency == 2);
  CHECK(construct_hor(z34(), 6).family == "gamma_even_large");
  CHECK(construct_hor(z34(), 7).valency == 6);
  CHECK_THROWS_AS(construct_hor(make_quaternion8(), 2), OutOfScope);
  CHECK_THROWS_AS(construct_hor(make_elementary_abelian_2(4), 3), OutOfScope);
  CHECK_THROWS_AS(construct_hor(z33(), 1), PreconditionViolated);
}

TEST_CASE("Dih(Z5) has no generating triple for the small family") {
  const auto g = make_generalized_dihedral(make_cyclic(5));
  CHECK(minimal_generating_size(g) == 2);
  CHECK_THROWS_AS(construct_hor(g, 2), OutOfScope);
  CHECK_THROWS_AS(paper_generating_set(g), WrongGeneratorCount);
  std::size_t admissible = 0;
  for (Element a = 0; a < 10; ++a)
    for (Element b = 0; b < 10; ++b)
      for (Element c = 0; c < 10; ++c) {
        try {
          small_gen_sets(g, a, b, c);
          ++admissible;
        } catch (const Error&) {
        }
      }
  CHECK(admissible == 0);
}
