#include <map>
#include <random>

#include "doctest.h"
#include "ivgen/error.hpp"
#include "ivgen/group.hpp"
#include "oracles.hpp"

using namespace ivgen;
using oracle::cyc;

namespace {

GeneratedGroup m11() {
  return build_group({cyc(11, "(0 1 2 3 4 5 6 7 8 9 10)"), cyc(11, "(2 6 10 7)(3 9 4 5)")});
}

GeneratedGroup m12() {
  return build_group({cyc(12, "(0 1 2 3 4 5 6 7 8 9 10)"), cyc(12, "(2 6 10 7)(3 9 4 5)"),
                      cyc(12, "(0 11)(1 10)(2 5)(3 7)(4 8)(6 9)")});
}

}  // namespace

TEST_CASE("compose applies the left argument first") {
  const auto p = cyc(3, "(0 1 2)");
  const auto q = cyc(3, "(0 1)");
  CHECK(compose(p, q) == cyc(3, "(1 2)"));
  CHECK(compose(Permutation(3), p) == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation(4)), DegreeMismatch);
}

TEST_CASE("conjugation relabels cycles") {
  CHECK(conjugate(cyc(3, "(0 1)"), cyc(3, "(0 2)")) == cyc(3, "(2 1)"));
  std::mt19937_64 rng(7);
  const auto s8 = symmetric_group(8);
  for (int i = 0; i < 100; ++i) {
    const auto x = s8.random_element(rng);
    const auto g = s8.random_element(rng);
    const auto h = s8.random_element(rng);
    CHECK(cycle_type(conjugate(x, g)) == cycle_type(x));
    CHECK(conjugate(conjugate(x, g), h) == conjugate(x, compose(g, h)));
    CHECK(conjugate(x, Permutation(8)) == x);
  }
}

TEST_CASE("parsing and printing") {
  CHECK(Permutation::parse("()", 4).is_identity());
  CHECK(cyc(6, "(0 1 2 3)(4 5)").to_string() == "(0 1 2 3)(4 5)");
  CHECK(cycle_type(cyc(6, "(0 1 2 3)(4 5)")) == std::vector<std::size_t>{4, 2});
  CHECK_THROWS_AS(Permutation::parse("(0 1", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0 7)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0 1)(1 2)", 3), ParseError);
  CHECK(parse_permutation_list("(0 1); (1 2)\n()", 3).size() == 3);
}

TEST_CASE("orders agree with brute-force closure") {
  const std::vector<Permutation> a5{cyc(5, "(0 1 2 3 4)"), cyc(5, "(0 1 2)")};
  CHECK(build_group(a5).order() == oracle::closure(5, a5).size());
  CHECK(build_group(a5).order() == 60);
  CHECK(build_group({Permutation(4)}).order() == 1);
  const auto m = m11();
  CHECK(m.order() == 7920);
  CHECK(oracle::closure(11, m.generators()).size() == 7920);
  CHECK(m12().order() == 95040);
  CHECK(symmetric_group(7).order() == 5040);
  CHECK(alternating_group(8).order() == 20160);
  CHECK(alternating_group(9).order() == 181440);
}

TEST_CASE("membership and rank agree with enumeration") {
  const auto g = build_group({cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")});
  const auto all = oracle::closure(7, g.generators());
  REQUIRE(g.order() == all.size());
  std::set<std::uint64_t> ranks;
  for (const auto& x : all) {
    CHECK(g.contains(x));
    const auto r = g.rank(x);
    CHECK(g.unrank(r) == x);
    ranks.insert(r);
  }
  CHECK(ranks.size() == all.size());
  const auto s7 = symmetric_group(7);
  std::size_t outside = 0;
  for_each_element(s7, [&](const Permutation& x) {
    CHECK(g.contains(x) == (all.count(x) == 1));
    outside += g.contains(x) ? 0 : 1;
  });
  CHECK(outside == 5040 - 21);
  CHECK_THROWS_AS(g.rank(cyc(7, "(0 1)")), NotMember);
}

TEST_CASE("randomized construction matches the deterministic one") {
  std::mt19937_64 rng(3);
  const auto s9 = symmetric_group(9);
  for (int i = 0; i < 20; ++i) {
    std::vector<Permutation> gens{s9.random_element(rng), s9.random_element(rng)};
    const auto det = build_group(9, gens);
    const auto rnd = build_group_bounded(9, gens, s9.order(), 11 + i);
    CHECK(det.order() == rnd.order());
    CHECK(s9.order() % det.order() == 0);
    CHECK(generates(s9, gens) == (det.order() == s9.order()));
  }
}

TEST_CASE("subgroup_generated") {
  const auto a5 = alternating_group(5);
  CHECK(subgroup_generated(a5, {cyc(5, "(0 1 2 3 4)")}).order() == 5);
  CHECK(subgroup_generated(a5, {cyc(5, "(0 1 2 3 4)"), cyc(5, "(0 1 2)")}).order() == 60);
  CHECK(subgroup_generated(a5, {}).order() == 1);
  CHECK_THROWS_AS(subgroup_generated(a5, {cyc(5, "(0 1)")}), NotMember);
}

TEST_CASE("orbits and transitivity") {
  const auto g = build_group({cyc(4, "(0 1)(2 3)")});
  CHECK(orbits(g) == std::vector<std::vector<Point>>{{0, 1}, {2, 3}});
  CHECK(is_transitive(alternating_group(5)));
  CHECK(orbits(build_group(3, {})).size() == 3);
}

TEST_CASE("block systems") {
  const auto d4 = build_group({cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")});
  CHECK_FALSE(is_primitive(d4));
  const auto blocks = minimal_blocks(d4);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].blocks == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  CHECK(is_primitive(alternating_group(5)));
  CHECK(is_primitive(symmetric_group(7)));
  CHECK(is_primitive(m11()));
  const auto c6 = cyclic_group(6);
  CHECK(minimal_blocks(c6).size() == 2);
  CHECK_THROWS_AS(minimal_blocks(build_group({cyc(4, "(0 1)")})), InvalidArgument);
}

TEST_CASE("conjugacy classes") {
  const auto s3 = symmetric_group(3);
  const auto classes = conjugacy_classes(s3);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].size == 1);
  CHECK(classes[1].size == 3);
  CHECK(classes[2].size == 2);

  const auto a6 = alternating_group(6);
  std::uint64_t total = 0;
  for (const auto& c : conjugacy_classes(a6)) {
    total += c.size;
    CHECK(c.size * centralizer(a6, c.representative).order() == a6.order());
  }
  CHECK(total == 360);
  CHECK(conjugacy_classes(a6).size() == 7);

  std::map<std::uint64_t, int> by_order;
  for (const auto& c : conjugacy_classes(m12())) by_order[c.element_order]++;
  CHECK(by_order == std::map<std::uint64_t, int>{{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 2}, {8, 2},
                                                  {10, 1}, {11, 2}});
  CHECK_THROWS_AS(conjugacy_classes(symmetric_group(8), Limits{.max_elements = 1000}), CapExceeded);
}

TEST_CASE("classes agree with brute-force partition") {
  const auto g = build_group({cyc(8, "(0 1 2 3)(4 5 6 7)"), cyc(8, "(0 4)(1 5)(2 6)(3 7)"), cyc(8, "(1 3)(5 7)")});
  const auto all = oracle::closure(8, g.generators());
  std::set<std::set<Permutation>> parts;
  for (const auto& x : all) {
    std::set<Permutation> cls;
    for (const auto& h : all) cls.insert(conjugate(x, h));
    parts.insert(cls);
  }
  CHECK(conjugacy_classes(g).size() == parts.size());
  const auto map = conjugacy_class_map(g);
  for (const auto& x : all) {
    CHECK(map.classes[map.class_of_rank[g.rank(x)]].size ==
          conjugacy_class_elements(g, x).size());
  }
}

TEST_CASE("centralizers") {
  const auto a5 = alternating_group(5);
  CHECK(centralizer(a5, cyc(5, "(0 1 2 3 4)")).order() == 5);
  CHECK(centralizer(a5, Permutation(5)).order() == 60);
  CHECK(centralizer(m11(), cyc(11, "(0 1 2 3 4 5 6 7 8 9 10)")).order() == 11);
}

TEST_CASE("normalizers") {
  const auto s4 = symmetric_group(4);
  const auto v4 = subgroup_generated(s4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")});
  CHECK(normalizer(s4, v4).order() == 24);
  const auto c3 = subgroup_generated(s4, {cyc(4, "(0 1 2)")});
  CHECK(normalizer(s4, c3).order() == 6);
  const auto a5 = alternating_group(5);
  CHECK(normalizer(a5, subgroup_generated(a5, {cyc(5, "(0 1 2 3 4)")})).order() == 10);
}

TEST_CASE("Sylow subgroups") {
  CHECK(sylow_subgroup(symmetric_group(4), 2).order() == 8);
  CHECK(sylow_subgroup(alternating_group(5), 5).order() == 5);
  CHECK(sylow_subgroup(m12(), 2).order() == 64);
  CHECK(sylow_subgroup(m12(), 3).order() == 27);
  CHECK(sylow_subgroup(symmetric_group(9), 3).order() == 81);
  CHECK_THROWS_AS(sylow_subgroup(alternating_group(5), 7), InvalidArgument);
}

TEST_CASE("element enumeration") {
  CHECK(elements(cyclic_group(3)).size() == 3);
  const auto all = elements(alternating_group(5));
  CHECK(std::set<Permutation>(all.begin(), all.end()).size() == 60);
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(561));
  CHECK(prime_factors(95040) == std::vector<std::uint64_t>{2, 3, 5, 11});
  CHECK(p_part(1451520, 3) == 81);
}
