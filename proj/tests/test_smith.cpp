#include <random>

#include "doctest.h"
#include "ivgen/corpus.hpp"
#include "ivgen/error.hpp"
#include "ivgen/invgen.hpp"
#include "ivgen/smith.hpp"
#include "oracles.hpp"

using namespace ivgen;
using oracle::cyc;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const GeneratedGroup& g) {
  return std::make_shared<const SubgroupLattice>(all_subgroups(g));
}

IndexAction cyclic_shift(std::size_t n, std::size_t k, std::uint64_t order) {
  IndexAction a;
  a.size = n;
  a.acting_order = order;
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i < k ? (i + 1) % k : i);
  a.generators.push_back(img);
  return a;
}

}  // namespace

TEST_CASE("the action matches the coset formula") {
  const auto lat = lattice_of(corpus_group("S3"));
  const auto cp = CosetPoset::full(lat);
  const auto& t = lat->table();
  for (std::uint32_t i = 0; i < cp.size(); ++i) {
    for (std::uint32_t g = 0; g < t.size(); ++g) {
      for (std::uint32_t k = 0; k < t.size(); ++k) {
        Bitset expected(t.size());
        cp.members(i).for_each([&](std::size_t y) {
          expected.set(t.mul(t.mul(t.inverse(g), static_cast<std::uint32_t>(y)), k));
        });
        CHECK(cp.members(act_on_coset(cp, i, g, k)) == expected);
      }
    }
  }
}

TEST_CASE("the action preserves order on corpus posets") {
  std::mt19937_64 rng(7);
  for (const auto& entry : corpus()) {
    if (entry.order > 20) continue;
    CAPTURE(entry.name);
    const auto lat = lattice_of(corpus_group(entry.name));
    const auto cp = CosetPoset::full(lat);
    const auto& t = lat->table();
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(t.size() - 1));
    for (int trial = 0; trial < 5; ++trial) {
      const std::uint32_t g = pick(rng);
      const std::uint32_t k = pick(rng);
      IndexAction a;
      a.size = cp.size();
      std::vector<std::uint32_t> img(cp.size());
      for (std::uint32_t i = 0; i < cp.size(); ++i) img[i] = act_on_coset(cp, i, g, k);
      a.generators.push_back(img);
      CHECK(is_order_preserving(cp.poset(), a));
    }
  }
}

TEST_CASE("fixed subposets") {
  const auto lat = lattice_of(corpus_group("S3"));
  const auto cp = CosetPoset::full(lat);
  IndexAction trivial;
  trivial.size = cp.size();
  CHECK(fixed_subposet(cp.poset(), trivial).size == cp.size());

  const auto c3 = lattice_of(corpus_group("C3"));
  const auto cp3 = CosetPoset::full(c3);
  const auto left = two_sided_action(cp3, c3->whole(), 0);
  CHECK(fixed_points(left).empty());

  IndexAction bad;
  bad.size = 3;
  bad.generators.push_back({1, 0, 2});
  Poset chain;
  chain.size = 3;
  chain.above = {{1, 2}, {2}, {}};
  CHECK_THROWS_AS(fixed_subposet(chain, bad), InvalidArgument);
}

TEST_CASE("fixed cosets agree with the inclusion rule") {
  for (const char* name : {"S3", "D8", "A4", "Q8", "D10", "C6", "S4"}) {
    CAPTURE(name);
    const auto lat = lattice_of(corpus_group(name));
    const auto cp = CosetPoset::full(lat);
    for (std::size_t c = 0; c < lat->size(); c += 2) {
      for (std::size_t p = 0; p < lat->size(); p += 3) {
        const auto action = two_sided_action(cp, c, p);
        CHECK(fixed_points(action) == fixed_cosets_by_inclusion(cp, c, p));
      }
    }
  }
}

TEST_CASE("Euler congruence examples") {
  const auto points = SimplicialComplex::from_facets(3, {{0}, {1}, {2}});
  const auto r = euler_congruence(points, cyclic_shift(3, 3, 3), 3);
  CHECK(r.euler == 2);
  CHECK(r.fixed_euler == -1);
  CHECK(r.holds);
  const auto same = euler_congruence(points, cyclic_shift(3, 1, 1), 5);
  CHECK(same.euler == same.fixed_euler);
  CHECK_THROWS_AS(euler_congruence(points, cyclic_shift(3, 3, 3), 2), InvalidArgument);

  const auto s3 = corpus_group("S3");
  const auto lat = lattice_of(s3);
  const auto cp = CosetPoset::full(lat);
  std::size_t two = 0;
  for (std::size_t h = 0; h < lat->size(); ++h) {
    if (lat->subgroups()[h].order == 2) two = h;
  }
  const auto k = coset_complex(cp);
  const auto e = euler_congruence(k, two_sided_action(cp, two, 0), 2);
  CHECK(e.subcomplex);
  CHECK(e.holds);
  CHECK(e.euler == -8);
}

TEST_CASE("fixed subcomplex of a coset complex is the order complex of the fixed subposet") {
  const auto lat = lattice_of(corpus_group("A4"));
  const auto cp = CosetPoset::full(lat);
  const auto v4 = minimal_normal_subgroups(*lat).front();
  for (std::size_t c : {std::size_t{0}, v4}) {
    const auto action = two_sided_action(cp, c, v4);
    const auto fixed = fixed_complex(coset_complex(cp), action);
    const auto direct = SimplicialComplex::order_complex(fixed_subposet(cp.poset(), action));
    CHECK(fixed.subcomplex);
    CHECK(fixed.complex.f_vector() == direct.f_vector());
  }
}

TEST_CASE("acyclicity passes to fixed sets on constructed examples") {
  // reflection of a tetrahedron swapping two vertices
  const auto simplex = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
  IndexAction swap;
  swap.size = 4;
  swap.acting_order = 2;
  swap.generators.push_back({1, 0, 2, 3});
  const auto fixed = fixed_complex(simplex, swap);
  CHECK_FALSE(fixed.subcomplex);
  // the barycentric-free version: cone over a hexagon rotated by C3
  std::vector<std::vector<std::uint32_t>> cone;
  for (std::uint32_t i = 0; i < 6; ++i) cone.push_back({i, (i + 1) % 6, 6});
  const auto k = SimplicialComplex::from_facets(7, cone);
  IndexAction rot;
  rot.size = 7;
  rot.acting_order = 3;
  rot.generators.push_back({2, 3, 4, 5, 0, 1, 6});
  const auto t = acyclicity_transfer(k, rot, Field::prime(3));
  CHECK(t.acyclic);
  CHECK(t.fixed_acyclic);
  CHECK(t.fixed_euler == 0);
  CHECK_THROWS_AS(acyclicity_transfer(simplex, swap, Field::prime(2)), InvalidArgument);
}

TEST_CASE("abelian minimal normal subgroups give divisible antichains") {
  std::size_t checked = 0;
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    for (const auto& c : abelian_socle_checks(lattice_of(corpus_group(entry.name)))) {
      CHECK(c.antichain);
      CHECK(c.divisible);
      ++checked;
    }
  }
  CHECK(checked > 60);
  const auto s3 = abelian_socle_checks(lattice_of(corpus_group("S3")));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].brown_size == 9);
}

TEST_CASE("diagonal construction") {
  const auto a5 = alternating_group(5);
  const std::vector<Permutation> d{cyc(5, "(0 1 2 3 4)")};
  const auto q = sylow_subgroup(a5, 2);
  const auto one = diagonal_cp(a5, 1, d, q.generators());
  CHECK(one.n.order() == 60);
  CHECK(one.c == d);
  CHECK(one.p == q.generators());

  const auto two = diagonal_cp(a5, 2, d, q.generators());
  CHECK(two.n.order() == 3600);
  const auto c = subgroup_generated(two.n, two.c);
  const auto p = subgroup_generated(two.n, two.p);
  CHECK(c.order() == 5);
  CHECK(p.order() == 16);
  // C meets the first factor trivially and projects onto D.
  for (const auto& x : elements(c)) {
    bool first_only = true;
    for (std::size_t i = 5; i < 10; ++i) first_only = first_only && x[i] == i;
    if (first_only) CHECK(x.is_identity());
  }
  CHECK(invariably_generates(two.n, two.c, two.p).holds);
}

TEST_CASE("fixed-point-free pipeline") {
  const auto a5 = alternating_group(5);
  const std::vector<Permutation> c{cyc(5, "(0 1 2 3 4)")};
  const auto p = sylow_subgroup(a5, 2).generators();
  const auto r = smith_pipeline(a5, a5, c, p);
  CHECK(r.fixed.hypothesis);
  CHECK(r.fixed.fixed_count == 0);
  CHECK(r.fixed.brown_size == 1018);
  CHECK(r.betti.at(2) == 1560);
  CHECK(r.passes);

  const auto s5 = symmetric_group(5);
  const auto r2 = smith_pipeline(s5, a5, c, p);
  CHECK(r2.passes);
  CHECK(r2.fixed.brown_size == 2286);

  // two 3-cycles never generate A5, so the hypothesis fails
  const std::vector<Permutation> three{cyc(5, "(0 1 2)")};
  const auto bad = smith_pipeline(a5, a5, three, three);
  CHECK_FALSE(bad.fixed.hypothesis);
  CHECK(bad.fixed.counterexample.has_value());
  CHECK_FALSE(bad.passes);
}
