#include <algorithm>
#include <map>

#include "doctest.h"
#include "ivgen/corpus.hpp"
#include "ivgen/error.hpp"
#include "ivgen/lattice.hpp"
#include "oracles.hpp"

using namespace ivgen;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const GeneratedGroup& g) {
  return std::make_shared<const SubgroupLattice>(all_subgroups(g));
}

std::vector<std::uint64_t> sorted_orders(const SubgroupLattice& lat) {
  std::vector<std::uint64_t> v;
  for (const auto& s : lat.subgroups()) v.push_back(s.order);
  return v;
}

}  // namespace

TEST_CASE("subgroup counts match two-generated closures") {
  // Every subgroup of these groups is generated by two elements.
  for (const char* name : {"S3", "D8", "Q8", "C4xC2", "A4", "D12", "S4", "SL(2,3)", "D20"}) {
    CAPTURE(name);
    const auto g = corpus_group(name);
    const auto oracle_subs = oracle::two_generated_subgroups(g.degree(), g.generators());
    std::vector<std::uint64_t> expected;
    for (const auto& s : oracle_subs) expected.push_back(s.size());
    std::sort(expected.begin(), expected.end());
    const auto lat = all_subgroups(g);
    CHECK(lat.size() == oracle_subs.size());
    CHECK(sorted_orders(lat) == expected);
  }
}

TEST_CASE("known lattice sizes") {
  CHECK(all_subgroups(corpus_group("S4")).size() == 30);
  CHECK(all_subgroups(corpus_group("Q8")).size() == 6);
  CHECK(all_subgroups(corpus_group("C7")).size() == 2);
  CHECK(all_subgroups(alternating_group(5)).size() == 59);
  CHECK(all_subgroups(symmetric_group(5)).size() == 156);
}

TEST_CASE("lattice is ordered and normal flags are right") {
  const auto g = corpus_group("S4");
  const auto lat = all_subgroups(g);
  const auto& subs = lat.subgroups();
  CHECK(subs.front().order == 1);
  CHECK(subs.back().order == 24);
  const auto& t = lat.table();
  std::size_t normal = 0;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    bool brute = true;
    for (std::uint32_t x = 0; x < t.size() && brute; ++x) brute = lat.conjugate(h, x) == h;
    CHECK(subs[h].normal == brute);
    normal += brute;
  }
  CHECK(normal == 4);
}

TEST_CASE("minimal normal subgroups") {
  auto orders = [](const GeneratedGroup& g) {
    const auto lat = all_subgroups(g);
    std::vector<std::uint64_t> v;
    for (auto i : minimal_normal_subgroups(lat)) v.push_back(lat.subgroups()[i].order);
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(orders(corpus_group("A4")) == std::vector<std::uint64_t>{4});
  CHECK(orders(corpus_group("C6")) == std::vector<std::uint64_t>{2, 3});
  CHECK(orders(symmetric_group(5)) == std::vector<std::uint64_t>{60});
  CHECK(orders(corpus_group("C2xC2")) == std::vector<std::uint64_t>{2, 2, 2});
}

TEST_CASE("mobius function satisfies its recursion") {
  for (const char* name : {"S3", "A4", "D8", "C12", "S4"}) {
    CAPTURE(name);
    const auto lat = all_subgroups(corpus_group(name));
    const auto mu = mobius(lat);
    CHECK(mu[lat.whole()] == 1);
    for (std::size_t h = 0; h < lat.whole(); ++h) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < lat.size(); ++k) {
        if (lat.includes(h, k)) sum += mu[k];
      }
      CHECK(sum == 0);
    }
  }
  // mu(1, C_n) is the number-theoretic Moebius function.
  CHECK(mobius(all_subgroups(corpus_group("C6")))[0] == 1);
  CHECK(mobius(all_subgroups(corpus_group("C12")))[0] == 0);
  CHECK(mobius(all_subgroups(corpus_group("C5")))[0] == -1);
  CHECK(mobius(all_subgroups(corpus_group("S3")))[0] == 3);
}

TEST_CASE("P(G,-1) on small groups") {
  CHECK(zeta_at_minus_one(all_subgroups(corpus_group("C2"))) == -1);
  CHECK(zeta_at_minus_one(all_subgroups(corpus_group("C7"))) == -6);
  CHECK(zeta_at_minus_one(all_subgroups(corpus_group("S3"))) == 8);
  CHECK(zeta_at_minus_one(all_subgroups(corpus_group("C1"))) == 1);
}

TEST_CASE("coset poset sizes") {
  for (const char* name : {"S3", "D8", "A4", "C6"}) {
    CAPTURE(name);
    const auto lat = lattice_of(corpus_group(name));
    std::uint64_t expected = 0;
    for (std::size_t h = 0; h < lat->whole(); ++h) expected += lat->subgroups().back().order / lat->subgroups()[h].order;
    CHECK(CosetPoset::full(lat).size() == expected);
  }
  CHECK(CosetPoset::full(lattice_of(corpus_group("S3"))).size() == 17);
  CHECK(CosetPoset::full(lattice_of(alternating_group(5))).size() == 1018);
}

TEST_CASE("coset poset order is inclusion of cosets") {
  const auto lat = lattice_of(corpus_group("D8"));
  const auto cp = CosetPoset::full(lat);
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const auto mi = cp.members(i);
    CHECK(mi.count() == lat->subgroups()[cp.at(i).subgroup].order);
    CHECK(mi.test(cp.at(i).representative));
    for (std::size_t j = 0; j < cp.size(); ++j) {
      CHECK(cp.contains_coset(i, j) == mi.is_subset_of(cp.members(j)));
      if (i != j && cp.contains_coset(i, j)) CHECK(i < j);
    }
  }
}

TEST_CASE("Brown subposets") {
  const auto s3 = lattice_of(corpus_group("S3"));
  std::size_t c3 = 0;
  for (std::size_t h = 0; h < s3->size(); ++h) {
    if (s3->subgroups()[h].order == 3) c3 = h;
  }
  const auto b = CosetPoset::brown(s3, c3);
  CHECK(b.size() == 9);
  CHECK(b.poset().is_antichain());
  const auto c4 = lattice_of(corpus_group("C4"));
  CHECK(CosetPoset::brown(c4, 1).size() == 0);
  std::size_t c2 = 0;
  for (std::size_t h = 0; h < s3->size(); ++h) {
    if (s3->subgroups()[h].order == 2) c2 = h;
  }
  CHECK_THROWS_AS(CosetPoset::brown(s3, c2), InvalidArgument);
}

TEST_CASE("quotients and conversions") {
  const auto lat = all_subgroups(corpus_group("S4"));
  std::size_t v4 = 0;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (lat.subgroups()[h].order == 4 && lat.subgroups()[h].normal) v4 = h;
  }
  const auto q = quotient_group(lat, v4);
  CHECK(q.order() == 6);
  CHECK_FALSE(q.is_abelian());
  const auto h = lat.as_group(v4);
  CHECK(h.order() == 4);
  CHECK(lat.find_group(h) == v4);
  const auto dot = hasse_dot(CosetPoset::full(lattice_of(corpus_group("S3"))));
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("lattice cap") {
  Limits small;
  small.max_lattice = 100;
  CHECK_THROWS_AS(all_subgroups(symmetric_group(5), small), CapExceeded);
}
