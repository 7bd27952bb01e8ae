#include <random>

#include "doctest.h"
#include "ivgen/error.hpp"
#include "ivgen/invgen.hpp"
#include "oracles.hpp"

using namespace ivgen;
using oracle::cyc;

namespace {

std::vector<Permutation> one(const Permutation& p) { return {p}; }

}  // namespace

TEST_CASE("small alternating groups") {
  const auto a5 = alternating_group(5);
  auto v = invariably_generates(a5, one(cyc(5, "(0 1 2 3 4)")), one(cyc(5, "(0 1 2)")));
  CHECK(v.holds);
  CHECK_FALSE(v.witness);
  const auto a6 = alternating_group(6);
  v = invariably_generates(a6, one(cyc(6, "(0 1 2 3 4)")), one(cyc(6, "(0 1 2 3)(4 5)")));
  CHECK(v.holds);
  // Two 3-cycles never generate A5.
  v = invariably_generates(a5, one(cyc(5, "(0 1 2)")), one(cyc(5, "(2 3 4)")));
  CHECK_FALSE(v.holds);
}

TEST_CASE("S3 transpositions fail with a verifiable witness") {
  const auto s3 = symmetric_group(3);
  const auto s = one(cyc(3, "(0 1)"));
  const auto t = one(cyc(3, "(0 2)"));
  for (auto mode : {ScanMode::elements, ScanMode::subgroups}) {
    InvGenOptions opt;
    opt.mode = mode;
    const auto v = invariably_generates(s3, s, t, opt);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(verify_witness(s3, s, t, *v.witness));
    CHECK(conjugate(t[0], *v.witness) == s[0]);
  }
  const auto full = invariably_generates_full(s3, s, t);
  CHECK_FALSE(full.holds);
}

TEST_CASE("generation by S alone, and failure of <S,T> itself") {
  const auto a5 = alternating_group(5);
  CHECK(invariably_generates(a5, a5.generators(), one(Permutation(5))).holds);
  const auto v = invariably_generates(a5, one(cyc(5, "(0 1 2)")), one(cyc(5, "(0 1)(2 3)")));
  REQUIRE(build_group({cyc(5, "(0 1 2)"), cyc(5, "(0 1)(2 3)")}).order() == 12);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->is_identity());
  CHECK_THROWS_AS(invariably_generates(a5, one(cyc(5, "(0 1)")), one(cyc(5, "(0 1 2)"))), NotMember);
}

TEST_CASE("abelian groups: invariable generation is generation") {
  const auto c6 = cyclic_group(6);
  const auto x2 = cyc(6, "(0 3)(1 4)(2 5)");
  const auto x3 = cyc(6, "(0 2 4)(1 3 5)");
  CHECK(invariably_generates(c6, one(x2), one(x3)).holds);
  CHECK_FALSE(invariably_generates(c6, one(x2), one(x2)).holds);
  const auto sc = sylow_cyclic_invgen(c6, 2, x3);
  CHECK(sc.sylow.order() == 2);
  CHECK(sc.verdict.holds);
}

TEST_CASE("verdict is a class property") {
  std::mt19937_64 rng(5);
  const auto s5 = symmetric_group(5);
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"(0 1 2 3 4)", "(0 1)"}, {"(0 1 2 3)", "(0 1 2)(3 4)"}, {"(0 1 2)", "(0 1)(2 3)"}, {"(0 1 2 3 4)", "(0 1 2 3)"}};
  for (const auto& [a, b] : pairs) {
    const auto s = one(cyc(5, a));
    const auto base = invariably_generates(s5, s, one(cyc(5, b))).holds;
    for (int i = 0; i < 10; ++i) {
      const auto h = s5.random_element(rng);
      CHECK(invariably_generates(s5, s, one(conjugate(cyc(5, b), h))).holds == base);
    }
  }
}

TEST_CASE("reduced scan agrees with the full scan") {
  std::mt19937_64 rng(17);
  const std::vector<GeneratedGroup> groups{symmetric_group(4), alternating_group(5), symmetric_group(5),
                                           build_group({cyc(8, "(0 1 2 3 4 5 6 7)"), cyc(8, "(1 7)(2 6)(3 5)")}),
                                           build_group({cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")})};
  for (const auto& g : groups) {
    for (int i = 0; i < 12; ++i) {
      const auto s = one(g.random_element(rng));
      const auto t = one(g.random_element(rng));
      const auto full = invariably_generates_full(g, s, t);
      for (auto mode : {ScanMode::elements, ScanMode::subgroups}) {
        InvGenOptions opt;
        opt.mode = mode;
        const auto fast = invariably_generates(g, s, t, opt);
        CHECK(fast.holds == full.holds);
        if (!fast.holds) CHECK(verify_witness(g, s, t, *fast.witness));
      }
      std::vector<Permutation> tt{g.random_element(rng), g.random_element(rng)};
      InvGenOptions opt;
      CHECK(invariably_generates(g, s, tt, opt).holds == invariably_generates_full(g, s, tt).holds);
    }
  }
}

TEST_CASE("parallel scan gives the same verdict and witness") {
  const auto a7 = alternating_group(7);
  const auto s = one(cyc(7, "(0 1 2 3 4 5 6)"));
  const auto t = one(cyc(7, "(0 1 2)(3 4 5)"));
  InvGenOptions opt;
  const auto serial = invariably_generates(a7, s, t, opt);
  opt.jobs = 3;
  const auto parallel = invariably_generates(a7, s, t, opt);
  CHECK(serial.holds == parallel.holds);
  CHECK(serial.witness == parallel.witness);
}

TEST_CASE("alternating pairs") {
  std::uint64_t p = 0;
  auto [x, y] = alternating_pair(8, &p);
  CHECK(p == 5);
  CHECK(cycle_type(x) == std::vector<std::size_t>{4, 4});
  CHECK(cycle_type(y) == std::vector<std::size_t>{5, 1, 1, 1});
  alternating_pair(9, &p);
  CHECK(p == 5);
  alternating_pair(12, &p);
  CHECK(p == 7);
  for (std::size_t n = 5; n <= 9; ++n) {
    const auto r = check_alternating(n);
    CHECK(r.verdict.holds);
    CHECK(r.transitive);
    CHECK(r.primitive);
  }
  CHECK_THROWS_AS(alternating_pair(4), InvalidArgument);
}

TEST_CASE("class names and coalescing") {
  const auto a5 = alternating_group(5);
  const auto table = class_pair_table(a5, [](std::uint64_t o) { return o == 5; });
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].name == "5AB");
  CHECK_FALSE(table.any_holds());
}
