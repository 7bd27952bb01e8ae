#include <set>

#include "doctest.h"
#include "ivgen/error.hpp"
#include "ivgen/groupio.hpp"
#include "ivgen/lietype.hpp"

using namespace ivgen;

namespace {

using u128 = unsigned __int128;

std::uint64_t pow_u64(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

std::uint64_t pow_mod(std::uint64_t q, std::uint64_t e, std::uint64_t m) {
  u128 r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * q % m;
  return static_cast<std::uint64_t>(r);
}

/// Zsigmondy primes by factoring q^e - 1 with trial division and testing each prime against every f < e.
std::vector<std::uint64_t> naive_zsigmondy(std::uint64_t q, unsigned e) {
  std::uint64_t m = pow_u64(q, e) - 1;
  std::set<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      primes.insert(d);
      m /= d;
    }
  }
  if (m > 1) primes.insert(m);
  std::vector<std::uint64_t> out;
  for (auto r : primes) {
    bool primitive = true;
    for (unsigned f = 1; f < e; ++f) primitive = primitive && pow_mod(q, f, r) != 1;
    if (primitive) out.push_back(r);
  }
  return out;
}

u128 gl_order(unsigned n, std::uint64_t q) {
  u128 r = 1;
  for (unsigned i = 0; i < n; ++i) r *= pow_u64(q, n) - pow_u64(q, i);
  return r;
}

std::string str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace

TEST_CASE("prime powers and multiplicative orders") {
  CHECK(prime_power(8) == std::make_pair<std::uint64_t, unsigned>(2, 3));
  CHECK(prime_power(9) == std::make_pair<std::uint64_t, unsigned>(3, 2));
  CHECK(prime_power(7) == std::make_pair<std::uint64_t, unsigned>(7, 1));
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
  for (std::uint64_t q : {2, 3, 5, 10}) {
    for (std::uint64_t r : {7, 11, 13, 31, 127}) {
      if (q % r == 0) continue;
      std::uint64_t k = 1;
      while (pow_mod(q, k, r) != 1) ++k;
      CHECK(multiplicative_order(q, r) == k);
    }
  }
  CHECK_THROWS_AS(multiplicative_order(14, 7), InvalidArgument);
}

TEST_CASE("cyclotomic values") {
  CHECK(cyclotomic_value(2, 1) == "1");
  CHECK(cyclotomic_value(2, 6) == "3");
  CHECK(cyclotomic_value(2, 12) == "13");
  CHECK(cyclotomic_value(3, 4) == "10");
  CHECK(cyclotomic_value(10, 3) == "111");
}

TEST_CASE("Zsigmondy primes against factoring q^e - 1") {
  CHECK(zsigmondy_primes(2, 6).empty());
  CHECK(zsigmondy_primes(2, 3) == std::vector<std::uint64_t>{7});
  CHECK(zsigmondy_primes(2, 10) == std::vector<std::uint64_t>{11});
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 16}) {
    for (unsigned e = 1; e <= 12; ++e) {
      if (pow_u64(q, e) > 2'000'000'000'000ULL || (q - 1) == 0) continue;
      const auto expect = naive_zsigmondy(q, e);
      CAPTURE(q);
      CAPTURE(e);
      CHECK(zsigmondy_primes(q, e) == expect);
      CHECK(has_zsigmondy_prime(q, e) == !expect.empty());
    }
  }
  CHECK(least_zsigmondy_prime(2, 30) == 331);
  CHECK_FALSE(least_zsigmondy_prime(2, 6));
  CHECK_THROWS_AS(zsigmondy_primes(1, 3), InvalidArgument);
}

TEST_CASE("Zsigmondy for large values uses the factoring path") {
  const auto r = zsigmondy_primes(2, 59);
  CHECK(r == std::vector<std::uint64_t>{179951, 3203431780337ULL});
}

TEST_CASE("group orders against classical formulas") {
  CHECK(group_order_value("A+", 1, 4) == "60");
  CHECK(group_order_value("A+", 1, 5) == "120");
  CHECK(group_order_value("A+", 5, 2) == "20158709760");
  CHECK(group_order_value("C", 3, 2) == "1451520");
  CHECK(group_order_value("A-", 3, 2) == "25920");
  CHECK(group_order_value("2B2", 2, 8) == "29120");
  CHECK(group_order_value("G2", 2, 3) == "4245696");
  CHECK(group_order_value("F4", 4, 2) == "3311126603366400");
  CHECK(group_order_value("3D4", 4, 2) == "211341312");
  CHECK(group_order_value("2F4", 4, 2) == "35942400");
  for (unsigned n = 1; n <= 5; ++n) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
      if (n == 1 && q < 4) continue;
      CHECK(group_order_value("A+", n, q) == str(gl_order(n + 1, q) / (q - 1)));
    }
  }
  CHECK_THROWS_AS(group_order_value("A+", 1, 3), InvalidArgument);
  CHECK_THROWS_AS(group_order_value("2B2", 2, 2), InvalidArgument);
  CHECK_THROWS_AS(group_order("B", 2), InvalidArgument);
  CHECK_THROWS(group_order("H3", 3));
}

TEST_CASE("bundled Sp6(2) and U4(2) have the tabulated orders") {
  CHECK(std::to_string(named_group("Sp6(2)").order()) == group_order_value("C", 3, 2));
  CHECK(std::to_string(named_group("U4(2)").order()) == group_order_value("A-", 3, 2));
}

TEST_CASE("parabolics divide the group with index 1 mod q") {
  for (const auto& family : lie_families()) {
    const unsigned hi = family.max_rank ? family.max_rank : 7;
    for (unsigned n = family.min_rank; n <= hi; ++n) {
      if (!family.admits_rank(n)) continue;
      const auto g = group_order(family.tag, n);
      CHECK(g.is_polynomial());
      const auto parabolics = maximal_parabolics(family.tag, n);
      CHECK_FALSE(parabolics.empty());
      for (const auto& [label, p] : parabolics) {
        CAPTURE(family.tag);
        CAPTURE(n);
        CAPTURE(label);
        CHECK(p.is_polynomial());
        CHECK(p.divides(g));
        for (std::uint64_t q : {2, 3, 4, 8, 27}) {
          if (!family.admits_q(n, q)) continue;
          const auto gv = g.evaluate_u64(q);
          const auto pv = p.evaluate_u64(q);
          if (!gv || !pv) continue;
          CHECK(*gv % *pv == 0);
          CHECK((*gv / *pv) % q == 1);
        }
      }
    }
  }
  // untwisted groups have one maximal parabolic per node
  CHECK(maximal_parabolics("A+", 4).size() == 4);
  CHECK(maximal_parabolics("C", 5).size() == 5);
  CHECK(maximal_parabolics("D+", 6).size() == 6);
  CHECK(maximal_parabolics("E8", 8).size() == 8);
  CHECK(maximal_parabolics("A-", 5).size() == 3);
  CHECK(maximal_parabolics("A-", 4).size() == 2);
  CHECK(maximal_parabolics("E6-", 6).size() == 4);
}

TEST_CASE("A+ parabolics are GL parabolics modulo scalars") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto parabolics = maximal_parabolics("A+", n);
    for (unsigned k = 1; k <= n; ++k) {
      for (std::uint64_t q : {2, 3, 4, 5}) {
        const u128 expect = gl_order(k, q) * gl_order(n + 1 - k, q) * pow_u64(q, k * (n + 1 - k)) / (q - 1);
        CHECK(parabolics[k - 1].second.evaluate(q) == str(expect));
        if (expect * (q - 1) <= ~std::uint64_t{0}) {
          CHECK(gl_parabolic_order(n + 1, q, k) == static_cast<std::uint64_t>(expect * (q - 1)));
        }
      }
    }
  }
  CHECK(gl_parabolic_order(6, 2, 1) == 319979520ULL);
  CHECK(gl_order_polynomial(3).evaluate(2) == "168");
  CHECK_THROWS_AS(gl_parabolic_polynomial(4, 4), InvalidArgument);
}

TEST_CASE("prime divisibility rule agrees with evaluation") {
  for (const auto& family : lie_families()) {
    const unsigned n = family.min_rank + (family.max_rank ? 0 : 1);
    if (!family.admits_rank(n)) continue;
    const auto g = group_order(family.tag, n);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 27, 32}) {
      if (!family.admits_q(n, q)) continue;
      for (std::uint64_t r : {2, 3, 5, 7, 11, 13, 17, 19, 31, 37, 41, 73, 331}) {
        CAPTURE(family.tag);
        CAPTURE(q);
        CAPTURE(r);
        CHECK(g.prime_divides(q, r) == (g.evaluate_mod(q, r) == 0));
      }
    }
  }
}

TEST_CASE("Zsigmondy prime divides the group and avoids every maximal parabolic") {
  std::size_t rows = 0;
  for (const auto& family : lie_families()) {
    const unsigned hi = family.max_rank ? family.max_rank : 6;
    for (unsigned n = family.min_rank; n <= hi; ++n) {
      if (!family.admits_rank(n)) continue;
      for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 27, 32}) {
        if (!family.admits_q(n, q)) continue;
        const auto c = verify_table2_row(family.tag, n, q);
        CAPTURE(lie_type_name(family.tag, n, q));
        ++rows;
        if (c.exception) {
          CHECK_FALSE(c.prime);
          continue;
        }
        CHECK(c.passes);
        CHECK(c.divides_group);
        CHECK(c.exponent_rule_agrees);
        CHECK(c.avoids.size() == c.levis.size());
      }
    }
  }
  CHECK(rows > 250);
  const auto e8 = verify_table2_row("E8", 8, 2);
  CHECK(e8.e == 30);
  CHECK(e8.prime == 331);
  CHECK(e8.passes);
  CHECK(verify_table2_row("E8", 8, 3).passes);
  CHECK(verify_table2_row("G2", 2, 2).exception);
  CHECK_THROWS_AS(verify_table2_row("2G2", 2, 9), InvalidArgument);
}

TEST_CASE("centre orders") {
  CHECK(center_order("A+", 1, 5) == 2);
  CHECK(center_order("A+", 2, 4) == 3);
  CHECK(center_order("A-", 3, 3) == 4);
  CHECK(center_order("C", 3, 2) == 1);
  CHECK(center_order("D+", 4, 3) == 4);
  CHECK(center_order("D+", 5, 3) == 2);
  CHECK(center_order("D-", 5, 3) == 4);
  CHECK(center_order("E6-", 6, 2) == 3);
  CHECK(center_order("E8", 8, 5) == 1);
}

TEST_CASE("exception scan") {
  const std::vector<LieException> expect{
      {"A+", 1, 7, 2},  {"A+", 1, 31, 2}, {"A+", 1, 127, 2}, {"A+", 5, 2, 6}, {"A-", 2, 2, 6},
      {"A-", 3, 2, 6},  {"B", 3, 2, 6},   {"C", 3, 2, 6},    {"D+", 4, 2, 6}, {"G2", 2, 2, 6},
  };
  CHECK(exception_scan() == expect);
}

TEST_CASE("Mersenne Borel check") {
  for (std::uint64_t p : {7, 31, 127, 8191}) {
    const auto m = mersenne_borel_check(p);
    CHECK(m.passes);
    CHECK(m.borel_order % 2 == 1);
    CHECK(m.group_order == p * (p * p - 1) / 2);
  }
  CHECK_FALSE(mersenne_borel_check(3).passes);
  CHECK_THROWS_AS(mersenne_borel_check(11), InvalidArgument);
  CHECK_THROWS_AS(mersenne_borel_check(15), InvalidArgument);
}

TEST_CASE("F2 matrices") {
  const auto c = F2Matrix::companion(3, 0b011);
  CHECK(c.order() == 7);
  CHECK(c.rank() == 3);
  CHECK(F2Matrix::companion(4, 0b0011).order() == 15);
  CHECK(F2Matrix::companion(2, 0b11).order() == 3);
  const auto id = F2Matrix::identity(5);
  CHECK(id.order() == 1);
  F2Matrix singular(2);
  singular.set(0, 0, true);
  CHECK(singular.rank() == 1);
  CHECK_THROWS_AS(singular.order(), InvalidArgument);
  const auto b = F2Matrix::block_diagonal(c, F2Matrix::companion(2, 0b11));
  CHECK(b.dim() == 5);
  CHECK(b.order() == 21);
  CHECK(c * c * c * c * c * c * c == F2Matrix::identity(3));
  CHECK_THROWS_AS(F2Matrix(17), InvalidArgument);
}

TEST_CASE("subspace counts are Gaussian binomial sums") {
  const std::vector<std::size_t> expect{2, 5, 16, 67, 374, 2825};
  for (unsigned d = 1; d <= 6; ++d) CHECK(f2_subspaces(d).size() == expect[d - 1]);
  CHECK(invariant_subspaces(F2Matrix::identity(3)).size() == 16);
  CHECK(invariant_subspaces(F2Matrix::companion(3, 0b011)).size() == 2);
}

TEST_CASE("GL6(2) certificate for the prime 31") {
  const auto l = lemma6_certificate();
  CHECK(l.divisible_k == std::vector<unsigned>{1, 5});
  CHECK(l.element_order == 7);
  CHECK(l.subspaces == 2825);
  CHECK(l.invariant == 11);
  CHECK(l.invariant_by_dimension == std::map<unsigned, std::size_t>{{0, 1}, {3, 9}, {6, 1}});
  CHECK(l.passes);
}

TEST_CASE("Zsigmondy primes are 1 mod e and see exactly the multiples of e") {
  for (std::uint64_t q = 2; q <= 32; ++q) {
    if (!prime_power(q)) continue;
    for (unsigned e = 1; e <= 30; ++e) {
      std::vector<std::uint64_t> primes;
      try {
        primes = zsigmondy_primes(q, e);
      } catch (const CapExceeded&) {
        continue;
      }
      for (auto r : primes) {
        CAPTURE(q);
        CAPTURE(e);
        CHECK(r % e == 1 % e);
        for (unsigned f = 1; f <= 3 * e; ++f) CHECK((pow_mod(q, f, r) == 1) == (f % e == 0));
      }
    }
  }
}

TEST_CASE("centre orders divide q^f - 1 for some f < e") {
  for (const auto& family : lie_families()) {
    const unsigned hi = family.max_rank ? family.max_rank : 8;
    for (unsigned n = family.min_rank; n <= hi; ++n) {
      if (!family.admits_rank(n)) continue;
      const unsigned e = zsigmondy_exponent(family.tag, n);
      if (e < 3) continue;
      for (std::uint64_t q = 2; q <= 32; ++q) {
        if (!family.admits_q(n, q)) continue;
        const auto z = center_order(family.tag, n, q);
        bool found = false;
        for (unsigned f = 1; f < e && !found; ++f) found = pow_mod(q, f, z) == 1 % z || z == 1;
        CAPTURE(lie_type_name(family.tag, n, q));
        CHECK(found);
      }
    }
  }
}
