#include "doctest.h"
#include "ivgen/atlas.hpp"
#include "ivgen/error.hpp"
#include "ivgen/group.hpp"

using namespace ivgen;

TEST_CASE("bundled records parse and are sane") {
  const auto& records = sporadic_records();
  CHECK(records.size() == 20);
  CHECK(sporadic_record("M11").maximal_orders.size() == 5);
  CHECK(sporadic_record("M").maximal_orders.size() == 46);
  CHECK(sporadic_record("J1").order == "175560");
  CHECK_THROWS(sporadic_record("M13"));
  for (const auto& r : records) {
    CHECK(r.complete);
    CHECK_FALSE(r.source.empty());
  }
}

TEST_CASE("every listed pair passes") {
  CHECK(sporadic_pairs().size() == 20);
  for (const auto& pair : sporadic_pairs()) {
    const auto c = verify_table1_row(pair.name, pair.p, pair.r);
    CAPTURE(pair.name);
    CHECK(c.status == CheckStatus::pass);
    CHECK(c.data_sane);
    CHECK(c.divides_order);
    CHECK(c.offending.empty());
  }
}

TEST_CASE("J1 with 19 and 11") {
  const auto c = verify_table1_row("J1", 19, 11);
  CHECK(c.status == CheckStatus::pass);
  CHECK(c.maximal_count == 7);
}

TEST_CASE("pairs that a maximal subgroup absorbs fail") {
  // L2(11) < M11 has order 660 = 11 * 60
  auto c = verify_table1_row("M11", 11, 5);
  CHECK(c.status == CheckStatus::fail);
  CHECK(c.offending == std::vector<std::size_t>{1});
  // 13 does not divide |M11|
  c = verify_table1_row("M11", 11, 13);
  CHECK(c.status == CheckStatus::fail);
  CHECK_FALSE(c.divides_order);
  // 2.B < M contains elements of orders 47 and 31
  CHECK(verify_table1_row("M", 47, 31).status == CheckStatus::fail);
}

TEST_CASE("incomplete records are skipped, not passed") {
  const auto records = parse_sporadic_records("X | 120 | 60,24,... | test\n");
  REQUIRE(records.size() == 1);
  CHECK_FALSE(records[0].complete);
  const auto c = verify_table1_row(records[0], 5, 3);
  CHECK(c.status == CheckStatus::skip);
  CHECK_FALSE(c.reason.empty());
}

TEST_CASE("bad data") {
  CHECK_THROWS_AS(parse_sporadic_records("X | 12a | 6 | s\n"), ParseError);
  CHECK_THROWS_AS(parse_sporadic_records("X | 12 | 6\n"), ParseError);
  const auto records = parse_sporadic_records("X | 12 | 6,5 | s\n");
  const auto c = verify_table1_row(records[0], 2, 2);
  CHECK_FALSE(c.data_sane);
  CHECK(c.status == CheckStatus::fail);
}

TEST_CASE("M11 row with a computed element of order 8") {
  const auto c = verify_m11_row();
  CHECK(c.status == CheckStatus::pass);
  REQUIRE(c.order_witness);
  CHECK(c.order_witness->order() == 8);
}
