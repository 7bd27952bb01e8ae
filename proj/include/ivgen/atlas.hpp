#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivgen/permutation.hpp"
#include "ivgen/report.hpp"

namespace ivgen {

struct SporadicRecord {
  std::string name;
  std::string order;                        // decimal
  std::vector<std::string> maximal_orders;  // decimal, one per conjugacy class
  std::string source;
  bool complete = true;  // false when the row ends in "..."
};

/// Parses `name | order | m1,m2,... | source` rows.
std::vector<SporadicRecord> parse_sporadic_records(std::string_view text);
const std::vector<SporadicRecord>& sporadic_records();
const SporadicRecord& sporadic_record(std::string_view name);

struct SporadicPair {
  std::string name;
  std::uint64_t p = 0;
  std::uint64_t r = 0;
};
const std::vector<SporadicPair>& sporadic_pairs();

struct Table1Check {
  std::string name;
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  bool divides_order = false;
  std::vector<std::size_t> offending;  // maximal subgroups whose order p*r divides
  std::size_t maximal_count = 0;
  bool data_sane = false;  // every maximal order divides |S|
  std::optional<Permutation> order_witness;  // certified element of order r when computed
  CheckStatus status = CheckStatus::skip;
  std::string reason;
};

/// p*r | |S| and p*r divides no maximal order; SKIP for incomplete records.
Table1Check verify_table1_row(const SporadicRecord& record, std::uint64_t p, std::uint64_t r);
Table1Check verify_table1_row(std::string_view name, std::uint64_t p, std::uint64_t r);

/// Table-1 row for M11 together with an element of order 8 found in the bundled M11.
Table1Check verify_m11_row();

}  // namespace ivgen
