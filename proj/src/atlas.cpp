#include "ivgen/atlas.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ivgen/error.hpp"
#include "ivgen/group.hpp"
#include "ivgen/groupio.hpp"

namespace ivgen {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::string decimal(std::string_view s, std::string_view line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a decimal integer in: " + std::string(line));
  }
  return std::string(s);
}

std::uint64_t parse_u64(std::string_view s, std::string_view line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer in: " + std::string(line));
  return v;
}

}  // namespace

std::vector<SporadicRecord> parse_sporadic_records(std::string_view text) {
  std::vector<SporadicRecord> out;
  for (auto line : split(text, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split(line, '|');
    if (cols.size() != 4) throw ParseError("sporadic row needs 4 columns: " + std::string(line));
    SporadicRecord r;
    r.name = cols[0];
    r.order = decimal(cols[1], line);
    for (auto m : split(cols[2], ',')) {
      if (m == "...") {
        r.complete = false;
        continue;
      }
      r.maximal_orders.push_back(decimal(m, line));
    }
    r.source = cols[3];
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<SporadicRecord>& sporadic_records() {
  static const std::vector<SporadicRecord> records = parse_sporadic_records(bundled_data("sporadic_maximals"));
  return records;
}

const SporadicRecord& sporadic_record(std::string_view name) {
  for (const auto& r : sporadic_records()) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::not_found, "no sporadic record for " + std::string(name));
}

const std::vector<SporadicPair>& sporadic_pairs() {
  static const std::vector<SporadicPair> pairs = [] {
    std::vector<SporadicPair> out;
    for (auto line : split(bundled_data("sporadic_pairs"), '\n')) {
      if (line.empty() || line.front() == '#') continue;
      const auto cols = split(line, '|');
      if (cols.size() != 3) throw ParseError("pair row needs 3 columns: " + std::string(line));
      out.push_back({std::string(cols[0]), parse_u64(cols[1], line), parse_u64(cols[2], line)});
    }
    return out;
  }();
  return pairs;
}

Table1Check verify_table1_row(const SporadicRecord& record, std::uint64_t p, std::uint64_t r) {
  if (p < 2 || r < 2) throw InvalidArgument("element orders must be at least 2");
  Table1Check out;
  out.name = record.name;
  out.p = p;
  out.r = r;
  out.maximal_count = record.maximal_orders.size();
  if (!record.complete || record.maximal_orders.empty()) {
    out.status = CheckStatus::skip;
    out.reason = "maximal subgroup list is incomplete";
    return out;
  }
  const mpz_class order(record.order);
  const mpz_class pr = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(r);
  out.divides_order = order % pr == 0;
  out.data_sane = true;
  for (std::size_t i = 0; i < record.maximal_orders.size(); ++i) {
    const mpz_class m(record.maximal_orders[i]);
    if (m >= order || order % m != 0) out.data_sane = false;
    if (m % pr == 0) out.offending.push_back(i);
  }
  const bool ok = out.divides_order && out.offending.empty() && out.data_sane;
  out.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (!out.divides_order) out.reason = "p*r does not divide the group order";
  if (!out.offending.empty()) out.reason = "p*r divides a maximal subgroup order";
  if (!out.data_sane) out.reason = "a maximal order does not divide the group order";
  return out;
}

Table1Check verify_table1_row(std::string_view name, std::uint64_t p, std::uint64_t r) {
  return verify_table1_row(sporadic_record(name), p, r);
}

Table1Check verify_m11_row() {
  Table1Check out = verify_table1_row("M11", 11, 8);
  const auto m11 = named_group("M11");
  if (std::to_string(m11.order()) != sporadic_record("M11").order) {
    out.status = CheckStatus::fail;
    out.reason = "bundled M11 has the wrong order";
    return out;
  }
  for (const auto& c : conjugacy_classes(m11)) {
    if (c.element_order == 8) {
      out.order_witness = c.representative;
      break;
    }
  }
  if (!out.order_witness && out.status == CheckStatus::pass) {
    out.status = CheckStatus::fail;
    out.reason = "no element of order 8 in the bundled M11";
  }
  return out;
}

}  // namespace ivgen
