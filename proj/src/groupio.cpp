#include "ivgen/groupio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ivgen/corpus.hpp"
#include "ivgen/error.hpp"

namespace ivgen {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kBundledData[];
extern const unsigned kBundledDataCount;
}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_size(std::string_view s, std::size_t& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

const std::pair<std::string_view, std::uint64_t> kNamedData[] = {
    {"M11", 7920}, {"M12", 95040}, {"M24", 244823040}, {"Sp6(2)", 1451520}, {"U4(2)", 25920},
    {"O8+(2)", 174182400},
};

std::string_view data_stem(std::string_view name) {
  if (name == "M11") return "m11";
  if (name == "M12") return "m12";
  if (name == "M24") return "m24";
  if (name == "Sp6(2)") return "sp6_2";
  if (name == "U4(2)") return "u4_2";
  if (name == "O8+(2)") return "o8p_2";
  return {};
}

}  // namespace

GeneratedGroup parse_group_text(std::string_view text) {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (degree == 0) {
      if (line.substr(0, 6) != "degree" || !parse_size(trim(line.substr(6)), degree) || degree == 0 ||
          degree > 65535) {
        throw ParseError("line " + std::to_string(line_no) + ": expected `degree n` with 1 <= n <= 65535");
      }
      continue;
    }
    try {
      gens.push_back(Permutation::parse(line, degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (degree == 0) throw ParseError("missing `degree n` line");
  return build_group(degree, std::move(gens));
}

GeneratedGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open group file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str());
}

std::string format_group_text(const GeneratedGroup& group) {
  std::string out = "degree " + std::to_string(group.degree()) + "\n";
  for (const auto& g : group.generators()) out += g.to_string() + "\n";
  return out;
}

std::string_view bundled_data(std::string_view stem) {
  for (unsigned i = 0; i < detail::kBundledDataCount; ++i) {
    if (detail::kBundledData[i].first == stem) return detail::kBundledData[i].second;
  }
  throw Error(ErrorCode::not_found, "no bundled data named " + std::string(stem));
}

std::vector<std::string> bundled_data_names() {
  std::vector<std::string> out;
  for (unsigned i = 0; i < detail::kBundledDataCount; ++i) out.emplace_back(detail::kBundledData[i].first);
  return out;
}

GeneratedGroup named_group(std::string_view name) {
  if (is_corpus_name(name)) return corpus_group(name);
  for (const auto& [n, order] : kNamedData) {
    if (n == name) {
      const GeneratedGroup g = parse_group_text(bundled_data(data_stem(name)));
      if (g.order() != order) throw Error(ErrorCode::internal, "bundled group " + std::string(name) + " has wrong order");
      return g;
    }
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'S' || name[0] == 'C')) {
    std::size_t n = 0;
    if (parse_size(name.substr(1), n) && n >= 1 && n <= 1000) {
      if (name[0] == 'A') return alternating_group(n);
      if (name[0] == 'S') return symmetric_group(n);
      return cyclic_group(n);
    }
  }
  throw Error(ErrorCode::not_found, "unknown group name " + std::string(name));
}

std::vector<std::string> named_group_examples() {
  std::vector<std::string> out{"A<n>", "S<n>", "C<n>"};
  for (const auto& [n, order] : kNamedData) out.emplace_back(n);
  for (const auto& c : corpus()) out.push_back(c.name);
  return out;
}

}  // namespace ivgen
