#include "ivgen/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ivgen/error.hpp"

namespace ivgen {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0 || degree > 65535) {
    throw InvalidArgument("permutation degree must be in 1..65535, got " + std::to_string(degree));
  }
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw Error(ErrorCode::cap_exceeded, "element order exceeds 64 bits");
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::size_t degree) {
  check_degree(degree);
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  check_degree(images_.size());
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidArgument("image array is not a bijection");
    }
    seen[p] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation out(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a >= degree) {
        throw InvalidArgument("cycle point " + std::to_string(a) + " outside degree " + std::to_string(degree));
      }
      if (used[a]) throw InvalidArgument("cycles are not disjoint at point " + std::to_string(a));
      used[a] = 1;
      out.images_[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return out;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in permutation \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i == text.size()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') {
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in permutation");
      }
      std::size_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 65535) throw ParseError("point out of range");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    else if (cycle.size() == 1 && cycle[0] >= degree) throw ParseError("point outside degree");
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = lcm_checked(result, len);
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = 1;
      cycle.push_back(static_cast<Point>(p));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles()) out.push_back(c.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q[p[i]];
  return Permutation::unchecked(std::move(out));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree()) {
    throw DegreeMismatch("conjugate: degrees " + std::to_string(x.degree()) + " and " + std::to_string(g.degree()));
  }
  std::vector<Point> out(x.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[g[i]] = g[x[i]];
  return Permutation::unchecked(std::move(out));
}

Permutation power(const Permutation& p, std::int64_t k) {
  const auto ord = static_cast<std::int64_t>(p.order());
  k %= ord;
  if (k < 0) k += ord;
  std::vector<Point> out(p.degree());
  for (const auto& c : p.cycles()) {
    const std::size_t len = c.size();
    const std::size_t shift = static_cast<std::size_t>(k) % len;
    for (std::size_t i = 0; i < len; ++i) out[c[i]] = c[(i + shift) % len];
  }
  return Permutation::unchecked(std::move(out));
}

std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    const auto first = item.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) out.push_back(Permutation::parse(item.substr(first), degree));
    start = end + 1;
  }
  return out;
}

std::uint64_t hash_points(std::span<const Point> pts) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : pts) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return static_cast<std::size_t>(hash_points(p.images()));
}

}  // namespace ivgen
