#include "ivgen/group.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <queue>

#include "ivgen/error.hpp"
#include "orbit.hpp"

namespace ivgen {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void check_cap(std::uint64_t n, std::uint64_t cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": group order " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(cap));
  }
}

/// Grows a stabilizer from random Schreier generators until it has the
/// order predicted by orbit-stabilizer.
template <class Orbit, class Locate>
GeneratedGroup stabilizer(const GeneratedGroup& group, const Orbit& orbit, Locate&& locate) {
  const std::uint64_t target = group.order() / orbit.size();
  const std::size_t n = group.degree();
  std::vector<Permutation> gens;
  StabilizerChain chain(n);
  std::mt19937_64 rng(kDefaultSeed ^ group.order());
  while (chain.order() < target) {
    const Permutation g = group.random_element(rng);
    const std::size_t idx = locate(g);
    const Permutation t = detail::orbit_transversal(orbit, idx, group.generators(), n);
    Permutation s = compose(g, t.inverse());
    if (chain.extend(s)) gens.push_back(std::move(s));
  }
  return GeneratedGroup(n, std::move(gens), std::move(chain));
}

std::vector<std::uint64_t> subgroup_key(const GeneratedGroup& group, std::span<const Permutation> members,
                                        const Permutation& g) {
  std::vector<std::uint64_t> key;
  key.reserve(members.size());
  for (const auto& h : members) key.push_back(group.rank(conjugate(h, g)));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

GeneratedGroup::GeneratedGroup(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain)
    : degree_(degree), generators_(std::move(generators)), chain_(std::move(chain)), order_(chain_.order()) {}

bool GeneratedGroup::contains_all(std::span<const Permutation> gs) const {
  return std::all_of(gs.begin(), gs.end(), [&](const Permutation& g) { return contains(g); });
}

bool GeneratedGroup::is_subgroup_of(const GeneratedGroup& other) const {
  return degree_ == other.degree_ && other.contains_all(generators_);
}

bool GeneratedGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (compose(generators_[i], generators_[j]) != compose(generators_[j], generators_[i])) return false;
    }
  }
  return true;
}

GeneratedGroup build_group(std::vector<Permutation> generators) {
  if (generators.empty()) throw InvalidArgument("build_group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  return build_group(degree, std::move(generators));
}

GeneratedGroup build_group(std::size_t degree, std::vector<Permutation> generators) {
  StabilizerChain chain = StabilizerChain::build(degree, generators);
  return GeneratedGroup(degree, std::move(generators), std::move(chain));
}

GeneratedGroup build_group_bounded(std::size_t degree, std::vector<Permutation> generators,
                                   std::uint64_t order_bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StabilizerChain chain = StabilizerChain::build_with_target(degree, generators, order_bound, rng);
  if (chain.order() > order_bound) throw Error(ErrorCode::internal, "subgroup order exceeds its bound");
  return GeneratedGroup(degree, std::move(generators), std::move(chain));
}

GeneratedGroup subgroup_generated(const GeneratedGroup& ambient, std::vector<Permutation> gens) {
  for (const auto& g : gens) {
    if (g.degree() != ambient.degree()) throw DegreeMismatch("subgroup generator has the wrong degree");
    if (!ambient.contains(g)) throw NotMember("generator " + g.to_string() + " is not in the ambient group");
  }
  return build_group_bounded(ambient.degree(), std::move(gens), ambient.order());
}

bool generates(const GeneratedGroup& group, std::span<const Permutation> gens, std::uint64_t seed) {
  if (group.order() == 1) return true;
  if (gens.empty()) return false;
  if (orbits(group.degree(), gens).size() != orbits(group).size()) return false;
  std::mt19937_64 rng(seed);
  const StabilizerChain chain = StabilizerChain::build_with_target(group.degree(), gens, group.order(), rng);
  return chain.order() == group.order();
}

std::vector<std::vector<Point>> orbits(std::size_t degree, std::span<const Permutation> gens) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(degree, 0);
  for (std::size_t start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{static_cast<Point>(start)};
    seen[start] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        const Point q = g[orbit[k]];
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const GeneratedGroup& group) {
  return orbits(group.degree(), group.generators());
}

bool is_transitive(const GeneratedGroup& group) { return orbits(group).size() == 1; }

std::vector<BlockSystem> minimal_blocks(const GeneratedGroup& group) {
  if (!is_transitive(group)) throw InvalidArgument("block systems need a transitive group");
  const std::size_t n = group.degree();
  std::vector<BlockSystem> out;
  std::vector<Point> parent(n);
  auto find = [&](Point a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t b = 1; b < n; ++b) {
    std::iota(parent.begin(), parent.end(), Point{0});
    std::queue<std::pair<Point, Point>> pending;
    parent[b] = 0;
    pending.emplace(Point{0}, static_cast<Point>(b));
    while (!pending.empty()) {
      const auto [a, c] = pending.front();
      pending.pop();
      for (const auto& g : group.generators()) {
        const Point u = find(g[a]);
        const Point v = find(g[c]);
        if (u != v) {
          parent[std::max(u, v)] = std::min(u, v);
          pending.emplace(u, v);
        }
      }
    }
    std::vector<std::vector<Point>> by_root(n);
    for (std::size_t i = 0; i < n; ++i) by_root[find(static_cast<Point>(i))].push_back(static_cast<Point>(i));
    BlockSystem system;
    for (auto& block : by_root) {
      if (!block.empty()) system.blocks.push_back(std::move(block));
    }
    if (system.blocks.size() == 1) continue;
    if (std::find(out.begin(), out.end(), system) == out.end()) out.push_back(std::move(system));
  }
  return out;
}

bool is_primitive(const GeneratedGroup& group) {
  if (!is_transitive(group)) return false;
  if (group.degree() <= 2) return true;
  return minimal_blocks(group).empty();
}

ClassMap conjugacy_class_map(const GeneratedGroup& group, const Limits& limits) {
  const std::uint64_t order = group.order();
  check_cap(order, limits.max_elements, "conjugacy classes");
  ClassMap map;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  map.class_of_rank.assign(order, kUnset);
  std::uint64_t covered = 0;
  std::vector<Permutation> queue;
  for (std::uint64_t r = 0; r < order && covered < order; ++r) {
    if (map.class_of_rank[r] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(map.classes.size());
    queue.clear();
    queue.push_back(group.unrank(r));
    map.class_of_rank[r] = cls;
    Permutation least = queue.front();
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto& s : group.generators()) {
        Permutation y = conjugate(queue[k], s);
        const std::uint64_t ry = group.rank(y);
        if (map.class_of_rank[ry] == kUnset) {
          map.class_of_rank[ry] = cls;
          if (y < least) least = y;
          queue.push_back(std::move(y));
        }
      }
    }
    covered += queue.size();
    map.classes.push_back({least, queue.size(), least.order()});
  }
  std::vector<std::uint32_t> perm(map.classes.size());
  std::iota(perm.begin(), perm.end(), 0U);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& x = map.classes[a];
    const auto& y = map.classes[b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    return x.representative < y.representative;
  });
  std::vector<std::uint32_t> relabel(perm.size());
  std::vector<ConjugacyClass> sorted;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    relabel[perm[i]] = static_cast<std::uint32_t>(i);
    sorted.push_back(map.classes[perm[i]]);
  }
  for (auto& c : map.class_of_rank) c = relabel[c];
  map.classes = std::move(sorted);
  return map;
}

std::vector<ConjugacyClass> conjugacy_classes(const GeneratedGroup& group, const Limits& limits) {
  return conjugacy_class_map(group, limits).classes;
}

std::vector<Permutation> conjugacy_class_elements(const GeneratedGroup& group, const Permutation& x,
                                                  const Limits& limits) {
  if (!group.contains(x)) throw NotMember("element is not in the group");
  auto orbit = detail::schreier_orbit<Permutation, Point>(
      x, group.generators(), [](const Permutation& y, const Permutation& s) { return conjugate(y, s); },
      [](const Permutation& y) { return y.images(); }, group.degree(), limits.max_elements);
  return std::move(orbit.items);
}

GeneratedGroup centralizer(const GeneratedGroup& group, const Permutation& x, const Limits& limits) {
  if (!group.contains(x)) throw NotMember("element is not in the group");
  auto orbit = detail::schreier_orbit<Permutation, Point>(
      x, group.generators(), [](const Permutation& y, const Permutation& s) { return conjugate(y, s); },
      [](const Permutation& y) { return y.images(); }, group.degree(), limits.max_elements);
  return stabilizer(group, orbit, [&](const Permutation& g) {
    const Permutation y = conjugate(x, g);
    return static_cast<std::size_t>(*orbit.table.find(y.images()));
  });
}

GeneratedGroup normalizer(const GeneratedGroup& group, const GeneratedGroup& subgroup, const Limits& limits) {
  if (!subgroup.is_subgroup_of(group)) throw NotMember("normalizer: argument is not a subgroup");
  const std::vector<Permutation> members = elements(subgroup, limits);
  const Permutation id = group.identity();
  // Orbit items are conjugating elements; keys are the conjugate subgroups.
  auto orbit = detail::schreier_orbit<Permutation, std::uint64_t>(
      id, group.generators(), [](const Permutation& t, const Permutation& s) { return compose(t, s); },
      [&](const Permutation& t) { return subgroup_key(group, members, t); }, members.size(), limits.max_elements);
  return stabilizer(group, orbit, [&](const Permutation& g) {
    return static_cast<std::size_t>(*orbit.table.find(subgroup_key(group, members, g)));
  });
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (p < 2 || n == 0) return 1;
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

GeneratedGroup sylow_subgroup(const GeneratedGroup& group, std::uint64_t p, const Limits& limits) {
  if (!is_prime(p)) throw InvalidArgument("sylow_subgroup: " + std::to_string(p) + " is not prime");
  if (group.order() % p != 0) {
    throw InvalidArgument("sylow_subgroup: " + std::to_string(p) + " does not divide the group order");
  }
  const std::uint64_t target = p_part(group.order(), p);
  const std::size_t n = group.degree();
  std::mt19937_64 rng(kDefaultSeed ^ (p * 0x9e37ULL));
  std::vector<Permutation> gens;
  GeneratedGroup q = build_group(n, {});
  auto p_element = [&](const Permutation& g) {
    const std::uint64_t ord = g.order();
    return power(g, static_cast<std::int64_t>(ord / p_part(ord, p)));
  };
  while (q.order() < target) {
    const GeneratedGroup norm = q.order() == 1 ? group : normalizer(group, q, limits);
    for (;;) {
      const Permutation h = p_element(norm.random_element(rng));
      if (h.is_identity() || q.contains(h)) continue;
      gens.push_back(h);
      q = build_group(n, gens);
      break;
    }
  }
  return q;
}

void for_each_element(const GeneratedGroup& group, const std::function<void(const Permutation&)>& visit,
                      const Limits& limits) {
  check_cap(group.order(), limits.max_elements, "element enumeration");
  for (std::uint64_t r = 0; r < group.order(); ++r) visit(group.unrank(r));
}

std::vector<Permutation> elements(const GeneratedGroup& group, const Limits& limits) {
  std::vector<Permutation> out;
  check_cap(group.order(), limits.max_elements, "element enumeration");
  out.reserve(group.order());
  for_each_element(group, [&](const Permutation& g) { out.push_back(g); }, limits);
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) { return p.cycle_type(); }

Permutation cycle_permutation(std::size_t degree, std::span<const Point> points) {
  return Permutation::from_cycles(degree, {std::vector<Point>(points.begin(), points.end())});
}

GeneratedGroup symmetric_group(std::size_t n) {
  if (n < 2) return build_group(std::max<std::size_t>(n, 1), {});
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  const Point pair[] = {0, 1};
  return build_group(n, {cycle_permutation(n, all), cycle_permutation(n, pair)});
}

GeneratedGroup alternating_group(std::size_t n) {
  if (n < 3) return build_group(std::max<std::size_t>(n, 1), {});
  const Point three[] = {0, 1, 2};
  if (n == 3) return build_group(n, {cycle_permutation(n, three)});
  std::vector<Point> rest;
  for (std::size_t i = (n % 2 == 1) ? 0 : 1; i < n; ++i) rest.push_back(static_cast<Point>(i));
  return build_group(n, {cycle_permutation(n, rest), cycle_permutation(n, three)});
}

GeneratedGroup cyclic_group(std::size_t n) {
  if (n < 2) return build_group(1, {});
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return build_group(n, {cycle_permutation(n, all)});
}

}  // namespace ivgen
