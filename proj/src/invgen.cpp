#include "ivgen/invgen.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "ivgen/error.hpp"
#include "orbit.hpp"

namespace ivgen {

namespace {

using Tuple = std::vector<Permutation>;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void pack_points(std::span<const Point> pts, std::vector<std::uint64_t>& out) {
  for (std::size_t i = 0; i < pts.size(); i += 4) {
    std::uint64_t word = 0;
    for (std::size_t k = 0; k < 4 && i + k < pts.size(); ++k) word |= std::uint64_t{pts[i + k]} << (16 * k);
    out.push_back(word);
  }
}

/// Least image array among the generators of <y>.
Permutation cyclic_key(const Permutation& y) {
  const std::uint64_t ord = y.order();
  Permutation best = y;
  for (std::uint64_t k = 2; k < ord; ++k) {
    if (std::gcd(k, ord) != 1) continue;
    Permutation z = power(y, static_cast<std::int64_t>(k));
    if (z < best) best = std::move(z);
  }
  return best;
}

struct KeyScheme {
  const GeneratedGroup* group;
  ScanMode mode;
  std::size_t tuple_size;
  std::size_t stride;

  std::vector<std::uint64_t> operator()(const Tuple& t) const {
    std::vector<std::uint64_t> key;
    key.reserve(stride);
    if (mode == ScanMode::elements) {
      for (const auto& x : t) pack_points(x.images(), key);
    } else if (tuple_size == 1) {
      pack_points(cyclic_key(t.front()).images(), key);
    } else {
      const GeneratedGroup sub = build_group_bounded(group->degree(), t, group->order());
      for_each_element(sub, [&](const Permutation& h) { key.push_back(group->rank(h)); });
      std::sort(key.begin(), key.end());
    }
    return key;
  }
};

Tuple conjugate_tuple(const Tuple& t, const Permutation& g) {
  Tuple out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back(conjugate(x, g));
  return out;
}

std::vector<Permutation> joined(std::span<const Permutation> a, std::span<const Permutation> b) {
  std::vector<Permutation> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_members(const GeneratedGroup& group, std::span<const Permutation> xs) {
  for (const auto& x : xs) {
    if (x.degree() != group.degree()) throw DegreeMismatch("element degree differs from group degree");
    if (!group.contains(x)) throw NotMember(x.to_string() + " is not in the group");
  }
}

}  // namespace

InvGenVerdict invariably_generates(const GeneratedGroup& group, std::span<const Permutation> left,
                                   std::span<const Permutation> right, const InvGenOptions& options) {
  const auto start = Clock::now();
  require_members(group, left);
  require_members(group, right);
  InvGenVerdict verdict;
  if (generates(group, left)) {
    verdict.holds = true;
    verdict.elapsed_ms = ms_since(start);
    return verdict;
  }
  Tuple root;
  for (const auto& t : right) {
    if (!t.is_identity()) root.push_back(t);
  }
  if (root.empty()) root.push_back(group.identity());
  KeyScheme scheme{&group, options.mode, root.size(), 0};
  scheme.stride = scheme(root).size();
  auto orbit = detail::schreier_orbit<Tuple, std::uint64_t>(
      root, group.generators(), [](const Tuple& t, const Permutation& g) { return conjugate_tuple(t, g); }, scheme,
      scheme.stride, options.limits.max_elements);
  verdict.orbit_size = orbit.size();

  std::vector<Permutation> reducer;
  for (const auto& r : options.reduce_by.empty() ? std::vector<Permutation>(left.begin(), left.end())
                                                 : options.reduce_by) {
    if (!r.is_identity()) reducer.push_back(r);
  }
  std::vector<char> done(orbit.size(), 0);
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < orbit.size(); ++i) {
    if (done[i]) continue;
    reps.push_back(i);
    done[i] = 1;
    queue.assign(1, i);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto& r : reducer) {
        const auto found = orbit.table.find(scheme(conjugate_tuple(orbit.items[queue[k]], r)));
        if (!found) throw Error(ErrorCode::internal, "reduction group does not preserve the scanned orbit");
        if (!done[*found]) {
          done[*found] = 1;
          queue.push_back(*found);
        }
      }
    }
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{reps.size()};
  std::atomic<std::uint64_t> scanned{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= reps.size() || k > first_failure.load()) return;
      scanned.fetch_add(1);
      if (!generates(group, joined(left, orbit.items[reps[k]]))) {
        std::size_t cur = first_failure.load();
        while (k < cur && !first_failure.compare_exchange_weak(cur, k)) {
        }
      }
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  verdict.scanned = scanned.load();
  if (first_failure.load() < reps.size()) {
    verdict.holds = false;
    verdict.witness = detail::orbit_transversal(orbit, reps[first_failure.load()], group.generators(), group.degree());
  } else {
    verdict.holds = true;
  }
  verdict.elapsed_ms = ms_since(start);
  return verdict;
}

InvGenVerdict invariably_generates_full(const GeneratedGroup& group, std::span<const Permutation> left,
                                        std::span<const Permutation> right, const Limits& limits) {
  const auto start = Clock::now();
  require_members(group, left);
  require_members(group, right);
  InvGenVerdict verdict;
  verdict.holds = true;
  verdict.orbit_size = group.order();
  const Tuple t(right.begin(), right.end());
  for_each_element(
      group,
      [&](const Permutation& g) {
        if (!verdict.holds) return;
        ++verdict.scanned;
        if (!generates(group, joined(left, conjugate_tuple(t, g)))) {
          verdict.holds = false;
          verdict.witness = g;
        }
      },
      limits);
  verdict.elapsed_ms = ms_since(start);
  return verdict;
}

bool verify_witness(const GeneratedGroup& group, std::span<const Permutation> left,
                    std::span<const Permutation> right, const Permutation& g) {
  const Tuple t(right.begin(), right.end());
  return build_group(group.degree(), joined(left, conjugate_tuple(t, g))).order() != group.order();
}

SylowCyclicResult sylow_cyclic_invgen(const GeneratedGroup& group, std::uint64_t p, const Permutation& c,
                                      const Limits& limits) {
  GeneratedGroup sylow = sylow_subgroup(group, p, limits);
  InvGenOptions options;
  options.limits = limits;
  options.reduce_by = normalizer(group, sylow, limits).generators();
  const Permutation right[] = {c};
  InvGenVerdict verdict = invariably_generates(group, sylow.generators(), right, options);
  return {std::move(sylow), std::move(verdict)};
}

bool ClassPairTable::any_holds() const {
  for (const auto& row : verdicts) {
    for (const auto& v : row) {
      if (v.holds) return true;
    }
  }
  return false;
}

std::vector<std::string> class_names(const std::vector<ConjugacyClass>& classes) {
  std::vector<std::string> out;
  std::uint64_t last_order = 0;
  char letter = 'A';
  for (const auto& c : classes) {
    if (c.element_order != last_order) {
      last_order = c.element_order;
      letter = 'A';
    }
    out.push_back(std::to_string(c.element_order) + std::string(1, letter++));
  }
  return out;
}

ClassPairTable class_pair_table(const GeneratedGroup& group, const std::function<bool(std::uint64_t)>& keep_order,
                                const Limits& limits) {
  const ClassMap map = conjugacy_class_map(group, limits);
  const auto names = class_names(map.classes);
  std::vector<int> row_of(map.classes.size(), -1);
  ClassPairTable table;
  for (std::uint32_t c = 0; c < map.classes.size(); ++c) {
    const auto& cls = map.classes[c];
    if (cls.element_order == 1 || !keep_order(cls.element_order) || row_of[c] >= 0) continue;
    ClassPairTable::Row row;
    row.representative = cls.representative;
    row.element_order = cls.element_order;
    for (std::uint64_t k = 1; k < cls.element_order; ++k) {
      if (std::gcd(k, cls.element_order) != 1) continue;
      const std::uint32_t d =
          map.class_of_rank[group.rank(power(cls.representative, static_cast<std::int64_t>(k)))];
      if (std::find(row.classes.begin(), row.classes.end(), d) == row.classes.end()) row.classes.push_back(d);
    }
    std::sort(row.classes.begin(), row.classes.end());
    row.name = std::to_string(cls.element_order);
    for (auto d : row.classes) {
      row.name += names[d].substr(std::to_string(cls.element_order).size());
      row_of[d] = static_cast<int>(table.rows.size());
    }
    table.rows.push_back(std::move(row));
  }
  InvGenOptions options;
  options.limits = limits;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    std::vector<InvGenVerdict> line;
    for (std::size_t j = i; j < table.rows.size(); ++j) {
      const auto& a = table.rows[i];
      const auto& b = table.rows[j];
      // Conjugate the side with the smaller class.
      const bool swap = map.classes[a.classes.front()].size < map.classes[b.classes.front()].size;
      const Permutation left[] = {swap ? b.representative : a.representative};
      const Permutation right[] = {swap ? a.representative : b.representative};
      line.push_back(invariably_generates(group, left, right, options));
    }
    table.verdicts.push_back(std::move(line));
  }
  return table;
}

std::optional<Permutation> first_element_of_order(const GeneratedGroup& group, std::uint64_t order,
                                                  const Limits& limits) {
  for (const auto& c : conjugacy_classes(group, limits)) {
    if (c.element_order == order) return c.representative;
  }
  return std::nullopt;
}

std::pair<Permutation, Permutation> alternating_pair(std::size_t n, std::uint64_t* prime) {
  if (n < 5) throw InvalidArgument("alternating check needs n >= 5");
  auto seq = [](std::size_t from, std::size_t to) {
    std::vector<Point> v;
    for (std::size_t i = from; i < to; ++i) v.push_back(static_cast<Point>(i));
    return v;
  };
  Permutation x(n);
  Permutation y(n);
  std::uint64_t p = 0;
  if (n == 5) {
    x = cycle_permutation(n, seq(0, 5));
    y = cycle_permutation(n, seq(0, 3));
    p = 3;
  } else if (n == 6) {
    x = cycle_permutation(n, seq(0, 5));
    y = Permutation::from_cycles(n, {seq(0, 4), seq(4, 6)});
    p = 4;
  } else if (n == 7) {
    x = cycle_permutation(n, seq(0, 7));
    y = cycle_permutation(n, seq(0, 5));
    p = 5;
  } else {
    for (std::uint64_t q = n / 2 + 1; q + 2 < n; ++q) {
      if (2 * q > n && is_prime(q)) {
        p = q;
        break;
      }
    }
    if (p == 0) throw Error(ErrorCode::internal, "no prime strictly between n/2 and n-2");
    x = n % 2 == 1 ? cycle_permutation(n, seq(0, n))
                   : Permutation::from_cycles(n, {seq(0, n / 2), seq(n / 2, n)});
    y = cycle_permutation(n, seq(0, p));
  }
  if (prime) *prime = p;
  return {x, y};
}

AlternatingCheck check_alternating(std::size_t n, const Limits& limits, unsigned jobs) {
  AlternatingCheck out;
  out.n = n;
  auto [x, y] = alternating_pair(n, &out.prime);
  out.x = x;
  out.y = y;
  const GeneratedGroup group = alternating_group(n);
  const GeneratedGroup pair = build_group(n, {x, y});
  out.transitive = is_transitive(pair);
  out.primitive = out.transitive && is_primitive(pair);
  InvGenOptions options;
  options.limits = limits;
  options.jobs = jobs;
  const Permutation left[] = {x};
  const Permutation right[] = {y};
  out.verdict = invariably_generates(group, left, right, options);
  return out;
}

}  // namespace ivgen
