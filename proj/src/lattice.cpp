#include "ivgen/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ivgen/error.hpp"

namespace ivgen {

GroupTable::GroupTable(GeneratedGroup group, const Limits& limits) : group_(std::move(group)) {
  if (group_.order() > limits.max_lattice) {
    throw CapExceeded("group order " + std::to_string(group_.order()) + " exceeds the lattice cap " +
                      std::to_string(limits.max_lattice));
  }
  elements_ = elements(group_, limits);
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      table_[a * n + b] = static_cast<std::uint32_t>(group_.rank(compose(elements_[a], elements_[b])));
    }
  }
  identity_ = index_of(group_.identity());
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = index_of(elements_[a].inverse());
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return elements_[x] < elements_[y]; });
  lex_rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) lex_rank_[order[i]] = static_cast<std::uint32_t>(i);
  for (const auto& g : group_.generators()) {
    if (!g.is_identity()) generators_.push_back(index_of(g));
  }
}

SubgroupLattice::SubgroupLattice(std::shared_ptr<const GroupTable> table, std::vector<SubgroupInfo> subgroups)
    : table_(std::move(table)), subgroups_(std::move(subgroups)) {
  for (std::size_t i = 0; i < subgroups_.size(); ++i) index_.emplace(subgroups_[i].members, i);
}

std::optional<std::size_t> SubgroupLattice::find(const Bitset& members) const {
  const auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Bitset SubgroupLattice::closure(std::span<const std::uint32_t> gens) const {
  const GroupTable& t = *table_;
  Bitset seen(t.size());
  std::vector<std::uint32_t> queue{t.identity()};
  seen.set(t.identity());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto g : gens) {
      const std::uint32_t r = t.mul(queue[k], g);
      if (!seen.test(r)) {
        seen.set(r);
        queue.push_back(r);
      }
    }
  }
  return seen;
}

std::size_t SubgroupLattice::find_generated(std::span<const std::uint32_t> gens) const {
  const auto found = find(closure(gens));
  if (!found) throw Error(ErrorCode::internal, "generated subgroup missing from the lattice");
  return *found;
}

std::size_t SubgroupLattice::find_group(const GeneratedGroup& subgroup) const {
  std::vector<std::uint32_t> gens;
  for (const auto& g : subgroup.generators()) {
    if (!table_->group().contains(g)) throw NotMember("subgroup generator outside the group");
    gens.push_back(table_->index_of(g));
  }
  return find_generated(gens);
}

std::size_t SubgroupLattice::conjugate(std::size_t h, std::uint32_t g) const {
  const GroupTable& t = *table_;
  Bitset image(t.size());
  const std::uint32_t gi = t.inverse(g);
  subgroups_[h].members.for_each([&](std::size_t x) { image.set(t.mul(t.mul(gi, static_cast<std::uint32_t>(x)), g)); });
  const auto found = find(image);
  if (!found) throw Error(ErrorCode::internal, "conjugate subgroup missing from the lattice");
  return *found;
}

GeneratedGroup SubgroupLattice::as_group(std::size_t h) const {
  std::vector<Permutation> gens;
  for (auto g : subgroups_[h].generators) gens.push_back(table_->element(g));
  return build_group_bounded(table_->group().degree(), std::move(gens), subgroups_[h].order);
}

std::vector<std::size_t> SubgroupLattice::strict_overgroups(std::size_t h) const {
  std::vector<std::size_t> out;
  for (std::size_t k = h + 1; k < subgroups_.size(); ++k) {
    if (subgroups_[k].order > subgroups_[h].order && includes(h, k)) out.push_back(k);
  }
  return out;
}

SubgroupLattice all_subgroups(const GeneratedGroup& group, const Limits& limits) {
  auto table = std::make_shared<const GroupTable>(group, limits);
  const GroupTable& t = *table;
  const std::size_t n = t.size();
  std::vector<SubgroupInfo> subs;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  auto add = [&](Bitset members, std::vector<std::uint32_t> gens) {
    if (seen.count(members)) return;
    SubgroupInfo info;
    info.order = members.count();
    info.members = std::move(members);
    info.generators = std::move(gens);
    seen.emplace(info.members, subs.size());
    subs.push_back(std::move(info));
  };
  for (std::uint32_t x = 0; x < n; ++x) {
    Bitset cyc(n);
    std::uint32_t y = t.identity();
    do {
      cyc.set(y);
      y = t.mul(y, x);
    } while (y != t.identity());
    add(std::move(cyc), x == t.identity() ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{x});
  }
  const std::size_t cyclic_count = subs.size();
  for (std::size_t k = 0; k < subs.size(); ++k) {
    for (std::size_t c = 0; c < cyclic_count; ++c) {
      if (subs[c].members.is_subset_of(subs[k].members)) continue;
      // Closure of H and the generator of C, grown from the members of H.
      const std::uint32_t gen = subs[c].generators.front();
      std::vector<std::uint32_t> gens = subs[k].generators;
      gens.push_back(gen);
      Bitset members = subs[k].members;
      std::vector<std::uint32_t> queue;
      members.for_each([&](std::size_t x) { queue.push_back(static_cast<std::uint32_t>(x)); });
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto g : gens) {
          const std::uint32_t r = t.mul(queue[q], g);
          if (!members.test(r)) {
            members.set(r);
            queue.push_back(r);
          }
        }
      }
      add(std::move(members), std::move(gens));
    }
  }
  std::sort(subs.begin(), subs.end(), [](const SubgroupInfo& a, const SubgroupInfo& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  for (auto& s : subs) {
    s.normal = true;
    for (auto g : t.generator_indices()) {
      const std::uint32_t gi = t.inverse(g);
      for (auto h : s.generators) {
        if (!s.members.test(t.mul(t.mul(gi, h), g))) s.normal = false;
      }
    }
  }
  return SubgroupLattice(std::move(table), std::move(subs));
}

std::vector<std::size_t> minimal_normal_subgroups(const SubgroupLattice& lattice) {
  std::vector<std::size_t> normal;
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    if (lattice.subgroups()[i].normal && lattice.subgroups()[i].order > 1) normal.push_back(i);
  }
  std::vector<std::size_t> out;
  for (auto i : normal) {
    const bool minimal = std::none_of(normal.begin(), normal.end(), [&](std::size_t j) {
      return j != i && lattice.includes(j, i);
    });
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::int64_t> mobius(const SubgroupLattice& lattice) {
  const std::size_t s = lattice.size();
  std::vector<std::int64_t> mu(s, 0);
  mu[s - 1] = 1;
  for (std::size_t i = s - 1; i-- > 0;) {
    std::int64_t sum = 0;
    for (auto k : lattice.strict_overgroups(i)) sum += mu[k];
    mu[i] = -sum;
  }
  return mu;
}

std::int64_t zeta_at_minus_one(const SubgroupLattice& lattice) {
  const auto mu = mobius(lattice);
  const std::uint64_t order = lattice.subgroups().back().order;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    total += mu[i] * static_cast<std::int64_t>(order / lattice.subgroups()[i].order);
  }
  return total;
}

bool Poset::leq(std::uint32_t a, std::uint32_t b) const {
  if (a == b) return true;
  return std::binary_search(above[a].begin(), above[a].end(), b);
}

bool Poset::is_antichain() const {
  return std::all_of(above.begin(), above.end(), [](const auto& v) { return v.empty(); });
}

std::size_t Poset::relation_count() const {
  std::size_t c = 0;
  for (const auto& v : above) c += v.size();
  return c;
}

Poset induced_subposet(const Poset& poset, std::span<const std::uint32_t> keep) {
  std::vector<std::int64_t> position(poset.size, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<std::int64_t>(i);
  Poset out;
  out.size = keep.size();
  out.above.resize(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (auto b : poset.above[keep[i]]) {
      if (position[b] >= 0) out.above[i].push_back(static_cast<std::uint32_t>(position[b]));
    }
  }
  return out;
}

CosetPoset::CosetPoset(std::shared_ptr<const SubgroupLattice> lattice, const std::vector<char>& keep_subgroup)
    : lattice_(std::move(lattice)) {
  const SubgroupLattice& lat = *lattice_;
  const GroupTable& t = lat.table();
  const std::size_t n = t.size();
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  coset_id_.assign(lat.size(), {});
  // Subgroups are sorted by order, so appending cosets subgroup by subgroup
  // yields a linear extension.
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!keep_subgroup[h]) continue;
    auto& ids = coset_id_[h];
    ids.assign(n, kNone);
    std::vector<std::uint32_t> members;
    lat.subgroups()[h].members.for_each([&](std::size_t x) { members.push_back(static_cast<std::uint32_t>(x)); });
    std::vector<Coset> found;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (ids[x] != kNone) continue;
      Coset c{static_cast<std::uint32_t>(h), x};
      for (auto m : members) {
        const std::uint32_t y = t.mul(m, x);
        if (t.lex_rank(y) < t.lex_rank(c.representative)) c.representative = y;
        ids[y] = 0;
      }
      found.push_back(c);
    }
    std::sort(found.begin(), found.end(),
              [&](const Coset& a, const Coset& b) { return t.lex_rank(a.representative) < t.lex_rank(b.representative); });
    for (const auto& c : found) {
      const auto id = static_cast<std::uint32_t>(cosets_.size());
      for (auto m : members) ids[t.mul(m, c.representative)] = id;
      cosets_.push_back(c);
    }
  }
  poset_.size = cosets_.size();
  poset_.above.resize(cosets_.size());
  std::vector<std::vector<std::size_t>> over(lat.size());
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (!keep_subgroup[h]) continue;
    for (auto k : lat.strict_overgroups(h)) {
      if (keep_subgroup[k]) over[h].push_back(k);
    }
  }
  for (std::size_t i = 0; i < cosets_.size(); ++i) {
    const Coset& c = cosets_[i];
    auto& up = poset_.above[i];
    for (auto k : over[c.subgroup]) up.push_back(coset_id_[k][c.representative]);
    std::sort(up.begin(), up.end());
  }
}

CosetPoset CosetPoset::full(std::shared_ptr<const SubgroupLattice> lattice) {
  std::vector<char> keep(lattice->size(), 1);
  keep[lattice->whole()] = 0;
  return CosetPoset(std::move(lattice), keep);
}

CosetPoset CosetPoset::brown(std::shared_ptr<const SubgroupLattice> lattice, std::size_t normal_subgroup) {
  const auto& subs = lattice->subgroups();
  if (normal_subgroup >= subs.size() || !subs[normal_subgroup].normal) {
    throw InvalidArgument("Brown subposet needs a normal subgroup");
  }
  const std::uint64_t order = subs.back().order;
  const auto& nm = subs[normal_subgroup];
  std::vector<char> keep(lattice->size(), 0);
  for (std::size_t h = 0; h + 1 < subs.size(); ++h) {
    const std::uint64_t meet = subs[h].members.intersection_count(nm.members);
    keep[h] = subs[h].order * nm.order == order * meet ? 1 : 0;
  }
  return CosetPoset(std::move(lattice), keep);
}

std::optional<std::uint32_t> CosetPoset::index_of(std::size_t subgroup, std::uint32_t element) const {
  if (subgroup >= coset_id_.size() || coset_id_[subgroup].empty()) return std::nullopt;
  return coset_id_[subgroup][element];
}

Bitset CosetPoset::members(std::size_t i) const {
  const GroupTable& t = lattice_->table();
  Bitset out(t.size());
  const Coset& c = cosets_[i];
  lattice_->subgroups()[c.subgroup].members.for_each(
      [&](std::size_t h) { out.set(t.mul(static_cast<std::uint32_t>(h), c.representative)); });
  return out;
}

std::string CosetPoset::label(std::size_t i) const {
  const Coset& c = cosets_[i];
  return "H" + std::to_string(c.subgroup) + "*" + lattice_->table().element(c.representative).to_string();
}

std::string hasse_dot(const CosetPoset& poset, std::size_t max_size) {
  if (poset.size() > max_size) {
    throw CapExceeded("poset has " + std::to_string(poset.size()) + " elements; DOT output is limited to " +
                      std::to_string(max_size));
  }
  const Poset& p = poset.poset();
  std::ostringstream os;
  os << "digraph coset_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size; ++i) os << "  n" << i << " [label=\"" << poset.label(i) << "\"];\n";
  for (std::size_t i = 0; i < p.size; ++i) {
    for (auto j : p.above[i]) {
      const bool cover = std::none_of(p.above[i].begin(), p.above[i].end(),
                                      [&](std::uint32_t k) { return k != j && p.leq(k, j); });
      if (cover) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

GeneratedGroup quotient_group(const SubgroupLattice& lattice, std::size_t normal_subgroup) {
  const auto& nm = lattice.subgroups()[normal_subgroup];
  if (!nm.normal) throw InvalidArgument("quotient needs a normal subgroup");
  const GroupTable& t = lattice.table();
  const std::size_t n = t.size();
  std::vector<std::int64_t> coset(n, -1);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    nm.members.for_each([&](std::size_t h) { coset[t.mul(static_cast<std::uint32_t>(h), x)] = static_cast<std::int64_t>(reps.size()); });
    reps.push_back(x);
  }
  const std::size_t degree = reps.size();
  std::vector<Permutation> gens;
  for (auto g : t.generator_indices()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(coset[t.mul(reps[i], g)]);
    Permutation p(std::move(images));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  return build_group(degree, std::move(gens));
}

}  // namespace ivgen
