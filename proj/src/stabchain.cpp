#include "ivgen/stabchain.hpp"

#include <algorithm>
#include <optional>

#include "ivgen/error.hpp"

namespace ivgen {

namespace {

constexpr int kStallLimit = 24;

std::optional<Point> first_moved_point(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g[i] != i) return static_cast<Point>(i);
  }
  return std::nullopt;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

void StabilizerChain::append_level(Point base) {
  Level level;
  level.base = base;
  level.orbit = {base};
  level.position.assign(degree_, -1);
  level.position[base] = 0;
  level.transversal.emplace_back(degree_);
  level.inverse_transversal.emplace_back(degree_);
  level.checked = {0};
  levels_.push_back(std::move(level));
}

void StabilizerChain::add_to_level(std::size_t index, const Permutation& g) {
  Level& level = levels_[index];
  level.generators.push_back(g);
  auto add_point = [&](Point q, const Permutation& t) {
    level.position[q] = static_cast<std::int32_t>(level.orbit.size());
    level.orbit.push_back(q);
    level.inverse_transversal.push_back(t.inverse());
    level.transversal.push_back(t);
    level.checked.push_back(0);
  };
  const std::size_t old_size = level.orbit.size();
  for (std::size_t k = 0; k < old_size; ++k) {
    const Point q = g[level.orbit[k]];
    if (level.position[q] < 0) add_point(q, compose(level.transversal[k], g));
  }
  for (std::size_t k = old_size; k < level.orbit.size(); ++k) {
    for (const auto& s : level.generators) {
      const Point q = s[level.orbit[k]];
      if (level.position[q] < 0) add_point(q, compose(level.transversal[k], s));
    }
  }
}

void StabilizerChain::complete(std::size_t start_level) {
  if (levels_.empty()) return;
  auto i = static_cast<std::ptrdiff_t>(std::min(start_level, levels_.size() - 1));
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
      for (std::size_t s = levels_[li].checked[k]; s < levels_[li].generators.size(); ++s) {
        const Level& level = levels_[li];
        const Permutation& gen = level.generators[s];
        const Point image = gen[level.orbit[k]];
        Permutation h = compose(compose(level.transversal[k], gen),
                                level.inverse_transversal[static_cast<std::size_t>(level.position[image])]);
        if (!h.is_identity()) {
          SiftResult sr = sift(std::move(h), li + 1);
          if (!sr.residue.is_identity()) {
            if (sr.level == levels_.size()) append_level(*first_moved_point(sr.residue));
            for (std::size_t l = li + 1; l <= sr.level; ++l) add_to_level(l, sr.residue);
            i = static_cast<std::ptrdiff_t>(sr.level);
            restarted = true;
            break;
          }
        }
        levels_[li].checked[k] = static_cast<std::uint32_t>(s + 1);
      }
    }
    if (!restarted) --i;
  }
}

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> generators) {
  StabilizerChain chain(degree);
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity()) chain.extend(g);
  }
  return chain;
}

StabilizerChain StabilizerChain::build_with_target(std::size_t degree, std::span<const Permutation> generators,
                                                   std::uint64_t target, std::mt19937_64& rng) {
  StabilizerChain chain(degree);
  std::vector<Permutation> nontrivial;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  if (nontrivial.empty()) return chain;
  // Initial levels: every generator sits at each level whose earlier base points it fixes.
  for (const auto& g : nontrivial) {
    std::size_t fixed = 0;
    while (fixed < chain.levels_.size() && g[chain.levels_[fixed].base] == chain.levels_[fixed].base) ++fixed;
    if (fixed == chain.levels_.size()) chain.append_level(*first_moved_point(g));
  }
  for (const auto& g : nontrivial) {
    for (std::size_t l = 0; l < chain.levels_.size(); ++l) {
      chain.add_to_level(l, g);
      if (g[chain.levels_[l].base] != chain.levels_[l].base) break;
    }
  }
  ProductReplacement pr(degree, nontrivial, rng);
  int stall = 0;
  bool completed = false;
  while (chain.order() < target) {
    SiftResult sr = chain.sift(pr.next());
    if (sr.residue.is_identity()) {
      if (++stall >= kStallLimit) {
        chain.complete(chain.levels_.size() - 1);
        completed = true;
        break;
      }
      continue;
    }
    stall = 0;
    if (sr.level == chain.levels_.size()) chain.append_level(*first_moved_point(sr.residue));
    if (sr.level == 0) {
      chain.add_to_level(0, sr.residue);
    } else {
      for (std::size_t l = 1; l <= sr.level; ++l) chain.add_to_level(l, sr.residue);
    }
  }
  if (!completed && chain.order() != target) chain.complete(chain.levels_.size() - 1);
  return chain;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    if (__builtin_mul_overflow(result, level.orbit.size(), &result)) {
      throw CapExceeded("group order exceeds 64 bits");
    }
  }
  return result;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const std::int32_t k = level.position[g[level.base]];
    if (k < 0) return {std::move(g), i};
    if (k != 0) g = compose(g, level.inverse_transversal[static_cast<std::size_t>(k)]);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).residue.is_identity();
}

std::uint64_t StabilizerChain::rank(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("rank: degree mismatch");
  Permutation h = g;
  std::uint64_t r = 0;
  for (const auto& level : levels_) {
    const std::int32_t k = level.position[h[level.base]];
    if (k < 0) throw NotMember("rank: element is not in the group");
    r = r * level.orbit.size() + static_cast<std::uint64_t>(k);
    if (k != 0) h = compose(h, level.inverse_transversal[static_cast<std::size_t>(k)]);
  }
  if (!h.is_identity()) throw NotMember("rank: element is not in the group");
  return r;
}

Permutation StabilizerChain::unrank(std::uint64_t r) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t i = levels_.size(); i-- > 0;) {
    digits[i] = r % levels_[i].orbit.size();
    r /= levels_[i].orbit.size();
  }
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    if (digits[i] != 0) g = compose(g, levels_[i].transversal[digits[i]]);
  }
  return g;
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[i].orbit.size() - 1);
    const std::size_t k = pick(rng);
    if (k != 0) g = compose(g, levels_[i].transversal[k]);
  }
  return g;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

bool StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_) throw DegreeMismatch("extend: degree mismatch");
  if (contains(g)) return false;
  std::size_t fixed = 0;
  while (fixed < levels_.size() && g[levels_[fixed].base] == levels_[fixed].base) ++fixed;
  if (fixed == levels_.size()) append_level(*first_moved_point(g));
  for (std::size_t l = 0; l <= fixed; ++l) add_to_level(l, g);
  complete(fixed);
  return true;
}

ProductReplacement::ProductReplacement(std::size_t degree, std::span<const Permutation> generators,
                                       std::mt19937_64& rng)
    : accumulator_(degree), rng_(&rng) {
  for (const auto& g : generators) state_.push_back(g);
  if (state_.empty()) state_.emplace_back(degree);
  const std::size_t base = state_.size();
  while (state_.size() < 10) state_.push_back(state_[state_.size() % base]);
  for (int i = 0; i < 50; ++i) next();
}

Permutation ProductReplacement::next() {
  std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
  std::size_t s = pick(*rng_);
  std::size_t t = pick(*rng_);
  while (t == s) t = pick(*rng_);
  const bool invert = ((*rng_)() & 1U) != 0;
  const bool left = ((*rng_)() & 2U) != 0;
  const Permutation other = invert ? state_[t].inverse() : state_[t];
  state_[s] = left ? compose(other, state_[s]) : compose(state_[s], other);
  accumulator_ = compose(accumulator_, state_[s]);
  return accumulator_;
}

}  // namespace ivgen
