#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "ivgen/permutation.hpp"
#include "ivgen/stabchain.hpp"

namespace ivgen {

/// Enumeration caps. Exceeding one raises CapExceeded; nothing is truncated.
struct Limits {
  std::uint64_t max_elements = 10'000'000;
  std::uint64_t max_lattice = 2000;
  std::uint64_t max_faces = 10'000'000;
};

/// Fixed seed used wherever an algorithm needs randomness; results are
/// deterministic functions of their inputs.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1e55'0000'0001ULL;

/// A permutation group given by generators together with a complete
/// stabilizer chain. Immutable after construction.
class GeneratedGroup {
 public:
  GeneratedGroup(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return chain_; }
  std::uint64_t order() const { return order_; }
  Permutation identity() const { return Permutation(degree_); }

  bool contains(const Permutation& g) const { return chain_.contains(g); }
  bool contains_all(std::span<const Permutation> gs) const;
  bool is_subgroup_of(const GeneratedGroup& other) const;
  std::uint64_t rank(const Permutation& g) const { return chain_.rank(g); }
  Permutation unrank(std::uint64_t r) const { return chain_.unrank(r); }
  Permutation random_element(std::mt19937_64& rng) const { return chain_.random_element(rng); }
  bool is_abelian() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
  std::uint64_t order_;
};

GeneratedGroup build_group(std::vector<Permutation> generators);
/// Accepts an empty generator list (the trivial group).
GeneratedGroup build_group(std::size_t degree, std::vector<Permutation> generators);
/// Builds <generators> knowing an upper bound on its order (typically the
/// order of an ambient group); cheaper when the bound is attained.
GeneratedGroup build_group_bounded(std::size_t degree, std::vector<Permutation> generators,
                                   std::uint64_t order_bound, std::uint64_t seed = kDefaultSeed);
/// <gens> inside `ambient`; throws NotMember if a generator lies outside.
GeneratedGroup subgroup_generated(const GeneratedGroup& ambient, std::vector<Permutation> gens);

/// True iff <gens> = G. Uses orbit counting and random sifting to decide
/// quickly, with a deterministic chain whenever the answer is "no".
bool generates(const GeneratedGroup& group, std::span<const Permutation> gens, std::uint64_t seed = kDefaultSeed);

std::vector<std::vector<Point>> orbits(std::size_t degree, std::span<const Permutation> gens);
std::vector<std::vector<Point>> orbits(const GeneratedGroup& group);
bool is_transitive(const GeneratedGroup& group);

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Block systems generated by the minimal blocks containing {0, b}, one per
/// distinct nontrivial system. Requires a transitive group.
std::vector<BlockSystem> minimal_blocks(const GeneratedGroup& group);
bool is_primitive(const GeneratedGroup& group);

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
};

/// Classes ordered by element order, then representative.
std::vector<ConjugacyClass> conjugacy_classes(const GeneratedGroup& group, const Limits& limits = {});

/// Class index of every element, indexed by rank. Same class ordering.
struct ClassMap {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of_rank;
};
ClassMap conjugacy_class_map(const GeneratedGroup& group, const Limits& limits = {});

std::vector<Permutation> conjugacy_class_elements(const GeneratedGroup& group, const Permutation& x,
                                                  const Limits& limits = {});

GeneratedGroup centralizer(const GeneratedGroup& group, const Permutation& x, const Limits& limits = {});
GeneratedGroup normalizer(const GeneratedGroup& group, const GeneratedGroup& subgroup, const Limits& limits = {});

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

GeneratedGroup sylow_subgroup(const GeneratedGroup& group, std::uint64_t p, const Limits& limits = {});

/// Visits every element in rank order.
void for_each_element(const GeneratedGroup& group, const std::function<void(const Permutation&)>& visit,
                      const Limits& limits = {});
std::vector<Permutation> elements(const GeneratedGroup& group, const Limits& limits = {});
std::vector<std::size_t> cycle_type(const Permutation& p);

/// Standard constructions used throughout.
GeneratedGroup symmetric_group(std::size_t n);
GeneratedGroup alternating_group(std::size_t n);
GeneratedGroup cyclic_group(std::size_t n);
Permutation cycle_permutation(std::size_t degree, std::span<const Point> points);

}  // namespace ivgen
