#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ivgen/bitset.hpp"
#include "ivgen/group.hpp"

namespace ivgen {

/// Elements of a small group indexed by stabilizer-chain rank, with a full
/// multiplication table.
class GroupTable {
 public:
  GroupTable(GeneratedGroup group, const Limits& limits = {});

  const GeneratedGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[std::size_t{a} * size() + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t index_of(const Permutation& g) const { return static_cast<std::uint32_t>(group_.rank(g)); }
  /// Position of the element in lexicographic order of image arrays.
  std::uint32_t lex_rank(std::uint32_t a) const { return lex_rank_[a]; }
  std::uint32_t identity() const { return identity_; }
  const std::vector<std::uint32_t>& generator_indices() const noexcept { return generators_; }

 private:
  GeneratedGroup group_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> lex_rank_;
  std::vector<std::uint32_t> generators_;
  std::uint32_t identity_ = 0;
};

struct SubgroupInfo {
  Bitset members;
  std::uint64_t order = 0;
  std::vector<std::uint32_t> generators;  // element indices
  bool normal = false;
};

class SubgroupLattice {
 public:
  SubgroupLattice(std::shared_ptr<const GroupTable> table, std::vector<SubgroupInfo> subgroups);

  const GroupTable& table() const noexcept { return *table_; }
  std::shared_ptr<const GroupTable> table_ptr() const noexcept { return table_; }
  /// Sorted by order, then by member bitset; front is trivial, back is the whole group.
  const std::vector<SubgroupInfo>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  std::size_t whole() const noexcept { return subgroups_.size() - 1; }
  bool includes(std::size_t small, std::size_t big) const {
    return subgroups_[small].members.is_subset_of(subgroups_[big].members);
  }
  std::optional<std::size_t> find(const Bitset& members) const;
  std::size_t find_generated(std::span<const std::uint32_t> gens) const;
  std::size_t find_group(const GeneratedGroup& subgroup) const;
  /// Index of H^g.
  std::size_t conjugate(std::size_t h, std::uint32_t g) const;
  Bitset closure(std::span<const std::uint32_t> gens) const;
  GeneratedGroup as_group(std::size_t h) const;
  /// Indices of all K with H < K (strict).
  std::vector<std::size_t> strict_overgroups(std::size_t h) const;

 private:
  std::shared_ptr<const GroupTable> table_;
  std::vector<SubgroupInfo> subgroups_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

/// Every subgroup, by join-closure of the cyclic subgroups.
SubgroupLattice all_subgroups(const GeneratedGroup& group, const Limits& limits = {});

std::vector<std::size_t> minimal_normal_subgroups(const SubgroupLattice& lattice);

/// mu(H, G) for every subgroup H, indexed like the lattice.
std::vector<std::int64_t> mobius(const SubgroupLattice& lattice);
/// P(G, -1) = sum over H of mu(H, G) [G:H].
std::int64_t zeta_at_minus_one(const SubgroupLattice& lattice);

/// A finite poset whose element indices form a linear extension: every
/// element strictly above i has an index larger than i.
struct Poset {
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> above;  // strictly greater elements, ascending
  bool leq(std::uint32_t a, std::uint32_t b) const;
  bool is_antichain() const;
  std::size_t relation_count() const;
};

/// Restriction of a poset to a subset of its elements (given ascending).
Poset induced_subposet(const Poset& poset, std::span<const std::uint32_t> keep);

struct Coset {
  std::uint32_t subgroup = 0;
  std::uint32_t representative = 0;  // member with least image array
};

/// Right cosets Hx of proper subgroups H, ordered by inclusion.
class CosetPoset {
 public:
  static CosetPoset full(std::shared_ptr<const SubgroupLattice> lattice);
  /// Cosets Hx with H proper and HN = G. Throws InvalidArgument unless N is normal.
  static CosetPoset brown(std::shared_ptr<const SubgroupLattice> lattice, std::size_t normal_subgroup);

  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return cosets_.size(); }
  const Coset& at(std::size_t i) const { return cosets_[i]; }
  const Poset& poset() const noexcept { return poset_; }
  /// Poset index of the coset H x, if that coset belongs to this poset.
  std::optional<std::uint32_t> index_of(std::size_t subgroup, std::uint32_t element) const;
  /// Members of the coset as element indices.
  Bitset members(std::size_t i) const;
  bool contains_coset(std::size_t i, std::size_t j) const { return poset_.leq(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)); }
  std::string label(std::size_t i) const;

 private:
  CosetPoset(std::shared_ptr<const SubgroupLattice> lattice, const std::vector<char>& keep_subgroup);

  std::shared_ptr<const SubgroupLattice> lattice_;
  std::vector<Coset> cosets_;
  std::vector<std::vector<std::uint32_t>> coset_id_;  // [subgroup][element] -> poset index
  Poset poset_;
};

/// Hasse diagram in Graphviz DOT format; refuses posets above `max_size`.
std::string hasse_dot(const CosetPoset& poset, std::size_t max_size = 500);

/// G/N as a permutation group on the right cosets of N.
GeneratedGroup quotient_group(const SubgroupLattice& lattice, std::size_t normal_subgroup);

}  // namespace ivgen
