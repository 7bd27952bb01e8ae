#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ivgen/permutation.hpp"

namespace ivgen {

/// Base and strong generating set with explicit transversals.
///
/// Level i holds the strong generators fixing base points 0..i-1, the orbit of
/// base point i under them, and for every orbit point a transversal element
/// mapping the base point onto it.  The group order is the product of the
/// basic orbit lengths.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // index into orbit, -1 if absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
    // Schreier generators (orbit[k], generators[s]) with s < checked[k] are
    // known to sift through the levels below.
    std::vector<std::uint32_t> checked;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // == depth() when the residue passed every level
  };

  explicit StabilizerChain(std::size_t degree);

  /// Deterministic Schreier-Sims.
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators);

  /// Random sifting until the product of orbit lengths reaches `target`.
  /// Falls back to deterministic completion when sifting stalls, so the
  /// result is always a complete chain; `target` only short-circuits work.
  static StabilizerChain build_with_target(std::size_t degree, std::span<const Permutation> generators,
                                           std::uint64_t target, std::mt19937_64& rng);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::uint64_t order() const;
  SiftResult sift(Permutation g, std::size_t from = 0) const;
  bool contains(const Permutation& g) const;

  /// Position of a member in the mixed-radix enumeration (level 0 most significant).
  std::uint64_t rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t r) const;
  Permutation random_element(std::mt19937_64& rng) const;

  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  /// Adds a generator and restores completeness. Returns false when g was
  /// already a member.
  bool extend(const Permutation& g);

 private:
  void append_level(Point base);
  void add_to_level(std::size_t level, const Permutation& g);
  void complete(std::size_t start_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Product-replacement random elements of the group generated by a list.
class ProductReplacement {
 public:
  ProductReplacement(std::size_t degree, std::span<const Permutation> generators, std::mt19937_64& rng);
  Permutation next();

 private:
  std::vector<Permutation> state_;
  Permutation accumulator_;
  std::mt19937_64* rng_;
};

}  // namespace ivgen
