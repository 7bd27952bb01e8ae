#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ivgen {

using Point = std::uint16_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Products are read left to right: compose(p, q) applies p first.  With that
/// convention conjugation x^g = g^-1 x g satisfies (x^g)^h = x^(gh).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Skips the bijection check; callers guarantee `images` is a permutation.
  static Permutation unchecked(std::vector<Point> images) noexcept {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// Parses disjoint-cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::uint64_t order() const;
  /// Cycle lengths in non-increasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
/// g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);
Permutation power(const Permutation& p, std::int64_t k);

/// Parses a whitespace/comma separated list of cycle-notation permutations,
/// one per line or separated by ';'.
std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

std::uint64_t hash_points(std::span<const Point> pts) noexcept;

}  // namespace ivgen
