#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivgen/lattice.hpp"

namespace ivgen {

struct Field {
  std::uint32_t characteristic = 0;  // 0 for the rationals

  static Field rationals() { return {0}; }
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "F2", "Fp:7" (and "F7").
  static Field parse(std::string_view text);
  std::string name() const;
  bool is_rational() const noexcept { return characteristic == 0; }
  friend bool operator==(const Field&, const Field&) = default;
};

/// Faces stored per dimension as sorted vertex tuples, flattened; faces of a
/// dimension are in lexicographic order. The empty face is implicit.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// The complex {emptyset}.
  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex from_facets(std::size_t vertices, const std::vector<std::vector<std::uint32_t>>& facets,
                                       std::uint64_t max_faces = 10'000'000);
  /// Faces are the chains of the poset.
  static SimplicialComplex order_complex(const Poset& poset, std::uint64_t max_faces = 10'000'000);

  std::size_t vertex_count() const noexcept { return vertices_; }
  /// -1 for {emptyset}.
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  std::uint64_t face_count(int d) const;
  std::uint64_t total_faces() const;
  std::span<const std::uint32_t> face(int d, std::size_t i) const {
    return {faces_[static_cast<std::size_t>(d)].data() + i * static_cast<std::size_t>(d + 1),
            static_cast<std::size_t>(d + 1)};
  }
  std::optional<std::size_t> find_face(std::span<const std::uint32_t> vertices) const;
  /// f_{-1}, f_0, ..., f_dim.
  std::vector<std::uint64_t> f_vector() const;

 private:
  friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&, std::uint64_t);
  /// Sorts and deduplicates each dimension; the caller guarantees closure under faces.
  static SimplicialComplex assemble(std::size_t vertices, std::vector<std::vector<std::vector<std::uint32_t>>> by_dim,
                                    std::uint64_t max_faces);
  std::size_t vertices_ = 0;
  std::vector<std::vector<std::uint32_t>> faces_;  // faces_[d] for d >= 0
};

/// Reduced Euler characteristic from face counts, empty face included.
std::int64_t euler_characteristic(const SimplicialComplex& complex);

struct BettiProfile {
  Field field;
  std::vector<std::uint64_t> betti;  // betti[d + 1] is the reduced Betti number in dimension d
  std::vector<std::uint64_t> ranks;  // ranks[d] = rank of the boundary from dimension d to d - 1
  std::int64_t euler = 0;
  /// Over Q: whether the exact ranks agreed with ranks modulo two random primes.
  bool modular_agreement = true;

  std::uint64_t at(int d) const {
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < betti.size() ? betti[i] : 0;
  }
  bool acyclic() const;
  bool nontrivial() const { return !acyclic(); }
  std::int64_t alternating_sum() const;
};

BettiProfile reduced_betti(const SimplicialComplex& complex, Field field);
bool is_acyclic(const SimplicialComplex& complex, Field field);

/// Rank of the boundary map from d-faces to (d-1)-faces; d = 0 is the augmentation.
std::uint64_t boundary_rank(const SimplicialComplex& complex, int d, Field field);
/// Checks that every composite boundary map vanishes (over the integers).
bool boundary_squares_to_zero(const SimplicialComplex& complex);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, std::uint64_t max_faces = 10'000'000);
/// Reduced Betti numbers of a join from those of its factors.
BettiProfile kunneth_betti(const BettiProfile& a, const BettiProfile& b);

/// Coset poset complex helpers.
SimplicialComplex coset_complex(const CosetPoset& poset, std::uint64_t max_faces = 10'000'000);

}  // namespace ivgen
