#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ivgen/homology.hpp"
#include "ivgen/lattice.hpp"

namespace ivgen {

/// A group acting on a finite set of indices, given by generator images.
struct IndexAction {
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> generators;
  std::uint64_t acting_order = 1;  // order of the acting group (possibly acting with kernel)
};

/// Image of the coset i under (g, k): the coset g^-1 H x k. g and k are table indices.
std::uint32_t act_on_coset(const CosetPoset& poset, std::uint32_t i, std::uint32_t g, std::uint32_t k);

/// C x P acting by (Hx)^(g,k) = g^-1 H x k. Throws InvalidArgument if the poset is not invariant.
IndexAction two_sided_action(const CosetPoset& poset, std::size_t c_subgroup, std::size_t p_subgroup);

bool is_order_preserving(const Poset& poset, const IndexAction& action);
/// Elements fixed by every generator, ascending.
std::vector<std::uint32_t> fixed_points(const IndexAction& action);
/// Throws InvalidArgument if the action does not preserve the order.
Poset fixed_subposet(const Poset& poset, const IndexAction& action);
/// {Hx : <C, x P x^-1> <= H}, computed from subgroup inclusions alone.
std::vector<std::uint32_t> fixed_cosets_by_inclusion(const CosetPoset& poset, std::size_t c_subgroup, std::size_t p_subgroup);

struct FixedComplex {
  SimplicialComplex complex;  // faces fixed pointwise
  bool subcomplex = true;     // every face fixed setwise is fixed pointwise
};
/// Fixed part of a complex under a vertex action.
FixedComplex fixed_complex(const SimplicialComplex& complex, const IndexAction& vertex_action);

struct EulerCongruence {
  std::uint64_t p = 0;
  std::int64_t euler = 0;
  std::int64_t fixed_euler = 0;
  bool subcomplex = true;
  bool holds = false;
};
/// chi(K) = chi(K^Q) mod p for a p-group Q. Throws InvalidArgument unless the
/// acting order is a power of p.
EulerCongruence euler_congruence(const SimplicialComplex& complex, const IndexAction& vertex_action, std::uint64_t p);

struct AcyclicityTransfer {
  bool acyclic = false;
  bool fixed_acyclic = false;
  std::int64_t fixed_euler = 0;
};
/// Acyclicity of K and of K^Q over the given field.
AcyclicityTransfer acyclicity_transfer(const SimplicialComplex& complex, const IndexAction& vertex_action, Field field);

struct AbelianSocleCheck {
  std::size_t normal = 0;
  std::uint64_t normal_order = 0;
  std::size_t brown_size = 0;
  bool antichain = false;
  bool divisible = false;
};
/// For each abelian minimal normal subgroup N: is C(G, N) an antichain of size divisible by |N|?
std::vector<AbelianSocleCheck> abelian_socle_checks(std::shared_ptr<const SubgroupLattice> lattice);

struct DiagonalCP {
  GeneratedGroup n;
  std::vector<Permutation> c;
  std::vector<Permutation> p;
};
/// N = L^t on t disjoint copies of L's points, P = Q in every copy, C = D diagonally.
DiagonalCP diagonal_cp(const GeneratedGroup& l, std::size_t t, std::span<const Permutation> d, std::span<const Permutation> q);

struct FixedPointFreeCheck {
  bool hypothesis = false;  // <C, P^g> = N for every g in G
  std::optional<Permutation> counterexample;
  std::size_t brown_size = 0;
  std::size_t fixed_count = 0;
  bool matches_inclusion_rule = false;
};
FixedPointFreeCheck verify_fixed_point_free(std::shared_ptr<const SubgroupLattice> lattice, std::size_t normal,
                                            std::span<const Permutation> c, std::span<const Permutation> p);

struct SmithPipeline {
  FixedPointFreeCheck fixed;
  BettiProfile betti;
  bool passes = false;
};
/// Empty fixed set and nontrivial rational homology of C(G, N).
SmithPipeline smith_pipeline(const GeneratedGroup& g, const GeneratedGroup& n, std::span<const Permutation> c,
                             std::span<const Permutation> p, const Limits& limits = {});

}  // namespace ivgen
