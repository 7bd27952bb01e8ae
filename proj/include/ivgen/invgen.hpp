#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivgen/group.hpp"

namespace ivgen {

enum class ScanMode {
  elements,   // conjugation orbit of the tuple T
  subgroups,  // conjugation orbit of the subgroup <T>
};

struct InvGenOptions {
  ScanMode mode = ScanMode::subgroups;
  /// Generators of a subgroup of N_G(<S>) whose orbits on the scanned
  /// conjugates are collapsed. Empty means <S> itself.
  std::vector<Permutation> reduce_by;
  Limits limits{};
  unsigned jobs = 1;
};

struct InvGenVerdict {
  bool holds = false;
  std::optional<Permutation> witness;  // g with <S, T^g> != G
  std::uint64_t scanned = 0;           // conjugates actually tested
  std::uint64_t orbit_size = 0;
  double elapsed_ms = 0;
};

/// Decides whether <S, T^g> = G for every g in G.
InvGenVerdict invariably_generates(const GeneratedGroup& group, std::span<const Permutation> left,
                                   std::span<const Permutation> right, const InvGenOptions& options = {});

/// Same question answered by testing every g in G; for cross-checks only.
InvGenVerdict invariably_generates_full(const GeneratedGroup& group, std::span<const Permutation> left,
                                        std::span<const Permutation> right, const Limits& limits = {});

/// Checks a witness independently: true iff <S, T^g> != G.
bool verify_witness(const GeneratedGroup& group, std::span<const Permutation> left,
                    std::span<const Permutation> right, const Permutation& g);

struct SylowCyclicResult {
  GeneratedGroup sylow;
  InvGenVerdict verdict;
};

SylowCyclicResult sylow_cyclic_invgen(const GeneratedGroup& group, std::uint64_t p, const Permutation& c,
                                      const Limits& limits = {});

struct ClassPairTable {
  /// One entry per union of classes generating conjugate cyclic subgroups.
  struct Row {
    std::string name;  // element order plus a letter per class, e.g. "11AB"
    std::vector<std::uint32_t> classes;
    Permutation representative;
    std::uint64_t element_order = 0;
  };
  std::vector<Row> rows;
  /// Upper triangle including the diagonal: verdicts[i][j - i].
  std::vector<std::vector<InvGenVerdict>> verdicts;

  const InvGenVerdict& at(std::size_t i, std::size_t j) const {
    return i <= j ? verdicts[i][j - i] : verdicts[j][i - j];
  }
  bool any_holds() const;
};

/// Class names use the group's deterministic class order: classes of equal
/// element order are lettered A, B, ... by representative.
std::vector<std::string> class_names(const std::vector<ConjugacyClass>& classes);

ClassPairTable class_pair_table(const GeneratedGroup& group, const std::function<bool(std::uint64_t)>& keep_order,
                                const Limits& limits = {});

/// First class representative of the given element order, or nullopt.
std::optional<Permutation> first_element_of_order(const GeneratedGroup& group, std::uint64_t order,
                                                  const Limits& limits = {});

struct AlternatingCheck {
  std::size_t n = 0;
  std::uint64_t prime = 0;  // p-cycle length used for y (n > 7), else the cycle length of y
  Permutation x;
  Permutation y;
  bool transitive = false;
  bool primitive = false;
  InvGenVerdict verdict;
};

/// Builds the pair (x, y) for A_n and decides invariable generation by an
/// exhaustive scan.
AlternatingCheck check_alternating(std::size_t n, const Limits& limits = {}, unsigned jobs = 1);

/// The pair used by check_alternating without running the scan.
std::pair<Permutation, Permutation> alternating_pair(std::size_t n, std::uint64_t* prime = nullptr);

}  // namespace ivgen
