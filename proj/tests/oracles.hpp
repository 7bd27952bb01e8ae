#pragma once

#include <set>
#include <vector>

#include "ivgen/permutation.hpp"

namespace oracle {

using ivgen::Permutation;

/// All elements of <gens> by breadth-first closure under right multiplication.
inline std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = ivgen::compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline Permutation cyc(std::size_t degree, const char* text) { return Permutation::parse(text, degree); }

}  // namespace oracle

namespace oracle {

/// Every subgroup generated by at most two elements, as sorted element sets.
inline std::set<std::set<Permutation>> two_generated_subgroups(std::size_t degree, const std::vector<Permutation>& gens) {
  const auto all = closure(degree, gens);
  std::set<std::set<Permutation>> out;
  for (const auto& a : all) {
    for (const auto& b : all) out.insert(closure(degree, {a, b}));
  }
  return out;
}

}  // namespace oracle
