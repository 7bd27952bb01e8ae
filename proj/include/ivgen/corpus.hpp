#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivgen/group.hpp"

namespace ivgen {

struct CorpusGroup {
  std::string name;
  std::uint64_t order = 0;
};

/// Every group of order below 24, one per isomorphism class, followed by
/// S4, A4xC2, D24 and SL(2,3). Groups are given by their regular
/// representations except S4 and SL(2,3), which use small natural actions.
const std::vector<CorpusGroup>& corpus();
GeneratedGroup corpus_group(std::string_view name);
bool is_corpus_name(std::string_view name);

/// External direct product acting on the disjoint union of the point sets.
GeneratedGroup direct_product(const GeneratedGroup& a, const GeneratedGroup& b);
/// Regular representation (right multiplication on ranks) of any group.
GeneratedGroup regular_representation(const GeneratedGroup& group);

}  // namespace ivgen
