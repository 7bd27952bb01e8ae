#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ivgen/group.hpp"
#include "ivgen/report.hpp"

namespace ivgen::claims {

struct RunOptions {
  Limits limits{};
  unsigned jobs = 1;        // claims run concurrently
  unsigned inner_jobs = 1;  // threads inside a single scan
  bool stretch = false;
  std::optional<std::uint64_t> normal_order;
  std::vector<Permutation> normal_generators;
};

std::vector<ClaimTask> alternating_tasks(std::size_t lo, std::size_t hi, const RunOptions& opt);
std::vector<ClaimTask> mathieu_tasks(const RunOptions& opt);
std::vector<ClaimTask> lie_small_tasks(const RunOptions& opt);
std::vector<ClaimTask> corpus_homology_tasks(const RunOptions& opt);
std::vector<ClaimTask> corpus_euler_tasks(const RunOptions& opt);
std::vector<ClaimTask> kunneth_tasks(const RunOptions& opt);
std::vector<ClaimTask> smith_tasks(const RunOptions& opt);
std::vector<ClaimTask> table2_grid_tasks(bool all_families);
std::vector<ClaimTask> table1_tasks();

/// Claims making up acceptance criterion 1..10.
std::vector<ClaimTask> acceptance_tasks(int criterion, const RunOptions& opt);
std::string_view acceptance_title(int criterion);

}  // namespace ivgen::claims
