#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivgen/group.hpp"

namespace ivgen {

/// Parses the group text format: an optional run of `#` comment lines, a
/// `degree n` line, then one generator per line in cycle notation.
GeneratedGroup parse_group_text(std::string_view text);
GeneratedGroup load_group_file(const std::string& path);
std::string format_group_text(const GeneratedGroup& group);

/// Bundled data files by stem ("m11", "sp6_2", ...).
std::string_view bundled_data(std::string_view stem);
std::vector<std::string> bundled_data_names();

/// Resolves a group name: corpus names, A<n>, S<n>, C<n>, M11, M12, M24,
/// Sp6(2), U4(2), O8+(2). Throws Error(not_found) for unknown names.
GeneratedGroup named_group(std::string_view name);
std::vector<std::string> named_group_examples();

}  // namespace ivgen
