#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ivgen/error.hpp"
#include "ivgen/permutation.hpp"
#include "keytable.hpp"

namespace ivgen::detail {

inline constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

/// Orbit of an object under a group given by generators, with a Schreier
/// tree so that a conjugating element can be recovered for every item.
template <class Obj, class K>
struct SchreierOrbit {
  explicit SchreierOrbit(std::size_t stride) : table(stride) {}
  std::vector<Obj> items;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;
  KeyTable<K> table;

  std::size_t size() const noexcept { return items.size(); }
};

/// act(obj, generator) returns the image object; key_of(obj) returns a
/// canonical key (a vector of K of the table stride) identifying it.
template <class Obj, class K, class Act, class KeyOf>
SchreierOrbit<Obj, K> schreier_orbit(Obj root, std::span<const Permutation> gens, Act&& act, KeyOf&& key_of,
                                     std::size_t stride, std::uint64_t cap) {
  SchreierOrbit<Obj, K> orbit(stride);
  orbit.table.insert(key_of(root));
  orbit.items.push_back(std::move(root));
  orbit.parent.push_back(kNoParent);
  orbit.via.push_back(0);
  for (std::size_t i = 0; i < orbit.items.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Obj image = act(orbit.items[i], gens[s]);
      const auto key = key_of(image);
      if (orbit.table.insert(key).second) {
        if (orbit.items.size() >= cap) {
          throw CapExceeded("orbit exceeds the enumeration cap of " + std::to_string(cap));
        }
        orbit.items.push_back(std::move(image));
        orbit.parent.push_back(static_cast<std::uint32_t>(i));
        orbit.via.push_back(static_cast<std::uint32_t>(s));
      }
    }
  }
  return orbit;
}

/// Element t with root^t = items[index].
template <class Obj, class K>
Permutation orbit_transversal(const SchreierOrbit<Obj, K>& orbit, std::size_t index,
                              std::span<const Permutation> gens, std::size_t degree) {
  std::vector<std::uint32_t> path;
  for (std::size_t i = index; orbit.parent[i] != kNoParent; i = orbit.parent[i]) path.push_back(orbit.via[i]);
  Permutation t(degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it) t = compose(t, gens[*it]);
  return t;
}

}  // namespace ivgen::detail
