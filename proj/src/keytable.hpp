#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ivgen::detail {

/// Open-addressing set of fixed-length keys stored contiguously. Keys are
/// numbered in insertion order.
template <class T>
class KeyTable {
 public:
  explicit KeyTable(std::size_t stride) : stride_(stride == 0 ? 1 : stride), slots_(64, 0) {}

  std::size_t size() const noexcept { return count_; }
  std::size_t stride() const noexcept { return stride_; }
  std::span<const T> key(std::size_t i) const { return {keys_.data() + i * stride_, stride_}; }

  std::pair<std::uint32_t, bool> insert(std::span<const T> k) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t slot = hash(k) & (slots_.size() - 1);
    while (slots_[slot] != 0) {
      const std::uint32_t idx = slots_[slot] - 1;
      if (equal(idx, k)) return {idx, false};
      slot = (slot + 1) & (slots_.size() - 1);
    }
    keys_.insert(keys_.end(), k.begin(), k.end());
    keys_.resize(++count_ * stride_);
    slots_[slot] = static_cast<std::uint32_t>(count_);
    return {static_cast<std::uint32_t>(count_ - 1), true};
  }

  std::optional<std::uint32_t> find(std::span<const T> k) const {
    std::size_t slot = hash(k) & (slots_.size() - 1);
    while (slots_[slot] != 0) {
      const std::uint32_t idx = slots_[slot] - 1;
      if (equal(idx, k)) return idx;
      slot = (slot + 1) & (slots_.size() - 1);
    }
    return std::nullopt;
  }

 private:
  static std::uint64_t hash(std::span<const T> k) noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const T& v : k) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  }

  bool equal(std::uint32_t idx, std::span<const T> k) const noexcept {
    return k.size() == stride_ && std::memcmp(keys_.data() + idx * stride_, k.data(), stride_ * sizeof(T)) == 0;
  }

  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, 0);
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t slot = hash(key(i)) & (next.size() - 1);
      while (next[slot] != 0) slot = (slot + 1) & (next.size() - 1);
      next[slot] = static_cast<std::uint32_t>(i + 1);
    }
    slots_ = std::move(next);
  }

  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<T> keys_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace ivgen::detail
