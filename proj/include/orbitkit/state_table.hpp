#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace orbitkit {

using State = std::vector<int>;

/// Insertion-ordered set of fixed-width integer vectors stored contiguously,
/// with an open-addressing hash index. Lookups always confirm with a full
/// comparison, so hash collisions never merge distinct states.
class StateTable {
 public:
  explicit StateTable(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return width_ ? data_.size() / width_ : count_; }
  bool empty() const { return size() == 0; }

  std::span<const int> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  State state(std::size_t i) const {
    auto s = (*this)[i];
    return {s.begin(), s.end()};
  }

  std::optional<std::size_t> find(std::span<const int> s) const;
  bool contains(std::span<const int> s) const { return find(s).has_value(); }

  /// Returns the index of `s`, inserting it when absent.
  std::size_t insert(std::span<const int> s);
  void reserve(std::size_t n);

 private:
  static std::uint64_t hash(std::span<const int> s);
  void rehash(std::size_t slots);

  std::size_t width_;
  std::size_t count_ = 0;  // only used for width 0
  std::vector<int> data_;
  std::vector<std::uint32_t> slots_;  // 0 = empty, otherwise index + 1
};

}  // namespace orbitkit
