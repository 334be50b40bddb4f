#include "orbitkit/state_table.hpp"

#include <algorithm>
#include <bit>

#include "orbitkit/errors.hpp"

namespace orbitkit {

std::uint64_t StateTable::hash(std::span<const int> s) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ s.size();
  for (int v : s) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 31;
  }
  h ^= h >> 29;
  h *= 0x94D049BB133111EBull;
  return h ^ (h >> 32);
}

std::optional<std::size_t> StateTable::find(std::span<const int> s) const {
  if (s.size() != width_) return std::nullopt;
  if (width_ == 0) return count_ ? std::optional<std::size_t>(0) : std::nullopt;
  if (slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash(s) & mask;; i = (i + 1) & mask) {
    std::uint32_t v = slots_[i];
    if (v == 0) return std::nullopt;
    auto t = (*this)[v - 1];
    if (std::equal(s.begin(), s.end(), t.begin())) return v - 1;
  }
}

std::size_t StateTable::insert(std::span<const int> s) {
  if (s.size() != width_)
    throw InvariantViolation("state width mismatch in StateTable::insert");
  if (width_ == 0) {
    count_ = 1;
    return 0;
  }
  if (auto hit = find(s)) return *hit;
  const std::size_t n = size();
  if (n + 1 >= 0xFFFFFFFFu)
    throw CapExceeded("StateTable is limited to 2^32 - 2 states");
  if (2 * (n + 1) > slots_.size())
    rehash(std::max<std::size_t>(64, std::bit_ceil(4 * (n + 1))));
  data_.insert(data_.end(), s.begin(), s.end());
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = hash(s) & mask;
  while (slots_[i] != 0) i = (i + 1) & mask;
  slots_[i] = static_cast<std::uint32_t>(n + 1);
  return n;
}

void StateTable::reserve(std::size_t n) {
  data_.reserve(n * width_);
  if (2 * n > slots_.size())
    rehash(std::max<std::size_t>(64, std::bit_ceil(2 * n + 2)));
}

void StateTable::rehash(std::size_t slots) {
  slots_.assign(slots, 0);
  const std::size_t mask = slots - 1;
  for (std::size_t k = 0; k < size(); ++k) {
    std::size_t i = hash((*this)[k]) & mask;
    while (slots_[i] != 0) i = (i + 1) & mask;
    slots_[i] = static_cast<std::uint32_t>(k + 1);
  }
}

}  // namespace orbitkit
