#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/poset.hpp"

namespace orbitkit {

/// Allowed label sets R(p), one sorted set per poset element.
///
/// Labels are arbitrary integers. `consistent()` is true only for values
/// produced by make_consistent (or one of the builders that call it): every
/// label of every R(p) is then attained on fiber p by some labeling.
class Restriction {
 public:
  Restriction() = default;
  explicit Restriction(std::vector<std::vector<int>> sets);

  std::size_t size() const { return sets_.size(); }
  std::span<const int> set(Element p) const { return sets_[p]; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  bool consistent() const { return consistent_; }

  int min(Element p) const { return sets_[p].front(); }
  int max(Element p) const { return sets_[p].back(); }
  bool contains(Element p, int k) const;

  /// Smallest label of R(p) greater than k.
  std::optional<int> successor(Element p, int k) const;
  /// Largest label of R(p) less than k.
  std::optional<int> predecessor(Element p, int k) const;
  /// R(p) with its largest element removed.
  std::vector<int> truncate_max(Element p) const;

  int global_min() const;
  int global_max() const;

  friend bool operator==(const Restriction&, const Restriction&) = default;

 private:
  friend Restriction make_consistent(Restriction r, const Poset& p);
  std::vector<std::vector<int>> sets_;
  bool consistent_ = false;
};

/// Fixpoint pruning to the largest consistent subfunction. Throws
/// InconsistentRestriction when some R(p) empties.
Restriction make_consistent(Restriction r, const Poset& p);

Restriction from_bounds(const Poset& p, std::span<const int> alpha,
                        std::span<const int> beta);
Restriction from_global_bound(const Poset& p, int q);
Restriction from_flags(const Poset& p, std::span<const int> beta);

/// beta(i,j) = b + 2i - 1 on [a]x[b].
std::vector<int> typea_flag(const Poset& p);

/// Parses `q:N`, `flags:typea`, `flags:b0,b1,...` or
/// `bounds:a0,a1,...;b0,b1,...` (one entry per element index).
Restriction parse_restriction(const Poset& p, std::string_view spec);

class InconsistentRestriction : public SpecError {
 public:
  using SpecError::SpecError;
};

}  // namespace orbitkit
