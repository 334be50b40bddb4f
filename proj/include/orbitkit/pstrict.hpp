#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orbitkit/poset.hpp"
#include "orbitkit/restriction.hpp"
#include "orbitkit/state_table.hpp"

namespace orbitkit {

/// The set L_{P x [ell]}(R) of P-strict labelings.
///
/// A labeling is a flat vector with the label of cell (p, i) at index
/// p * ell + (i - 1), i.e. fibers are contiguous. Layers are strict, fibers
/// weak, and f(p, i) lies in R(p). The restriction is made consistent on
/// construction.
class LabelingSpace {
 public:
  LabelingSpace(Poset poset, int ell, Restriction r);

  const Poset& poset() const { return poset_; }
  int ell() const { return ell_; }
  const Restriction& restriction() const { return r_; }
  std::size_t cells() const { return poset_.size() * ell_; }
  std::size_t cell(Element p, int i) const { return p * ell_ + (i - 1); }

  /// Smallest and largest label of any R(p).
  int min_label() const { return min_label_; }
  int max_label() const { return max_label_; }

  bool is_valid(std::span<const int> f) const;

  /// All labelings, each once. Deterministic backtracking order: elements in
  /// linear-extension order, each fiber bottom to top, labels ascending.
  StateTable enumerate(std::size_t cap = kDefaultCap) const;

  State minimal() const;
  State maximal() const;

  /// Decided from layer neighbours; fiber p may change as a whole.
  bool is_raisable(std::span<const int> f, Element p, int i) const;
  bool is_lowerable(std::span<const int> f, Element p, int i) const;

  /// rho_k in place. Identity when no R(p) contains both k and a successor.
  void bender_knuth(std::span<int> f, int k) const;
  /// Pro = rho_{max-1} o ... o rho_{min}, in place.
  void promote(std::span<int> f) const;

  State bender_knuth_of(std::span<const int> f, int k) const;
  State promotion_of(std::span<const int> f) const;

 private:
  Poset poset_;
  int ell_;
  Restriction r_;
  int min_label_ = 0;
  int max_label_ = 0;
  std::vector<Element> order_;
};

// Statistics on labelings. Cells follow the LabelingSpace indexing.

/// chi_S: sum of labels over the given cells.
long long label_sum(std::span<const int> f, std::span<const std::size_t> cells);

/// #B: number of labels in fiber p that exceed d.
int box_count(const LabelingSpace& s, std::span<const int> f, Element p, int d);

/// xi(f, x, b) = sum_{k=1..b} k * #{j : f(x, j) = base + k - 1}, where base is
/// the coordinate sum of x (so base + k - 1 = x1 + x2 + k - 1 on [a]x[2]).
long long xi(const LabelingSpace& s, std::span<const int> f, Element x, int b);

/// Binary content over labels lo..hi: entry k - lo is 1 iff k occurs in f.
std::vector<int> binary_content(std::span<const int> f, int lo, int hi);

/// The cell of P x [ell] antipodal to (p, i); P must be a product of chains.
std::size_t antipodal_cell(const LabelingSpace& s, std::size_t cell);

}  // namespace orbitkit
