#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/conventions.hpp"
#include "orbitkit/poset.hpp"
#include "orbitkit/state_table.hpp"

namespace orbitkit {

/// Toggles in application order: element 0 is toggled first.
using ToggleSequence = std::vector<Element>;

/// The set A^ell(Q) of order-preserving maps Q -> {0..ell}. The virtual
/// bottom and top of Q-hat carry 0 and ell and are never stored.
class PartitionSpace {
 public:
  PartitionSpace(Poset q, int ell);

  const Poset& poset() const { return q_; }
  int ell() const { return ell_; }
  std::size_t size() const { return q_.size(); }

  bool is_valid(std::span<const int> sigma) const;

  /// All partitions, each once; backtracking along the linear extension with
  /// values ascending.
  StateTable enumerate(std::size_t cap = kDefaultCap) const;

  int nabla(std::span<const int> sigma, Element x) const;
  int delta(std::span<const int> sigma, Element x) const;

  void toggle(std::span<int> sigma, Element x) const {
    sigma[x] = nabla(sigma, x) + delta(sigma, x) - sigma[x];
  }
  void apply(std::span<int> sigma, const ToggleSequence& seq) const {
    for (Element x : seq) toggle(sigma, x);
  }
  State applied(std::span<const int> sigma, const ToggleSequence& seq) const;

 private:
  Poset q_;
  int ell_;
  std::vector<Element> order_;
};

/// Row: toggles from the top of the linear extension down.
ToggleSequence rowmotion_sequence(const Poset& q,
                                  std::span<const Element> extension,
                                  const Conventions& c = {});
ToggleSequence rowmotion_sequence(const Poset& q, const Conventions& c = {});
ToggleSequence rowmotion_inverse_sequence(const Poset& q);

/// An order- and rank-preserving map pi: Q -> Z^n together with a sign
/// vector v.
struct LatticeProjection {
  std::string name;
  std::vector<std::vector<int>> image;  // image[x] has dimension entries
  std::vector<int> v;
};

/// Throws SpecError unless every cover x < y maps to pi(y) - pi(x) being a
/// unit vector and v has entries in {+1, -1} of matching dimension.
void validate_projection(const Poset& q, const LatticeProjection& pi);

/// pi = coords of a product of chains.
LatticeProjection identity_projection(const Poset& q, std::vector<int> v);

/// Pro_{pi,v}: hyperplane layers T^i with i = <pi(x), v> applied from the
/// largest i to the smallest. Layers inside are commuting toggles.
ToggleSequence hyperplane_sequence(const Poset& q, const LatticeProjection& pi,
                                   const Conventions& c = {});

/// TogPro on P x [q-n-1]: for k = 1..q-1 toggle every (p, i) with
/// i = q - n + rank(p) - k. Element (p, i) has index p * (q-n-1) + i - 1.
ToggleSequence graded_togpro_sequence(const Poset& p, int q,
                                      const Conventions& c = {});

/// Row^{-1}(P x {1}) o ... o Row^{-1}(P x {q-n-1}) on P x [q-n-1], each
/// slice inverse being the reversed rowmotion sequence of P.
ToggleSequence row_inverse_slices_sequence(const Poset& p, int q,
                                           const Conventions& c = {});

/// Sum of sigma over the given elements.
long long value_sum(std::span<const int> sigma,
                    std::span<const Element> elements);

/// Diff on P x [q-n-1] through the hyperplanes H_k, k = 1..q.
std::vector<int> diff_graded(const Poset& p, int q, int ell,
                             std::span<const int> sigma);

}  // namespace orbitkit
