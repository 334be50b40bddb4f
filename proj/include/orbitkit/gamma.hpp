#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orbitkit/conventions.hpp"
#include "orbitkit/poset.hpp"
#include "orbitkit/pstrict.hpp"
#include "orbitkit/qpartition.hpp"
#include "orbitkit/restriction.hpp"

namespace orbitkit {

struct GammaLabel {
  Element p;
  int k;
  friend bool operator==(const GammaLabel&, const GammaLabel&) = default;
};

/// Gamma(P, R): elements (p, k) with k in R(p) minus its maximum. Elements
/// are indexed by p, then k ascending; a larger k sits lower in its fiber.
class GammaPoset {
 public:
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const GammaLabel& label(Element g) const { return labels_[g]; }
  const std::vector<GammaLabel>& labels() const { return labels_; }
  std::optional<Element> find(Element p, int k) const;
  /// Distinct k values in ascending order.
  const std::vector<int>& k_values() const { return k_values_; }

 private:
  friend GammaPoset gamma_poset(const Poset& p, const Restriction& r);
  Poset poset_;
  std::vector<GammaLabel> labels_;
  std::vector<std::vector<Element>> by_p_;  // by_p_[p][j] has k = R(p)[j]
  std::vector<std::vector<int>> ks_;        // R(p)*
  std::vector<int> k_values_;
};

/// Throws InconsistentRestriction unless `r` is consistent for `p`.
GammaPoset gamma_poset(const Poset& p, const Restriction& r);

/// Every pair produced by the two defining cover clauses, before reduction.
/// Used to confirm that the clauses already give a transitively reduced
/// relation.
std::vector<std::pair<GammaLabel, GammaLabel>> gamma_clause_pairs(
    const Poset& p, const Restriction& r);

/// Every cover changes k by exactly 1.
bool is_column_adjacent(const GammaPoset& g);

/// TogPro: tau_k for every k ascending, tau_k toggling all (p, k).
ToggleSequence togpro_sequence(const GammaPoset& g, const Conventions& c = {});
/// tau_k alone.
ToggleSequence tau_k_sequence(const GammaPoset& g, int k);

/// (p, k) -> (p, q - n + rank(p) - k) into product(P, chain(q - n - 1)),
/// as element indices of the target. Throws when P is ungraded or q is small.
std::vector<Element> graded_isomorphism(const GammaPoset& g, const Poset& p,
                                        int q);

/// ((i,j),k) -> ((i, i+j-k+a-1), j) into product(triangle(a), chain(b)) for
/// Gamma([a]x[b], R^beta) with the type A flag.
std::vector<Element> typea_flag_isomorphism(const GammaPoset& g,
                                            const Poset& ab);

/// pi((i,j),k) = (i, j, i+j-k+c-1) with v = (-1,-1,1) on Gamma([a]x[b], R^q).
LatticeProjection threechains_projection(const GammaPoset& g, const Poset& ab,
                                         int c);

/// Phi = phi3 o phi2 from labelings to Gamma-partitions, and its inverse.
class Bijection {
 public:
  Bijection(const LabelingSpace& space, const GammaPoset& gamma,
            Conventions c = {});

  const LabelingSpace& space() const { return *space_; }
  const GammaPoset& gamma() const { return *gamma_; }

  /// Closed form sigma(p,k) = #{i : f(p,i) > k}.
  State phi(std::span<const int> f) const;
  /// The multichain O_ell <= ... <= O_1; entry i-1 holds O_i.
  std::vector<OrderIdeal> phi2(std::span<const int> f) const;
  /// sigma(p,k) = number of ideals missing (p,k).
  State phi3(const std::vector<OrderIdeal>& chain) const;
  /// f(p,i) = min{k in R(p) : sigma(p,k) <= ell - i}, sigma(p, max R(p)) = 0.
  State phi_inverse(std::span<const int> sigma) const;

 private:
  const LabelingSpace* space_;
  const GammaPoset* gamma_;
  Conventions conv_;
};

/// Diff over labels lo..hi on a Gamma-partition, with sigma(p,j) = ell below
/// min R(p) and 0 from max R(p) on; entry k - lo compares j = k-1 and k.
std::vector<int> diff(const GammaPoset& g, const Restriction& r, int ell,
                      std::span<const int> sigma, int lo, int hi);

}  // namespace orbitkit
