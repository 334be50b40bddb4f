#include "orbitkit/gamma.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orbitkit/errors.hpp"

namespace orbitkit {

std::optional<Element> GammaPoset::find(Element p, int k) const {
  if (p >= ks_.size()) return std::nullopt;
  auto it = std::lower_bound(ks_[p].begin(), ks_[p].end(), k);
  if (it == ks_[p].end() || *it != k) return std::nullopt;
  return by_p_[p][it - ks_[p].begin()];
}

std::vector<std::pair<GammaLabel, GammaLabel>> gamma_clause_pairs(
    const Poset& p, const Restriction& r) {
  std::vector<std::pair<GammaLabel, GammaLabel>> out;
  for (Element x = 0; x < p.size(); ++x) {
    const auto star = r.truncate_max(x);
    for (int k2 : star) {
      auto k1 = r.successor(x, k2);
      if (k1 && *k1 != r.max(x)) out.push_back({{x, *k1}, {x, k2}});
    }
  }
  for (auto [p1, p2] : p.covers()) {
    const auto star2 = r.truncate_max(p2);
    const auto full2 = r.set(p2);
    for (int k2 : star2) {
      auto k1 = r.predecessor(p1, k2);
      if (!k1 || *k1 == r.max(p1)) continue;
      bool shadowed = false;
      for (int k : full2)
        if (k > k2 && r.predecessor(p1, k) == k1) shadowed = true;
      if (!shadowed) out.push_back({{p1, *k1}, {p2, k2}});
    }
  }
  return out;
}

GammaPoset gamma_poset(const Poset& p, const Restriction& r) {
  if (r.size() != p.size())
    throw SpecError("restriction does not match the poset");
  if (!r.consistent() && !(make_consistent(r, p).sets() == r.sets()))
    throw InconsistentRestriction("Gamma needs a consistent restriction");

  GammaPoset g;
  g.by_p_.resize(p.size());
  g.ks_.resize(p.size());
  std::set<int> kv;
  for (Element x = 0; x < p.size(); ++x) {
    g.ks_[x] = r.truncate_max(x);
    for (int k : g.ks_[x]) {
      g.by_p_[x].push_back(static_cast<Element>(g.labels_.size()));
      g.labels_.push_back({x, k});
      kv.insert(k);
    }
  }
  g.k_values_.assign(kv.begin(), kv.end());

  std::vector<Cover> rel;
  for (auto [lo, hi] : gamma_clause_pairs(p, r))
    rel.emplace_back(*g.find(lo.p, lo.k), *g.find(hi.p, hi.k));
  g.poset_ = Poset::from_relations(g.labels_.size(), std::move(rel),
                                   "Gamma(" + p.name() + ")");
  return g;
}

bool is_column_adjacent(const GammaPoset& g) {
  for (auto [lo, hi] : g.poset().covers())
    if (std::abs(g.label(hi).k - g.label(lo).k) != 1) return false;
  return true;
}

ToggleSequence tau_k_sequence(const GammaPoset& g, int k) {
  ToggleSequence seq;
  for (Element x = 0; x < g.size(); ++x)
    if (g.label(x).k == k) seq.push_back(x);
  return seq;
}

ToggleSequence togpro_sequence(const GammaPoset& g, const Conventions& c) {
  ToggleSequence seq;
  seq.reserve(g.size());
  auto ks = g.k_values();
  if (c.reverse_togpro_sweep) std::reverse(ks.begin(), ks.end());
  for (int k : ks) {
    auto t = tau_k_sequence(g, k);
    seq.insert(seq.end(), t.begin(), t.end());
  }
  return seq;
}

std::vector<Element> graded_isomorphism(const GammaPoset& g, const Poset& p,
                                        int q) {
  const RankProfile rp = rank_profile(p);
  if (!rp.is_graded) throw SpecError("poset " + p.name() + " is not graded");
  const int n = rp.top_rank;
  const int m = q - n - 1;
  if (m < 1) throw SpecError("q must be at least rank + 2");
  if (g.size() != p.size() * static_cast<std::size_t>(m))
    throw SpecError("Gamma size does not match P x [q-n-1]");
  std::vector<Element> map(g.size());
  for (Element x = 0; x < g.size(); ++x) {
    const auto [pe, k] = g.label(x);
    const int i = q - n + rp.rank_of[pe] - k;
    if (i < 1 || i > m)
      throw InvariantViolation("graded isomorphism left P x [q-n-1]");
    map[x] = pe * m + (i - 1);
  }
  return map;
}

std::vector<Element> typea_flag_isomorphism(const GammaPoset& g,
                                            const Poset& ab) {
  if (ab.chain_shape().size() != 2)
    throw SpecError("type A flag isomorphism needs [a]x[b]");
  const int a = ab.chain_shape()[0];
  const int b = ab.chain_shape()[1];
  const Poset tri = triangle(a);
  std::vector<Element> map(g.size());
  for (Element x = 0; x < g.size(); ++x) {
    const auto [pe, k] = g.label(x);
    const int i = ab.coords(pe)[0];
    const int j = ab.coords(pe)[1];
    const std::vector<int> c{i, i + j - k + a - 1};
    auto t = tri.find_coords(c);
    if (!t) throw InvariantViolation("flag isomorphism left the triangle");
    map[x] = *t * b + (j - 1);
  }
  return map;
}

LatticeProjection threechains_projection(const GammaPoset& g, const Poset& ab,
                                         int c) {
  if (ab.chain_shape().size() != 2)
    throw SpecError("threechains projection needs [a]x[b]");
  LatticeProjection pi;
  pi.name = "threechains";
  pi.v = {-1, -1, 1};
  pi.image.resize(g.size());
  for (Element x = 0; x < g.size(); ++x) {
    const auto [pe, k] = g.label(x);
    const int i = ab.coords(pe)[0];
    const int j = ab.coords(pe)[1];
    pi.image[x] = {i, j, i + j - k + c - 1};
  }
  validate_projection(g.poset(), pi);
  return pi;
}

Bijection::Bijection(const LabelingSpace& space, const GammaPoset& gamma,
                     Conventions c)
    : space_(&space), gamma_(&gamma), conv_(c) {
  std::size_t expected = 0;
  for (Element p = 0; p < space.poset().size(); ++p)
    expected += space.restriction().set(p).size() - 1;
  if (expected != gamma.size())
    throw SpecError("Gamma does not match the labeling space");
}

State Bijection::phi(std::span<const int> f) const {
  const int ell = space_->ell();
  State sigma(gamma_->size());
  for (Element x = 0; x < gamma_->size(); ++x) {
    const auto [p, k] = gamma_->label(x);
    int above = 0;
    for (int i = 1; i <= ell; ++i) above += f[space_->cell(p, i)] > k;
    sigma[x] = conv_.flip_ideal_orientation ? ell - above : above;
  }
  return sigma;
}

std::vector<OrderIdeal> Bijection::phi2(std::span<const int> f) const {
  const int ell = space_->ell();
  std::vector<OrderIdeal> chain;
  chain.reserve(ell);
  for (int i = 1; i <= ell; ++i) {
    std::vector<std::uint8_t> in(gamma_->size());
    for (Element x = 0; x < gamma_->size(); ++x) {
      const auto [p, k] = gamma_->label(x);
      const int v = f[space_->cell(p, i)];
      in[x] = conv_.flip_ideal_orientation ? k < v : k >= v;
    }
    chain.emplace_back(std::move(in));
  }
  return chain;
}

State Bijection::phi3(const std::vector<OrderIdeal>& chain) const {
  State sigma(gamma_->size(), 0);
  for (const auto& o : chain)
    for (Element x = 0; x < gamma_->size(); ++x) sigma[x] += !o.contains(x);
  return sigma;
}

State Bijection::phi_inverse(std::span<const int> sigma) const {
  const LabelingSpace& s = *space_;
  const int ell = s.ell();
  State f(s.cells());
  for (Element p = 0; p < s.poset().size(); ++p) {
    const auto labels = s.restriction().set(p);
    for (int i = 1; i <= ell; ++i) {
      int chosen = labels.back();
      for (int k : labels) {
        int v = 0;
        if (k != labels.back()) {
          v = sigma[*gamma_->find(p, k)];
          if (conv_.flip_ideal_orientation) v = ell - v;
        }
        if (v <= ell - i) {
          chosen = k;
          break;
        }
      }
      f[s.cell(p, i)] = chosen;
    }
  }
  return f;
}

std::vector<int> diff(const GammaPoset& g, const Restriction& r, int ell,
                      std::span<const int> sigma, int lo, int hi) {
  auto value = [&](Element p, int j) {
    auto set = r.set(p);
    auto it = std::upper_bound(set.begin(), set.end(), j);
    if (it == set.begin()) return ell;
    const int k = *std::prev(it);
    if (k == set.back()) return 0;
    return sigma[*g.find(p, k)];
  };
  std::vector<int> a(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0);
  for (int k = lo; k <= hi; ++k)
    for (Element p = 0; p < r.size(); ++p)
      if (value(p, k - 1) != value(p, k)) {
        a[k - lo] = 1;
        break;
      }
  return a;
}

}  // namespace orbitkit
