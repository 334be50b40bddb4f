#include "orbitkit/qpartition.hpp"

#include <algorithm>
#include <map>

#include "orbitkit/errors.hpp"

namespace orbitkit {

PartitionSpace::PartitionSpace(Poset q, int ell) : q_(std::move(q)), ell_(ell) {
  if (ell_ < 0 || ell_ > 65535) throw SpecError("ell must lie in [0, 65535]");
  order_ = linear_extension(q_);
}

bool PartitionSpace::is_valid(std::span<const int> sigma) const {
  if (sigma.size() != q_.size()) return false;
  for (Element x = 0; x < q_.size(); ++x) {
    if (sigma[x] < 0 || sigma[x] > ell_) return false;
    for (Element y : q_.upper_covers(x))
      if (sigma[y] < sigma[x]) return false;
  }
  return true;
}

StateTable PartitionSpace::enumerate(std::size_t cap) const {
  StateTable out(q_.size());
  State s(q_.size(), 0);
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == order_.size()) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " partitions");
      out.insert(s);
      return;
    }
    const Element x = order_[t];
    int lo = 0;
    for (Element z : q_.lower_covers(x)) lo = std::max(lo, s[z]);
    for (int v = lo; v <= ell_; ++v) {
      s[x] = v;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return out;
}

int PartitionSpace::nabla(std::span<const int> sigma, Element x) const {
  int m = ell_;
  for (Element y : q_.upper_covers(x)) m = std::min(m, sigma[y]);
  return m;
}

int PartitionSpace::delta(std::span<const int> sigma, Element x) const {
  int m = 0;
  for (Element z : q_.lower_covers(x)) m = std::max(m, sigma[z]);
  return m;
}

State PartitionSpace::applied(std::span<const int> sigma,
                              const ToggleSequence& seq) const {
  State s(sigma.begin(), sigma.end());
  apply(s, seq);
  return s;
}

ToggleSequence rowmotion_sequence(const Poset& q,
                                  std::span<const Element> extension,
                                  const Conventions& c) {
  if (!is_linear_extension(q, extension))
    throw SpecError("rowmotion needs a linear extension");
  ToggleSequence seq(extension.begin(), extension.end());
  if (!c.reverse_row_sweep) std::reverse(seq.begin(), seq.end());
  return seq;
}

ToggleSequence rowmotion_sequence(const Poset& q, const Conventions& c) {
  return rowmotion_sequence(q, linear_extension(q), c);
}

ToggleSequence rowmotion_inverse_sequence(const Poset& q) {
  return linear_extension(q);
}

void validate_projection(const Poset& q, const LatticeProjection& pi) {
  if (pi.image.size() != q.size())
    throw SpecError("projection must map every element");
  const std::size_t n = pi.v.size();
  for (int s : pi.v)
    if (s != 1 && s != -1) throw SpecError("v entries must be +1 or -1");
  for (const auto& img : pi.image)
    if (img.size() != n)
      throw SpecError("projection dimension does not match v");
  for (auto [lo, hi] : q.covers()) {
    int sum = 0;
    for (std::size_t d = 0; d < n; ++d) {
      const int diff = pi.image[hi][d] - pi.image[lo][d];
      if (diff < 0)
        throw SpecError("projection is not order preserving on a cover");
      sum += diff;
    }
    if (sum != 1)
      throw SpecError("projection is not rank preserving on a cover");
  }
}

LatticeProjection identity_projection(const Poset& q, std::vector<int> v) {
  if (!q.has_coords()) throw SpecError("identity projection needs coords");
  LatticeProjection pi{"id", q.all_coords(), std::move(v)};
  validate_projection(q, pi);
  return pi;
}

ToggleSequence hyperplane_sequence(const Poset& q, const LatticeProjection& pi,
                                   const Conventions& c) {
  validate_projection(q, pi);
  std::map<int, std::vector<Element>> layers;
  for (Element x = 0; x < q.size(); ++x) {
    int h = 0;
    for (std::size_t d = 0; d < pi.v.size(); ++d) h += pi.image[x][d] * pi.v[d];
    layers[h].push_back(x);
  }
  ToggleSequence seq;
  seq.reserve(q.size());
  if (c.reverse_hyperplane_sweep) {
    for (auto& [h, xs] : layers) seq.insert(seq.end(), xs.begin(), xs.end());
  } else {
    for (auto it = layers.rbegin(); it != layers.rend(); ++it)
      seq.insert(seq.end(), it->second.begin(), it->second.end());
  }
  return seq;
}

namespace {

struct Graded {
  RankProfile rp;
  int m;  // q - n - 1
};

Graded graded_shape(const Poset& p, int q) {
  Graded g{rank_profile(p), 0};
  if (!g.rp.is_graded) throw SpecError("poset " + p.name() + " is not graded");
  g.m = q - g.rp.top_rank - 1;
  if (g.m < 1) throw SpecError("q must be at least rank + 2");
  return g;
}

}  // namespace

ToggleSequence graded_togpro_sequence(const Poset& p, int q,
                                      const Conventions& c) {
  const Graded g = graded_shape(p, q);
  const int n = g.rp.top_rank;
  ToggleSequence seq;
  auto sweep = [&](int k) {
    for (Element x = 0; x < p.size(); ++x) {
      const int i = q - n + g.rp.rank_of[x] - k;
      if (i >= 1 && i <= g.m) seq.push_back(x * g.m + (i - 1));
    }
  };
  if (c.reverse_togpro_sweep)
    for (int k = q - 1; k >= 1; --k) sweep(k);
  else
    for (int k = 1; k <= q - 1; ++k) sweep(k);
  return seq;
}

ToggleSequence row_inverse_slices_sequence(const Poset& p, int q,
                                           const Conventions& c) {
  const Graded g = graded_shape(p, q);
  auto ext = rowmotion_sequence(p, c);
  std::reverse(ext.begin(), ext.end());
  ToggleSequence seq;
  for (int j = g.m; j >= 1; --j)
    for (Element x : ext) seq.push_back(x * g.m + (j - 1));
  return seq;
}

long long value_sum(std::span<const int> sigma,
                    std::span<const Element> elements) {
  long long s = 0;
  for (Element x : elements) s += sigma[x];
  return s;
}

std::vector<int> diff_graded(const Poset& p, int q, int ell,
                             std::span<const int> sigma) {
  const Graded g = graded_shape(p, q);
  const int n = g.rp.top_rank;
  auto value = [&](Element x, int i) {
    if (i > g.m) return ell;
    if (i < 1) return 0;
    return sigma[x * g.m + (i - 1)];
  };
  std::vector<int> a(q, 0);
  for (int k = 1; k <= q; ++k)
    for (Element x = 0; x < p.size(); ++x) {
      const int i = q - n - k + g.rp.rank_of[x];
      if (value(x, i) != value(x, i + 1)) {
        a[k - 1] = 1;
        break;
      }
    }
  return a;
}

}  // namespace orbitkit
