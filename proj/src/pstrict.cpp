#include "orbitkit/pstrict.hpp"

#include <algorithm>
#include <string>

#include "orbitkit/errors.hpp"

namespace orbitkit {

LabelingSpace::LabelingSpace(Poset poset, int ell, Restriction r)
    : poset_(std::move(poset)), ell_(ell) {
  if (ell_ < 1) throw SpecError("ell must be >= 1");
  if (poset_.size() == 0) throw SpecError("poset must be nonempty");
  r_ = r.consistent() ? std::move(r) : make_consistent(std::move(r), poset_);
  if (r_.size() != poset_.size())
    throw SpecError("restriction does not match the poset");
  min_label_ = r_.global_min();
  max_label_ = r_.global_max();
  order_ = linear_extension(poset_);
}

bool LabelingSpace::is_valid(std::span<const int> f) const {
  if (f.size() != cells()) return false;
  for (Element p = 0; p < poset_.size(); ++p)
    for (int i = 1; i <= ell_; ++i) {
      const int v = f[cell(p, i)];
      if (!r_.contains(p, v)) return false;
      if (i > 1 && f[cell(p, i - 1)] > v) return false;
      for (Element y : poset_.upper_covers(p))
        if (f[cell(y, i)] <= v) return false;
    }
  return true;
}

StateTable LabelingSpace::enumerate(std::size_t cap) const {
  StateTable out(cells());
  State f(cells(), 0);
  const std::size_t total = cells();

  // Slot t fills element order_[t / ell] at layer t % ell + 1. Lower covers
  // and the previous fiber cell are assigned before each slot, and any label
  // admitted here extends to a full labeling because R is consistent.
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == total) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " labelings");
      out.insert(f);
      return;
    }
    const Element p = order_[t / ell_];
    const int i = static_cast<int>(t % ell_) + 1;
    int lo = i > 1 ? f[cell(p, i - 1)] : r_.min(p);
    for (Element z : poset_.lower_covers(p)) lo = std::max(lo, f[cell(z, i)] + 1);
    for (int k : r_.set(p)) {
      if (k < lo) continue;
      f[cell(p, i)] = k;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return out;
}

State LabelingSpace::minimal() const {
  State f(cells());
  for (Element p = 0; p < poset_.size(); ++p)
    for (int i = 1; i <= ell_; ++i) f[cell(p, i)] = r_.min(p);
  return f;
}

State LabelingSpace::maximal() const {
  State f(cells());
  for (Element p = 0; p < poset_.size(); ++p)
    for (int i = 1; i <= ell_; ++i) f[cell(p, i)] = r_.max(p);
  return f;
}

bool LabelingSpace::is_raisable(std::span<const int> f, Element p,
                                int i) const {
  auto next = r_.successor(p, f[cell(p, i)]);
  if (!next) return false;
  for (Element y : poset_.upper_covers(p))
    if (f[cell(y, i)] <= *next) return false;
  return true;
}

bool LabelingSpace::is_lowerable(std::span<const int> f, Element p,
                                 int i) const {
  auto prev = r_.predecessor(p, f[cell(p, i)]);
  if (!prev) return false;
  for (Element z : poset_.lower_covers(p))
    if (f[cell(z, i)] >= *prev) return false;
  return true;
}

void LabelingSpace::bender_knuth(std::span<int> f, int k) const {
  for (Element p = 0; p < poset_.size(); ++p) {
    if (!r_.contains(p, k)) continue;
    auto next = r_.successor(p, k);
    if (!next) continue;
    const int k2 = *next;
    int* fiber = f.data() + cell(p, 1);

    // Free k's are a suffix of the k-block and free k2's a prefix of the
    // k2-block, so the free labels form one contiguous run.
    int begin = 0;
    while (begin < ell_ && fiber[begin] < k) ++begin;
    int mid = begin;
    while (mid < ell_ && fiber[mid] == k) ++mid;
    int end = mid;
    while (end < ell_ && fiber[end] == k2) ++end;
    if (begin == end) continue;

    int free_lo = mid;
    while (free_lo > begin && is_raisable(f, p, free_lo)) --free_lo;
    int free_hi = mid;
    while (free_hi < end && is_lowerable(f, p, free_hi + 1)) ++free_hi;

    const int a = mid - free_lo;
    const int b = free_hi - mid;
    if (a == b) continue;
    for (int j = 0; j < b; ++j) fiber[free_lo + j] = k;
    for (int j = 0; j < a; ++j) fiber[free_lo + b + j] = k2;
  }
#ifndef NDEBUG
  if (!is_valid(f))
    throw InvariantViolation("bender_knuth produced an invalid labeling");
#endif
}

void LabelingSpace::promote(std::span<int> f) const {
  for (int k = min_label_; k < max_label_; ++k) bender_knuth(f, k);
}

State LabelingSpace::bender_knuth_of(std::span<const int> f, int k) const {
  State g(f.begin(), f.end());
  bender_knuth(g, k);
  return g;
}

State LabelingSpace::promotion_of(std::span<const int> f) const {
  State g(f.begin(), f.end());
  promote(g);
  return g;
}

long long label_sum(std::span<const int> f,
                    std::span<const std::size_t> cells) {
  long long s = 0;
  for (std::size_t c : cells) s += f[c];
  return s;
}

int box_count(const LabelingSpace& s, std::span<const int> f, Element p,
              int d) {
  int n = 0;
  for (int i = 1; i <= s.ell(); ++i) n += f[s.cell(p, i)] > d;
  return n;
}

long long xi(const LabelingSpace& s, std::span<const int> f, Element x, int b) {
  const Poset& P = s.poset();
  if (!P.has_coords()) throw SpecError("xi needs a poset with coordinates");
  int base = 0;
  for (int c : P.coords(x)) base += c;
  long long total = 0;
  for (int i = 1; i <= s.ell(); ++i) {
    const int k = f[s.cell(x, i)] - base + 1;
    if (k >= 1 && k <= b) total += k;
  }
  return total;
}

std::vector<int> binary_content(std::span<const int> f, int lo, int hi) {
  std::vector<int> a(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0);
  for (int v : f)
    if (v >= lo && v <= hi) a[v - lo] = 1;
  return a;
}

std::size_t antipodal_cell(const LabelingSpace& s, std::size_t cell) {
  const Element p = static_cast<Element>(cell / s.ell());
  const int i = static_cast<int>(cell % s.ell()) + 1;
  return s.cell(antipode(s.poset(), p), s.ell() + 1 - i);
}

}  // namespace orbitkit
