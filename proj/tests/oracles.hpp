#pragma once

// Brute-force reference implementations. Each one works from a definition
// directly and shares no code with the library beyond Poset's cover lists.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "orbitkit/poset.hpp"
#include "orbitkit/state_table.hpp"

namespace oracle {

using orbitkit::Element;
using orbitkit::Poset;
using orbitkit::State;

// up[x][y] == true iff x <= y, by repeated relaxation over covers.
inline std::vector<std::vector<bool>> closure(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) le[x][x] = true;
  for (auto [a, b] : p.covers()) le[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  return le;
}

// Covers recomputed from the closure: x < y with nothing strictly between.
inline std::set<orbitkit::Cover> reduction(const Poset& p) {
  const auto le = closure(p);
  const std::size_t n = p.size();
  std::set<orbitkit::Cover> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !le[x][y]) continue;
      bool between = false;
      for (std::size_t z = 0; z < n && !between; ++z)
        between = z != x && z != y && le[x][z] && le[z][y];
      if (!between) out.insert({Element(x), Element(y)});
    }
  return out;
}

// Down-closed subsets, found by testing all 2^n subsets.
inline std::size_t ideal_count(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ok = true;
    for (auto [a, b] : p.covers())
      if ((mask >> b & 1) && !(mask >> a & 1)) ok = false;
    count += ok;
  }
  return count;
}

// Every map P -> {lo..hi}, filtered by a predicate.
inline void for_each_map(std::size_t n, int lo, int hi,
                         const std::function<void(const State&)>& visit) {
  State s(n, lo);
  if (n == 0) {
    visit(s);
    return;
  }
  while (true) {
    visit(s);
    std::size_t i = 0;
    while (i < n && s[i] == hi) s[i++] = lo;
    if (i == n) return;
    ++s[i];
  }
}

// Order-preserving maps Q -> {0..ell}.
inline std::set<State> partitions(const Poset& q, int ell) {
  std::set<State> out;
  for_each_map(q.size(), 0, ell, [&](const State& s) {
    for (auto [a, b] : q.covers())
      if (s[a] > s[b]) return;
    out.insert(s);
  });
  return out;
}

// Labelings of P x [ell] with f(p, i) at p * ell + i - 1 drawn from sets[p].
inline std::set<State> labelings(const Poset& p, int ell,
                                 const std::vector<std::vector<int>>& sets) {
  int lo = 1 << 30, hi = -(1 << 30);
  for (const auto& s : sets)
    for (int k : s) lo = std::min(lo, k), hi = std::max(hi, k);
  std::set<State> out;
  const std::size_t n = p.size();
  for_each_map(n * ell, lo, hi, [&](const State& f) {
    for (std::size_t x = 0; x < n; ++x)
      for (int i = 0; i < ell; ++i) {
        const int v = f[x * ell + i];
        if (!std::binary_search(sets[x].begin(), sets[x].end(), v)) return;
        if (i > 0 && f[x * ell + i - 1] > v) return;
      }
    for (auto [a, b] : p.covers())
      for (int i = 0; i < ell; ++i)
        if (f[a * ell + i] >= f[b * ell + i]) return;
    out.insert(f);
  });
  return out;
}

// Semistandard tableaux of shape a x b with entries <= k, rows first.
inline std::set<State> ssyt(int a, int b, int k) {
  std::set<State> out;
  for_each_map(static_cast<std::size_t>(a * b), 1, k, [&](const State& t) {
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < b; ++c) {
        if (c + 1 < b && t[r * b + c] > t[r * b + c + 1]) return;
        if (r + 1 < a && t[r * b + c] >= t[(r + 1) * b + c]) return;
      }
    out.insert(t);
  });
  return out;
}

// Classical promotion on a rectangular tableau with entries <= k: delete the
// 1s, slide the holes out by jeu de taquin, subtract 1, fill holes with k.
inline State jdt_promotion(State t, int a, int b, int k) {
  constexpr int kHole = 0;
  auto at = [&](int r, int c) -> int& { return t[r * b + c]; };
  std::vector<int> holes;
  for (int c = 0; c < b; ++c)
    if (at(0, c) == 1) {
      at(0, c) = kHole;
      holes.push_back(c);
    }
  for (auto it = holes.rbegin(); it != holes.rend(); ++it) {
    int r = 0, c = *it;
    while (true) {
      // Holes already slid out count as outside the shape.
      const bool right = c + 1 < b && at(r, c + 1) != kHole;
      const bool down = r + 1 < a && at(r + 1, c) != kHole;
      if (!right && !down) break;
      // Below wins ties so columns stay strict.
      if (down && (!right || at(r + 1, c) <= at(r, c + 1))) {
        at(r, c) = at(r + 1, c);
        ++r;
      } else {
        at(r, c) = at(r, c + 1);
        ++c;
      }
      at(r, c) = kHole;
    }
  }
  for (int& v : t) v = v == kHole ? k : v - 1;
  return t;
}

}  // namespace oracle
