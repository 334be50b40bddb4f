#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "orbitkit/actions.hpp"
#include "orbitkit/dynamics.hpp"
#include "orbitkit/qpartition.hpp"

using namespace orbitkit;

namespace {

const std::pair<const char*, int> kCorpus[] = {
    {"chain:2", 3}, {"prod:2x2", 2}, {"V", 3},          {"V*chain:2", 2},
    {"triangle:3", 1}, {"prod:2x3", 2}, {"staircase:2", 2}};

// Rowmotion by its order-ideal description for ell = 1: the ideal generated
// by the minimal elements outside the current ideal.
State row_on_ideals(const Poset& q, const State& sigma) {
  // sigma(x) = 1 marks the complement of the ideal (the filter).
  const auto le = oracle::closure(q);
  std::vector<Element> mins;
  for (Element x = 0; x < q.size(); ++x) {
    if (sigma[x] == 0) continue;
    bool minimal = true;
    for (Element y = 0; y < q.size(); ++y)
      if (y != x && sigma[y] == 1 && le[y][x]) minimal = false;
    if (minimal) mins.push_back(x);
  }
  State out(q.size(), 1);
  for (Element x = 0; x < q.size(); ++x)
    for (Element m : mins)
      if (le[x][m]) out[x] = 0;
  return out;
}

}  // namespace

TEST_CASE("partition counts") {
  for (int ell = 0; ell <= 4; ++ell)
    CHECK(PartitionSpace(chain(1), ell).enumerate().size() ==
          static_cast<std::size_t>(ell + 1));
  CHECK(PartitionSpace(build_poset("prod:2x2x2"), 2).enumerate().size() == 168);
  for (const auto& [spec, ell] : kCorpus) {
    CAPTURE(spec);
    const Poset q = build_poset(spec);
    CHECK(as_set(PartitionSpace(q, ell).enumerate()) == oracle::partitions(q, ell));
    CHECK(PartitionSpace(q, 1).enumerate().size() == order_ideals(q).ideals.size());
  }
}

TEST_CASE("toggles") {
  const PartitionSpace ps(chain(2), 3);
  State s{0, 2};
  ps.toggle(s, 0);
  CHECK(s == State{2, 2});

  for (const auto& [spec, ell] : kCorpus) {
    CAPTURE(spec);
    const PartitionSpace ps(build_poset(spec), ell);
    const Poset& q = ps.poset();
    const auto all = ps.enumerate();
    for (std::size_t n = 0; n < all.size(); ++n)
      for (Element x = 0; x < q.size(); ++x) {
        State t = all.state(n);
        ps.toggle(t, x);
        CHECK(ps.is_valid(t));
        ps.toggle(t, x);
        CHECK(t == all.state(n));
        for (Element y = 0; y < q.size(); ++y) {
          if (q.covers_pair(x, y) || q.covers_pair(y, x)) continue;
          State a = all.state(n), b = all.state(n);
          ps.toggle(a, x), ps.toggle(a, y);
          ps.toggle(b, y), ps.toggle(b, x);
          CHECK(a == b);
        }
      }
  }
}

TEST_CASE("rowmotion") {
  const PartitionSpace ps(chain(2), 1);
  const auto row = rowmotion_sequence(chain(2));
  CHECK(ps.applied(State{0, 0}, row) == State{1, 1});
  CHECK(ps.applied(State{1, 1}, row) == State{0, 1});
  CHECK(ps.applied(State{0, 1}, row) == State{0, 0});

  for (const auto& [spec, ell] : kCorpus) {
    CAPTURE(spec);
    const Poset q = build_poset(spec);
    const PartitionSpace ideals(q, 1);
    const auto seq = rowmotion_sequence(q);
    for (const auto& s : oracle::partitions(q, 1))
      CHECK(ideals.applied(s, seq) == row_on_ideals(q, s));

    const auto inv = rowmotion_inverse_sequence(q);
    const PartitionSpace pp(q, ell);
    for (const auto& s : oracle::partitions(q, ell))
      CHECK(pp.applied(pp.applied(s, seq), inv) == s);
  }
}

TEST_CASE("rowmotion does not depend on the linear extension") {
  std::mt19937 rng(20240611);
  for (const auto& [spec, ell] : kCorpus) {
    CAPTURE(spec);
    const Poset q = build_poset(spec);
    const PartitionSpace ps(q, ell);
    const auto all = ps.enumerate();
    const auto base = rowmotion_sequence(q);
    std::vector<State> want;
    for (std::size_t n = 0; n < all.size(); ++n) want.push_back(ps.applied(all[n], base));
    for (int trial = 0; trial < 100; ++trial) {
      // Random topological order: pick uniformly among available minima.
      std::vector<int> indeg(q.size(), 0);
      for (auto [lo, hi] : q.covers()) ++indeg[hi];
      std::vector<Element> ready, ext;
      for (Element x = 0; x < q.size(); ++x)
        if (!indeg[x]) ready.push_back(x);
      while (!ready.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        const std::size_t i = pick(rng);
        const Element x = ready[i];
        ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
        ext.push_back(x);
        for (Element y : q.upper_covers(x))
          if (--indeg[y] == 0) ready.push_back(y);
      }
      const auto seq = rowmotion_sequence(q, ext);
      for (std::size_t n = 0; n < all.size(); ++n)
        CHECK(ps.applied(all[n], seq) == want[n]);
    }
  }
}

TEST_CASE("rowmotion orders") {
  const Poset v2 = build_poset("V*chain:2");
  const PartitionSpace a(v2, 1);
  auto set = a.enumerate();
  auto d = orbit_decomposition(set, toggle_action(a, rowmotion_sequence(v2)));
  CHECK(all_sizes_divide(d, 8));

  const Poset s2 = staircase(2);
  const PartitionSpace b(s2, 2);
  set = b.enumerate();
  d = orbit_decomposition(set, toggle_action(b, rowmotion_sequence(s2)));
  CHECK(order_of(d) == 4);
}

TEST_CASE("hyperplane promotion") {
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    const Poset q = product_of_chains(std::vector<int>{a, b});
    const PartitionSpace ps(q, 2);
    const auto set = ps.enumerate();
    const auto row = orbit_decomposition(set, toggle_action(ps, rowmotion_sequence(q)));
    const auto pro = orbit_decomposition(
        set, toggle_action(ps, hyperplane_sequence(q, identity_projection(q, {-1, -1}))));
    CHECK(row.histogram() == pro.histogram());
  }

  // Projections must send covers to unit steps and v must be a sign vector.
  const Poset q = build_poset("prod:2x2");
  CHECK_THROWS_AS(identity_projection(q, {1, 2}), SpecError);
  CHECK_THROWS_AS(identity_projection(q, {1}), SpecError);
  LatticeProjection stretched{"x2", {}, {1, 1}};
  for (const auto& c : q.all_coords()) stretched.image.push_back({2 * c[0], c[1]});
  CHECK_THROWS_AS(validate_projection(q, stretched), SpecError);

  // Gaps between occupied layers contribute nothing.
  LatticeProjection spread{"spread", {{0}, {1}}, {1}};
  const Poset c2 = chain(2);
  CHECK(hyperplane_sequence(c2, spread) == ToggleSequence{1, 0});
  Conventions rev;
  rev.reverse_hyperplane_sweep = true;
  CHECK(hyperplane_sequence(c2, spread, rev) == ToggleSequence{0, 1});

  // One step from the zero partition, evaluated toggle by toggle.
  const PartitionSpace ps(q, 2);
  const State zero(q.size(), 0);
  CHECK(ps.applied(zero, hyperplane_sequence(q, identity_projection(q, {-1, -1}))) ==
        State{0, 0, 0, 2});
  CHECK(ps.applied(zero, hyperplane_sequence(q, identity_projection(q, {1, 1}))) ==
        State{2, 2, 2, 2});
}

TEST_CASE("distribution complement on [a]x[c]") {
  for (auto [a, c, ell] : {std::tuple{2, 2, 2}, {2, 3, 2}, {3, 3, 1}}) {
    CAPTURE(a);
    CAPTURE(c);
    const Poset q = product_of_chains(std::vector<int>{a, c});
    const PartitionSpace ps(q, ell);
    const auto set = ps.enumerate();
    for (std::vector<int> v : {std::vector<int>{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
      const auto d = orbit_decomposition(
          set, toggle_action(ps, hyperplane_sequence(q, identity_projection(q, v))));
      for (Element x = 0; x < q.size(); ++x) {
        const Element y = antipode(q, x);
        const auto witness = complement_law_witness(
            set, d, a + c, [x](std::span<const int> s) { return s[x]; },
            [y](std::span<const int> s) { return s[y]; }, ell);
        CHECK_FALSE(witness.has_value());
      }
    }
  }
}

TEST_CASE("graded Diff on the zero partition") {
  // chain:2, q = 4: P x [2] with sigma = 0 everywhere. Hyperplane H_k holds
  // (p, i) with i = 4 - 1 - k + rank(p).
  const auto d = diff_graded(chain(2), 4, 1, State(4, 0));
  CHECK(d == std::vector<int>{1, 1, 0, 0});
}
