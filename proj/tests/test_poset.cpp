#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/poset.hpp"

using namespace orbitkit;

namespace {

const char* const kCorpus[] = {
    "chain:1",     "chain:4",        "prod:2x2",   "prod:2x3x2",
    "V",           "V*chain:2",      "triangle:2", "triangle:3",
    "staircase:2", "staircase:3",    "propeller:1", "propeller:2",
    "J^2:prod:3x2", "(V*chain:2)*chain:1"};

Element at(const Poset& p, std::vector<int> c) { return *p.find_coords(c); }

}  // namespace

TEST_CASE("poset strings build the expected posets") {
  const Poset c3 = build_poset("chain:3");
  CHECK(c3.size() == 3);
  CHECK(c3.covers().size() == 2);
  const auto rp = rank_profile(c3);
  CHECK(rp.is_graded);
  CHECK(rp.top_rank == 2);

  const Poset t2 = build_poset("triangle:2");
  CHECK(t2.size() == 3);
  CHECK(find_isomorphism(t2, dual(vee())).has_value());
  CHECK_FALSE(find_isomorphism(t2, vee()).has_value());

  CHECK(build_poset("propeller:1").size() == oracle::ideal_count(build_poset("prod:2x2")));
  CHECK(build_poset("propeller:1").size() == 6);

  CHECK_THROWS_AS(build_poset("bogus"), SpecError);
  CHECK_THROWS_AS(build_poset("chain:"), SpecError);
  CHECK_THROWS_AS(build_poset("chain:0"), SpecError);
  CHECK_THROWS_AS(build_poset("(chain:2"), SpecError);
}

TEST_CASE("rank profiles") {
  CHECK(rank_profile(chain(4)).top_rank == 3);
  const auto v = rank_profile(vee());
  CHECK(v.is_graded);
  CHECK(v.top_rank == 1);

  const Poset jv = build_poset("J^1:V");
  CHECK(jv.size() == 5);
  CHECK(jv.size() == oracle::ideal_count(vee()));
  CHECK(rank_profile(jv).is_graded);

  const Poset ungraded = Poset::from_covers(4, {{0, 1}, {1, 2}, {0, 3}});
  CHECK_FALSE(rank_profile(ungraded).is_graded);
}

TEST_CASE("products") {
  const Poset sq = product(chain(2), chain(2));
  CHECK(sq.size() == 4);
  CHECK(sq.covers().size() == 4);
  CHECK(find_isomorphism(product(vee(), chain(1)), vee()).has_value());
  const Poset v2 = product(vee(), chain(2));
  CHECK(v2.size() == 6);
  CHECK(order_ideals(v2).ideals.size() == oracle::ideal_count(v2));

  const Poset a = product(product(vee(), chain(2)), chain(3));
  const Poset b = product(vee(), product(chain(2), chain(3)));
  CHECK(find_isomorphism(a, b).has_value());
}

TEST_CASE("order ideals match subset enumeration") {
  CHECK(order_ideals(chain(2)).ideals.size() == 3);
  CHECK(order_ideals(build_poset("prod:2x2")).ideals.size() == 6);
  CHECK(order_ideals(vee()).ideals.size() == 5);
  for (const char* spec : kCorpus) {
    const Poset p = build_poset(spec);
    if (p.size() > 16) continue;
    CAPTURE(spec);
    CHECK(order_ideals(p).ideals.size() == oracle::ideal_count(p));
  }
}

TEST_CASE("J(P) is a lattice under union and intersection") {
  for (const char* spec : {"V", "prod:2x2", "triangle:3", "V*chain:2"}) {
    CAPTURE(spec);
    const auto lat = order_ideals(build_poset(spec));
    std::set<std::vector<std::uint8_t>> all;
    for (const auto& i : lat.ideals) all.insert(i.members());
    CHECK(lat.ideals.front().size() == 0);
    CHECK(lat.ideals.back().size() == lat.ideals.back().universe());
    for (const auto& x : lat.ideals)
      for (const auto& y : lat.ideals) {
        auto u = x.members(), m = x.members();
        for (std::size_t k = 0; k < u.size(); ++k) {
          u[k] = x.members()[k] | y.members()[k];
          m[k] = x.members()[k] & y.members()[k];
        }
        CHECK(all.count(u));
        CHECK(all.count(m));
      }
  }
}

TEST_CASE("covers are the transitive reduction of their closure") {
  for (const char* spec : kCorpus) {
    CAPTURE(spec);
    const Poset p = build_poset(spec);
    const std::set<Cover> have(p.covers().begin(), p.covers().end());
    CHECK(have == oracle::reduction(p));
    const auto le = oracle::closure(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) CHECK(p.less_equal(x, y) == le[x][y]);
  }
}

TEST_CASE("coordinates agree with the order") {
  for (const char* spec : {"prod:2x3x2", "triangle:3", "staircase:3", "V*chain:2"}) {
    CAPTURE(spec);
    const Poset p = build_poset(spec);
    if (!p.has_coords()) continue;
    for (auto [lo, hi] : p.covers()) {
      const auto &a = p.coords(lo), &b = p.coords(hi);
      for (std::size_t d = 0; d < a.size(); ++d) CHECK(a[d] <= b[d]);
    }
  }
}

TEST_CASE("relations that are not acyclic are rejected") {
  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), SpecError);
  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 2}}), SpecError);
  CHECK_THROWS_AS(Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}), SpecError);
  const Poset r = Poset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(r.covers().size() == 2);
}

TEST_CASE("linear extensions") {
  CHECK(linear_extension(chain(3)) == std::vector<Element>{0, 1, 2});
  CHECK(linear_extension(vee()) == std::vector<Element>{0, 1, 2});
  for (const char* spec : kCorpus) {
    CAPTURE(spec);
    const Poset p = build_poset(spec);
    const auto ext = linear_extension(p);
    std::vector<std::size_t> pos(p.size());
    for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
    for (auto [lo, hi] : p.covers()) CHECK(pos[lo] < pos[hi]);
    CHECK(is_linear_extension(p, ext));
  }
  CHECK_FALSE(is_linear_extension(chain(3), std::vector<Element>{1, 0, 2}));
}

TEST_CASE("antipodes") {
  const Poset p23 = build_poset("prod:2x3");
  CHECK(antipode(p23, at(p23, {1, 1})) == at(p23, {2, 3}));
  const Poset p232 = build_poset("prod:2x3x2");
  CHECK(antipode(p232, at(p232, {1, 2, 1})) == at(p232, {2, 2, 2}));
  const Poset p33 = build_poset("prod:3x3");
  CHECK(antipode(p33, at(p33, {2, 2})) == at(p33, {2, 2}));
  CHECK_THROWS_AS(antipode(vee(), 0), SpecError);
}

TEST_CASE("minuscule posets") {
  CHECK(coxeter_number("prod:3x2") == 5);
  CHECK(coxeter_number("cayley-moufang") == 12);
  CHECK(coxeter_number("propeller:1") == 6);
  CHECK(coxeter_number("staircase:3") == 6);
  CHECK(coxeter_number("freudenthal") == 18);
  for (const char* spec : {"prod:3x2", "staircase:3", "propeller:2",
                           "cayley-moufang", "freudenthal"}) {
    CAPTURE(spec);
    CHECK(rank_profile(build_poset(spec)).is_graded);
  }
  CHECK(build_poset("cayley-moufang").size() == 16);
  CHECK(build_poset("freudenthal").size() == 27);
}

TEST_CASE("triangles") {
  for (int n = 1; n <= 4; ++n) {
    const Poset t = triangle(n);
    CHECK(t.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(rank_profile(t).is_graded);
    CHECK(rank_profile(t).top_rank == n - 1);
  }
}
