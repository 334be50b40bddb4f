#include <doctest.h>

#include "oracles.hpp"
#include "orbitkit/restriction.hpp"

using namespace orbitkit;

namespace {

using Sets = std::vector<std::vector<int>>;

// Labels each element can carry in some strict labeling of P drawn from R.
Sets attained(const Poset& p, const Sets& r) {
  Sets out(p.size());
  for (const auto& f : oracle::labelings(p, 1, r))
    for (Element x = 0; x < p.size(); ++x) out[x].push_back(f[x]);
  for (auto& s : out) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return out;
}

}  // namespace

TEST_CASE("global bounds") {
  CHECK(from_global_bound(chain(2), 4).sets() == Sets{{1, 2, 3}, {2, 3, 4}});
  CHECK(from_global_bound(vee(), 3).sets() == Sets{{1, 2}, {2, 3}, {2, 3}});
  const Poset sq = build_poset("prod:2x2");
  CHECK(from_global_bound(sq, 4).sets() ==
        Sets{{1, 2}, {2, 3}, {2, 3}, {3, 4}});
  for (const char* spec : {"chain:3", "V", "prod:2x3", "triangle:3",
                           "staircase:2"}) {
    CAPTURE(spec);
    const Poset p = build_poset(spec);
    const int n = rank_profile(p).top_rank;
    for (int q = n + 1; q <= n + 4; ++q) {
      const auto r = from_global_bound(p, q);
      for (Element x = 0; x < p.size(); ++x)
        CHECK(r.set(x).size() == static_cast<std::size_t>(q - n));
    }
  }
}

TEST_CASE("type A flags") {
  for (auto [a, b] : {std::pair{3, 4}, {2, 2}, {2, 3}, {2, 5}}) {
    const Poset p = product_of_chains(std::vector<int>{a, b});
    const auto r = from_flags(p, typea_flag(p));
    for (Element x = 0; x < p.size(); ++x) {
      const int i = p.coords(x)[0], j = p.coords(x)[1];
      std::vector<int> want;
      for (int k = i + j - 1; k <= 2 * i + j - 1; ++k) want.push_back(k);
      CHECK(r.sets()[x] == want);
    }
  }
  const Poset p = build_poset("prod:2x3");
  CHECK(from_flags(p, std::vector<int>(p.size(), 5)) == from_global_bound(p, 5));
}

TEST_CASE("make_consistent examples") {
  CHECK(make_consistent(Restriction(Sets(3, {1, 2, 3})), chain(3)).sets() ==
        Sets{{1}, {2}, {3}});
  CHECK(make_consistent(Restriction(Sets{{5}, {1, 2, 3, 4, 5, 6, 7, 8, 9}}),
                        chain(2))
            .sets() == Sets{{5}, {6, 7, 8, 9}});
  CHECK_THROWS_AS(make_consistent(Restriction(Sets{{3}, {1, 2, 3}}), chain(2)),
                  InconsistentRestriction);
}

TEST_CASE("consistency agrees with exhaustive search") {
  const std::pair<const char*, Sets> cases[] = {
      {"chain:3", {{1, 4, 6}, {2, 3, 5}, {1, 5, 7}}},
      {"V", {{2, 3, 5}, {1, 2, 4}, {3, 6}}},
      {"prod:2x2", {{1, 2, 5}, {1, 3, 4}, {2, 6}, {3, 4, 5}}},
      {"triangle:2", {{1, 2, 3}, {1, 4}, {0, 2}}},
  };
  for (const auto& [spec, sets] : cases) {
    CAPTURE(spec);
    const Poset p = build_poset(spec);
    const Sets want = attained(p, sets);
    CHECK(make_consistent(Restriction(sets), p).sets() == want);
  }
  for (const char* spec : {"chain:3", "V", "prod:2x2", "triangle:3"}) {
    const Poset p = build_poset(spec);
    const auto r = from_global_bound(p, 5);
    CHECK(make_consistent(r, p) == r);
    CHECK(r.sets() == attained(p, Sets(p.size(), {1, 2, 3, 4, 5})));
  }
}

TEST_CASE("neighbours inside R(p)") {
  const Restriction r(Sets{{2, 3, 5}});
  CHECK(r.successor(0, 3) == 5);
  CHECK(r.predecessor(0, 5) == 3);
  CHECK_FALSE(r.successor(0, 5).has_value());
  CHECK_FALSE(r.predecessor(0, 2).has_value());
  CHECK(r.truncate_max(0) == std::vector<int>{2, 3});
}

TEST_CASE("restriction specs") {
  const Poset p = build_poset("prod:2x2");
  CHECK(parse_restriction(p, "q:4") == from_global_bound(p, 4));
  CHECK(parse_restriction(p, "flags:typea") == from_flags(p, typea_flag(p)));
  CHECK(parse_restriction(p, "bounds:1,1,1,1;4,4,4,4") == from_global_bound(p, 4));
  CHECK_THROWS_AS(parse_restriction(p, "q:x"), SpecError);
  CHECK_THROWS_AS(parse_restriction(p, "bounds:1,1;4,4"), SpecError);
  CHECK_THROWS_AS(parse_restriction(p, "nonsense"), SpecError);
}
