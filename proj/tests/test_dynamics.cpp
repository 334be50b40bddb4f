#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "orbitkit/dynamics.hpp"
#include "orbitkit/errors.hpp"

using namespace orbitkit;

namespace {

StateTable binary_words(std::size_t n) {
  StateTable t(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    State w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = mask >> (n - 1 - i) & 1;
    t.insert(w);
  }
  return t;
}

void rotate_left(std::span<const int> in, std::span<int> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[(i + 1) % in.size()];
}

std::vector<int> word(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("StateTable keeps insertion order and dedups") {
  StateTable t(2);
  CHECK(t.insert(State{1, 2}) == 0);
  CHECK(t.insert(State{2, 1}) == 1);
  CHECK(t.insert(State{1, 2}) == 0);
  CHECK(t.size() == 2);
  CHECK(t.find(State{2, 1}) == std::optional<std::size_t>(1));
  CHECK_FALSE(t.contains(State{0, 0}));
  for (int i = 0; i < 5000; ++i) t.insert(State{i, -i});
  CHECK(t.size() == 5002);
  CHECK(t.state(1) == State{2, 1});
  CHECK(t.find(State{4999, -4999}).has_value());

  StateTable empty_words(0);
  CHECK(empty_words.empty());
  CHECK(empty_words.insert(State{}) == 0);
  CHECK(empty_words.insert(State{}) == 0);
  CHECK(empty_words.size() == 1);
}

TEST_CASE("orbits of rotation on binary words") {
  const auto words = binary_words(4);
  const auto d = orbit_decomposition(words, rotate_left);
  CHECK(d.histogram() == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}, {4, 3}});
  CHECK(order_of(d) == 4);
  CHECK(all_sizes_divide(d, 4));
  CHECK_FALSE(all_sizes_divide(d, 2));
  const auto start = *words.find(State{0, 0, 0, 1});
  CHECK(word(words[d.orbits[d.orbit_of[start]].front()]) == State{0, 0, 0, 1});
  CHECK(word(words[d.advance(start, 1)]) == State{0, 0, 1, 0});
  CHECK(d.advance(start, 4) == start);
  for (std::size_t i = 0; i < words.size(); ++i)
    CHECK(d.orbits[d.orbit_of[i]][d.position[i]] == i);
}

TEST_CASE("identity has singleton orbits") {
  const auto words = binary_words(3);
  const auto d = orbit_decomposition(
      words, [](std::span<const int> in, std::span<int> out) {
        std::copy(in.begin(), in.end(), out.begin());
      });
  CHECK(d.histogram() == std::map<std::size_t, std::size_t>{{1, 8}});
  CHECK(order_of(d) == 1);
}

TEST_CASE("orbit decomposition rejects non-bijections") {
  const auto words = binary_words(3);
  CHECK_THROWS_AS(orbit_decomposition(words,
                                      [](std::span<const int>, std::span<int> out) {
                                        std::fill(out.begin(), out.end(), 0);
                                      }),
                  InvariantViolation);
  CHECK_THROWS_AS(orbit_decomposition(words,
                                      [](std::span<const int>, std::span<int> out) {
                                        std::fill(out.begin(), out.end(), 2);
                                      }),
                  InvariantViolation);
}

TEST_CASE("worker count does not change the decomposition") {
  const auto words = binary_words(10);
  const auto one = orbit_decomposition(words, rotate_left, 1);
  const auto four = orbit_decomposition(words, rotate_left, 4);
  CHECK(one.next == four.next);
  CHECK(one.orbits == four.orbits);
  CHECK(one.histogram() == std::map<std::size_t, std::size_t>{
                               {1, 2}, {2, 1}, {5, 6}, {10, 99}});
}

TEST_CASE("homomesy") {
  const auto words = binary_words(4);
  const auto d = orbit_decomposition(words, rotate_left);

  const auto diff01 = homomesy_check(words, d, [](std::span<const int> s) {
    return static_cast<long long>(s[0] - s[1]);
  });
  CHECK(diff01.homomesic);
  CHECK(diff01.c == Rational(0));

  const auto constant = homomesy_check(words, d, [](std::span<const int>) { return 7LL; });
  CHECK(constant.homomesic);
  CHECK(constant.c == Rational(7));

  const auto first = homomesy_check(words, d, [](std::span<const int> s) {
    return static_cast<long long>(s[0]);
  });
  CHECK_FALSE(first.homomesic);
  CHECK_FALSE(first.c.has_value());
  CHECK(first.averages.size() == d.orbits.size());
  CHECK(std::count(first.averages.begin(), first.averages.end(), Rational(1, 4)) == 1);

  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("distributions and the complement law") {
  const auto words = binary_words(4);
  const auto d = orbit_decomposition(words, rotate_left);
  const auto head = [](std::span<const int> s) { return static_cast<long long>(s[0]); };
  const auto tail = [](std::span<const int> s) { return 1LL - s[0]; };
  const auto start = *words.find(State{0, 0, 0, 1});
  CHECK(distribution(words, d, start, head, 4) == std::vector<long long>{0, 0, 0, 1});
  CHECK(distribution(words, d, start, head, 6) == std::vector<long long>{0, 0, 0, 0, 0, 1});
  CHECK_FALSE(complement_law_witness(words, d, 4, head, tail, 1).has_value());
  CHECK(complement_law_witness(words, d, 4, head, tail, 0) == std::optional<std::size_t>(0));
}

TEST_CASE("resonance") {
  const auto words = binary_words(4);
  const auto d = orbit_decomposition(words, rotate_left);
  const auto id = [](std::span<const int> s) { return word(s); };

  const auto ok = resonance_check(words, d, id, 4, "id");
  CHECK(ok.verified);
  CHECK_FALSE(ok.degenerate);
  CHECK(ok.omega == 4);

  const auto reversed = resonance_check(words, d, id, 4, "id", -1);
  CHECK_FALSE(reversed.verified);
  CHECK(reversed.counterexample.has_value());

  const auto constant = resonance_check(
      words, d, [](std::span<const int>) { return std::vector<int>{1, 1, 1, 1}; }, 4);
  CHECK_FALSE(constant.verified);
  CHECK(constant.degenerate);

  CHECK_THROWS_AS(resonance_check(words, d, id, 4, "id", 2), SpecError);
  const auto three = resonance_check(words, d, id, 4, "id", 3);
  CHECK_FALSE(three.verified);
}

TEST_CASE("equivariance") {
  const auto words = binary_words(4);
  const auto same = equivariance_check(words, rotate_left, words, rotate_left,
                                       [](std::span<const int> s) { return word(s); });
  CHECK(same.bijective);
  CHECK(same.equivariant);
  CHECK(same.checked == 16);

  const auto complement = equivariance_check(
      words, rotate_left, words, rotate_left, [](std::span<const int> s) {
        State out(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) out[i] = 1 - s[i];
        return out;
      });
  CHECK(complement.bijective);
  CHECK(complement.equivariant);

  const auto reverse = [](std::span<const int> s) { return State(s.rbegin(), s.rend()); };
  const auto rev = equivariance_check(words, rotate_left, words, rotate_left, reverse, 3);
  CHECK(rev.bijective);
  CHECK_FALSE(rev.equivariant);
  CHECK(rev.counterexample.has_value());

  const auto collapse = equivariance_check(words, rotate_left, words, rotate_left,
                                           [](std::span<const int>) { return State(4, 0); });
  CHECK_FALSE(collapse.bijective);
}

TEST_CASE("parallel_for covers the range and rethrows") {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), 4, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) ++hit[i];
  });
  CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  std::atomic<int> calls = 0;
  parallel_for(0, 4, [&](std::size_t, std::size_t) { ++calls; });
  CHECK(calls <= 1);
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t lo, std::size_t) {
                                 if (lo == 0) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
