#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/state_table.hpp"

namespace orbitkit {

using Rational = boost::rational<long long>;

/// A bijection on states; writes the image of `in` into `out`. Must be safe
/// to call concurrently.
using Action = std::function<void(std::span<const int> in, std::span<int> out)>;
/// An integer statistic on states.
using Statistic = std::function<long long(std::span<const int>)>;
/// A map into cyclic words.
using Projection = std::function<std::vector<int>(std::span<const int>)>;
/// A map between state sets.
using StateMap = std::function<State(std::span<const int>)>;

/// Orbits of a bijection on an enumerated set.
///
/// `next[i]` is the index of the image of state i. Each orbit is listed in
/// action order starting from its representative, the lexicographically
/// smallest state in it. Orbits are sorted by representative, so the result
/// does not depend on enumeration order or worker count.
struct OrbitDecomposition {
  std::string set_name;
  std::string action_name;
  std::vector<std::size_t> next;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_of;
  std::vector<std::size_t> position;  // position of each state in its orbit

  std::vector<std::size_t> sizes() const;
  /// size -> number of orbits of that size.
  std::map<std::size_t, std::size_t> histogram() const;
  /// The state reached after `steps` applications.
  std::size_t advance(std::size_t state, std::size_t steps) const;
};

/// Throws InvariantViolation when the action leaves the set or is not
/// injective on it.
OrbitDecomposition orbit_decomposition(const StateTable& set,
                                       const Action& action,
                                       unsigned workers = 1,
                                       std::string set_name = {},
                                       std::string action_name = {});

/// lcm of the orbit sizes.
unsigned long long order_of(const OrbitDecomposition& d);
/// Every orbit size divides n.
bool all_sizes_divide(const OrbitDecomposition& d, unsigned long long n);

struct HomomesyReport {
  std::string statistic;
  std::vector<Rational> averages;  // one per orbit, in orbit order
  bool homomesic = false;
  std::optional<Rational> c;
};

HomomesyReport homomesy_check(const StateTable& set,
                              const OrbitDecomposition& d,
                              const Statistic& stat, std::string name = {});

struct ResonanceReport {
  std::string projection;
  int omega = 0;
  int shift = 1;
  bool verified = false;
  /// Rotation fixes every word in the image, so the cyclic action on the
  /// image is trivial and resonance is not established.
  bool degenerate = false;
  std::optional<std::size_t> counterexample;
};

/// Checks proj(g x) = c(proj(x)) for every state x, where c rotates words of
/// length omega left by `shift` places (negative: right). c must have order
/// omega.
ResonanceReport resonance_check(const StateTable& set,
                                const OrbitDecomposition& d,
                                const Projection& proj, int omega,
                                std::string name = {}, int shift = 1);

struct EquivarianceReport {
  bool bijective = false;
  bool equivariant = false;
  std::size_t checked = 0;
  std::optional<std::size_t> counterexample;  // index into the source set
  std::string detail;
};

/// Checks that `map` is a bijection a -> b and map o act_a = act_b o map.
EquivarianceReport equivariance_check(const StateTable& a, const Action& act_a,
                                      const StateTable& b, const Action& act_b,
                                      const StateMap& map,
                                      unsigned workers = 1);

/// Dist over `count` steps: the multiset of stat(g^i x), i = 0..count-1.
std::vector<long long> distribution(const StateTable& set,
                                    const OrbitDecomposition& d,
                                    std::size_t state, const Statistic& stat,
                                    std::size_t count);

/// Verifies Dist_y(x) = {c - m : m in Dist_x(x)} for every state x. Returns
/// the first failing state.
std::optional<std::size_t> complement_law_witness(
    const StateTable& set, const OrbitDecomposition& d, std::size_t count,
    const Statistic& stat_x, const Statistic& stat_y, long long c);

/// Splits [0, n) into contiguous chunks and runs chunk(lo, hi) for each,
/// one thread per chunk. Rethrows the first exception raised by a chunk.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& chunk);

std::string to_string(const Rational& r);

}  // namespace orbitkit
