#include "orbitkit/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

std::string render(std::span<const int> s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

bool lex_less(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& chunk) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2 * workers) {
    chunk(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(n, w * step);
    const std::size_t hi = std::min(n, lo + step);
    pool.emplace_back([&, w, lo, hi] {
      try {
        chunk(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<std::size_t> OrbitDecomposition::sizes() const {
  std::vector<std::size_t> s;
  s.reserve(orbits.size());
  for (const auto& o : orbits) s.push_back(o.size());
  return s;
}

std::map<std::size_t, std::size_t> OrbitDecomposition::histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (const auto& o : orbits) ++h[o.size()];
  return h;
}

std::size_t OrbitDecomposition::advance(std::size_t state,
                                        std::size_t steps) const {
  const auto& o = orbits[orbit_of[state]];
  return o[(position[state] + steps) % o.size()];
}

OrbitDecomposition orbit_decomposition(const StateTable& set,
                                       const Action& action, unsigned workers,
                                       std::string set_name,
                                       std::string action_name) {
  const std::size_t n = set.size();
  OrbitDecomposition d;
  d.set_name = std::move(set_name);
  d.action_name = std::move(action_name);
  d.next.assign(n, 0);

  parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
    State out(set.width());
    for (std::size_t i = lo; i < hi; ++i) {
      action(set[i], out);
      auto j = set.find(out);
      if (!j)
        throw InvariantViolation("action maps " + render(set[i]) +
                                 " outside the set to " + render(out));
      d.next[i] = *j;
    }
  });

  std::vector<std::uint8_t> hit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (hit[d.next[i]])
      throw InvariantViolation("action is not injective; two states map to " +
                               render(set[d.next[i]]));
    hit[d.next[i]] = 1;
  }

  d.orbit_of.assign(n, static_cast<std::size_t>(-1));
  d.position.assign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (d.orbit_of[s] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> cyc;
    std::size_t rep = s;
    for (std::size_t x = s;;) {
      d.orbit_of[x] = 0;
      cyc.push_back(x);
      if (lex_less(set[x], set[rep])) rep = x;
      x = d.next[x];
      if (x == s) break;
    }
    auto it = std::find(cyc.begin(), cyc.end(), rep);
    std::rotate(cyc.begin(), it, cyc.end());
    d.orbits.push_back(std::move(cyc));
  }
  std::sort(d.orbits.begin(), d.orbits.end(),
            [&](const auto& a, const auto& b) {
              return lex_less(set[a.front()], set[b.front()]);
            });
  for (std::size_t o = 0; o < d.orbits.size(); ++o)
    for (std::size_t p = 0; p < d.orbits[o].size(); ++p) {
      d.orbit_of[d.orbits[o][p]] = o;
      d.position[d.orbits[o][p]] = p;
    }
  return d;
}

unsigned long long order_of(const OrbitDecomposition& d) {
  unsigned long long l = 1;
  for (const auto& o : d.orbits) l = std::lcm(l, o.size());
  return l;
}

bool all_sizes_divide(const OrbitDecomposition& d, unsigned long long n) {
  for (const auto& o : d.orbits)
    if (n % o.size() != 0) return false;
  return true;
}

HomomesyReport homomesy_check(const StateTable& set,
                              const OrbitDecomposition& d,
                              const Statistic& stat, std::string name) {
  HomomesyReport r;
  r.statistic = std::move(name);
  for (const auto& o : d.orbits) {
    long long total = 0;
    for (std::size_t x : o) total += stat(set[x]);
    r.averages.emplace_back(total, static_cast<long long>(o.size()));
  }
  r.homomesic = std::adjacent_find(r.averages.begin(), r.averages.end(),
                                   std::not_equal_to<>()) == r.averages.end();
  if (r.homomesic && !r.averages.empty()) r.c = r.averages.front();
  return r;
}

ResonanceReport resonance_check(const StateTable& set,
                                const OrbitDecomposition& d,
                                const Projection& proj, int omega,
                                std::string name, int shift) {
  ResonanceReport r;
  r.projection = std::move(name);
  r.omega = omega;
  r.shift = shift;
  if (omega < 1 || std::gcd(((shift % omega) + omega) % omega, omega) != 1)
    throw SpecError("rotation by " + std::to_string(shift) +
                    " does not have order " + std::to_string(omega));
  const int step = ((shift % omega) + omega) % omega;
  bool nontrivial = false;
  for (std::size_t x = 0; x < set.size(); ++x) {
    auto w = proj(set[x]);
    if (static_cast<int>(w.size()) != omega) {
      r.counterexample = x;
      return r;
    }
    auto rotated = w;
    if (!rotated.empty())
      std::rotate(rotated.begin(), rotated.begin() + step, rotated.end());
    if (rotated != w) nontrivial = true;
    if (proj(set[d.next[x]]) != rotated) {
      r.counterexample = x;
      return r;
    }
  }
  r.degenerate = !nontrivial;
  r.verified = nontrivial;
  return r;
}

EquivarianceReport equivariance_check(const StateTable& a, const Action& act_a,
                                      const StateTable& b, const Action& act_b,
                                      const StateMap& map, unsigned workers) {
  EquivarianceReport r;
  const std::size_t n = a.size();
  if (n != b.size()) {
    r.detail = "sets differ in size: " + std::to_string(n) + " vs " +
               std::to_string(b.size());
    return r;
  }
  std::vector<std::size_t> image(n);
  std::atomic<std::size_t> bad{n};
  parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto j = b.find(map(a[i]));
      if (!j) {
        std::size_t cur = bad.load();
        while (i < cur && !bad.compare_exchange_weak(cur, i)) {
        }
        return;
      }
      image[i] = *j;
    }
  });
  if (bad.load() != n) {
    r.counterexample = bad.load();
    r.detail = "map sends " + render(a[bad.load()]) + " outside the target";
    return r;
  }
  std::vector<std::uint8_t> hit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (hit[image[i]]) {
      r.counterexample = i;
      r.detail = "map is not injective at " + render(a[i]);
      return r;
    }
    hit[image[i]] = 1;
  }
  r.bijective = true;

  std::atomic<std::size_t> first{n};
  parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
    State ga(a.width()), gb(b.width());
    for (std::size_t i = lo; i < hi; ++i) {
      act_a(a[i], ga);
      act_b(b[image[i]], gb);
      if (map(ga) != gb) {
        std::size_t cur = first.load();
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  r.checked = n;
  if (first.load() != n) {
    r.counterexample = first.load();
    r.detail = "map o action differs from action o map at " +
               render(a[first.load()]);
    return r;
  }
  r.equivariant = true;
  return r;
}

std::vector<long long> distribution(const StateTable& set,
                                    const OrbitDecomposition& d,
                                    std::size_t state, const Statistic& stat,
                                    std::size_t count) {
  std::vector<long long> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(stat(set[d.advance(state, i)]));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> complement_law_witness(
    const StateTable& set, const OrbitDecomposition& d, std::size_t count,
    const Statistic& stat_x, const Statistic& stat_y, long long c) {
  for (std::size_t s = 0; s < set.size(); ++s) {
    auto dx = distribution(set, d, s, stat_x, count);
    auto dy = distribution(set, d, s, stat_y, count);
    for (auto& m : dx) m = c - m;
    std::sort(dx.begin(), dx.end());
    if (dx != dy) return s;
  }
  return std::nullopt;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace orbitkit
