#include "orbitkit/restriction.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "orbitkit/errors.hpp"

namespace orbitkit {

Restriction::Restriction(std::vector<std::vector<int>> sets)
    : sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

bool Restriction::contains(Element p, int k) const {
  return std::binary_search(sets_[p].begin(), sets_[p].end(), k);
}

std::optional<int> Restriction::successor(Element p, int k) const {
  auto it = std::upper_bound(sets_[p].begin(), sets_[p].end(), k);
  if (it == sets_[p].end()) return std::nullopt;
  return *it;
}

std::optional<int> Restriction::predecessor(Element p, int k) const {
  auto it = std::lower_bound(sets_[p].begin(), sets_[p].end(), k);
  if (it == sets_[p].begin()) return std::nullopt;
  return *std::prev(it);
}

std::vector<int> Restriction::truncate_max(Element p) const {
  if (sets_[p].empty()) return {};
  return {sets_[p].begin(), sets_[p].end() - 1};
}

int Restriction::global_min() const {
  int m = sets_.at(0).front();
  for (const auto& s : sets_) m = std::min(m, s.front());
  return m;
}

int Restriction::global_max() const {
  int m = sets_.at(0).back();
  for (const auto& s : sets_) m = std::max(m, s.back());
  return m;
}

Restriction make_consistent(Restriction r, const Poset& p) {
  if (r.size() != p.size())
    throw SpecError("restriction has " + std::to_string(r.size()) +
                    " sets for a poset of " + std::to_string(p.size()) +
                    " elements");
  auto& sets = r.sets_;
  for (Element x = 0; x < p.size(); ++x)
    if (sets[x].empty())
      throw InconsistentRestriction("R(" + std::to_string(x) + ") is empty");

  // Label k survives in R(x) iff every upper cover still offers something
  // above k and every lower cover something below k. A single cover check is
  // enough: the constraint graph is arc consistent at the fixpoint, and
  // strict inequalities on a poset are then globally satisfiable.
  const auto order = linear_extension(p);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x : order) {
      auto& s = sets[x];
      auto keep = [&](int k) {
        for (Element y : p.upper_covers(x))
          if (sets[y].empty() || sets[y].back() <= k) return false;
        for (Element z : p.lower_covers(x))
          if (sets[z].empty() || sets[z].front() >= k) return false;
        return true;
      };
      auto end = std::stable_partition(s.begin(), s.end(), keep);
      if (end != s.end()) {
        s.erase(end, s.end());
        changed = true;
        if (s.empty())
          throw InconsistentRestriction(
              "restriction is inconsistent: R(" + std::to_string(x) +
              ") empties under pruning");
      }
    }
  }
  r.consistent_ = true;
  return r;
}

Restriction from_bounds(const Poset& p, std::span<const int> alpha,
                        std::span<const int> beta) {
  if (alpha.size() != p.size() || beta.size() != p.size())
    throw SpecError("bounds must have one entry per poset element");
  std::vector<std::vector<int>> sets(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    if (alpha[x] > beta[x])
      throw InconsistentRestriction("alpha > beta at element " +
                                    std::to_string(x));
    for (int k = alpha[x]; k <= beta[x]; ++k) sets[x].push_back(k);
  }
  return make_consistent(Restriction(std::move(sets)), p);
}

Restriction from_global_bound(const Poset& p, int q) {
  std::vector<int> alpha(p.size(), 1), beta(p.size(), q);
  return from_bounds(p, alpha, beta);
}

Restriction from_flags(const Poset& p, std::span<const int> beta) {
  std::vector<int> alpha(p.size(), 1);
  return from_bounds(p, alpha, beta);
}

std::vector<int> typea_flag(const Poset& p) {
  if (p.chain_shape().size() != 2)
    throw SpecError("type A flag needs a product of two chains [a]x[b]");
  const int b = p.chain_shape()[1];
  std::vector<int> beta(p.size());
  for (Element x = 0; x < p.size(); ++x) beta[x] = b + 2 * p.coords(x)[0] - 1;
  return beta;
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw SpecError("bad integer list in restriction spec '" +
                      std::string(spec) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Restriction parse_restriction(const Poset& p, std::string_view spec) {
  auto starts = [&](std::string_view pre) {
    return spec.substr(0, pre.size()) == pre;
  };
  if (starts("q:")) {
    auto v = parse_ints(spec.substr(2), spec);
    if (v.size() != 1) throw SpecError("q: takes one integer");
    return from_global_bound(p, v[0]);
  }
  if (spec == "flags:typea") return from_flags(p, typea_flag(p));
  if (starts("flags:")) return from_flags(p, parse_ints(spec.substr(6), spec));
  if (starts("bounds:")) {
    auto body = spec.substr(7);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos)
      throw SpecError("bounds: needs alpha;beta lists");
    return from_bounds(p, parse_ints(body.substr(0, semi), spec),
                       parse_ints(body.substr(semi + 1), spec));
  }
  throw SpecError("unknown restriction spec '" + std::string(spec) + "'");
}

}  // namespace orbitkit
