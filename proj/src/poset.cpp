#include "orbitkit/poset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

std::vector<Element> topological_order(std::size_t n,
                                       const std::vector<Cover>& rel) {
  std::vector<std::vector<Element>> up(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [lo, hi] : rel) {
    up[lo].push_back(hi);
    ++indeg[hi];
  }
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Element y : up[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (order.size() != n) throw SpecError("poset relation contains a cycle");
  return order;
}

void check_indices(std::size_t n, const std::vector<Cover>& rel) {
  for (auto [lo, hi] : rel) {
    if (lo >= n || hi >= n)
      throw SpecError("cover pair references element outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    if (lo == hi) throw SpecError("cover pair with equal endpoints");
  }
}

bool coords_leq(const Coords& a, const Coords& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Poset on a set of coordinate tuples ordered componentwise.
Poset induced_by_coords(std::vector<Coords> pts, std::string name) {
  std::vector<Cover> rel;
  for (Element x = 0; x < pts.size(); ++x)
    for (Element y = 0; y < pts.size(); ++y)
      if (x != y && coords_leq(pts[x], pts[y])) rel.emplace_back(x, y);
  const std::size_t n = pts.size();
  return Poset::from_relations(n, std::move(rel), std::move(name),
                               std::move(pts));
}

}  // namespace

Poset Poset::from_covers(std::size_t n, std::vector<Cover> covers,
                         std::string name, std::vector<Coords> coords,
                         std::vector<int> chain_shape) {
  check_indices(n, covers);
  std::sort(covers.begin(), covers.end());
  if (std::adjacent_find(covers.begin(), covers.end()) != covers.end())
    throw SpecError("duplicate cover pair");
  if (!coords.empty() && coords.size() != n)
    throw SpecError("coords length does not match element count");
  topological_order(n, covers);

  Poset p;
  p.name_ = std::move(name);
  p.covers_ = std::move(covers);
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  p.coords_ = std::move(coords);
  p.chain_shape_ = std::move(chain_shape);
  p.index_covers();
  p.build_closure();

  if (n <= kClosureLimit) {
    for (auto [lo, hi] : p.covers_)
      for (Element z : p.upper_[lo])
        if (z != hi && p.less_equal(z, hi))
          throw SpecError("cover (" + std::to_string(lo) + "," +
                          std::to_string(hi) +
                          ") is implied by other covers");
  }
  if (p.has_coords()) {
    for (auto [lo, hi] : p.covers_)
      if (p.coords_[lo].size() != p.coords_[hi].size() ||
          !coords_leq(p.coords_[lo], p.coords_[hi]))
        throw SpecError("coords are inconsistent with cover relation");
  }
  return p;
}

Poset Poset::from_relations(std::size_t n, std::vector<Cover> relations,
                            std::string name, std::vector<Coords> coords) {
  check_indices(n, relations);
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()),
                  relations.end());
  auto order = topological_order(n, relations);

  // Strict up-sets via reverse topological sweep, then
  // covers(x) = S(x) \ union_{z in S(x)} S(z).
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> strict(n * words, 0);
  std::vector<std::vector<Element>> up(n);
  for (auto [lo, hi] : relations) up[lo].push_back(hi);
  auto row = [&](Element x) { return strict.data() + x * words; };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element x = *it;
    for (Element y : up[x]) {
      row(x)[y / 64] |= std::uint64_t{1} << (y % 64);
      for (std::size_t w = 0; w < words; ++w) row(x)[w] |= row(y)[w];
    }
  }
  std::vector<Cover> covers;
  std::vector<std::uint64_t> implied(words);
  for (Element x = 0; x < n; ++x) {
    std::fill(implied.begin(), implied.end(), 0);
    for (Element z = 0; z < n; ++z)
      if (row(x)[z / 64] >> (z % 64) & 1)
        for (std::size_t w = 0; w < words; ++w) implied[w] |= row(z)[w];
    for (Element y = 0; y < n; ++y)
      if ((row(x)[y / 64] >> (y % 64) & 1) && !(implied[y / 64] >> (y % 64) & 1))
        covers.emplace_back(x, y);
  }
  return from_covers(n, std::move(covers), std::move(name), std::move(coords));
}

void Poset::index_covers() {
  for (auto [lo, hi] : covers_) {
    upper_[lo].push_back(hi);
    lower_[hi].push_back(lo);
  }
  for (auto& v : lower_) std::sort(v.begin(), v.end());
}

void Poset::build_closure() {
  const std::size_t n = size();
  if (n > kClosureLimit) return;
  words_ = (n + 63) / 64;
  closure_.assign(n * words_, 0);
  auto order = topological_order(n, covers_);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element x = *it;
    std::uint64_t* r = closure_.data() + x * words_;
    r[x / 64] |= std::uint64_t{1} << (x % 64);
    for (Element y : upper_[x]) {
      const std::uint64_t* s = closure_.data() + y * words_;
      for (std::size_t w = 0; w < words_; ++w) r[w] |= s[w];
    }
  }
}

bool Poset::reachable(Element x, Element y) const {
  std::vector<std::uint8_t> seen(size(), 0);
  std::vector<Element> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    Element z = stack.back();
    stack.pop_back();
    if (z == y) return true;
    for (Element w : upper_[z])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

bool Poset::less_equal(Element x, Element y) const {
  if (!closure_.empty())
    return closure_[x * words_ + y / 64] >> (y % 64) & 1;
  return reachable(x, y);
}

bool Poset::covers_pair(Element lo, Element hi) const {
  const auto& u = upper_[lo];
  return std::find(u.begin(), u.end(), hi) != u.end();
}

std::optional<Element> Poset::find_coords(std::span<const int> c) const {
  for (Element x = 0; x < coords_.size(); ++x)
    if (std::equal(c.begin(), c.end(), coords_[x].begin(), coords_[x].end()))
      return x;
  return std::nullopt;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (upper_[x].empty()) out.push_back(x);
  return out;
}

Poset Poset::renamed(std::string name) const {
  Poset p = *this;
  p.name_ = std::move(name);
  return p;
}

std::size_t OrderIdeal::size() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), std::uint8_t{1}));
}

std::vector<Element> OrderIdeal::elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < members_.size(); ++x)
    if (members_[x]) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

Poset chain(int n) {
  if (n < 1) throw SpecError("chain size must be >= 1");
  return product_of_chains(std::vector<int>{n}).renamed("chain:" +
                                                        std::to_string(n));
}

Poset product_of_chains(std::span<const int> shape) {
  if (shape.empty()) throw SpecError("product of chains needs a factor");
  std::size_t n = 1;
  for (int a : shape) {
    if (a < 1) throw SpecError("chain size must be >= 1");
    n *= static_cast<std::size_t>(a);
  }
  const std::size_t k = shape.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t d = k - 1; d-- > 0;) stride[d] = stride[d + 1] * shape[d + 1];

  std::vector<Coords> coords(n, Coords(k));
  std::vector<Cover> covers;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t d = 0; d < k; ++d) {
      coords[x][d] = static_cast<int>(rest / stride[d]) + 1;
      rest %= stride[d];
    }
    for (std::size_t d = 0; d < k; ++d)
      if (coords[x][d] < shape[d])
        covers.emplace_back(static_cast<Element>(x),
                            static_cast<Element>(x + stride[d]));
  }
  std::string name = "prod:";
  for (std::size_t d = 0; d < k; ++d)
    name += (d ? "x" : "") + std::to_string(shape[d]);
  return Poset::from_covers(n, std::move(covers), std::move(name),
                            std::move(coords),
                            std::vector<int>(shape.begin(), shape.end()));
}

Poset vee() { return Poset::from_covers(3, {{0, 1}, {0, 2}}, "V"); }

Poset triangle(int n) {
  if (n < 1) throw SpecError("triangle size must be >= 1");
  std::vector<Coords> pts;
  for (int i = 1; i <= n; ++i)
    for (int j = n - i + 1; j <= n; ++j) pts.push_back({i, j});
  return induced_by_coords(std::move(pts), "triangle:" + std::to_string(n));
}

Poset staircase(int k) {
  if (k < 1) throw SpecError("staircase size must be >= 1");
  std::vector<Coords> pts;
  for (int x = 1; x <= k; ++x)
    for (int y = x; y <= k; ++y) pts.push_back({x, y});
  return induced_by_coords(std::move(pts), "staircase:" + std::to_string(k));
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  const std::size_t n = p.size() * m;
  std::vector<Cover> covers;
  for (auto [lo, hi] : p.covers())
    for (Element y = 0; y < m; ++y)
      covers.emplace_back(static_cast<Element>(lo * m + y),
                          static_cast<Element>(hi * m + y));
  for (Element x = 0; x < p.size(); ++x)
    for (auto [lo, hi] : q.covers())
      covers.emplace_back(static_cast<Element>(x * m + lo),
                          static_cast<Element>(x * m + hi));
  std::vector<Coords> coords;
  if (p.has_coords() && q.has_coords()) {
    coords.reserve(n);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < m; ++y) {
        Coords c = p.coords(x);
        c.insert(c.end(), q.coords(y).begin(), q.coords(y).end());
        coords.push_back(std::move(c));
      }
  }
  std::vector<int> shape;
  if (p.is_product_of_chains() && q.is_product_of_chains()) {
    shape = p.chain_shape();
    shape.insert(shape.end(), q.chain_shape().begin(), q.chain_shape().end());
  }
  return Poset::from_covers(n, std::move(covers), p.name() + "*" + q.name(),
                            std::move(coords), std::move(shape));
}

Poset dual(const Poset& p) {
  std::vector<Cover> covers;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(hi, lo);
  return Poset::from_covers(p.size(), std::move(covers),
                            "dual(" + p.name() + ")");
}

// ---------------------------------------------------------------------------
// Poset-spec parser

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  Poset parse() {
    Poset p = expr();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SpecError("bad poset spec '" + std::string(text_) + "' at offset " +
                    std::to_string(pos_) + ": " + why);
  }

  bool eat(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  int integer() {
    int v = 0;
    auto* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    if (v < 1) fail("size parameters must be >= 1");
    return v;
  }

  Poset expr() {
    Poset p = term();
    while (eat("*")) p = product(p, term());
    return p;
  }

  Poset term() {
    if (eat("(")) {
      Poset p = expr();
      if (!eat(")")) fail("expected ')'");
      return p;
    }
    if (eat("J^")) {
      int k = integer();
      if (!eat(":")) fail("expected ':' after J^k");
      Poset p = term();
      for (int i = 0; i < k; ++i) p = ideal_poset(p, cap_);
      return p;
    }
    return atom();
  }

  Poset tower(const Poset& base, int k, std::string name) {
    Poset p = base;
    for (int i = 0; i < k; ++i) p = ideal_poset(p, cap_);
    return p.renamed(std::move(name));
  }

  Poset atom() {
    if (eat("chain:")) return chain(integer());
    if (eat("prod:")) {
      std::vector<int> shape{integer()};
      while (eat("x")) shape.push_back(integer());
      return product_of_chains(shape);
    }
    if (eat("triangle:")) return triangle(integer());
    if (eat("staircase:")) return staircase(integer());
    if (eat("propeller:")) {
      int k = integer();
      return tower(product_of_chains(std::vector<int>{2, 2}), k,
                   "propeller:" + std::to_string(k));
    }
    if (eat("cayley-moufang"))
      return tower(product_of_chains(std::vector<int>{3, 2}), 2,
                   "cayley-moufang");
    if (eat("freudenthal"))
      return tower(product_of_chains(std::vector<int>{3, 2}), 3, "freudenthal");
    if (eat("V")) return vee();
    fail("unknown poset family");
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

Poset build_poset(std::string_view spec, std::size_t cap) {
  return SpecParser(spec, cap).parse();
}

// ---------------------------------------------------------------------------

RankProfile rank_profile(const Poset& p) {
  RankProfile r;
  r.rank_of.assign(p.size(), 0);
  for (Element x : linear_extension(p))
    for (Element z : p.lower_covers(x))
      r.rank_of[x] = std::max(r.rank_of[x], r.rank_of[z] + 1);
  r.top_rank = p.size() ? *std::max_element(r.rank_of.begin(), r.rank_of.end())
                        : 0;
  r.is_graded = true;
  for (auto [lo, hi] : p.covers())
    if (r.rank_of[hi] != r.rank_of[lo] + 1) r.is_graded = false;
  for (Element x : p.maximal_elements())
    if (r.rank_of[x] != r.top_rank) r.is_graded = false;
  return r;
}

IdealLattice order_ideals(const Poset& p, std::size_t cap) {
  const auto order = linear_extension(p);
  const std::size_t n = p.size();
  std::vector<OrderIdeal> found;
  std::vector<std::uint8_t> members(n, 0);

  // Depth-first over the linear extension: an element may join only when all
  // of its lower covers already have.
  std::function<void(std::size_t)> walk = [&](std::size_t t) {
    if (t == n) {
      if (found.size() >= cap)
        throw CapExceeded("order ideal count exceeds cap " +
                          std::to_string(cap));
      found.emplace_back(members);
      return;
    }
    Element x = order[t];
    walk(t + 1);
    for (Element z : p.lower_covers(x))
      if (!members[z]) return;
    members[x] = 1;
    walk(t + 1);
    members[x] = 0;
  };
  walk(0);

  std::vector<std::pair<std::vector<Element>, std::size_t>> keyed;
  keyed.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    keyed.emplace_back(found[i].elements(), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  IdealLattice out;
  out.ideals.reserve(found.size());
  std::unordered_map<std::string, Element> index;
  for (const auto& [elems, i] : keyed) {
    const auto& m = found[i].members();
    index.emplace(std::string(m.begin(), m.end()),
                  static_cast<Element>(out.ideals.size()));
    out.ideals.push_back(found[i]);
  }
  std::vector<Cover> covers;
  for (Element a = 0; a < out.ideals.size(); ++a) {
    std::string key(out.ideals[a].members().begin(),
                    out.ideals[a].members().end());
    for (Element x = 0; x < n; ++x) {
      if (key[x]) continue;
      bool addable = true;
      for (Element z : p.lower_covers(x))
        if (!key[z]) {
          addable = false;
          break;
        }
      if (!addable) continue;
      key[x] = 1;
      covers.emplace_back(a, index.at(key));
      key[x] = 0;
    }
  }
  out.lattice = Poset::from_covers(out.ideals.size(), std::move(covers),
                                   "J(" + p.name() + ")");
  return out;
}

Poset ideal_poset(const Poset& p, std::size_t cap) {
  return order_ideals(p, cap).lattice;
}

std::vector<Element> linear_extension(const Poset& p) {
  return topological_order(p.size(), p.covers());
}

bool is_linear_extension(const Poset& p, std::span<const Element> order) {
  if (order.size() != p.size()) return false;
  std::vector<std::size_t> pos(p.size(), p.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (order[t] >= p.size() || pos[order[t]] != p.size()) return false;
    pos[order[t]] = t;
  }
  for (auto [lo, hi] : p.covers())
    if (pos[lo] > pos[hi]) return false;
  return true;
}

Element antipode(const Poset& p, Element x) {
  if (!p.is_product_of_chains())
    throw SpecError("antipode requires a product of chains, got '" + p.name() +
                    "'");
  const auto& shape = p.chain_shape();
  Element index = 0;
  for (std::size_t d = 0; d < shape.size(); ++d)
    index = index * static_cast<Element>(shape[d]) +
            static_cast<Element>(shape[d] - p.coords(x)[d]);
  return index;
}

int coxeter_number(std::string_view spec) {
  auto fail = [&]() -> int {
    throw SpecError("'" + std::string(spec) + "' is not a minuscule poset spec");
  };
  auto parse_ints = [&](std::string_view rest) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      int v = 0;
      auto [ptr, ec] =
          std::from_chars(rest.data() + pos, rest.data() + rest.size(), v);
      if (ec != std::errc() || v < 1) fail();
      out.push_back(v);
      pos = static_cast<std::size_t>(ptr - rest.data());
      if (pos == rest.size()) break;
      if (rest[pos] != 'x') fail();
      ++pos;
    }
    return out;
  };
  auto starts = [&](std::string_view pre) { return spec.substr(0, pre.size()) == pre; };

  if (spec == "cayley-moufang" || spec == "J^2:prod:3x2") return 12;
  if (spec == "freudenthal" || spec == "J^3:prod:3x2") return 18;
  if (starts("prod:")) {
    auto v = parse_ints(spec.substr(5));
    if (v.size() != 2) fail();
    return v[0] + v[1];
  }
  if (starts("chain:")) {
    auto v = parse_ints(spec.substr(6));
    if (v.size() != 1) fail();
    return v[0] + 1;
  }
  if (starts("staircase:")) {
    auto v = parse_ints(spec.substr(10));
    if (v.size() != 1) fail();
    return 2 * v[0];
  }
  if (starts("propeller:")) {
    auto v = parse_ints(spec.substr(10));
    if (v.size() != 1) fail();
    return 2 * (v[0] + 2);
  }
  if (starts("J^") && spec.size() > 2) {
    auto colon = spec.find(':');
    if (colon != std::string_view::npos && spec.substr(colon + 1) == "prod:2x2") {
      auto v = parse_ints(spec.substr(2, colon - 2));
      if (v.size() == 1) return 2 * (v[0] + 2);
    }
  }
  return fail();
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<std::array<int, 4>> signatures(const Poset& p) {
  auto up = rank_profile(p).rank_of;
  auto down = rank_profile(dual(p)).rank_of;
  std::vector<std::array<int, 4>> sig(p.size());
  for (Element x = 0; x < p.size(); ++x)
    sig[x] = {up[x], down[x], static_cast<int>(p.lower_covers(x).size()),
              static_cast<int>(p.upper_covers(x).size())};
  return sig;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const Poset& p,
                                                     const Poset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size())
    return std::nullopt;
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const auto order = linear_extension(p);
  const Element none = static_cast<Element>(-1);
  std::vector<Element> map(p.size(), none);
  std::vector<std::uint8_t> used(q.size(), 0);

  std::function<bool(std::size_t)> assign = [&](std::size_t t) {
    if (t == order.size()) return true;
    Element x = order[t];
    for (Element y = 0; y < q.size(); ++y) {
      if (used[y] || sp[x] != sq[y]) continue;
      bool ok = true;
      for (Element z : p.lower_covers(x))
        if (!q.covers_pair(map[z], y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (assign(t + 1)) return true;
      used[y] = 0;
      map[x] = none;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

bool is_isomorphism(const Poset& p, const Poset& q,
                    std::span<const Element> map) {
  if (p.size() != q.size() || map.size() != p.size() ||
      p.covers().size() != q.covers().size())
    return false;
  std::vector<std::uint8_t> hit(q.size(), 0);
  for (Element y : map) {
    if (y >= q.size() || hit[y]) return false;
    hit[y] = 1;
  }
  for (auto [lo, hi] : p.covers())
    if (!q.covers_pair(map[lo], map[hi])) return false;
  return true;
}

}  // namespace orbitkit
