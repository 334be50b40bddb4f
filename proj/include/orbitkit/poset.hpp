#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitkit {

using Element = std::uint32_t;
using Cover = std::pair<Element, Element>;
using Coords = std::vector<int>;

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// Finite poset on dense indices 0..size()-1, stored as its cover relation.
///
/// Immutable after construction. Covers are kept sorted and are guaranteed
/// acyclic and transitively reduced. When coordinates are present they are
/// consistent with the order (componentwise order on coords agrees with the
/// cover-generated order on comparable pairs). `chain_shape()` is non-empty
/// exactly when the poset is a product of chains [a1]x...x[ak] with 1-based
/// coords; antipodes are defined only then.
class Poset {
 public:
  Poset() = default;

  /// Builds from a cover list. Throws SpecError if an index is out of range,
  /// the relation has a cycle, or a pair is implied by other pairs.
  static Poset from_covers(std::size_t n, std::vector<Cover> covers,
                           std::string name = {},
                           std::vector<Coords> coords = {},
                           std::vector<int> chain_shape = {});

  /// Builds from any acyclic relation; keeps only its transitive reduction.
  static Poset from_relations(std::size_t n, std::vector<Cover> relations,
                              std::string name = {},
                              std::vector<Coords> coords = {});

  std::size_t size() const { return upper_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Cover>& covers() const { return covers_; }

  std::span<const Element> upper_covers(Element x) const { return upper_[x]; }
  std::span<const Element> lower_covers(Element x) const { return lower_[x]; }

  bool has_coords() const { return !coords_.empty(); }
  const Coords& coords(Element x) const { return coords_[x]; }
  const std::vector<Coords>& all_coords() const { return coords_; }
  std::optional<Element> find_coords(std::span<const int> c) const;

  const std::vector<int>& chain_shape() const { return chain_shape_; }
  bool is_product_of_chains() const { return !chain_shape_.empty(); }

  /// x <= y in the poset. Uses a precomputed closure for posets up to
  /// kClosureLimit elements and a graph search above that.
  bool less_equal(Element x, Element y) const;
  bool less(Element x, Element y) const { return x != y && less_equal(x, y); }
  bool covers_pair(Element lo, Element hi) const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  Poset renamed(std::string name) const;

  static constexpr std::size_t kClosureLimit = 4096;

 private:
  void index_covers();
  void build_closure();
  bool reachable(Element x, Element y) const;

  std::string name_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<Coords> coords_;
  std::vector<int> chain_shape_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> closure_;  // row-major bitset, row x = up-set of x
};

struct RankProfile {
  bool is_graded = false;
  std::vector<int> rank_of;  // longest chain from a minimal element
  int top_rank = 0;
};

class OrderIdeal {
 public:
  OrderIdeal() = default;
  explicit OrderIdeal(std::vector<std::uint8_t> members)
      : members_(std::move(members)) {}

  bool contains(Element x) const { return members_[x] != 0; }
  std::size_t universe() const { return members_.size(); }
  std::size_t size() const;
  std::vector<Element> elements() const;
  const std::vector<std::uint8_t>& members() const { return members_; }

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  std::vector<std::uint8_t> members_;
};

/// All order ideals of a poset together with J(P) ordered by containment.
/// Ideals are sorted by size, then lexicographically by element list, so the
/// empty ideal is element 0 of the lattice and the full ideal is last.
struct IdealLattice {
  std::vector<OrderIdeal> ideals;
  Poset lattice;
};

Poset chain(int n);
Poset product_of_chains(std::span<const int> shape);
Poset vee();
Poset triangle(int n);
Poset staircase(int k);
Poset product(const Poset& p, const Poset& q);
Poset dual(const Poset& p);

/// Parses the poset-spec mini-language. Grammar (products bind loosest):
///
///   expr  := term ('*' term)*
///   term  := '(' expr ')' | 'J^' k ':' term | atom
///   atom  := chain:n | prod:a1xa2x... | V | triangle:n | staircase:k
///          | propeller:k | cayley-moufang | freudenthal
Poset build_poset(std::string_view spec, std::size_t cap = kDefaultCap);

RankProfile rank_profile(const Poset& p);
IdealLattice order_ideals(const Poset& p, std::size_t cap = kDefaultCap);
Poset ideal_poset(const Poset& p, std::size_t cap = kDefaultCap);

/// Topological order; among available minima the smallest index goes first.
std::vector<Element> linear_extension(const Poset& p);
bool is_linear_extension(const Poset& p, std::span<const Element> order);

Element antipode(const Poset& p, Element x);

/// Coxeter number h of a minuscule poset given by spec: prod:kxm (or chain:k,
/// a k x 1 rectangle), staircase:k, propeller:k, cayley-moufang, freudenthal.
int coxeter_number(std::string_view spec);

/// Backtracking search for an isomorphism p -> q respecting rank and cover
/// degrees. Returns map[x in p] = image in q.
std::optional<std::vector<Element>> find_isomorphism(const Poset& p,
                                                     const Poset& q);

/// True when `map` is a bijection p -> q with x<.y iff map(x)<.map(y).
bool is_isomorphism(const Poset& p, const Poset& q,
                    std::span<const Element> map);

}  // namespace orbitkit
