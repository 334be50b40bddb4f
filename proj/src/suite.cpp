#include "orbitkit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "orbitkit/actions.hpp"
#include "orbitkit/dynamics.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/gamma.hpp"
#include "orbitkit/poset.hpp"
#include "orbitkit/pstrict.hpp"
#include "orbitkit/qpartition.hpp"
#include "orbitkit/restriction.hpp"

namespace orbitkit {

namespace {

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    r_.notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok && r_.failure.empty()) r_.failure = what;
    all_ = all_ && ok;
  }
  void info(const std::string& what) { r_.notes.push_back("info " + what); }
  bool all() const { return all_; }

 private:
  CriterionResult& r_;
  bool all_ = true;
};

std::string show(const std::map<std::size_t, std::size_t>& h) {
  std::string s;
  for (auto [size, count] : h)
    s += (s.empty() ? "" : " ") + std::to_string(size) + "^" +
         std::to_string(count);
  return s;
}

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Labelings of P x [ell], the Gamma-partitions, and Phi between them.
struct Family {
  LabelingSpace space;
  StateTable labelings;
  GammaPoset gamma;
  PartitionSpace partitions;
  StateTable sigmas;
  Bijection phi;

  Family(Poset p, int ell, Restriction r, const Conventions& c)
      : space(std::move(p), ell, std::move(r)),
        labelings(space.enumerate()),
        gamma(gamma_poset(space.poset(), space.restriction())),
        partitions(gamma.poset(), ell),
        sigmas(partitions.enumerate()),
        phi(space, gamma, c) {}
  Family(const Family&) = delete;
  Family& operator=(const Family&) = delete;

  StateMap phi_map() const {
    return [this](std::span<const int> f) { return phi.phi(f); };
  }
};

std::unique_ptr<Family> global_family(const Poset& p, int ell, int q,
                                      const Conventions& c) {
  return std::make_unique<Family>(p, ell, from_global_bound(p, q), c);
}

struct GridPoint {
  std::string spec;
  int ell;
  int q;
  std::string label() const {
    return cat(spec, " ell=", ell, " q=", q);
  }
};

const std::vector<std::string> kGridPosets = {"chain:2", "chain:3", "prod:2x2",
                                              "V", "triangle:2"};

std::vector<GridPoint> equivariance_grid() {
  std::vector<GridPoint> g;
  for (const auto& spec : kGridPosets) {
    const int n = rank_profile(build_poset(spec)).top_rank;
    for (int ell = 1; ell <= 3; ++ell)
      for (int q = n + 2; q <= n + 4; ++q) g.push_back({spec, ell, q});
  }
  return g;
}

// ---------------------------------------------------------------------------

void equivariance(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& gp : equivariance_grid()) {
    auto F = global_family(build_poset(gp.spec), gp.ell, gp.q,
                           opt.conventions);
    auto r = equivariance_check(
        F->labelings, pro_action(F->space), F->sigmas,
        toggle_action(F->partitions, togpro_sequence(F->gamma, opt.conventions)),
        F->phi_map(), opt.workers);
    rec.check(r.bijective && r.equivariant,
              cat(gp.label(), ": |L|=", F->labelings.size(),
                  " |A|=", F->sigmas.size(), r.detail.empty() ? "" : " ",
                  r.detail));
  }
}

void bk_equivariance(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& gp : equivariance_grid()) {
    auto F = global_family(build_poset(gp.spec), gp.ell, gp.q,
                           opt.conventions);
    bool ok = true;
    std::string why;
    int ks = 0;
    for (int k = F->space.min_label(); k < F->space.max_label() && ok; ++k) {
      auto r = equivariance_check(
          F->labelings, bk_action(F->space, k), F->sigmas,
          toggle_action(F->partitions, tau_k_sequence(F->gamma, k)),
          F->phi_map(), opt.workers);
      ok = r.bijective && r.equivariant;
      if (!ok) why = cat(" k=", k, " ", r.detail);
      ++ks;
    }
    rec.check(ok, cat(gp.label(), ": ", ks, " involutions", why));
  }
}

void order_a_plus_b(Recorder& rec, const SuiteOptions& opt) {
  const int grid[][3] = {{2, 2, 2}, {2, 3, 2}, {3, 3, 2}, {2, 2, 3}};
  for (auto [a, b, ell] : grid) {
    const Poset p = product_of_chains(std::vector<int>{a, b});
    LabelingSpace s(p, ell, from_global_bound(p, a + b));
    auto set = s.enumerate();
    auto d = orbit_decomposition(set, pro_action(s), opt.workers);
    const auto order = order_of(d);
    rec.check(order == static_cast<unsigned long long>(a + b),
              cat("(a,b,ell)=(", a, ",", b, ",", ell, "): |L|=", set.size(),
                  " order ", order, " orbits ", show(d.histogram())));
  }
}

void golden_orbits(Recorder& rec, const SuiteOptions& opt) {
  {
    PartitionSpace ps(build_poset("prod:2x2x2"), 2);
    auto set = ps.enumerate();
    auto d = orbit_decomposition(
        set, toggle_action(ps, rowmotion_sequence(ps.poset(), opt.conventions)),
        opt.workers);
    const std::map<std::size_t, std::size_t> want{{5, 30}, {9, 2}};
    rec.check(d.histogram() == want,
              cat("Row on A^2([2]x[2]x[2]): |A|=", set.size(), " orbits ",
                  show(d.histogram())));
  }
  {
    PartitionSpace ps(build_poset("propeller:2*chain:2"), 2);
    auto set = ps.enumerate();
    auto d = orbit_decomposition(
        set, toggle_action(ps, rowmotion_sequence(ps.poset(), opt.conventions)),
        opt.workers);
    std::set<std::size_t> sizes;
    for (auto [s, c] : d.histogram()) sizes.insert(s);
    rec.check(sizes == std::set<std::size_t>{6, 9, 17, 44},
              cat("Row on A^2(J^2([2]x[2])x[2]): |Q|=", ps.size(),
                  " |A|=", set.size(), " orbits ", show(d.histogram())));
  }
}

struct Ssyt {
  int a, b, k;
  std::string label() const { return cat("SSYT_", k, "(", a, "x", b, ")"); }
};
const Ssyt kSsytGrid[] = {{2, 2, 4}, {2, 2, 5}, {2, 3, 5}};

// SSYT_k(a x b) as chain:a-strict labelings of [a] x [b]: fibers are rows,
// layers are columns.
LabelingSpace ssyt_space(const Ssyt& t) {
  const Poset p = chain(t.a);
  return LabelingSpace(p, t.b, from_global_bound(p, t.k));
}

void homomesy(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& t : kSsytGrid) {
    LabelingSpace s = ssyt_space(t);
    auto set = s.enumerate();
    auto d = orbit_decomposition(set, pro_action(s), opt.workers);

    std::vector<std::vector<std::size_t>> pairs;
    std::vector<bool> seen(s.cells(), false);
    for (std::size_t c = 0; c < s.cells(); ++c) {
      if (seen[c]) continue;
      const std::size_t r = antipodal_cell(s, c);
      seen[c] = seen[r] = true;
      pairs.push_back(c == r ? std::vector<std::size_t>{c}
                             : std::vector<std::size_t>{c, r});
    }
    int sets = 0, good = 0;
    for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::size_t> cells;
      for (std::size_t j = 0; j < pairs.size(); ++j)
        if (mask >> j & 1) cells.insert(cells.end(), pairs[j].begin(), pairs[j].end());
      auto h = homomesy_check(set, d, [&](std::span<const int> f) {
        return label_sum(f, cells);
      });
      ++sets;
      good += h.homomesic;
    }
    rec.check(good == sets, cat(t.label(), ": chi_S homomesic for ", good,
                                "/", sets, " symmetric S"));

    int stats = 0, bmesic = 0;
    for (int x = 1; x <= t.a; ++x)
      for (int dd = 0; dd <= t.k; ++dd) {
        auto h = homomesy_check(set, d, [&](std::span<const int> f) {
          return box_count(s, f, x - 1, dd) +
                 box_count(s, f, t.a - x, t.k - dd);
        });
        ++stats;
        bmesic += h.homomesic && h.c == Rational(t.b);
      }
    rec.check(bmesic == stats, cat(t.label(), ": box-count pair ", t.b,
                                   "-mesic for ", bmesic, "/", stats,
                                   " (x,d)"));
  }

  const int grid[][3] = {{2, 2, 2}, {2, 3, 2}};
  for (auto [a, b, ell] : grid) {
    const Poset p = product_of_chains(std::vector<int>{a, b});
    LabelingSpace s(p, ell, from_global_bound(p, a + b));
    auto set = s.enumerate();
    auto d = orbit_decomposition(set, pro_action(s), opt.workers);
    int pairs = 0, good = 0;
    for (std::size_t c = 0; c < s.cells(); ++c) {
      const std::size_t r = antipodal_cell(s, c);
      if (r < c) continue;
      const std::vector<std::size_t> cells{c, r};
      auto h = homomesy_check(set, d, [&](std::span<const int> f) {
        return label_sum(f, cells);
      });
      ++pairs;
      good += h.homomesic && h.c == Rational(a + b + 1);
    }
    rec.check(good == pairs,
              cat("L_([", a, "]x[", b, "])x[", ell, "](R^", a + b,
                  "): antipodal chi_S ", a + b + 1, "-mesic for ", good, "/",
                  pairs, " pairs"));
  }
}

void distributions(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& t : kSsytGrid) {
    LabelingSpace s = ssyt_space(t);
    auto set = s.enumerate();
    auto d = orbit_decomposition(set, pro_action(s), opt.workers);
    bool ok = true;
    for (std::size_t c = 0; c < s.cells() && ok; ++c) {
      const std::size_t r = antipodal_cell(s, c);
      ok = !complement_law_witness(
          set, d, t.k, [c](std::span<const int> f) { return f[c]; },
          [r](std::span<const int> f) { return f[r]; }, t.k + 1);
    }
    rec.check(ok, cat(t.label(), ": Dist(T,B) = {k+1-m : m in Dist(T,B*)} "
                      "for all T and boxes"));
    ok = true;
    for (int x = 1; x <= t.a && ok; ++x)
      for (int dd = 0; dd <= t.k && ok; ++dd)
        ok = !complement_law_witness(
            set, d, t.k,
            [&](std::span<const int> f) { return box_count(s, f, x - 1, dd); },
            [&](std::span<const int> f) {
              return box_count(s, f, t.a - x, t.k - dd);
            },
            t.b);
    rec.check(ok, cat(t.label(), ": BCDist complement law for all rows and "
                      "d in [0,", t.k, "]"));
  }

  const int pp[][3] = {{2, 2, 2}, {2, 3, 2}};
  for (auto [a, c, ell] : pp) {
    const Poset q = product_of_chains(std::vector<int>{a, c});
    PartitionSpace ps(q, ell);
    auto set = ps.enumerate();
    for (std::vector<int> v : {std::vector<int>{1, 1}, {1, -1}, {-1, 1},
                               {-1, -1}}) {
      auto seq = hyperplane_sequence(q, identity_projection(q, v),
                                     opt.conventions);
      auto d = orbit_decomposition(set, toggle_action(ps, seq), opt.workers);
      bool ok = true;
      for (Element x = 0; x < q.size() && ok; ++x) {
        const Element y = antipode(q, x);
        ok = !complement_law_witness(
            set, d, a + c, [x](std::span<const int> s) { return s[x]; },
            [y](std::span<const int> s) { return s[y]; }, ell);
      }
      rec.check(ok, cat("A^", ell, "([", a, "]x[", c, "]) under Pro_id,(",
                        v[0], ",", v[1], "): antipodal Dist complement"));
    }
  }

  const int ps_grid[][3] = {{2, 2, 2}, {2, 3, 2}};
  for (auto [a, b, ell] : ps_grid) {
    const Poset p = product_of_chains(std::vector<int>{a, b});
    LabelingSpace s(p, ell, from_global_bound(p, a + b));
    auto set = s.enumerate();
    auto d = orbit_decomposition(set, pro_action(s), opt.workers);
    bool ok = true;
    for (std::size_t c = 0; c < s.cells() && ok; ++c) {
      const std::size_t r = antipodal_cell(s, c);
      ok = !complement_law_witness(
          set, d, a + b, [c](std::span<const int> f) { return f[c]; },
          [r](std::span<const int> f) { return f[r]; }, a + b + 1);
    }
    rec.check(ok, cat("L_([", a, "]x[", b, "])x[", ell, "](R^", a + b,
                      "): Dist(f,x*) = {a+b+1-m} for all cells"));
  }
}

void resonance(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& gp : equivariance_grid()) {
    auto F = global_family(build_poset(gp.spec), gp.ell, gp.q,
                           opt.conventions);
    const int q = gp.q;
    auto dp = orbit_decomposition(F->labelings, pro_action(F->space),
                                  opt.workers);
    auto con = resonance_check(F->labelings, dp,
                               [q](std::span<const int> f) {
                                 return binary_content(f, 1, q);
                               },
                               q, "Con");
    rec.check(!con.counterexample,
              cat(gp.label(), ": Con o Pro = shift o Con",
                  con.degenerate ? " (image fixed by rotation)" : ""));

    const Restriction& r = F->space.restriction();
    const int ell = gp.ell;
    auto diff_proj = [&F, &r, ell, q](std::span<const int> s) {
      return diff(F->gamma, r, ell, s, 1, q);
    };
    auto dt = orbit_decomposition(
        F->sigmas,
        toggle_action(F->partitions,
                      togpro_sequence(F->gamma, opt.conventions)),
        opt.workers);
    auto dif_tog = resonance_check(F->sigmas, dt, diff_proj, q, "Diff");
    rec.check(!dif_tog.counterexample,
              cat(gp.label(), ": Diff o TogPro = rotate_left o Diff"));

    auto dr = orbit_decomposition(
        F->sigmas,
        toggle_action(F->partitions,
                      rowmotion_sequence(F->gamma.poset(), opt.conventions)),
        opt.workers);
    // Any generator of the rotation group qualifies.
    std::optional<int> shift;
    for (int s = 1; s < q && !shift; ++s)
      if (std::gcd(s, q) == 1 &&
          !resonance_check(F->sigmas, dr, diff_proj, q, "Diff", s)
               .counterexample)
        shift = s;
    rec.check(shift.has_value(),
              cat(gp.label(), ": Diff o Row = c o Diff ",
                  shift ? "with c = rotate_left by " + std::to_string(*shift)
                        : "for no rotation c of order " + std::to_string(q)));
  }
}

void structural(Recorder& rec, const SuiteOptions&) {
  std::set<std::pair<std::string, int>> seen;
  for (const auto& gp : equivariance_grid()) {
    if (!seen.insert({gp.spec, gp.q}).second) continue;
    const Poset p = build_poset(gp.spec);
    const Restriction r = from_global_bound(p, gp.q);
    const GammaPoset g = gamma_poset(p, r);
    const int m = gp.q - rank_profile(p).top_rank - 1;
    const auto map = graded_isomorphism(g, p, gp.q);
    const bool iso = is_isomorphism(g.poset(), product(p, chain(m)), map);
    rec.check(iso && is_column_adjacent(g),
              cat("Gamma(", gp.spec, ",R^", gp.q, ") -> ", gp.spec, "x[", m,
                  "] via (p,k) -> (p,q-n+rank(p)-k)"));
  }
  const int flags[][2] = {{2, 2}, {2, 3}, {3, 4}};
  for (auto [a, b] : flags) {
    const Poset p = product_of_chains(std::vector<int>{a, b});
    const Restriction r = from_flags(p, typea_flag(p));
    bool closed_form = true;
    for (Element x = 0; x < p.size(); ++x) {
      const int i = p.coords(x)[0], j = p.coords(x)[1];
      std::vector<int> want;
      for (int k = i + j - 1; k <= 2 * i + j - 1; ++k) want.push_back(k);
      closed_form = closed_form && r.sets()[x] == want;
    }
    const GammaPoset g = gamma_poset(p, r);
    const auto map = typea_flag_isomorphism(g, p);
    const bool iso =
        is_isomorphism(g.poset(), product(triangle(a), chain(b)), map);
    rec.check(closed_form && iso,
              cat("Gamma([", a, "]x[", b, "],R^beta) -> triangle:", a, "x[",
                  b, "]; R^beta(i,j) = {i+j-1..2i+j-1}"));
  }
}

void slices(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& gp : equivariance_grid()) {
    const Poset p = build_poset(gp.spec);
    const int m = gp.q - rank_profile(p).top_rank - 1;
    PartitionSpace ps(product(p, chain(m)), gp.ell);
    auto set = ps.enumerate();
    const auto tog = graded_togpro_sequence(p, gp.q, opt.conventions);
    const auto sl = row_inverse_slices_sequence(p, gp.q, opt.conventions);
    std::size_t bad = set.size();
    for (std::size_t i = 0; i < set.size() && bad == set.size(); ++i)
      if (ps.applied(set[i], tog) != ps.applied(set[i], sl)) bad = i;
    rec.check(bad == set.size(),
              cat(gp.label(), ": TogPro = slice Row^-1 product on ",
                  set.size(), " partitions"));

    auto F = global_family(p, gp.ell, gp.q, opt.conventions);
    const auto iso = graded_isomorphism(F->gamma, p, gp.q);
    auto transport = [&iso](std::span<const int> s) {
      State t(s.size());
      for (std::size_t x = 0; x < s.size(); ++x) t[iso[x]] = s[x];
      return t;
    };
    auto r = equivariance_check(
        F->sigmas,
        toggle_action(F->partitions, togpro_sequence(F->gamma, opt.conventions)),
        set, toggle_action(ps, tog), transport, opt.workers);
    rec.check(r.bijective && r.equivariant,
              cat(gp.label(), ": graded TogPro matches Gamma TogPro ",
                  r.detail));
  }
}

// Returns the detail of the first failing instance, empty on success.
std::string hyperplane_instance(int a, int b, int c, int ell,
                                const Conventions& conv, unsigned workers) {
  const Poset p = product_of_chains(std::vector<int>{a, b});
  auto F = global_family(p, ell, a + b + c - 1, conv);
  const auto pi = threechains_projection(F->gamma, p, c);
  auto r = equivariance_check(
      F->labelings, pro_action(F->space), F->sigmas,
      toggle_action(F->partitions,
                    hyperplane_sequence(F->gamma.poset(), pi, conv)),
      F->phi_map(), workers);
  if (r.bijective && r.equivariant) return {};
  return r.detail.empty() ? "failed" : r.detail;
}

void hyperplane(Recorder& rec, const SuiteOptions& opt) {
  const int grid[][4] = {{2, 2, 2, 1}, {2, 2, 2, 2}};
  for (auto [a, b, c, ell] : grid) {
    const auto why = hyperplane_instance(a, b, c, ell, opt.conventions,
                                         opt.workers);
    rec.check(why.empty(), cat("(a,b,c,ell)=(", a, ",", b, ",", c, ",", ell,
                               "): Phi o Pro = Pro_pi,(-1,-1,1) o Phi", " ",
                               why));
    Conventions other = opt.conventions;
    other.reverse_hyperplane_sweep = !other.reverse_hyperplane_sweep;
    const bool other_ok =
        hyperplane_instance(a, b, c, ell, other, opt.workers).empty();
    rec.info(cat("layer order ",
                 opt.conventions.reverse_hyperplane_sweep ? "ascending"
                                                          : "descending",
                 " <pi(x),v> is in use; the opposite order ",
                 other_ok ? "also passes" : "fails"));
  }
}

std::map<std::size_t, std::size_t> pro_histogram(const LabelingSpace& s,
                                                 unsigned workers) {
  auto set = s.enumerate();
  return orbit_decomposition(set, pro_action(s), workers).histogram();
}

std::map<std::size_t, std::size_t> row_histogram(const Poset& q, int ell,
                                                 const Conventions& c,
                                                 unsigned workers) {
  PartitionSpace ps(q, ell);
  auto set = ps.enumerate();
  return orbit_decomposition(
             set, toggle_action(ps, rowmotion_sequence(q, c)), workers)
      .histogram();
}

void multifold(Recorder& rec, const SuiteOptions& opt) {
  {
    const int a = 2, b = 2, c = 2, ell = 2, q = a + b + c - 1;
    auto fam = [&](int x, int y) {
      const Poset p = product_of_chains(std::vector<int>{x, y});
      return pro_histogram(LabelingSpace(p, ell, from_global_bound(p, q)),
                           opt.workers);
    };
    const auto hab = fam(a, b), hac = fam(a, c), hbc = fam(b, c);
    const auto row = row_histogram(product_of_chains(std::vector<int>{a, b, c}),
                                   ell, opt.conventions, opt.workers);
    rec.check(hab == hac && hac == hbc && hab == row,
              cat("(a,b,c,ell)=(2,2,2,2): Pro orbits ", show(hab),
                  " on all three families; Row on A^2([2]x[2]x[2]) ",
                  show(row)));
  }
  {
    const int a = 2, b = 3, ell = 2;
    const Poset p = product_of_chains(std::vector<int>{a, b});
    const auto flagged = pro_histogram(
        LabelingSpace(p, ell, from_flags(p, typea_flag(p))), opt.workers);
    const Poset tri = triangle(a);
    const auto tri_pro = pro_histogram(
        LabelingSpace(tri, ell, from_global_bound(tri, a + b)), opt.workers);
    const auto row =
        row_histogram(product(tri, chain(b)), ell, opt.conventions, opt.workers);
    rec.check(flagged == tri_pro && flagged == row,
              cat("flagged (a,b,ell)=(2,3,2): Pro orbits ", show(flagged),
                  "; triangle:2 Pro ", show(tri_pro), "; Row ", show(row)));
  }
}

void minuscule(Recorder& rec, const SuiteOptions& opt) {
  const std::pair<const char*, int> grid[] = {
      {"prod:2x3", 5}, {"staircase:2", 4}, {"propeller:1", 6}};
  for (auto [spec, h] : grid) {
    const Poset p = build_poset(spec);
    if (coxeter_number(spec) != h)
      throw InvariantViolation(cat("coxeter number mismatch for ", spec));
    PartitionSpace ps(p, 2);
    auto set = ps.enumerate();
    auto dr = orbit_decomposition(
        set, toggle_action(ps, rowmotion_sequence(p, opt.conventions)),
        opt.workers);
    const int n = rank_profile(p).top_rank;
    LabelingSpace s(p, 2, from_global_bound(p, n + 2));
    auto ls = s.enumerate();
    auto dp = orbit_decomposition(ls, pro_action(s), opt.workers);
    rec.check(order_of(dr) == static_cast<unsigned long long>(h) &&
                  order_of(dp) == static_cast<unsigned long long>(h),
              cat(spec, " (h=", h, "): Row on A^2 order ", order_of(dr),
                  ", Pro on L(R^", n + 2, ") order ", order_of(dp)));
  }
}

void vee_sweeps(Recorder& rec, const SuiteOptions& opt) {
  for (int m = 1; m <= 3; ++m)
    for (int ell = 1; ell <= 3; ++ell) {
      const Poset q = product(vee(), chain(m));
      PartitionSpace ps(q, ell);
      auto set = ps.enumerate();
      auto d = orbit_decomposition(
          set, toggle_action(ps, rowmotion_sequence(q, opt.conventions)),
          opt.workers);
      rec.check(all_sizes_divide(d, 2 * (m + 2)),
                cat("Row on A^", ell, "(V x [", m, "]): orbits ",
                    show(d.histogram()), " divide ", 2 * (m + 2)));
    }
  for (int ell = 1; ell <= 3; ++ell)
    for (int q = 2; q <= 6; ++q) {
      const Poset p = vee();
      LabelingSpace s(p, ell, from_global_bound(p, q));
      auto set = s.enumerate();
      auto d = orbit_decomposition(set, pro_action(s), opt.workers);
      rec.check(all_sizes_divide(d, 2 * q),
                cat("Pro on L_(V x [", ell, "])(R^", q, "): orbits ",
                    show(d.histogram()), " divide ", 2 * q));
    }
}

void antipodal_conjecture(Recorder& rec, const SuiteOptions& opt) {
  const int top = opt.scale == Scale::Full ? 6 : 3;
  for (int a = 1; a <= top; ++a) {
    const Poset q = product_of_chains(std::vector<int>{a, 2, 2});
    PartitionSpace ps(q, 2);
    auto set = ps.enumerate();
    auto d = orbit_decomposition(
        set, toggle_action(ps, rowmotion_sequence(q, opt.conventions)),
        opt.workers);
    int pairs = 0, good = 0;
    for (Element x = 0; x < q.size(); ++x) {
      const Element y = antipode(q, x);
      if (y < x) continue;
      auto h = homomesy_check(set, d, [x, y](std::span<const int> s) {
        return static_cast<long long>(s[x]) + s[y];
      });
      ++pairs;
      good += h.homomesic && h.c == Rational(2);
    }
    rec.check(good == pairs,
              cat("A^2([", a, "]x[2]x[2]) under Row: |A|=", set.size(),
                  ", antipodal chi_S 2-mesic for ", good, "/", pairs,
                  " pairs"));
  }
}

void mutations(Recorder& rec, const SuiteOptions& opt) {
  struct Mutation {
    const char* name;
    Conventions conv;
    std::vector<int> watch;
  };
  auto with = [](auto setter) {
    Conventions c;
    setter(c);
    return c;
  };
  const Mutation list[] = {
      {"flip phi2 ideal orientation",
       with([](Conventions& c) { c.flip_ideal_orientation = true; }),
       {1, 2, 10}},
      {"reverse TogPro sweep",
       with([](Conventions& c) { c.reverse_togpro_sweep = true; }),
       {1, 2, 10}},
      {"reverse hyperplane sweep",
       with([](Conventions& c) { c.reverse_hyperplane_sweep = true; }),
       {1, 2, 10}},
      {"reverse Row sweep",
       with([](Conventions& c) { c.reverse_row_sweep = true; }),
       {9}},
  };
  std::map<int, bool> baseline;
  SuiteOptions base = opt;
  base.conventions = Conventions{};
  for (const auto& m : list)
    for (int id : m.watch)
      if (!baseline.count(id)) baseline[id] = run_criterion(id, base).passed;
  for (const auto& m : list) {
    SuiteOptions mo = opt;
    mo.conventions = m.conv;
    std::string caught;
    for (int id : m.watch) {
      if (!baseline[id]) continue;
      auto r = run_criterion(id, mo);
      // A thrown exception is a crash, not a detected discrepancy.
      if (!r.passed && r.failure.rfind("exception", 0) != 0)
        caught += (caught.empty() ? "" : ",") + std::to_string(id);
    }
    rec.check(!caught.empty(),
              cat(m.name, ": ", caught.empty() ? "undetected" : "fails " + caught));
  }
}

using Runner = void (*)(Recorder&, const SuiteOptions&);

struct Entry {
  const char* title;
  Runner run;
};

const Entry kCriteria[kCriterionCount] = {
    {"equivariance Phi o Pro = TogPro o Phi", equivariance},
    {"Bender-Knuth equivariance Phi o rho_k = tau_k o Phi", bk_equivariance},
    {"order a+b of Pro on L_([a]x[b])x[ell](R^(a+b))", order_a_plus_b},
    {"golden Row orbit structures", golden_orbits},
    {"homomesy on SSYT and antipodal labelings", homomesy},
    {"distribution complement laws", distributions},
    {"resonance of Con and Diff", resonance},
    {"structural Gamma isomorphisms", structural},
    {"TogPro slice decomposition", slices},
    {"hyperplane promotion equivariance", hyperplane},
    {"multifold symmetry orbit multisets", multifold},
    {"minuscule order h", minuscule},
    {"V-poset order sweeps", vee_sweeps},
    {"antipodal 2-mesy on A^2([a]x[2]x[2])", antipodal_conjecture},
    {"mutation sensitivity", mutations},
};

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) return "unknown";
  return kCriteria[id - 1].title;
}

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  if (id < 1 || id > kCriterionCount) {
    r.failure = "no such criterion";
    return r;
  }
  const auto t0 = std::chrono::steady_clock::now();
  Recorder rec(r);
  try {
    kCriteria[id - 1].run(rec, opt);
    r.passed = rec.all();
  } catch (const std::exception& e) {
    r.passed = false;
    r.failure = std::string("exception: ") + e.what();
    r.notes.push_back("FAIL " + r.failure);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opt,
                                       std::span<const int> ids) {
  std::vector<CriterionResult> out;
  if (ids.empty())
    for (int id = 1; id <= kCriterionCount; ++id)
      out.push_back(run_criterion(id, opt));
  else
    for (int id : ids) out.push_back(run_criterion(id, opt));
  return out;
}

}  // namespace orbitkit
