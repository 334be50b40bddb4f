#include "orbitkit/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numeric>
#include <sstream>

#include "orbitkit/actions.hpp"
#include "orbitkit/dynamics.hpp"
#include "orbitkit/gamma.hpp"
#include "orbitkit/pstrict.hpp"
#include "orbitkit/qpartition.hpp"
#include "orbitkit/restriction.hpp"
#include "orbitkit/suite.hpp"

namespace orbitkit {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::vector<int> parse_ints(std::string_view s, std::string_view what) {
  std::vector<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw UsageError("bad integer list in " + std::string(what) + ": '" +
                       std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string show(const std::map<std::size_t, std::size_t>& h) {
  std::string s;
  for (auto [size, count] : h)
    s += (s.empty() ? "" : " ") + std::to_string(size) + "^" +
         std::to_string(count);
  return s;
}

std::string show(std::span<const int> s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

// The enumerated set an action runs on, with everything it was built from.
// Heap members keep addresses stable for the callables that refer to them.
struct Universe {
  std::string family;  // labelings | partitions | gamma
  int ell = 0;
  Poset base;
  std::unique_ptr<LabelingSpace> space;
  std::unique_ptr<GammaPoset> gamma;
  std::unique_ptr<PartitionSpace> parts;
  std::unique_ptr<Bijection> phi;
  std::unique_ptr<StateTable> set;
  Action action;
  std::string action_name;
  std::string pi_name;

  json describe() const {
    json j{{"family", family}, {"poset", to_json(base)}, {"ell", ell}};
    if (space) j["restriction"] = to_json(space->restriction());
    if (gamma) j["gamma"] = to_json(*gamma);
    if (set) j["size"] = set->size();
    return j;
  }
};

std::string infer_family(const RunConfig& c) {
  static const std::vector<std::string> known{"labelings", "partitions",
                                              "gamma"};
  if (!c.family.empty()) {
    if (std::find(known.begin(), known.end(), c.family) == known.end())
      throw UsageError("unknown family '" + c.family + "'");
    return c.family;
  }
  const std::string& a = c.action;
  if (a == "pro" || starts_with(a, "bk:")) return "labelings";
  if (a == "togpro") return "gamma";
  if (a == "hpro")
    return starts_with(c.pi, "threechains:") || !c.restriction.empty()
               ? "gamma"
               : "partitions";
  if (a == "row") return c.restriction.empty() ? "partitions" : "gamma";
  if (a.empty()) return c.restriction.empty() ? "partitions" : "labelings";
  throw UsageError("unknown action '" + a + "'");
}

LatticeProjection read_projection_file(const std::string& path,
                                       std::vector<int> v) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read projection file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("projection file " + path + ": " + e.what());
  }
  LatticeProjection pi;
  pi.name = "file:" + path;
  pi.image = j.at("image").get<std::vector<std::vector<int>>>();
  pi.v = v.empty() ? j.at("v").get<std::vector<int>>() : std::move(v);
  return pi;
}

void bind_action(Universe& u, const RunConfig& c) {
  const std::string& a = c.action;
  if (a.empty()) return;
  const bool labeling_action = a == "pro" || starts_with(a, "bk:");
  if (labeling_action != (u.family == "labelings"))
    throw UsageError("action '" + a + "' does not act on " + u.family);
  u.action_name = a;
  if (a == "pro") {
    u.action = pro_action(*u.space);
  } else if (starts_with(a, "bk:")) {
    const auto k = parse_ints(std::string_view(a).substr(3), "bk:K");
    if (k.size() != 1) throw UsageError("bk needs one label, as in bk:2");
    u.action = bk_action(*u.space, k[0]);
  } else if (a == "row") {
    u.action = toggle_action(*u.parts,
                             rowmotion_sequence(u.parts->poset(), c.conventions));
  } else if (a == "togpro") {
    if (!u.gamma) throw UsageError("togpro acts on Gamma-partitions");
    u.action = toggle_action(*u.parts, togpro_sequence(*u.gamma, c.conventions));
  } else if (a == "hpro") {
    const Poset& q = u.parts->poset();
    LatticeProjection pi;
    if (starts_with(c.pi, "threechains:")) {
      const auto abc = parse_ints(std::string_view(c.pi).substr(12), "--pi");
      pi = threechains_projection(*u.gamma, u.base, abc.at(2));
      if (!c.v.empty()) pi.v = c.v;
    } else if (c.pi == "id") {
      pi = identity_projection(q, c.v.empty()
                                      ? std::vector<int>(q.is_product_of_chains()
                                                             ? q.chain_shape().size()
                                                             : 0,
                                                         1)
                                      : c.v);
    } else if (starts_with(c.pi, "file:")) {
      pi = read_projection_file(c.pi.substr(5), c.v);
    } else {
      throw UsageError("hpro needs --pi threechains:a,b,c, id or file:PATH");
    }
    u.pi_name = pi.name;
    u.action = toggle_action(*u.parts, hyperplane_sequence(q, pi, c.conventions));
  } else {
    throw UsageError("unknown action '" + a + "'");
  }
}

Universe build_universe(const RunConfig& c, bool enumerate = true) {
  Universe u;
  u.family = infer_family(c);
  u.ell = c.ell;
  if (c.cap == 0) throw UsageError("--cap must be positive");

  Restriction r;
  if (starts_with(c.pi, "threechains:") && c.action == "hpro") {
    const auto abc = parse_ints(std::string_view(c.pi).substr(12), "--pi");
    if (abc.size() != 3 || abc[0] < 1 || abc[1] < 1 || abc[2] < 1)
      throw UsageError("--pi threechains needs three positive sizes a,b,c");
    u.base = product_of_chains(std::vector<int>{abc[0], abc[1]});
    r = from_global_bound(u.base, abc[0] + abc[1] + abc[2] - 1);
    if (!c.poset.empty() &&
        build_poset(c.poset).chain_shape() != u.base.chain_shape())
      throw UsageError("--poset disagrees with --pi " + c.pi);
    if (!c.restriction.empty() && !(parse_restriction(u.base, c.restriction) == r))
      throw UsageError("--restriction disagrees with --pi " + c.pi);
  } else {
    if (c.poset.empty()) throw UsageError("--poset is required");
    u.base = build_poset(c.poset, c.cap);
    if (u.family != "partitions") {
      if (c.restriction.empty())
        throw UsageError(u.family + " need --restriction");
      r = parse_restriction(u.base, c.restriction);
    }
  }

  if (u.family == "partitions") {
    u.parts = std::make_unique<PartitionSpace>(u.base, c.ell);
  } else {
    u.space = std::make_unique<LabelingSpace>(u.base, c.ell, r);
    if (u.family == "gamma") {
      u.gamma = std::make_unique<GammaPoset>(
          gamma_poset(u.space->poset(), u.space->restriction()));
      u.parts = std::make_unique<PartitionSpace>(u.gamma->poset(), c.ell);
      u.phi = std::make_unique<Bijection>(*u.space, *u.gamma, c.conventions);
    }
  }
  if (enumerate)
    u.set = std::make_unique<StateTable>(
        u.family == "labelings" ? u.space->enumerate(c.cap)
                                : u.parts->enumerate(c.cap));
  bind_action(u, c);
  return u;
}

using NamedStatistic = std::pair<std::string, Statistic>;

std::vector<NamedStatistic> parse_statistics(const Universe& u,
                                             const std::vector<std::string>& specs) {
  std::vector<NamedStatistic> out;
  const bool lab = u.family == "labelings";
  const Poset& q = lab ? u.space->poset() : u.parts->poset();
  const std::size_t width = lab ? u.space->cells() : q.size();
  auto cell_of = [&](int p, int i) {
    if (p < 0 || static_cast<std::size_t>(p) >= q.size() || i < 1 || i > u.ell)
      throw UsageError("cell (" + std::to_string(p) + "," + std::to_string(i) +
                       ") is outside P x [ell]");
    return u.space->cell(p, i);
  };
  auto element = [&](int x) {
    if (x < 0 || static_cast<std::size_t>(x) >= width)
      throw UsageError("index " + std::to_string(x) + " out of range");
    return static_cast<std::size_t>(x);
  };
  auto node = [&](int p) {
    if (p < 0 || static_cast<std::size_t>(p) >= q.size())
      throw UsageError("element " + std::to_string(p) + " out of range");
    return static_cast<Element>(p);
  };
  auto sum_of = [](std::vector<std::size_t> idx) -> Statistic {
    return [idx = std::move(idx)](std::span<const int> s) {
      long long t = 0;
      for (auto i : idx) t += s[i];
      return t;
    };
  };
  auto partner = [&](std::size_t i) {
    return lab ? antipodal_cell(*u.space, i)
               : static_cast<std::size_t>(antipode(q, static_cast<Element>(i)));
  };

  for (const auto& spec : specs) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const auto args = colon == std::string::npos
                          ? std::vector<int>{}
                          : parse_ints(std::string_view(spec).substr(colon + 1),
                                       spec);
    auto need = [&](std::size_t n) {
      if (args.size() != n)
        throw UsageError("statistic '" + spec + "' takes " + std::to_string(n) +
                         " arguments");
    };
    if (kind == "total") {
      need(0);
      std::vector<std::size_t> all(width);
      std::iota(all.begin(), all.end(), 0);
      out.emplace_back(spec, sum_of(all));
    } else if (kind == "sum") {
      std::vector<std::size_t> idx;
      for (int x : args) idx.push_back(element(x));
      out.emplace_back(spec, sum_of(idx));
    } else if (kind == "all-antipodal") {
      need(0);
      for (std::size_t i = 0; i < width; ++i) {
        const std::size_t j = partner(i);
        if (j < i) continue;
        out.emplace_back("sum:" + std::to_string(i) + "," + std::to_string(j),
                         sum_of({i, j}));
      }
    } else if (lab && kind == "cell") {
      need(2);
      out.emplace_back(spec, sum_of({cell_of(args[0], args[1])}));
    } else if (lab && kind == "antipodal") {
      need(2);
      const auto i = cell_of(args[0], args[1]);
      out.emplace_back(spec, sum_of({i, partner(i)}));
    } else if (lab && kind == "boxcount") {
      need(2);
      const Element p = node(args[0]);
      const int d = args[1];
      const LabelingSpace* s = u.space.get();
      out.emplace_back(spec, [s, p, d](std::span<const int> f) {
        return static_cast<long long>(box_count(*s, f, p, d));
      });
    } else if (lab && kind == "boxcount-pair") {
      need(3);
      const Element p = node(args[0]);
      const Element pp = antipode(q, p);
      const int d = args[1], k = args[2];
      const LabelingSpace* s = u.space.get();
      out.emplace_back(spec, [s, p, pp, d, k](std::span<const int> f) {
        return static_cast<long long>(box_count(*s, f, p, d) +
                                      box_count(*s, f, pp, k - d));
      });
    } else if (lab && kind == "xi") {
      need(2);
      const Element p = node(args[0]);
      const int b = args[1];
      const LabelingSpace* s = u.space.get();
      out.emplace_back(spec, [s, p, b](std::span<const int> f) {
        return xi(*s, f, p, b);
      });
    } else if (!lab && kind == "value") {
      need(1);
      out.emplace_back(spec, sum_of({element(args[0])}));
    } else if (!lab && kind == "antipodal") {
      need(1);
      const auto i = element(args[0]);
      out.emplace_back(spec, sum_of({i, partner(i)}));
    } else {
      throw UsageError("unknown statistic '" + spec + "' for " + u.family);
    }
  }
  if (out.empty()) throw UsageError("no --stat given");
  return out;
}

void require_action(const Universe& u) {
  if (!u.action) throw UsageError("--action is required");
}

OrbitDecomposition decompose(const Universe& u, const RunConfig& c) {
  require_action(u);
  return orbit_decomposition(*u.set, u.action, c.workers,
                             u.family + ":" + u.base.name(), u.action_name);
}

json orbit_summary(const OrbitDecomposition& d) {
  return {{"orbit_sizes", histogram_json(d)},
          {"orbit_count", d.orbits.size()},
          {"order", order_of(d)}};
}

void write_csv(const RunConfig& c, const Universe& u,
               const OrbitDecomposition& d) {
  if (c.csv.empty()) return;
  std::ofstream out(c.csv);
  if (!out) throw UsageError("cannot write " + c.csv);
  write_orbits_csv(out, *u.set, d);
}

// --- subcommands ----------------------------------------------------------

void cmd_enumerate(const RunConfig& c, RunOutcome& r) {
  Universe u = build_universe(c);
  r.report["set"] = u.describe();
  r.report["count"] = u.set->size();
  if (c.list) {
    json states = json::array();
    for (std::size_t i = 0; i < u.set->size(); ++i)
      states.push_back(u.set->state(i));
    r.report["states"] = std::move(states);
  }
  r.text = "count: " + std::to_string(u.set->size()) + "\n";
}

void cmd_orbits(const RunConfig& c, RunOutcome& r, bool order_only) {
  Universe u = build_universe(c);
  auto d = decompose(u, c);
  r.report["set"] = u.describe();
  r.report["action"] = u.action_name;
  r.report.update(orbit_summary(d));
  write_csv(c, u, d);
  if (order_only) {
    r.text = std::to_string(order_of(d)) + "\n";
  } else {
    r.text = "states: " + std::to_string(u.set->size()) +
             "\norbits: " + std::to_string(d.orbits.size()) +
             "\nsizes: " + show(d.histogram()) +
             "\norder: " + std::to_string(order_of(d)) + "\n";
  }
}

void cmd_homomesy(const RunConfig& c, RunOutcome& r) {
  Universe u = build_universe(c);
  auto d = decompose(u, c);
  r.report["set"] = u.describe();
  r.report["action"] = u.action_name;
  r.report.update(orbit_summary(d));
  json hs = json::array();
  for (const auto& [name, stat] : parse_statistics(u, c.stats)) {
    auto h = homomesy_check(*u.set, d, stat, name);
    hs.push_back(to_json(h));
    r.text += name + ": " +
              (h.homomesic ? "homomesic, c = " + to_string(*h.c)
                           : std::string("not homomesic")) +
              "\n";
    if (!h.homomesic) r.exit_code = kExitFalsified;
  }
  r.report["homomesies"] = std::move(hs);
}

void cmd_distribution(const RunConfig& c, RunOutcome& r) {
  Universe u = build_universe(c);
  auto d = decompose(u, c);
  const auto stats = parse_statistics(u, c.stats);
  if (stats.size() != 2)
    throw UsageError("distribution needs exactly two statistics x and y");
  if (!c.constant) throw UsageError("distribution needs --constant");
  std::size_t steps = c.steps;
  if (steps == 0) {
    const auto ord = order_of(d);
    if (ord > kDefaultCap)
      throw UsageError("order " + std::to_string(ord) + " too large; pass --steps");
    steps = static_cast<std::size_t>(ord);
  }
  r.report["set"] = u.describe();
  r.report["action"] = u.action_name;
  r.report.update(orbit_summary(d));
  json law{{"x", stats[0].first},
           {"y", stats[1].first},
           {"steps", steps},
           {"constant", *c.constant}};
  const auto bad = complement_law_witness(*u.set, d, steps, stats[0].second,
                                          stats[1].second, *c.constant);
  law["holds"] = !bad.has_value();
  if (bad) {
    const auto s = u.set->state(*bad);
    law["certificate"] = {
        {"state", s},
        {"dist_x", distribution(*u.set, d, *bad, stats[0].second, steps)},
        {"dist_y", distribution(*u.set, d, *bad, stats[1].second, steps)}};
    r.exit_code = kExitFalsified;
    r.text = "complement law fails at " + show(s) + "\n";
  } else {
    r.text = "Dist(" + stats[1].first + ") = {" + std::to_string(*c.constant) +
             " - m : m in Dist(" + stats[0].first + ")} for every state\n";
  }
  r.report["distribution"] = std::move(law);
}

void cmd_resonance(const RunConfig& c, RunOutcome& r) {
  Universe u = build_universe(c);
  auto d = decompose(u, c);
  const Restriction* rest = u.space ? &u.space->restriction() : nullptr;
  if (!rest) throw UsageError("resonance needs --restriction");
  const int lo = rest->global_min();
  const int omega = c.omega ? c.omega : rest->global_max() - lo + 1;
  const int hi = lo + omega - 1;
  Projection proj;
  std::string name = c.projection.empty()
                         ? (u.family == "labelings" ? "con" : "diff")
                         : c.projection;
  if (name == "con") {
    if (u.family != "labelings") throw UsageError("con projects labelings");
    proj = [lo, hi](std::span<const int> f) { return binary_content(f, lo, hi); };
  } else if (name == "diff") {
    if (u.family != "gamma") throw UsageError("diff projects Gamma-partitions");
    const GammaPoset* g = u.gamma.get();
    const int ell = u.ell;
    proj = [g, rest, ell, lo, hi](std::span<const int> s) {
      return diff(*g, *rest, ell, s, lo, hi);
    };
  } else {
    throw UsageError("unknown projection '" + name + "'");
  }

  std::vector<int> shifts;
  if (c.shift)
    shifts.push_back(*c.shift);
  else
    for (int s = 1; s < std::max(omega, 2); ++s)
      if (std::gcd(s, omega) == 1) shifts.push_back(s);
  ResonanceReport found;
  bool ok = false;
  for (int s : shifts) {
    found = resonance_check(*u.set, d, proj, omega, name, s);
    if (found.verified) {
      ok = true;
      break;
    }
  }
  r.report["set"] = u.describe();
  r.report["action"] = u.action_name;
  r.report.update(orbit_summary(d));
  r.report["resonance"] = to_json(found);
  if (ok) {
    r.text = name + " resonates with frequency " + std::to_string(omega) +
             " (rotate left by " + std::to_string(found.shift) + ")\n";
  } else {
    r.exit_code = kExitFalsified;
    r.text = name + ": no rotation of order " + std::to_string(omega) +
             " intertwines the action\n";
    if (found.degenerate) r.text += "every word is fixed by rotation\n";
  }
}

void cmd_equivariance(const RunConfig& c, RunOutcome& r) {
  RunConfig gc = c;
  gc.family = "gamma";
  const bool bk = starts_with(c.action, "bk:");
  gc.action = c.action.empty() || bk ? "togpro" : c.action;
  if (gc.action == "pro") throw UsageError("name the partition-side action");
  Universe u = build_universe(gc);
  StateTable labelings = u.space->enumerate(c.cap);
  Action left = pro_action(*u.space);
  Action right = u.action;
  std::string claim = "Phi o Pro = " + gc.action + " o Phi";
  if (bk) {
    const auto k = parse_ints(std::string_view(c.action).substr(3), "bk:K");
    if (k.size() != 1) throw UsageError("bk needs one label, as in bk:2");
    left = bk_action(*u.space, k[0]);
    right = toggle_action(*u.parts, tau_k_sequence(*u.gamma, k[0]));
    claim = "Phi o rho_" + std::to_string(k[0]) + " = tau_" +
            std::to_string(k[0]) + " o Phi";
  }
  const Bijection* phi = u.phi.get();
  auto rep = equivariance_check(
      labelings, left, *u.set, right,
      [phi](std::span<const int> f) { return phi->phi(f); }, c.workers);
  r.report["set"] = u.describe();
  r.report["labelings"] = labelings.size();
  json cert = nullptr;
  if (rep.counterexample)
    cert = {{"labeling", labelings.state(*rep.counterexample)},
            {"detail", rep.detail}};
  r.report["equivariance"] = {{"claim", claim},
                              {"bijective", rep.bijective},
                              {"equivariant", rep.equivariant},
                              {"checked", rep.checked},
                              {"certificate", cert}};
  if (rep.bijective && rep.equivariant) {
    r.text = claim + " on all " + std::to_string(labelings.size()) +
             " labelings\n";
  } else {
    r.exit_code = kExitFalsified;
    r.text = claim + " fails: " + rep.detail + "\n";
  }
}

void cmd_bijection(const RunConfig& c, RunOutcome& r) {
  if (c.input.empty()) throw UsageError("bijection needs --in FILE");
  std::ifstream in(c.input);
  if (!in) throw UsageError("cannot read " + c.input);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(c.input + ": " + e.what());
  }
  const json& items = j.is_object() ? j.at("states") : j;
  std::vector<State> states;
  for (const auto& it : items) {
    if (it.is_object())
      states.push_back(it.at(c.inverse ? "values" : "labels").get<State>());
    else
      states.push_back(it.get<State>());
  }
  RunConfig gc = c;
  gc.family = "gamma";
  gc.action.clear();
  Universe u = build_universe(gc, false);
  const std::string rref = c.restriction;
  const std::string pref = "Gamma(" + u.base.name() + "," + c.restriction + ")";
  json images = json::array();
  for (const auto& s : states) {
    if (c.inverse) {
      if (!u.parts->is_valid(s))
        throw UsageError("not a Gamma-partition: " + show(s));
      images.push_back(labeling_json(u.phi->phi_inverse(s), u.ell, rref));
    } else {
      if (!u.space->is_valid(s)) throw UsageError("not a labeling: " + show(s));
      images.push_back(partition_json(u.phi->phi(s), u.ell, pref));
    }
  }
  r.report["set"] = u.describe();
  r.report["direction"] = c.inverse ? "inverse" : "forward";
  r.report["images"] = images;
  r.text = images.dump() + "\n";
}

void cmd_paper_suite(const RunConfig& c, RunOutcome& r) {
  SuiteOptions opt;
  if (c.scale == "small")
    opt.scale = Scale::Small;
  else if (c.scale == "full")
    opt.scale = Scale::Full;
  else
    throw UsageError("scale must be small or full");
  opt.conventions = c.conventions;
  opt.workers = c.workers;
  json rows = json::array();
  std::string failed;
  for (const auto& res : run_suite(opt)) {
    rows.push_back({{"id", res.id},
                    {"title", res.title},
                    {"passed", res.passed},
                    {"failure", res.failure},
                    {"notes", res.notes}});
    char line[160];
    std::snprintf(line, sizeof line, "[%s] criterion %2d: %s\n",
                  res.passed ? "PASS" : "FAIL", res.id, res.title.c_str());
    r.text += line;
    if (!res.passed) {
      r.text += "       first failure: " + res.failure + "\n";
      failed += (failed.empty() ? "" : ",") + std::to_string(res.id);
    }
  }
  r.report["scale"] = c.scale;
  r.report["criteria"] = std::move(rows);
  r.report["failed"] = failed;
  if (!failed.empty()) {
    r.exit_code = kExitFalsified;
    r.text += "failed criteria: " + failed + "\n";
  }
}

json config_json(const RunConfig& c) {
  return {{"poset", c.poset},       {"ell", c.ell},
          {"restriction", c.restriction}, {"family", c.family},
          {"action", c.action},     {"pi", c.pi},
          {"v", c.v},               {"stats", c.stats},
          {"cap", c.cap},           {"workers", c.workers}};
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  RunOutcome r;
  r.report = {{"command", config.command},
              {"generated_at", utc_now()},
              {"config", config_json(config)}};
  const std::string& cmd = config.command;
  if (cmd == "enumerate")
    cmd_enumerate(config, r);
  else if (cmd == "orbits")
    cmd_orbits(config, r, false);
  else if (cmd == "order")
    cmd_orbits(config, r, true);
  else if (cmd == "homomesy")
    cmd_homomesy(config, r);
  else if (cmd == "distribution")
    cmd_distribution(config, r);
  else if (cmd == "resonance")
    cmd_resonance(config, r);
  else if (cmd == "equivariance")
    cmd_equivariance(config, r);
  else if (cmd == "bijection")
    cmd_bijection(config, r);
  else if (cmd == "paper-suite" || cmd == "suite")
    cmd_paper_suite(config, r);
  else
    throw UsageError("unknown command '" + cmd + "'");
  r.report["exit_code"] = r.exit_code;
  if (!config.out.empty()) {
    std::ofstream out(config.out);
    if (!out) throw UsageError("cannot write " + config.out);
    out << r.report.dump(2) << '\n';
  }
  return r;
}

RunOutcome run_guarded(const RunConfig& config) {
  auto fail = [](int code, const std::string& what) {
    RunOutcome r;
    r.exit_code = code;
    r.text = "error: " + what + "\n";
    r.report = {{"error", what}, {"exit_code", code}};
    return r;
  };
  try {
    return run(config);
  } catch (const CapExceeded& e) {
    return fail(kExitUsage, std::string("cap exceeded: ") + e.what());
  } catch (const InvariantViolation& e) {
    return fail(kExitFalsified, e.what());
  } catch (const json::exception& e) {
    return fail(kExitUsage, e.what());
  } catch (const std::exception& e) {
    return fail(kExitUsage, e.what());
  }
}

}  // namespace orbitkit
