#include "orbitkit/report.hpp"

#include "orbitkit/errors.hpp"

namespace orbitkit {

json to_json(const Poset& p) {
  json covers = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  json j{{"name", p.name()},
         {"element_count", p.size()},
         {"covers", std::move(covers)}};
  j["coords"] = p.has_coords() ? json(p.all_coords()) : json(nullptr);
  return j;
}

json to_json(const Restriction& r) {
  return {{"sets", r.sets()}, {"consistent", r.consistent()}};
}

json to_json(const GammaPoset& g) {
  json labels = json::array();
  for (const auto& l : g.labels()) labels.push_back({l.p, l.k});
  json j = to_json(g.poset());
  j["labels"] = std::move(labels);
  return j;
}

json to_json(const HomomesyReport& h) {
  json averages = json::array();
  for (const auto& a : h.averages) averages.push_back(to_string(a));
  json j{{"statistic", h.statistic},
         {"homomesic", h.homomesic},
         {"orbit_averages", std::move(averages)}};
  j["c"] = h.c ? json(to_string(*h.c)) : json(nullptr);
  return j;
}

json to_json(const ResonanceReport& r) {
  json j{{"projection", r.projection},
         {"omega", r.omega},
         {"shift", r.shift},
         {"verified", r.verified},
         {"degenerate", r.degenerate}};
  j["counterexample"] =
      r.counterexample ? json(*r.counterexample) : json(nullptr);
  return j;
}

json labeling_json(std::span<const int> f, int ell,
                   const std::string& restriction_ref) {
  return {{"labels", std::vector<int>(f.begin(), f.end())},
          {"ell", ell},
          {"restriction_ref", restriction_ref}};
}

json partition_json(std::span<const int> sigma, int ell,
                    const std::string& poset_ref) {
  return {{"values", std::vector<int>(sigma.begin(), sigma.end())},
          {"ell", ell},
          {"poset_ref", poset_ref}};
}

json histogram_json(const OrbitDecomposition& d) {
  json j = json::object();
  for (auto [size, count] : d.histogram()) j[std::to_string(size)] = count;
  return j;
}

void write_orbits_csv(std::ostream& out, const StateTable& set,
                      const OrbitDecomposition& d) {
  out << "orbit,size,representative\n";
  for (std::size_t o = 0; o < d.orbits.size(); ++o) {
    out << o << ',' << d.orbits[o].size() << ",\"";
    const auto s = set[d.orbits[o].front()];
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << "\"\n";
  }
}

std::vector<State> states_from_json(const json& j) {
  if (!j.is_array()) throw SpecError("expected a JSON array of states");
  std::vector<State> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw SpecError("each state must be an integer array");
    out.push_back(s.get<State>());
  }
  return out;
}

}  // namespace orbitkit
