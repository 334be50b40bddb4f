#pragma once

#include "json.hpp"
#include <ostream>
#include <span>
#include <string>

#include "orbitkit/dynamics.hpp"
#include "orbitkit/gamma.hpp"
#include "orbitkit/poset.hpp"
#include "orbitkit/restriction.hpp"
#include "orbitkit/state_table.hpp"

namespace orbitkit {

using nlohmann::json;

json to_json(const Poset& p);
json to_json(const Restriction& r);
json to_json(const GammaPoset& g);
json to_json(const HomomesyReport& h);
json to_json(const ResonanceReport& r);

/// {labels, ell, restriction_ref}; restriction_ref names the restriction the
/// labeling was drawn from.
json labeling_json(std::span<const int> f, int ell,
                   const std::string& restriction_ref);
/// {values, ell, poset_ref}.
json partition_json(std::span<const int> sigma, int ell,
                    const std::string& poset_ref);

/// {"5": 30, "9": 2}. Keys are decimal sizes and sort as strings.
json histogram_json(const OrbitDecomposition& d);

/// One row per orbit: representative index, size, and the state itself.
void write_orbits_csv(std::ostream& out, const StateTable& set,
                      const OrbitDecomposition& d);

/// Reads a JSON array of integer arrays.
std::vector<State> states_from_json(const json& j);

}  // namespace orbitkit
