#pragma once

#include <set>

#include "orbitkit/state_table.hpp"

inline std::set<orbitkit::State> as_set(const orbitkit::StateTable& t) {
  std::set<orbitkit::State> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.insert(t.state(i));
  return out;
}
