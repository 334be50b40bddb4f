#pragma once

#include "orbitkit/dynamics.hpp"
#include "orbitkit/pstrict.hpp"
#include "orbitkit/qpartition.hpp"

namespace orbitkit {

// Adapters from the concrete maps to Action. The referenced spaces must
// outlive the returned callables.

Action pro_action(const LabelingSpace& s);
Action bk_action(const LabelingSpace& s, int k);
Action toggle_action(const PartitionSpace& ps, ToggleSequence seq);

}  // namespace orbitkit
