#include "orbitkit/actions.hpp"

#include <algorithm>

namespace orbitkit {

Action pro_action(const LabelingSpace& s) {
  return [&s](std::span<const int> in, std::span<int> out) {
    std::copy(in.begin(), in.end(), out.begin());
    s.promote(out);
  };
}

Action bk_action(const LabelingSpace& s, int k) {
  return [&s, k](std::span<const int> in, std::span<int> out) {
    std::copy(in.begin(), in.end(), out.begin());
    s.bender_knuth(out, k);
  };
}

Action toggle_action(const PartitionSpace& ps, ToggleSequence seq) {
  return [&ps, seq = std::move(seq)](std::span<const int> in,
                                     std::span<int> out) {
    std::copy(in.begin(), in.end(), out.begin());
    ps.apply(out, seq);
  };
}

}  // namespace orbitkit
