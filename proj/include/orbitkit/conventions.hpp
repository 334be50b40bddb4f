#pragma once

namespace orbitkit {

/// Orientation switches for the bijection and the toggle sweeps. The default
/// value is the correct convention; every flag set to true is a deliberate
/// mutation used to check that the verification suite can tell them apart.
struct Conventions {
  /// phi2 uses O_i = {(p,k) : k < f(p,i)} instead of k >= f(p,i).
  bool flip_ideal_orientation = false;
  /// TogPro applies tau_k for k descending.
  bool reverse_togpro_sweep = false;
  /// Pro_{pi,v} applies hyperplane layers in ascending order of <pi(x),v>.
  bool reverse_hyperplane_sweep = false;
  /// Row toggles along the linear extension bottom-up (this is Row^{-1}).
  bool reverse_row_sweep = false;

  bool is_default() const {
    return !flip_ideal_orientation && !reverse_togpro_sweep &&
           !reverse_hyperplane_sweep && !reverse_row_sweep;
  }
};

}  // namespace orbitkit
