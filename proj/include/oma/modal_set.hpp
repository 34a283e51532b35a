#ifndef OMA_MODAL_SET_HPP
#define OMA_MODAL_SET_HPP

#include <algorithm>
#include <vector>

#include "oma/core.hpp"

namespace oma {

/// One identified (or analytical) mode: natural frequency [Hz], damping
/// ratio, and a complex mode shape normalized so that the entry of largest
/// magnitude equals 1 (real positive).
struct Mode {
  double f_n = 0.0;
  double zeta_n = 0.0;
  VectorXcd phi_n;
};

/// Rotates and scales a shape so its largest-magnitude entry becomes 1.
inline VectorXcd unit_max_normalize(const VectorXcd& phi) {
  require(phi.size() > 0, "empty mode shape");
  Eigen::Index imax = 0;
  phi.cwiseAbs().maxCoeff(&imax);
  const Complex pivot = phi[imax];
  require(std::abs(pivot) > 0.0, "zero mode shape");
  return phi / pivot;
}

/// Identified modal parameters sorted ascending by frequency. Poles that
/// were rejected as non-physical (positive real part, or non-oscillatory)
/// are kept for diagnostics; their count is a useful noise indicator.
struct ModalSet {
  std::vector<Mode> modes;
  std::vector<Complex> spurious_poles;

  int size() const { return static_cast<int>(modes.size()); }

  void sort_by_frequency() {
    std::sort(modes.begin(), modes.end(),
              [](const Mode& a, const Mode& b) { return a.f_n < b.f_n; });
  }

  void validate() const {
    for (const auto& m : modes) {
      require(m.f_n > 0.0, "ModalSet: f_n must be > 0");
      require(m.zeta_n > 0.0 && m.zeta_n < 1.0, "ModalSet: zeta_n must be in (0,1)");
    }
  }
};

}  // namespace oma

#endif  // OMA_MODAL_SET_HPP
