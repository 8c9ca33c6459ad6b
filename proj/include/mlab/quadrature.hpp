#pragma once

#include <optional>
#include <vector>

#include "mlab/elliptic.hpp"

namespace mlab {

/// Knobs of the singular surface quadrature. The E2 directions of a product
/// integrand are handled by exact trapezoid sums (exact below the Nyquist
/// band); the E1 cell carries the polar set and uses a smooth partition of
/// unity: a base grid for the cutoff remainder plus polar patches integrated
/// in polar coordinates with dyadic radial refinement toward each pole.
struct QuadratureScheme {
  int base_n = 24;     // base grid points per angle
  int depth = 3;       // dyadic radial segments per polar patch
  int n_rho = 5;       // Gauss points per radial segment
  int n_phi = 16;      // angular points per patch
  double r0 = 0.35;    // patch radius, relative to the pole separation

  /// Documented refinement ladder (levels 1,2,3,...) with geometric growth.
  static QuadratureScheme level(int lvl);
};

/// Moments int_{E1 cell} eta(z(x,y)) e^{2 pi i (k1 x + k2 y)} dx dy of the
/// sigma-coefficient eta against Fourier modes, up to a band. eta has simple
/// poles with residues +1 at 0 and -1 at p (or no poles in the closed case).
class SigmaMoments {
 public:
  SigmaMoments(const EllipticCurve& E1, std::optional<cplx> pole_p, const QuadratureScheme& s,
               int band);

  int band() const { return band_; }
  cplx moment(int k1, int k2) const {
    int L = 2 * band_ + 1;
    return moments_[(k1 + band_) * L + (k2 + band_)];
  }
  std::size_t point_count() const { return points_; }

 private:
  int band_;
  std::size_t points_ = 0;
  std::vector<cplx> moments_;
};

}  // namespace mlab
