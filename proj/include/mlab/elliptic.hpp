#pragma once

#include <utility>

#include "mlab/types.hpp"

namespace mlab {

/// Elliptic curve C / (Z w1 + Z w2) with Im(w2/w1) > 0. Quasi-periods are
/// computed from theta constants (eta1) and an unreduced zeta value at w2/2
/// (eta2), so the Legendre relation eta1 w2 - eta2 w1 = 2 pi i is a genuine
/// consistency check, not a definition.
class EllipticCurve {
 public:
  EllipticCurve(cplx w1, cplx w2);

  cplx w1() const { return w1_; }
  cplx w2() const { return w2_; }
  cplx eta1() const { return eta1_; }
  cplx eta2() const { return eta2_; }
  cplx tau() const { return tau_; }

  /// z = x w1 + y w2.
  cplx point(double x, double y) const { return x * w1_ + y * w2_; }
  std::pair<double, double> torus_coords(cplx z) const;

  /// Weierstrass zeta; quasi-periodic, ζ(z + wi) = ζ(z) + eta_i.
  /// Throws on (numerical) lattice points.
  cplx zeta(cplx z) const;

  /// Distance from z to the nearest lattice translate of c.
  double torus_distance(cplx z, cplx c) const;

  /// D with dz ^ dzbar = D dx ^ dy; purely imaginary, D = w1 conj(w2) - conj(w1) w2.
  cplx pairing_factor() const { return D_; }
  /// Euclidean area of the fundamental cell.
  double cell_area() const;

  /// d/dzbar multiplier of the mode e^{2 pi i (kx x + ky y)}.
  cplx dbar_coeff(int kx, int ky) const;

 private:
  cplx theta1(cplx v) const;
  cplx theta1_prime(cplx v) const;
  cplx zeta_raw(cplx z) const;  // no lattice reduction

  cplx w1_, w2_, tau_, q_, eta1_, eta2_, D_;
};

}  // namespace mlab
