#pragma once

#include <optional>

#include "mlab/fourier.hpp"
#include "mlab/quadrature.hpp"

namespace mlab {

struct PolarComponent {
  cplx location;     // 0 or p in E1
  int residue_sign;  // +1 at 0, -1 at p
};

/// sigma = eta_p(z1) dz1 ^ dz2 with eta_p(z) = zeta(z) - zeta(z - p), or the
/// holomorphic dz1 ^ dz2 (closed case, empty polar set). The polar set is the
/// pair of disjoint elliptic curves {0} x E2 and {p} x E2.
class MeromorphicTwoForm {
 public:
  MeromorphicTwoForm(CxSurfacePtr S, std::optional<cplx> pole);

  const CxSurfacePtr& surface() const { return surf_; }
  bool closed() const { return !pole_.has_value(); }
  cplx pole() const;
  std::optional<cplx> pole_opt() const { return pole_; }

  /// Coefficient function eta(z1) (1 in the closed case).
  cplx eta(cplx z1) const;
  std::vector<PolarComponent> components() const;

 private:
  CxSurfacePtr surf_;
  std::optional<cplx> pole_;
};

/// Residue coefficient of dz2 on a component, read off the Laurent expansion.
cplx residue_symbolic(const MeromorphicTwoForm& sigma, const PolarComponent& comp);
/// Same number from a trapezoid contour integral (1/2pii) oint eta dz1.
cplx residue_contour(const MeromorphicTwoForm& sigma, const PolarComponent& comp,
                     int points = 256);
/// Max violation of double periodicity of eta over sample points and periods.
double residue_ellipticity_defect(const MeromorphicTwoForm& sigma);

/// Surface integrals against sigma through the singularity-refined moment
/// quadrature. The moment cache grows on demand; instances are thread-confined.
class SigmaIntegrator {
 public:
  SigmaIntegrator(MeromorphicTwoForm sigma, QuadratureScheme scheme);

  /// int_S sigma ^ v for a scalar-valued (0,2)-form.
  cplx integrate(const FourierForm& v02) const;

  const MeromorphicTwoForm& sigma() const { return sigma_; }
  const QuadratureScheme& scheme() const { return scheme_; }

 private:
  MeromorphicTwoForm sigma_;
  QuadratureScheme scheme_;
  mutable std::optional<SigmaMoments> moments_;
};

/// The polar boundary term of the Stokes-Leray formula for a scalar-valued
/// (0,1)-form: the residue pairing 2 pi i int_P res sigma ^ u, with the
/// components carrying the tube-boundary orientation (the orientation under
/// which the contour-normalized residues are +1/-1 at 0/p and
/// int_S sigma ^ dbar u equals this pairing).
cplx polar_pairing(const MeromorphicTwoForm& sigma, const FourierForm& u01);

struct StokesLerayResult {
  cplx lhs, rhs;
  double defect;
};
/// lhs = int_S sigma ^ dbar u by quadrature, rhs by exact residue pairing.
StokesLerayResult stokes_leray_check(const SigmaIntegrator& I, const FourierForm& u01);

/// Pairing of the pair (S, sigma) with (0,2)-forms.
cplx chain_pair(const SigmaIntegrator& I, const FourierForm& v02);

/// W_C(a, b) = int_S sigma ^ tr(a ^ b).
cplx symplectic_Wc(const SigmaIntegrator& I, const FourierForm& a, const FourierForm& b);

/// dbar eps + [A, eps].
FourierForm gauge_direction_c(const FourierForm& A, const FourierForm& eps);
/// F^{0,2} = dbar A + A ^ A, exact in the doubled band.
FourierForm curvature_02(const FourierForm& A);

/// H_eps = int_S sigma ^ tr(eps F) - 2 pi i int_P res sigma ^ tr(eps A).
cplx hamiltonian_c(const SigmaIntegrator& I, const FourierForm& A, const FourierForm& eps);

/// c(e1, e2) = 2 pi i int_P res sigma ^ tr(e1 dbar e2), by exact restriction.
cplx cocycle_c(const MeromorphicTwoForm& sigma, const FourierForm& e1, const FourierForm& e2);

struct MomentumValueC {
  FourierForm F02;
  std::vector<CurveForm> restrictions;  // (0,1)-forms on E2, per component
  double x = 1.0;
};
MomentumValueC momentum_c(const MeromorphicTwoForm& sigma, const FourierForm& A);
/// <(F, C, x), (eps, z)>; the polar term is assembled on the curve side.
cplx dual_pairing_c(const SigmaIntegrator& I, const MomentumValueC& mu, const FourierForm& eps,
                    cplx z);

/// |deltaH_eps(a) - Wc(a, dbar eps + [A, eps])| / scale.
double variation_residual_c(const SigmaIntegrator& I, const FourierForm& A, const FourierForm& eps,
                            const FourierForm& dir);
/// |Wc(nabla e1, nabla e2) - H_[e1,e2] - c(e1,e2)| / scale.
double extension_identity_residual_c(const SigmaIntegrator& I, const FourierForm& A,
                                     const FourierForm& e1, const FourierForm& e2);

/// Jacobian point of a degree-0 line bundle on E2: mean dzbar2 coefficient.
cplx jacobian_class(const CurveForm& C01);

/// Returns eps with its restriction to every polar component projected to
/// zero (exact linear projection in coefficient space).
FourierForm zero_polar_restrictions(const MeromorphicTwoForm& sigma, FourierForm eps);

struct LeafVelocity {
  double label_velocity;    // max_c |d/dt jacobian_class(restriction)|
  double restriction_norm;  // max_c L2 norm of the restricted direction
};
/// Velocity of the boundary restriction data along the gauge direction of
/// eps. With enforce set (the default), eps must restrict to zero on every
/// polar component; pass enforce = false to probe a control direction.
LeafVelocity leaf_invariance_check(const MeromorphicTwoForm& sigma, const FourierForm& A,
                                   const FourierForm& eps, bool enforce = true);

/// Harmonic anti-holomorphic classes: which = 1 -> c dzbar1, 2 -> c dzbar2.
FourierForm harmonic_class(CxSurfacePtr S, int which, cplx coefficient);

}  // namespace mlab
