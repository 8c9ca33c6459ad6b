#pragma once

#include <functional>
#include <map>

#include "mlab/polyform.hpp"

namespace mlab {

/// Point of the affine space of connections d + A.
struct ConnectionA {
  PwPolyForm a;  // degree-1 form
};

/// Value of the momentum map in the dual of the centrally extended gauge
/// algebra: curvature 2-form, tangential boundary data, central coordinate.
struct MomentumValue {
  PwPolyForm F;
  std::map<int, SPoly> C;  // boundary edge id -> canonical a->b tangential trace
  double x = 1.0;
};

/// Integral of tr(f0 * w1) over the boundary in the induced orientation.
cplx boundary_integrate_trace(const PwPolyForm& f0, const PwPolyForm& w1);

/// W(a,b) = integral over the surface of tr(a ^ b).
cplx symplectic_W(const PwPolyForm& a, const PwPolyForm& b);

/// nabla_A eps = d eps + [A, eps].
PwPolyForm gauge_direction(const ConnectionA& A, const PwPolyForm& eps);

/// dA + A ^ A.
PwPolyForm curvature(const ConnectionA& A);

/// H_eps = int tr(eps (dA + A^A)) - int_bdy tr(eps A).
cplx hamiltonian(const ConnectionA& A, const PwPolyForm& eps);

/// c(eps1, eps2) = int_bdy tr(eps1 d eps2).
cplx cocycle(const PwPolyForm& eps1, const PwPolyForm& eps2);

MomentumValue momentum(const ConnectionA& A);
cplx dual_pairing(const MomentumValue& mu, const PwPolyForm& eps, double z);

/// |deltaH_eps(a) - W(a, nabla_A eps)| / scale: the Hamiltonian-generator
/// identity, with the variation expanded analytically.
double variation_residual(const ConnectionA& A, const PwPolyForm& eps, const PwPolyForm& dir);

/// Central finite-difference slope of t -> H(A + t dir) against the same
/// W-pairing.
double fd_slope_residual(const ConnectionA& A, const PwPolyForm& eps, const PwPolyForm& dir,
                         double t);

/// |W(nabla eps1, nabla eps2) - H_[eps1,eps2] - c(eps1,eps2)| / scale.
double extension_identity_residual(const ConnectionA& A, const PwPolyForm& eps1,
                                   const PwPolyForm& eps2);

/// Same bracket relation, with the right side assembled through the momentum
/// map and dual pairing.
double momentum_bracket_residual(const ConnectionA& A, const PwPolyForm& eps1,
                                 const PwPolyForm& eps2);

/// Cyclic 2-cocycle identity c([e1,e2],e3) + c([e2,e3],e1) + c([e3,e1],e2).
double cocycle_cyclic_residual(const PwPolyForm& e1, const PwPolyForm& e2, const PwPolyForm& e3);

/// |W(g^-1 a g, g^-1 b g) - W(a, b)| for a constant group element.
double gauge_invariance_const_residual(const PwPolyForm& a, const PwPolyForm& b,
                                       const GroupElement& g);

/// Pointwise-varying gauge field version, evaluated on a shared quadrature
/// rule (the integrands agree pointwise, so any rule must agree to rounding).
double gauge_invariance_pointwise_residual(
    const PwPolyForm& a, const PwPolyForm& b,
    const std::function<Mat(int tri, double u, double v)>& gauge_field);

/// Gram matrix rank of W on the bubble basis of forms vanishing on the
/// boundary; returns (dimension, rank).
std::pair<int, int> w_gram_rank(SurfacePtr surf, StructureGroup tag, int extra_degree);

}  // namespace mlab
