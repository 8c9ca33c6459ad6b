#include "mlab/complex_gauge.hpp"

#include <cmath>

namespace mlab {

namespace {

double rel(double diff, double scale) { return diff / (1.0 + scale); }

void require_scalar(const FourierForm& f, const char* what) {
  if (f.tag().n != 1) throw std::invalid_argument(std::string(what) + ": needs a scalar-valued form");
}

}  // namespace

MeromorphicTwoForm::MeromorphicTwoForm(CxSurfacePtr S, std::optional<cplx> pole)
    : surf_(std::move(S)), pole_(pole) {
  if (pole_) {
    auto [x, y] = surf_->E1.torus_coords(*pole_);
    double fx = x - std::round(x), fy = y - std::round(y);
    if (std::abs(fx) < 1e-9 && std::abs(fy) < 1e-9)
      throw std::invalid_argument("MeromorphicTwoForm: pole offset must avoid the lattice");
  }
}

cplx MeromorphicTwoForm::pole() const {
  if (!pole_) throw std::logic_error("MeromorphicTwoForm: closed form has no pole");
  return *pole_;
}

cplx MeromorphicTwoForm::eta(cplx z1) const {
  if (!pole_) return cplx{1.0, 0.0};
  return surf_->E1.zeta(z1) - surf_->E1.zeta(z1 - *pole_);
}

std::vector<PolarComponent> MeromorphicTwoForm::components() const {
  if (!pole_) return {};
  return {{cplx{0.0, 0.0}, +1}, {*pole_, -1}};
}

cplx residue_symbolic(const MeromorphicTwoForm& sigma, const PolarComponent& comp) {
  for (const auto& c : sigma.components())
    if (std::abs(c.location - comp.location) < 1e-12)
      return cplx{static_cast<double>(c.residue_sign), 0.0};
  throw std::invalid_argument("residue_symbolic: component not in the polar set");
}

cplx residue_contour(const MeromorphicTwoForm& sigma, const PolarComponent& comp, int points) {
  const EllipticCurve& E1 = sigma.surface()->E1;
  double sep = sigma.closed() ? 1.0 : E1.torus_distance(sigma.pole(), 0.0);
  double lat = std::min(std::abs(E1.w1()), std::abs(E1.w2()));
  double r = 0.25 * std::min(sep, lat);
  cplx acc{0.0, 0.0};
  for (int j = 0; j < points; ++j) {
    double th = 2.0 * kPi * j / points;
    cplx dz = r * std::polar(1.0, th);
    acc += sigma.eta(comp.location + dz) * cplx{0.0, 1.0} * dz;
  }
  return acc * (1.0 / points) * 2.0 * kPi / kTwoPiI;
}

double residue_ellipticity_defect(const MeromorphicTwoForm& sigma) {
  const EllipticCurve& E1 = sigma.surface()->E1;
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    // fixed sample points, kept away from the poles
    double x = 0.11 + 0.09 * i, y = 0.77 - 0.08 * i;
    cplx z = E1.point(x - std::floor(x), y - std::floor(y));
    if (!sigma.closed()) {
      if (E1.torus_distance(z, 0.0) < 0.1 || E1.torus_distance(z, sigma.pole()) < 0.1) continue;
    }
    cplx v = sigma.eta(z);
    worst = std::max(worst, std::abs(sigma.eta(z + E1.w1()) - v));
    worst = std::max(worst, std::abs(sigma.eta(z + E1.w2()) - v));
  }
  return worst;
}

SigmaIntegrator::SigmaIntegrator(MeromorphicTwoForm sigma, QuadratureScheme scheme)
    : sigma_(std::move(sigma)), scheme_(scheme) {}

cplx SigmaIntegrator::integrate(const FourierForm& v02) const {
  require_scalar(v02, "SigmaIntegrator::integrate");
  if (v02.q() != 2) throw std::invalid_argument("SigmaIntegrator::integrate: needs a (0,2)-form");
  const int B = v02.band();
  if (!moments_ || moments_->band() < B)
    moments_.emplace(sigma_.surface()->E1, sigma_.pole_opt(), scheme_, B);
  cplx sum{0.0, 0.0};
  for (int k1 = -B; k1 <= B; ++k1)
    for (int k2 = -B; k2 <= B; ++k2)
      sum += v02.at(0, 0, 0, k1, k2, 0, 0) * moments_->moment(k1, k2);
  cplx D1 = sigma_.surface()->E1.pairing_factor();
  cplx D2 = sigma_.surface()->E2.pairing_factor();
  return -D1 * D2 * sum;
}

cplx polar_pairing(const MeromorphicTwoForm& sigma, const FourierForm& u01) {
  require_scalar(u01, "polar_pairing");
  if (u01.q() != 1) throw std::invalid_argument("polar_pairing: needs a (0,1)-form");
  cplx D2 = sigma.surface()->E2.pairing_factor();
  cplx acc{0.0, 0.0};
  for (const auto& comp : sigma.components()) {
    CurveForm rest = u01.restrict_to(comp.location);
    acc += static_cast<double>(comp.residue_sign) * rest.zero_mode()(0, 0);
  }
  return -kTwoPiI * D2 * acc;
}

StokesLerayResult stokes_leray_check(const SigmaIntegrator& I, const FourierForm& u01) {
  require_scalar(u01, "stokes_leray_check");
  cplx lhs = I.integrate(u01.dbar());
  cplx rhs = polar_pairing(I.sigma(), u01);
  return {lhs, rhs, std::abs(lhs - rhs) / (1.0 + std::abs(rhs))};
}

cplx chain_pair(const SigmaIntegrator& I, const FourierForm& v02) { return I.integrate(v02); }

cplx symplectic_Wc(const SigmaIntegrator& I, const FourierForm& a, const FourierForm& b) {
  return I.integrate(fwedge11(a, b).trace());
}

FourierForm gauge_direction_c(const FourierForm& A, const FourierForm& eps) {
  return eps.dbar() + fform_bracket(A, eps);
}

FourierForm curvature_02(const FourierForm& A) { return A.dbar() + fwedge11(A, A); }

cplx hamiltonian_c(const SigmaIntegrator& I, const FourierForm& A, const FourierForm& eps) {
  FourierForm F = curvature_02(A);
  return I.integrate(flmul0(eps, F).trace()) - polar_pairing(I.sigma(), flmul0(eps, A).trace());
}

cplx cocycle_c(const MeromorphicTwoForm& sigma, const FourierForm& e1, const FourierForm& e2) {
  return polar_pairing(sigma, flmul0(e1, e2.dbar()).trace());
}

MomentumValueC momentum_c(const MeromorphicTwoForm& sigma, const FourierForm& A) {
  MomentumValueC mu{curvature_02(A), {}, 1.0};
  for (const auto& comp : sigma.components())
    mu.restrictions.push_back(A.restrict_to(comp.location));
  return mu;
}

cplx dual_pairing_c(const SigmaIntegrator& I, const MomentumValueC& mu, const FourierForm& eps,
                    cplx z) {
  cplx total = I.integrate(flmul0(eps, mu.F02).trace());
  auto comps = I.sigma().components();
  cplx D2 = I.sigma().surface()->E2.pairing_factor();
  cplx acc{0.0, 0.0};
  for (std::size_t c = 0; c < comps.size(); ++c) {
    CurveForm eps_rest = eps.restrict_to(comps[c].location);
    CurveForm prod = cmul(eps_rest, mu.restrictions[c]).trace();
    acc += static_cast<double>(comps[c].residue_sign) * prod.zero_mode()(0, 0);
  }
  total -= -kTwoPiI * D2 * acc;
  return total + z * mu.x;
}

double variation_residual_c(const SigmaIntegrator& I, const FourierForm& A, const FourierForm& eps,
                            const FourierForm& dir) {
  FourierForm dF = dir.dbar() + fwedge11(dir, A) + fwedge11(A, dir);
  cplx lhs =
      I.integrate(flmul0(eps, dF).trace()) - polar_pairing(I.sigma(), flmul0(eps, dir).trace());
  cplx rhs = symplectic_Wc(I, dir, gauge_direction_c(A, eps));
  return rel(std::abs(lhs - rhs), std::abs(rhs));
}

double extension_identity_residual_c(const SigmaIntegrator& I, const FourierForm& A,
                                     const FourierForm& e1, const FourierForm& e2) {
  cplx lhs = symplectic_Wc(I, gauge_direction_c(A, e1), gauge_direction_c(A, e2));
  FourierForm br = fmul00(e1, e2) - fmul00(e2, e1);
  cplx rhs = hamiltonian_c(I, A, br) + cocycle_c(I.sigma(), e1, e2);
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

cplx jacobian_class(const CurveForm& C01) {
  if (C01.n() != 1) throw std::invalid_argument("jacobian_class: abelian structure group only");
  if (C01.q() != 1) throw std::invalid_argument("jacobian_class: needs a (0,1)-form on the curve");
  return C01.zero_mode()(0, 0);
}

FourierForm zero_polar_restrictions(const MeromorphicTwoForm& sigma, FourierForm eps) {
  if (sigma.closed()) return eps;
  if (eps.q() != 0) throw std::invalid_argument("zero_polar_restrictions: needs a section");
  auto comps = sigma.components();
  const int B = eps.band();
  const int L = 2 * B + 1;
  const int n = eps.tag().n;
  // phase vectors over (k1,k2), one per component
  std::vector<std::vector<cplx>> phi;
  for (const auto& c : comps) {
    auto [xc, yc] = sigma.surface()->E1.torus_coords(c.location);
    std::vector<cplx> v(L * L);
    for (int k1 = -B; k1 <= B; ++k1)
      for (int k2 = -B; k2 <= B; ++k2)
        v[(k1 + B) * L + (k2 + B)] = std::exp(kTwoPiI * (k1 * xc + k2 * yc));
    phi.push_back(std::move(v));
  }
  Eigen::Matrix2cd G;
  for (int c = 0; c < 2; ++c)
    for (int d = 0; d < 2; ++d) {
      cplx g{0.0, 0.0};
      for (int m = 0; m < L * L; ++m) g += phi[c][m] * std::conj(phi[d][m]);
      G(c, d) = g;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& data = eps.entry(0, i, j);
      const int stride = L * L;
      for (int off = 0; off < L * L; ++off) {  // (k3,k4) slice offset
        Eigen::Vector2cd r;
        for (int c = 0; c < 2; ++c) {
          cplx acc{0.0, 0.0};
          for (int m = 0; m < L * L; ++m) acc += phi[c][m] * data[m * stride + off];
          r(c) = acc;
        }
        Eigen::Vector2cd x = G.fullPivLu().solve(r);
        for (int m = 0; m < L * L; ++m)
          data[m * stride + off] -= x(0) * std::conj(phi[0][m]) + x(1) * std::conj(phi[1][m]);
      }
    }
  return eps;
}

LeafVelocity leaf_invariance_check(const MeromorphicTwoForm& sigma, const FourierForm& A,
                                   const FourierForm& eps, bool enforce) {
  if (enforce) {
    for (const auto& comp : sigma.components()) {
      double r = eps.restrict_to(comp.location).l2_norm();
      if (r > 1e-10 * (1.0 + eps.max_abs()))
        throw std::invalid_argument("leaf_invariance_check: eps has nonzero polar restriction");
    }
  }
  FourierForm v = gauge_direction_c(A, eps);
  LeafVelocity out{0.0, 0.0};
  for (const auto& comp : sigma.components()) {
    CurveForm rest = v.restrict_to(comp.location);
    out.label_velocity = std::max(out.label_velocity, std::abs(jacobian_class(rest)));
    out.restriction_norm = std::max(out.restriction_norm, rest.l2_norm());
  }
  return out;
}

FourierForm harmonic_class(CxSurfacePtr S, int which, cplx coefficient) {
  FourierForm f = FourierForm::zero(std::move(S), StructureGroup::cstar(), 1, 0);
  f.at(which - 1, 0, 0, 0, 0, 0, 0) = coefficient;
  return f;
}

}  // namespace mlab
