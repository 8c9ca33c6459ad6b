#include "mlab/real_gauge.hpp"

#include <Eigen/LU>

namespace mlab {

namespace {

double rel(double diff, double scale) { return diff / (1.0 + scale); }

cplx trace_pair_integral01(const SPoly& f, const SPoly& g) {
  return sintegral01(smul(f, g)).trace();
}

}  // namespace

cplx boundary_integrate_trace(const PwPolyForm& f0, const PwPolyForm& w1) {
  const auto& surf = *f0.surface();
  cplx total = 0.0;
  for (const auto& loop : surf.boundary_loops)
    for (const auto& be : loop) {
      double sgn = be.forward ? 1.0 : -1.0;
      SPoly e0 = f0.edge_trace(be.edge, 0);
      SPoly e1 = w1.edge_trace(be.edge, 0);
      total += sgn * trace_pair_integral01(e0, e1);
    }
  return total;
}

cplx symplectic_W(const PwPolyForm& a, const PwPolyForm& b) {
  return wedge11(a, b).integrate_trace();
}

PwPolyForm gauge_direction(const ConnectionA& A, const PwPolyForm& eps) {
  return eps.d() + form_bracket(A.a, eps);
}

PwPolyForm curvature(const ConnectionA& A) { return A.a.d() + wedge11(A.a, A.a); }

cplx hamiltonian(const ConnectionA& A, const PwPolyForm& eps) {
  PwPolyForm F = curvature(A);
  return lmul0(eps, F).integrate_trace() - boundary_integrate_trace(eps, A.a);
}

cplx cocycle(const PwPolyForm& eps1, const PwPolyForm& eps2) {
  const auto& surf = *eps1.surface();
  cplx total = 0.0;
  for (const auto& loop : surf.boundary_loops)
    for (const auto& be : loop) {
      double sgn = be.forward ? 1.0 : -1.0;
      SPoly e1 = eps1.edge_trace(be.edge, 0);
      SPoly de2 = sderiv(eps2.edge_trace(be.edge, 0));
      total += sgn * trace_pair_integral01(e1, de2);
    }
  return total;
}

MomentumValue momentum(const ConnectionA& A) {
  MomentumValue mu{curvature(A), {}, 1.0};
  const auto& surf = *A.a.surface();
  for (const auto& loop : surf.boundary_loops)
    for (const auto& be : loop) mu.C.emplace(be.edge, A.a.edge_trace(be.edge, 0));
  return mu;
}

cplx dual_pairing(const MomentumValue& mu, const PwPolyForm& eps, double z) {
  cplx total = lmul0(eps, mu.F).integrate_trace();
  const auto& surf = *eps.surface();
  for (const auto& loop : surf.boundary_loops)
    for (const auto& be : loop) {
      double sgn = be.forward ? 1.0 : -1.0;
      total -= sgn * trace_pair_integral01(eps.edge_trace(be.edge, 0), mu.C.at(be.edge));
    }
  return total + z * mu.x;
}

double variation_residual(const ConnectionA& A, const PwPolyForm& eps, const PwPolyForm& dir) {
  PwPolyForm dF = dir.d() + wedge11(dir, A.a) + wedge11(A.a, dir);
  cplx lhs = lmul0(eps, dF).integrate_trace() - boundary_integrate_trace(eps, dir);
  cplx rhs = symplectic_W(dir, gauge_direction(A, eps));
  return rel(std::abs(lhs - rhs), std::abs(rhs));
}

double fd_slope_residual(const ConnectionA& A, const PwPolyForm& eps, const PwPolyForm& dir,
                         double t) {
  ConnectionA plus{A.a + t * dir};
  ConnectionA minus{A.a + cplx{-t, 0.0} * dir};
  cplx slope = (hamiltonian(plus, eps) - hamiltonian(minus, eps)) / (2.0 * t);
  cplx rhs = symplectic_W(dir, gauge_direction(A, eps));
  return rel(std::abs(slope - rhs), std::abs(rhs));
}

double extension_identity_residual(const ConnectionA& A, const PwPolyForm& eps1,
                                   const PwPolyForm& eps2) {
  cplx lhs = symplectic_W(gauge_direction(A, eps1), gauge_direction(A, eps2));
  PwPolyForm br = mul00(eps1, eps2) - mul00(eps2, eps1);
  cplx rhs = hamiltonian(A, br) + cocycle(eps1, eps2);
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

double momentum_bracket_residual(const ConnectionA& A, const PwPolyForm& eps1,
                                 const PwPolyForm& eps2) {
  cplx lhs = symplectic_W(gauge_direction(A, eps1), gauge_direction(A, eps2));
  MomentumValue mu = momentum(A);
  PwPolyForm br = mul00(eps1, eps2) - mul00(eps2, eps1);
  cplx rhs = dual_pairing(mu, br, 0.0) + cocycle(eps1, eps2);
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

double cocycle_cyclic_residual(const PwPolyForm& e1, const PwPolyForm& e2, const PwPolyForm& e3) {
  auto br = [](const PwPolyForm& x, const PwPolyForm& y) { return mul00(x, y) - mul00(y, x); };
  cplx sum = cocycle(br(e1, e2), e3) + cocycle(br(e2, e3), e1) + cocycle(br(e3, e1), e2);
  return std::abs(sum);
}

namespace {

PwPolyForm conjugated(const PwPolyForm& w, const Mat& ginv, const Mat& g) {
  PwPolyForm out = w;
  out *= cplx{0.0, 0.0};
  const auto& surf = *w.surface();
  for (int c = 0; c < w.components(); ++c)
    for (int t = 0; t < surf.num_triangles(); ++t) {
      auto& dst = out.tri_coeffs(c, t);
      const auto& src = w.tri_coeffs(c, t);
      for (std::size_t m = 0; m < src.size(); ++m) dst[m] = ginv * src[m] * g;
    }
  return out;
}

}  // namespace

double gauge_invariance_const_residual(const PwPolyForm& a, const PwPolyForm& b,
                                       const GroupElement& g) {
  Mat ginv = g.m.inverse();
  cplx w0 = symplectic_W(a, b);
  cplx w1 = symplectic_W(conjugated(a, ginv, g.m), conjugated(b, ginv, g.m));
  return std::abs(w0 - w1);
}

double gauge_invariance_pointwise_residual(
    const PwPolyForm& a, const PwPolyForm& b,
    const std::function<Mat(int, double, double)>& gauge_field) {
  const auto& surf = *a.surface();
  TriRule rule = triangle_rule(a.poly_degree() + b.poly_degree() + 2);
  cplx w0 = 0.0, w1 = 0.0;
  for (int t = 0; t < surf.num_triangles(); ++t)
    for (std::size_t q = 0; q < rule.u.size(); ++q) {
      double u = rule.u[q], v = rule.v[q], w = rule.w[q];
      Mat P1 = a.eval(t, u, v, 0), Q1 = a.eval(t, u, v, 1);
      Mat P2 = b.eval(t, u, v, 0), Q2 = b.eval(t, u, v, 1);
      w0 += w * (P1 * Q2 - Q1 * P2).trace();
      Mat g = gauge_field(t, u, v);
      Mat gi = g.inverse();
      Mat cP1 = gi * P1 * g, cQ1 = gi * Q1 * g, cP2 = gi * P2 * g, cQ2 = gi * Q2 * g;
      w1 += w * (cP1 * cQ2 - cQ1 * cP2).trace();
    }
  return std::abs(w0 - w1) / (1.0 + std::abs(w0));
}

std::pair<int, int> w_gram_rank(SurfacePtr surf, StructureGroup tag, int extra_degree) {
  std::vector<PwPolyForm> basis;
  auto alg = algebra_basis(tag);
  for (int t = 0; t < surf->num_triangles(); ++t)
    for (int a = 0; a <= extra_degree; ++a)
      for (int b = 0; a + b <= extra_degree; ++b)
        for (int comp = 0; comp < 2; ++comp)
          for (const auto& x : alg) {
            PwPolyForm f = PwPolyForm::zero(surf, tag, 1, 3 + extra_degree);
            // bubble * u^a v^b in the chosen component
            auto& cs = f.tri_coeffs(comp, t);
            cs[poly::index(1 + a, 1 + b)] += x.m;
            cs[poly::index(2 + a, 1 + b)] -= x.m;
            cs[poly::index(1 + a, 2 + b)] -= x.m;
            basis.push_back(std::move(f));
          }
  const int dim = static_cast<int>(basis.size());
  Eigen::MatrixXcd G(dim, dim);
  for (int i = 0; i < dim; ++i) {
    G(i, i) = 0.0;
    for (int j = i + 1; j < dim; ++j) {
      cplx w = symplectic_W(basis[i], basis[j]);
      G(i, j) = w;
      G(j, i) = -w;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(G);
  lu.setThreshold(1e-10);
  return {dim, static_cast<int>(lu.rank())};
}

}  // namespace mlab
