#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "mlab/real_gauge.hpp"

using namespace mlab;

namespace {

const StructureGroup su2 = StructureGroup::su(2);
const StructureGroup ab = StructureGroup::cstar();

struct Setup {
  SurfacePtr surf;
  ConnectionA A;
  PwPolyForm e1, e2;
};

Setup make(int g, int k, StructureGroup tag, Rng& rng) {
  auto surf = TriangulatedSurface::build(g, k, 0);
  return {surf,
          ConnectionA{random_continuous_1form(surf, tag, rng)},
          random_continuous_0form(surf, tag, rng),
          random_continuous_0form(surf, tag, rng)};
}

}  // namespace

TEST_CASE("gauge_direction: trivial and abelian reductions") {
  auto surf = TriangulatedSurface::build(0, 1, 0);
  PwPolyForm eps = PwPolyForm::zero(surf, su2, 0, 0);
  Mat x(2, 2);
  x << cplx{0, 0.5}, cplx{0.1, 0.2}, cplx{-0.1, 0.2}, cplx{0, -0.5};
  for (int t = 0; t < surf->num_triangles(); ++t) eps.tri_coeffs(0, t)[0] = x;
  ConnectionA zero{PwPolyForm::zero(surf, su2, 1, 1)};
  PwPolyForm dir = gauge_direction(zero, eps);
  for (int c = 0; c < 2; ++c)
    for (int t = 0; t < surf->num_triangles(); ++t)
      for (const Mat& m : dir.tri_coeffs(c, t)) CHECK(m.cwiseAbs().maxCoeff() == 0.0);

  Rng rng(1);
  ConnectionA A{random_continuous_1form(surf, ab, rng)};
  PwPolyForm f = random_continuous_0form(surf, ab, rng);
  PwPolyForm lhs = gauge_direction(A, f);
  PwPolyForm rhs = f.d();
  PwPolyForm diff = lhs - rhs;
  for (int c = 0; c < 2; ++c)
    for (int t = 0; t < surf->num_triangles(); ++t)
      for (const Mat& m : diff.tri_coeffs(c, t)) CHECK(m.cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("gauge orbit finite difference matches gauge_direction at O(t^2)") {
  auto surf = TriangulatedSurface::build(0, 1, 0);
  Rng rng(2);
  ConnectionA A{random_continuous_1form(surf, su2, rng)};
  PwPolyForm eps = random_continuous_0form(surf, su2, rng);
  PwPolyForm ref = gauge_direction(A, eps);

  // orbit A_t = g^-1 A g + g^-1 dg with g = exp(t eps), evaluated at nodes;
  // spatial derivatives of g via the block-matrix Frechet trick.
  auto orbit_at = [&](double t, int tri, double u, double v, int comp) -> Mat {
    Mat e = eps.eval(tri, u, v);
    PwPolyForm de = eps.d();
    Mat deu = de.eval(tri, u, v, comp);
    Mat big = Mat::Zero(4, 4);
    big.block(0, 0, 2, 2) = t * e;
    big.block(2, 2, 2, 2) = t * e;
    big.block(0, 2, 2, 2) = t * deu;
    Mat ebig = big.exp();
    Mat g = ebig.block(0, 0, 2, 2);
    Mat dg = ebig.block(0, 2, 2, 2);
    Mat gi = g.inverse();
    return gi * A.a.eval(tri, u, v, comp) * g + gi * dg;
  };

  double t = 1e-3;
  double err_t = 0.0, err_2t = 0.0;
  TriRule rule = triangle_rule(2);
  for (int tri = 0; tri < surf->num_triangles(); ++tri)
    for (std::size_t q = 0; q < rule.u.size(); ++q)
      for (int comp = 0; comp < 2; ++comp) {
        double u = rule.u[q], v = rule.v[q];
        Mat fd1 = (orbit_at(t, tri, u, v, comp) - orbit_at(-t, tri, u, v, comp)) / (2 * t);
        Mat fd2 = (orbit_at(2 * t, tri, u, v, comp) - orbit_at(-2 * t, tri, u, v, comp)) / (4 * t);
        Mat exact = ref.eval(tri, u, v, comp);
        err_t = std::max(err_t, (fd1 - exact).cwiseAbs().maxCoeff());
        err_2t = std::max(err_2t, (fd2 - exact).cwiseAbs().maxCoeff());
      }
  CHECK(err_t <= 1e-4);
  double order = std::log2(err_2t / err_t);
  CHECK(order > 1.6);
  CHECK(order < 2.4);
}

TEST_CASE("Hamiltonian trivial values") {
  auto surf = TriangulatedSurface::build(0, 1, 1);
  Rng rng(3);
  ConnectionA zero{PwPolyForm::zero(surf, su2, 1, 1)};
  PwPolyForm eps = random_continuous_0form(surf, su2, rng);
  CHECK(std::abs(hamiltonian(zero, eps)) == 0.0);

  // abelian, A closed, eps supported away from the boundary
  PwPolyForm phi = random_continuous_0form(surf, ab, rng);
  ConnectionA closedA{phi.d()};
  int interior_tri = -1;
  for (int t = 0; t < surf->num_triangles() && interior_tri < 0; ++t) {
    bool touches = false;
    for (int l = 0; l < 3; ++l)
      if (surf->edges[surf->tri_edges[t][l]].boundary()) touches = true;
    if (!touches) interior_tri = t;
  }
  REQUIRE(interior_tri >= 0);
  PwPolyForm bump = bubble_form(surf, interior_tri, Mat::Identity(1, 1), ab);
  CHECK(std::abs(hamiltonian(closedA, bump)) <= 1e-16);
}

TEST_CASE("variation of H equals the W-pairing with the gauge direction") {
  Rng rng(4);
  for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}}) {
    double worst = 0.0, worst_fd = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      auto s = make(g, k, su2, rng);
      PwPolyForm dir = random_continuous_1form(s.surf, su2, rng);
      worst = std::max(worst, variation_residual(s.A, s.e1, dir));
      if (trial < 10) worst_fd = std::max(worst_fd, fd_slope_residual(s.A, s.e1, dir, 1e-4));
    }
    CHECK(worst <= 1e-10);
    CHECK(worst_fd <= 1e-6);
  }
}

TEST_CASE("extension identity with the boundary cocycle") {
  Rng rng(5);
  for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}}) {
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      auto s = make(g, k, su2, rng);
      worst = std::max(worst, extension_identity_residual(s.A, s.e1, s.e2));
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("closed surface: empty boundary kills the cocycle, identity still holds") {
  Rng rng(6);
  auto s = make(1, 0, su2, rng);
  CHECK(cocycle(s.e1, s.e2) == cplx{0.0, 0.0});
  CHECK(extension_identity_residual(s.A, s.e1, s.e2) <= 1e-10);
}

TEST_CASE("abelian, A = 0: bracket part drops, W(de1, de2) = c(e1, e2)") {
  Rng rng(7);
  auto surf = TriangulatedSurface::build(0, 1, 1);
  PwPolyForm e1 = random_continuous_0form(surf, ab, rng);
  PwPolyForm e2 = random_continuous_0form(surf, ab, rng);
  cplx lhs = symplectic_W(e1.d(), e2.d());
  cplx rhs = cocycle(e1, e2);
  CHECK(std::abs(lhs - rhs) <= 1e-13);
}

TEST_CASE("cocycle: antisymmetry, constant argument, cyclic identity") {
  Rng rng(8);
  auto surf = TriangulatedSurface::build(0, 2, 1);
  PwPolyForm c0 = PwPolyForm::zero(surf, su2, 0, 0);
  Mat x(2, 2);
  x << cplx{0, 1}, 0, 0, cplx{0, -1};
  for (int t = 0; t < surf->num_triangles(); ++t) c0.tri_coeffs(0, t)[0] = x;
  PwPolyForm e1 = random_continuous_0form(surf, su2, rng);
  CHECK(std::abs(cocycle(e1, c0)) == 0.0);

  double worst_anti = 0.0, worst_cyc = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    PwPolyForm f1 = random_continuous_0form(surf, su2, rng);
    PwPolyForm f2 = random_continuous_0form(surf, su2, rng);
    PwPolyForm f3 = random_continuous_0form(surf, su2, rng);
    worst_anti = std::max(worst_anti, std::abs(cocycle(f1, f2) + cocycle(f2, f1)));
    worst_cyc = std::max(worst_cyc, cocycle_cyclic_residual(f1, f2, f3));
  }
  CHECK(worst_anti <= 1e-12);
  CHECK(worst_cyc <= 1e-10);
}

TEST_CASE("momentum map: trivial value, pairing consistency, curvature-only restriction") {
  Rng rng(9);
  auto surf = TriangulatedSurface::build(1, 1, 0);
  ConnectionA zero{PwPolyForm::zero(surf, su2, 1, 1)};
  MomentumValue mu0 = momentum(zero);
  CHECK(mu0.x == 1.0);
  CHECK(std::abs(mu0.F.integrate_trace()) == 0.0);
  PwPolyForm eps = random_continuous_0form(surf, su2, rng);
  CHECK(std::abs(dual_pairing(mu0, eps, 0.0)) == 0.0);
  CHECK(dual_pairing(mu0, eps, 2.5) == cplx{2.5, 0.0});

  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    ConnectionA A{random_continuous_1form(surf, su2, rng)};
    PwPolyForm e = random_continuous_0form(surf, su2, rng);
    worst = std::max(worst,
                     std::abs(dual_pairing(momentum(A), e, 0.0) - hamiltonian(A, e)));
  }
  CHECK(worst <= 1e-12);

  // eps vanishing on the boundary: only the curvature term contributes
  ConnectionA A{random_continuous_1form(surf, su2, rng)};
  int interior_tri = -1;
  for (int t = 0; t < surf->num_triangles() && interior_tri < 0; ++t) {
    bool touches = false;
    for (int l = 0; l < 3; ++l)
      if (surf->edges[surf->tri_edges[t][l]].boundary()) touches = true;
    if (!touches) interior_tri = t;
  }
  Mat y(2, 2);
  y << cplx{0, 0.3}, cplx{0.2, 0.1}, cplx{-0.2, 0.1}, cplx{0, -0.3};
  PwPolyForm bump = bubble_form(surf, interior_tri, y, su2);
  MomentumValue mu = momentum(A);
  cplx pairing = dual_pairing(mu, bump, 0.0);
  cplx curvature_only = lmul0(bump, mu.F).integrate_trace();
  CHECK(std::abs(pairing - curvature_only) == 0.0);
}

TEST_CASE("momentum bracket relation over 200 trials on (1,2)") {
  Rng rng(10);
  double worst = 0.0;
  auto surf = TriangulatedSurface::build(1, 2, 0);
  for (int trial = 0; trial < 200; ++trial) {
    ConnectionA A{random_continuous_1form(surf, su2, rng)};
    PwPolyForm e1 = random_continuous_0form(surf, su2, rng);
    PwPolyForm e2 = random_continuous_0form(surf, su2, rng);
    worst = std::max(worst, momentum_bracket_residual(A, e1, e2));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("gauge invariance of W: constant and pointwise-varying gauge") {
  Rng rng(11);
  auto surf = TriangulatedSurface::build(1, 1, 0);
  PwPolyForm a = random_continuous_1form(surf, su2, rng);
  PwPolyForm b = random_continuous_1form(surf, su2, rng);
  GroupElement g = random_group(rng, su2);
  CHECK(gauge_invariance_const_residual(a, b, g) <= 1e-13);

  PwPolyForm eps = random_continuous_0form(surf, su2, rng);
  auto field = [&](int t, double u, double v) { return Mat(eps.eval(t, u, v).exp()); };
  CHECK(gauge_invariance_pointwise_residual(a, b, field) <= 1e-10);
}

TEST_CASE("W is nondegenerate on the bubble basis of boundary-vanishing forms") {
  auto surf = TriangulatedSurface::build(0, 1, 0);
  auto [dim, rank] = w_gram_rank(surf, su2, 1);
  CHECK(dim == rank);
  auto [dim_ab, rank_ab] = w_gram_rank(surf, ab, 1);
  CHECK(dim_ab == rank_ab);
}
