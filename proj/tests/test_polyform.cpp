#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlab/polyform.hpp"
#include "mlab/real_gauge.hpp"

using namespace mlab;

namespace {

const StructureGroup su2 = StructureGroup::su(2);
const StructureGroup sc = StructureGroup::cstar();

SurfacePtr one_triangle() {
  TriangulatedSurface s;
  s.vertices = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  s.triangles = {{0, 1, 2}};
  s.genus = 0;
  s.holes = 1;
  s.finalize();
  return std::make_shared<const TriangulatedSurface>(std::move(s));
}

cplx boundary_integral_1form(const PwPolyForm& w) {
  const auto& surf = *w.surface();
  cplx total = 0.0;
  for (const auto& loop : surf.boundary_loops)
    for (const auto& be : loop) {
      double sgn = be.forward ? 1.0 : -1.0;
      total += sgn * sintegral01(w.edge_trace(be.edge, 0)).trace();
    }
  return total;
}

}  // namespace

TEST_CASE("d of constants and d^2 vanish identically") {
  auto surf = TriangulatedSurface::build(0, 1, 0);
  PwPolyForm c = PwPolyForm::zero(surf, su2, 0, 0);
  Mat x(2, 2);
  x << cplx{0, 1}, cplx{0.4, 0.2}, cplx{-0.4, 0.2}, cplx{0, -1};
  for (int t = 0; t < surf->num_triangles(); ++t) c.tri_coeffs(0, t)[0] = x;
  PwPolyForm dc = c.d();
  for (int t = 0; t < surf->num_triangles(); ++t)
    for (int comp = 0; comp < 2; ++comp)
      CHECK(dc.tri_coeffs(comp, t)[0].cwiseAbs().maxCoeff() == 0.0);

  Rng rng(1);
  PwPolyForm f = random_continuous_0form(surf, su2, rng);
  PwPolyForm ddf = f.d().d();
  for (int t = 0; t < surf->num_triangles(); ++t)
    for (const Mat& m : ddf.tri_coeffs(0, t)) CHECK(m.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("d of a Whitney edge form is the constant 2 on its triangle") {
  auto surf = one_triangle();
  // edge 0->1 has local indices (0,1): d(l0 dl1 - l1 dl0) = 2 dl0 ^ dl1 = 2 du^dv
  int e01 = -1;
  for (int e = 0; e < surf->num_edges(); ++e)
    if (surf->edges[e].a == 0 && surf->edges[e].b == 1) e01 = e;
  REQUIRE(e01 >= 0);
  Mat one = Mat::Identity(1, 1);
  PwPolyForm w = whitney_form(surf, e01, one, sc);
  PwPolyForm dw = w.d();
  CHECK(std::abs(dw.tri_coeffs(0, 0)[0](0, 0) - cplx{2.0, 0.0}) == 0.0);
  for (std::size_t m = 1; m < dw.tri_coeffs(0, 0).size(); ++m)
    CHECK(dw.tri_coeffs(0, 0)[m].cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("whitney traces: ds on the owning edge, zero elsewhere") {
  auto surf = TriangulatedSurface::build(1, 1, 0);
  Rng rng(2);
  int e = static_cast<int>(rng.below(surf->num_edges()));
  Mat one = Mat::Identity(1, 1);
  PwPolyForm w = whitney_form(surf, e, one, sc);
  CHECK(w.max_trace_jump() <= 1e-15);
  for (int side = 0; side < surf->edges[e].count; ++side) {
    SPoly tr = w.edge_trace(e, side);
    CHECK(std::abs(tr[0](0, 0) - 1.0) <= 1e-15);
    for (std::size_t k = 1; k < tr.size(); ++k) CHECK(std::abs(tr[k](0, 0)) <= 1e-15);
  }
}

TEST_CASE("random generator forms have matching tangential traces") {
  for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}}) {
    auto surf = TriangulatedSurface::build(g, k, 1);
    Rng rng(3 + g + k);
    CHECK(random_continuous_0form(surf, su2, rng).max_trace_jump() <= 1e-13);
    CHECK(random_continuous_1form(surf, su2, rng).max_trace_jump() <= 1e-13);
  }
}

TEST_CASE("constant 2-form integrates to c * area") {
  auto surf = TriangulatedSurface::build(0, 1, 1);
  PwPolyForm two = PwPolyForm::zero(surf, sc, 2, 0);
  cplx c{0.75, -0.25};
  for (int t = 0; t < surf->num_triangles(); ++t) two.tri_coeffs(0, t)[0](0, 0) = c;
  double area = 0.5 * surf->num_triangles();  // reference charts
  CHECK(std::abs(two.integrate_trace() - c * area) <= 1e-14);
}

TEST_CASE("exact monomial integration agrees with the Gauss-Duffy rule") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b) {
      TriRule rule = triangle_rule(a + b);
      double q = 0.0;
      for (std::size_t i = 0; i < rule.u.size(); ++i)
        q += rule.w[i] * std::pow(rule.u[i], a) * std::pow(rule.v[i], b);
      CHECK(std::abs(q - poly::simplex_monomial_integral(a, b)) <= 1e-15);
    }
}

TEST_CASE("discrete Stokes is exact for continuous-trace data") {
  for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {1, 0}}) {
    auto surf = TriangulatedSurface::build(g, k, g == 0 ? 1 : 0);
    Rng rng(10 * g + k);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
      PwPolyForm eps = random_continuous_0form(surf, su2, rng);
      PwPolyForm a = random_continuous_1form(surf, su2, rng);
      PwPolyForm w = lmul0(eps, a).trace();  // scalar continuous-trace 1-form
      cplx lhs = w.d().integrate_trace();
      cplx rhs = boundary_integral_1form(w);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    CHECK(worst <= 1e-13);
  }
}

TEST_CASE("boundary integral of d(eps) over full loops vanishes") {
  auto surf = TriangulatedSurface::build(0, 2, 1);
  Rng rng(4);
  PwPolyForm eps = random_continuous_0form(surf, sc, rng);
  // telescoping sum of endpoint values around each closed loop
  const auto& s = *surf;
  for (const auto& loop : s.boundary_loops) {
    cplx total = 0.0;
    for (const auto& be : loop) {
      double sgn = be.forward ? 1.0 : -1.0;
      total += sgn * sintegral01(sderiv(eps.edge_trace(be.edge, 0)))(0, 0);
    }
    CHECK(std::abs(total) <= 1e-14);
  }
}

TEST_CASE("W antisymmetry and the deterministic-lattice sampling oracle") {
  auto surf = TriangulatedSurface::build(0, 1, 0);
  Rng rng(5);
  PwPolyForm a = random_continuous_1form(surf, sc, rng, false);
  PwPolyForm b = random_continuous_1form(surf, sc, rng, false);
  CHECK(std::abs(symplectic_W(a, a)) == 0.0);
  CHECK(std::abs(symplectic_W(a, b) + symplectic_W(b, a)) <= 1e-13);

  // centroid sub-triangle sampling, ~7.6e5 evaluations
  const int kGrid = 500;
  cplx approx = 0.0;
  const double cell = 1.0 / (kGrid * kGrid);
  for (int t = 0; t < surf->num_triangles(); ++t) {
    cplx acc = 0.0;
    for (int i = 0; i < kGrid; ++i)
      for (int j = 0; i + j < kGrid; ++j) {
        // lower and (if present) upper sub-triangle centroids
        double u1 = (i + 1.0 / 3.0) / kGrid, v1 = (j + 1.0 / 3.0) / kGrid;
        Mat p = a.eval(t, u1, v1, 0) * b.eval(t, u1, v1, 1) -
                a.eval(t, u1, v1, 1) * b.eval(t, u1, v1, 0);
        acc += p(0, 0);
        if (i + j < kGrid - 1) {
          double u2 = (i + 2.0 / 3.0) / kGrid, v2 = (j + 2.0 / 3.0) / kGrid;
          Mat q = a.eval(t, u2, v2, 0) * b.eval(t, u2, v2, 1) -
                  a.eval(t, u2, v2, 1) * b.eval(t, u2, v2, 0);
          acc += q(0, 0);
        }
      }
    approx += acc * cell * 0.5;
  }
  CHECK(std::abs(symplectic_W(a, b) - approx) <= 1e-5);
}
