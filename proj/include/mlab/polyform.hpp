#pragma once

#include <vector>

#include "mlab/lie.hpp"
#include "mlab/surface.hpp"

namespace mlab {

namespace poly {

/// Monomials u^a v^b of total degree <= D, ordered by degree then by b.
inline int count(int D) { return (D + 1) * (D + 2) / 2; }
inline int index(int a, int b) {
  int s = a + b;
  return s * (s + 1) / 2 + b;
}
/// Exact value of the reference-simplex integral of u^a v^b.
double simplex_monomial_integral(int a, int b);

}  // namespace poly

/// Polynomial in one parameter s with matrix coefficients (edge traces).
using SPoly = std::vector<Mat>;

Mat seval(const SPoly& p, double s);
SPoly smul(const SPoly& f, const SPoly& g);
SPoly sderiv(const SPoly& p);
Mat sintegral01(const SPoly& p);
SPoly sflip(const SPoly& p);  // s -> 1-s

/// Tensor-product Gauss rule on the reference simplex (Duffy transform),
/// exact for total polynomial degree <= deg.
struct TriRule {
  std::vector<double> u, v, w;
};
TriRule triangle_rule(int deg);
std::vector<double> gauss_legendre_nodes(int m, std::vector<double>& weights);

/// Piecewise-polynomial differential form with matrix values: per triangle of
/// the surface, one polynomial coefficient array per form component, written
/// in reference-simplex coordinates. Degree 1 forms carry (du, dv) components;
/// degree 2 forms a single du^dv density. Products and d are exact (degree
/// grows, nothing is projected back).
class PwPolyForm {
 public:
  PwPolyForm() = default;
  static PwPolyForm zero(SurfacePtr surf, StructureGroup tag, int form_deg, int poly_deg);

  int form_degree() const { return fdeg_; }
  int poly_degree() const { return pdeg_; }
  int components() const { return fdeg_ == 1 ? 2 : 1; }
  const StructureGroup& tag() const { return tag_; }
  const SurfacePtr& surface() const { return surf_; }

  Mat& coeff(int comp, int tri, int a, int b) { return data_[comp][tri][poly::index(a, b)]; }
  const Mat& coeff(int comp, int tri, int a, int b) const {
    return data_[comp][tri][poly::index(a, b)];
  }
  std::vector<Mat>& tri_coeffs(int comp, int tri) { return data_[comp][tri]; }
  const std::vector<Mat>& tri_coeffs(int comp, int tri) const { return data_[comp][tri]; }

  Mat eval(int tri, double u, double v, int comp = 0) const;

  PwPolyForm& operator+=(const PwPolyForm& o);
  PwPolyForm& operator-=(const PwPolyForm& o);
  PwPolyForm& operator*=(cplx s);
  friend PwPolyForm operator+(PwPolyForm a, const PwPolyForm& b) { return a += b; }
  friend PwPolyForm operator-(PwPolyForm a, const PwPolyForm& b) { return a -= b; }
  friend PwPolyForm operator*(cplx s, PwPolyForm a) { return a *= s; }

  /// Exterior derivative, computed exactly on the polynomial data.
  PwPolyForm d() const;

  /// Entrywise matrix trace; the result is scalar-valued (1x1).
  PwPolyForm trace() const;

  /// Exact integral over the surface (degree-2 forms).
  Mat integrate() const;
  cplx integrate_trace() const;

  /// Tangential trace along a directed triangle edge, as a polynomial in the
  /// canonical a->b edge parameter. For 1-forms this is the ds-coefficient of
  /// the pullback; for 0-forms the restriction.
  SPoly edge_trace(int edge_id, int side) const;

  /// Largest tangential-trace jump across interior edges (continuity check;
  /// sampled at Chebyshev points of the common parametrization).
  double max_trace_jump() const;

 private:
  SurfacePtr surf_;
  StructureGroup tag_;
  int fdeg_ = 0;
  int pdeg_ = 0;
  // data_[component][triangle][monomial]
  std::vector<std::vector<std::vector<Mat>>> data_;

  friend PwPolyForm wedge11(const PwPolyForm&, const PwPolyForm&);
  friend PwPolyForm mul00(const PwPolyForm&, const PwPolyForm&);
  friend PwPolyForm lmul0(const PwPolyForm&, const PwPolyForm&);
  friend PwPolyForm rmul0(const PwPolyForm&, const PwPolyForm&);
  friend PwPolyForm scalar_times(const PwPolyForm&, const Mat&);
};

/// Wedge of two 1-forms: (P1 du + Q1 dv)^(P2 du + Q2 dv) = (P1 Q2 - Q1 P2) du^dv,
/// matrix product order preserved.
PwPolyForm wedge11(const PwPolyForm& a, const PwPolyForm& b);
/// Pointwise product of two 0-forms.
PwPolyForm mul00(const PwPolyForm& f, const PwPolyForm& g);
/// 0-form times form, multiplying from the left: f * w.
PwPolyForm lmul0(const PwPolyForm& f, const PwPolyForm& w);
/// Form times 0-form from the right: w * f.
PwPolyForm rmul0(const PwPolyForm& w, const PwPolyForm& f);
/// [w, f] = w f - f w for a form w and 0-form f.
PwPolyForm form_bracket(const PwPolyForm& w, const PwPolyForm& f);
/// Scalar-valued form times a constant matrix.
PwPolyForm scalar_times(const PwPolyForm& s, const Mat& value);

/// Whitney 1-form of the directed edge a->b (value 'coefficient').
PwPolyForm whitney_form(SurfacePtr surf, int edge_id, const Mat& coefficient, StructureGroup tag);
/// Piecewise-linear hat 0-form of a vertex.
PwPolyForm hat_form(SurfacePtr surf, int vertex, const Mat& coefficient, StructureGroup tag);
/// Cubic bubble 0-form supported on one triangle.
PwPolyForm bubble_form(SurfacePtr surf, int tri, const Mat& coefficient, StructureGroup tag);

/// Random algebra-valued forms with matching tangential traces (Whitney/hat
/// combinations, optionally enriched by scalar hat products).
PwPolyForm random_continuous_0form(SurfacePtr surf, StructureGroup tag, Rng& rng, bool enrich = true);
PwPolyForm random_continuous_1form(SurfacePtr surf, StructureGroup tag, Rng& rng, bool enrich = true);

}  // namespace mlab
