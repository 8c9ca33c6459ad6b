#pragma once

#include <memory>
#include <vector>

#include "mlab/elliptic.hpp"
#include "mlab/rng.hpp"

namespace mlab {

/// Abelian surface realized as a product of two elliptic curves.
struct EllipticProductSurface {
  EllipticCurve E1, E2;
};
using CxSurfacePtr = std::shared_ptr<const EllipticProductSurface>;

/// Function or (0,q)-form on the curve E2, as a truncated Fourier series over
/// modes |k|_inf <= band in the two torus angles of E2. Matrix-valued.
class CurveForm {
 public:
  CurveForm() = default;
  static CurveForm zero(CxSurfacePtr surf, int n, int q, int band);

  int q() const { return q_; }
  int band() const { return band_; }
  int n() const { return n_; }
  int modes() const { return (2 * band_ + 1) * (2 * band_ + 1); }
  int flat(int k3, int k4) const {
    int L = 2 * band_ + 1;
    return (k3 + band_) * L + (k4 + band_);
  }
  cplx& at(int i, int j, int k3, int k4) { return data_[i * n_ + j][flat(k3, k4)]; }
  cplx at(int i, int j, int k3, int k4) const { return data_[i * n_ + j][flat(k3, k4)]; }
  std::vector<cplx>& entry(int i, int j) { return data_[i * n_ + j]; }
  const std::vector<cplx>& entry(int i, int j) const { return data_[i * n_ + j]; }

  /// Tangential dbar on E2 (diagonal in Fourier space). Function -> (0,1)-form.
  CurveForm dbar() const;
  /// Pointwise product (matrix order preserved; band grows).
  friend CurveForm cmul(const CurveForm& a, const CurveForm& b);
  CurveForm trace() const;

  Mat zero_mode() const;
  double l2_norm() const;

  CurveForm& operator+=(const CurveForm& o);
  CurveForm& operator*=(cplx s);
  friend CurveForm operator-(CurveForm a, const CurveForm& b);

  const CxSurfacePtr& surface() const { return surf_; }

 private:
  CxSurfacePtr surf_;
  int n_ = 1, q_ = 0, band_ = 0;
  std::vector<std::vector<cplx>> data_;  // per matrix entry, 2D mode tensor
};

/// Matrix-valued section or (0,q)-form on E1 x E2 as a truncated double
/// Fourier series over integer frequencies |k|_inf <= band in the four torus
/// angles. (0,1)-forms carry (dzbar1, dzbar2) components, (0,2)-forms a single
/// dzbar1 ^ dzbar2 coefficient. Products grow the band exactly (no truncation).
class FourierForm {
 public:
  FourierForm() = default;
  static FourierForm zero(CxSurfacePtr surf, StructureGroup tag, int q, int band);
  static FourierForm random(CxSurfacePtr surf, StructureGroup tag, int q, int band, Rng& rng);

  int q() const { return q_; }
  int band() const { return band_; }
  int components() const { return q_ == 1 ? 2 : 1; }
  const StructureGroup& tag() const { return tag_; }
  const CxSurfacePtr& surface() const { return surf_; }

  int L() const { return 2 * band_ + 1; }
  std::size_t modes() const {
    std::size_t l = L();
    return l * l * l * l;
  }
  int flat(int k1, int k2, int k3, int k4) const {
    int l = L();
    return ((((k1 + band_) * l + (k2 + band_)) * l + (k3 + band_)) * l) + (k4 + band_);
  }
  cplx& at(int comp, int i, int j, int k1, int k2, int k3, int k4) {
    return data_[comp][i * tag_.n + j][flat(k1, k2, k3, k4)];
  }
  cplx at(int comp, int i, int j, int k1, int k2, int k3, int k4) const {
    return data_[comp][i * tag_.n + j][flat(k1, k2, k3, k4)];
  }
  std::vector<cplx>& entry(int comp, int i, int j) { return data_[comp][i * tag_.n + j]; }
  const std::vector<cplx>& entry(int comp, int i, int j) const {
    return data_[comp][i * tag_.n + j];
  }

  /// Reference dbar operator, exact and diagonal in Fourier space.
  FourierForm dbar() const;

  FourierForm trace() const;
  Mat eval(double x1, double y1, double x2, double y2, int comp = 0) const;

  /// Exact restriction to the slice z1 = c (a form on E2; the dzbar1
  /// component dies under pullback).
  CurveForm restrict_to(cplx c) const;

  double max_abs() const;

  FourierForm& operator+=(const FourierForm& o);
  FourierForm& operator-=(const FourierForm& o);
  FourierForm& operator*=(cplx s);
  friend FourierForm operator+(FourierForm a, const FourierForm& b) { return a += b; }
  friend FourierForm operator-(FourierForm a, const FourierForm& b) { return a -= b; }
  friend FourierForm operator*(cplx s, FourierForm a) { return a *= s; }

  friend FourierForm fmul00(const FourierForm& f, const FourierForm& g);
  friend FourierForm fwedge11(const FourierForm& a, const FourierForm& b);
  friend FourierForm flmul0(const FourierForm& f, const FourierForm& w);
  friend FourierForm frmul0(const FourierForm& w, const FourierForm& f);

 private:
  CxSurfacePtr surf_;
  StructureGroup tag_;
  int q_ = 0, band_ = 0;
  // data_[component][matrix entry][mode]
  std::vector<std::vector<std::vector<cplx>>> data_;
};

/// [w, f] = w f - f w for a form w and 0-form f.
FourierForm fform_bracket(const FourierForm& w, const FourierForm& f);

}  // namespace mlab
