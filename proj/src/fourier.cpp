#include "mlab/fourier.hpp"

#include "mlab/kernels.hpp"

namespace mlab {

namespace {

// 4D mode-tensor convolution: out += sign * (a conv b). Inner loop runs over
// contiguous k4 rows of b and lands on contiguous rows of out.
void conv4_acc(const std::vector<cplx>& a, int Ba, const std::vector<cplx>& b, int Bb,
               std::vector<cplx>& out, int Bo, cplx sign) {
  const int La = 2 * Ba + 1, Lb = 2 * Bb + 1, Lo = 2 * Bo + 1;
  for (int a1 = 0; a1 < La; ++a1)
    for (int a2 = 0; a2 < La; ++a2)
      for (int a3 = 0; a3 < La; ++a3)
        for (int a4 = 0; a4 < La; ++a4) {
          cplx va = a[((a1 * La + a2) * La + a3) * La + a4];
          if (va == cplx{0.0, 0.0}) continue;
          va *= sign;
          for (int b1 = 0; b1 < Lb; ++b1)
            for (int b2 = 0; b2 < Lb; ++b2)
              for (int b3 = 0; b3 < Lb; ++b3) {
                const cplx* brow = b.data() + ((b1 * Lb + b2) * Lb + b3) * Lb;
                cplx* orow = out.data() +
                             (((a1 + b1) * Lo + (a2 + b2)) * Lo + (a3 + b3)) * Lo + a4;
                kern::caxpy(orow, va, brow, Lb);
              }
        }
}

void conv2_acc(const std::vector<cplx>& a, int Ba, const std::vector<cplx>& b, int Bb,
               std::vector<cplx>& out, int Bo, cplx sign) {
  const int La = 2 * Ba + 1, Lb = 2 * Bb + 1, Lo = 2 * Bo + 1;
  for (int a3 = 0; a3 < La; ++a3)
    for (int a4 = 0; a4 < La; ++a4) {
      cplx va = a[a3 * La + a4];
      if (va == cplx{0.0, 0.0}) continue;
      va *= sign;
      for (int b3 = 0; b3 < Lb; ++b3)
        kern::caxpy(out.data() + (a3 + b3) * Lo + a4, va, b.data() + b3 * Lb, Lb);
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CurveForm

CurveForm CurveForm::zero(CxSurfacePtr surf, int n, int q, int band) {
  CurveForm f;
  f.surf_ = std::move(surf);
  f.n_ = n;
  f.q_ = q;
  f.band_ = band;
  f.data_.assign(n * n, std::vector<cplx>(f.modes(), cplx{0.0, 0.0}));
  return f;
}

CurveForm CurveForm::dbar() const {
  if (q_ != 0) throw std::invalid_argument("CurveForm::dbar: already a (0,1)-form");
  CurveForm out = zero(surf_, n_, 1, band_);
  const EllipticCurve& E2 = surf_->E2;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k3 = -band_; k3 <= band_; ++k3)
        for (int k4 = -band_; k4 <= band_; ++k4)
          out.at(i, j, k3, k4) = E2.dbar_coeff(k3, k4) * at(i, j, k3, k4);
  return out;
}

CurveForm cmul(const CurveForm& a, const CurveForm& b) {
  if (a.q_ + b.q_ > 1) throw std::invalid_argument("cmul: form degree overflow on a curve");
  CurveForm out = CurveForm::zero(a.surf_, a.n_, a.q_ + b.q_, a.band_ + b.band_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j)
      for (int l = 0; l < a.n_; ++l)
        conv2_acc(a.entry(i, l), a.band_, b.entry(l, j), b.band_, out.entry(i, j), out.band_,
                  cplx{1.0, 0.0});
  return out;
}

CurveForm CurveForm::trace() const {
  CurveForm out = zero(surf_, 1, q_, band_);
  for (int i = 0; i < n_; ++i)
    for (std::size_t m = 0; m < out.data_[0].size(); ++m) out.data_[0][m] += data_[i * n_ + i][m];
  return out;
}

Mat CurveForm::zero_mode() const {
  Mat r(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = at(i, j, 0, 0);
  return r;
}

double CurveForm::l2_norm() const {
  double s = 0.0;
  for (const auto& e : data_)
    for (const cplx& z : e) s += std::norm(z);
  return std::sqrt(s);
}

CurveForm& CurveForm::operator+=(const CurveForm& o) {
  if (band_ != o.band_ || n_ != o.n_ || q_ != o.q_)
    throw TagMismatch("CurveForm: incompatible operands");
  for (std::size_t e = 0; e < data_.size(); ++e)
    for (std::size_t m = 0; m < data_[e].size(); ++m) data_[e][m] += o.data_[e][m];
  return *this;
}

CurveForm& CurveForm::operator*=(cplx s) {
  for (auto& e : data_)
    for (auto& z : e) z *= s;
  return *this;
}

CurveForm operator-(CurveForm a, const CurveForm& b) {
  CurveForm nb = b;
  nb *= cplx{-1.0, 0.0};
  return a += nb;
}

// ---------------------------------------------------------------------------
// FourierForm

FourierForm FourierForm::zero(CxSurfacePtr surf, StructureGroup tag, int q, int band) {
  FourierForm f;
  f.surf_ = std::move(surf);
  f.tag_ = tag;
  f.q_ = q;
  f.band_ = band;
  f.data_.assign(f.components(),
                 std::vector<std::vector<cplx>>(tag.n * tag.n,
                                                std::vector<cplx>(f.modes(), cplx{0.0, 0.0})));
  return f;
}

FourierForm FourierForm::random(CxSurfacePtr surf, StructureGroup tag, int q, int band, Rng& rng) {
  FourierForm f = zero(std::move(surf), tag, q, band);
  for (auto& comp : f.data_)
    for (auto& e : comp)
      for (auto& z : e) z = 0.5 * rng.csym();
  return f;
}

FourierForm FourierForm::dbar() const {
  if (q_ >= 2) throw std::invalid_argument("dbar: (0,2)-form input");
  const EllipticCurve& E1 = surf_->E1;
  const EllipticCurve& E2 = surf_->E2;
  FourierForm out = zero(surf_, tag_, q_ + 1, band_);
  const int n = tag_.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k1 = -band_; k1 <= band_; ++k1)
        for (int k2 = -band_; k2 <= band_; ++k2) {
          cplx l1 = E1.dbar_coeff(k1, k2);
          for (int k3 = -band_; k3 <= band_; ++k3)
            for (int k4 = -band_; k4 <= band_; ++k4) {
              cplx l2 = E2.dbar_coeff(k3, k4);
              if (q_ == 0) {
                cplx v = at(0, i, j, k1, k2, k3, k4);
                out.at(0, i, j, k1, k2, k3, k4) = l1 * v;
                out.at(1, i, j, k1, k2, k3, k4) = l2 * v;
              } else {
                // dbar(u1 dzb1 + u2 dzb2) = (dbar1 u2 - dbar2 u1) dzb1^dzb2
                out.at(0, i, j, k1, k2, k3, k4) =
                    l1 * at(1, i, j, k1, k2, k3, k4) - l2 * at(0, i, j, k1, k2, k3, k4);
              }
            }
        }
  return out;
}

FourierForm FourierForm::trace() const {
  FourierForm out = zero(surf_, StructureGroup::cstar(), q_, band_);
  for (int c = 0; c < components(); ++c)
    for (int i = 0; i < tag_.n; ++i)
      for (std::size_t m = 0; m < out.data_[c][0].size(); ++m)
        out.data_[c][0][m] += data_[c][i * tag_.n + i][m];
  return out;
}

Mat FourierForm::eval(double x1, double y1, double x2, double y2, int comp) const {
  const int n = tag_.n;
  Mat r = Mat::Zero(n, n);
  std::vector<cplx> ph(modes());
  const int l = L();
  std::vector<cplx> p1(l), p2(l), p3(l), p4(l);
  for (int k = -band_; k <= band_; ++k) {
    p1[k + band_] = std::exp(kTwoPiI * (k * x1));
    p2[k + band_] = std::exp(kTwoPiI * (k * y1));
    p3[k + band_] = std::exp(kTwoPiI * (k * x2));
    p4[k + band_] = std::exp(kTwoPiI * (k * y2));
  }
  std::size_t idx = 0;
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c) {
        cplx base = p1[a] * p2[b] * p3[c];
        for (int d = 0; d < l; ++d) ph[idx++] = base * p4[d];
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r(i, j) = kern::cdot(entry(comp, i, j).data(), ph.data(), ph.size());
  return r;
}

CurveForm FourierForm::restrict_to(cplx c) const {
  if (q_ == 2) throw std::invalid_argument("restrict_to: no (0,2) restriction to a curve");
  auto [xc, yc] = surf_->E1.torus_coords(c);
  // only the dzbar2 component survives pullback; for sections, the value
  const int comp = (q_ == 1) ? 1 : 0;
  CurveForm out = CurveForm::zero(surf_, tag_.n, q_, band_);
  const int l = L();
  const int l2 = l * l;
  for (int i = 0; i < tag_.n; ++i)
    for (int j = 0; j < tag_.n; ++j) {
      const auto& src = entry(comp, i, j);
      auto& dst = out.entry(i, j);
      for (int k1 = -band_; k1 <= band_; ++k1)
        for (int k2 = -band_; k2 <= band_; ++k2) {
          cplx phase = std::exp(kTwoPiI * (k1 * xc + k2 * yc));
          const cplx* block = src.data() + ((k1 + band_) * l + (k2 + band_)) * l2;
          kern::caxpy(dst.data(), phase, block, l2);
        }
    }
  return out;
}

double FourierForm::max_abs() const {
  double m = 0.0;
  for (const auto& comp : data_)
    for (const auto& e : comp)
      for (const cplx& z : e) m = std::max(m, std::abs(z));
  return m;
}

FourierForm& FourierForm::operator+=(const FourierForm& o) {
  if (q_ != o.q_ || tag_.n != o.tag_.n || surf_.get() != o.surf_.get())
    throw TagMismatch("FourierForm: incompatible operands");
  if (o.band_ > band_) {
    FourierForm grown = zero(surf_, tag_, q_, o.band_);
    for (int c = 0; c < components(); ++c)
      for (int i = 0; i < tag_.n; ++i)
        for (int j = 0; j < tag_.n; ++j)
          for (int k1 = -band_; k1 <= band_; ++k1)
            for (int k2 = -band_; k2 <= band_; ++k2)
              for (int k3 = -band_; k3 <= band_; ++k3)
                for (int k4 = -band_; k4 <= band_; ++k4)
                  grown.at(c, i, j, k1, k2, k3, k4) = at(c, i, j, k1, k2, k3, k4);
    *this = std::move(grown);
  }
  for (int c = 0; c < components(); ++c)
    for (int i = 0; i < tag_.n; ++i)
      for (int j = 0; j < tag_.n; ++j)
        for (int k1 = -o.band_; k1 <= o.band_; ++k1)
          for (int k2 = -o.band_; k2 <= o.band_; ++k2)
            for (int k3 = -o.band_; k3 <= o.band_; ++k3)
              for (int k4 = -o.band_; k4 <= o.band_; ++k4)
                at(c, i, j, k1, k2, k3, k4) += o.at(c, i, j, k1, k2, k3, k4);
  return *this;
}

FourierForm& FourierForm::operator-=(const FourierForm& o) {
  FourierForm neg = o;
  neg *= cplx{-1.0, 0.0};
  return *this += neg;
}

FourierForm& FourierForm::operator*=(cplx s) {
  for (auto& comp : data_)
    for (auto& e : comp)
      for (auto& z : e) z *= s;
  return *this;
}

FourierForm fmul00(const FourierForm& f, const FourierForm& g) {
  if (f.q_ != 0 || g.q_ != 0) throw std::invalid_argument("fmul00: needs two sections");
  FourierForm out = FourierForm::zero(f.surf_, f.tag_, 0, f.band_ + g.band_);
  const int n = f.tag_.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        conv4_acc(f.entry(0, i, l), f.band_, g.entry(0, l, j), g.band_, out.entry(0, i, j),
                  out.band_, cplx{1.0, 0.0});
  return out;
}

FourierForm fwedge11(const FourierForm& a, const FourierForm& b) {
  if (a.q_ != 1 || b.q_ != 1) throw std::invalid_argument("fwedge11: needs two (0,1)-forms");
  FourierForm out = FourierForm::zero(a.surf_, a.tag_, 2, a.band_ + b.band_);
  const int n = a.tag_.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        conv4_acc(a.entry(0, i, l), a.band_, b.entry(1, l, j), b.band_, out.entry(0, i, j),
                  out.band_, cplx{1.0, 0.0});
        conv4_acc(a.entry(1, i, l), a.band_, b.entry(0, l, j), b.band_, out.entry(0, i, j),
                  out.band_, cplx{-1.0, 0.0});
      }
  return out;
}

FourierForm flmul0(const FourierForm& f, const FourierForm& w) {
  if (f.q_ != 0) throw std::invalid_argument("flmul0: first argument must be a section");
  FourierForm out = FourierForm::zero(w.surf_, w.tag_, w.q_, f.band_ + w.band_);
  const int n = w.tag_.n;
  for (int c = 0; c < w.components(); ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          conv4_acc(f.entry(0, i, l), f.band_, w.entry(c, l, j), w.band_, out.entry(c, i, j),
                    out.band_, cplx{1.0, 0.0});
  return out;
}

FourierForm frmul0(const FourierForm& w, const FourierForm& f) {
  if (f.q_ != 0) throw std::invalid_argument("frmul0: second argument must be a section");
  FourierForm out = FourierForm::zero(w.surf_, w.tag_, w.q_, f.band_ + w.band_);
  const int n = w.tag_.n;
  for (int c = 0; c < w.components(); ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          conv4_acc(w.entry(c, i, l), w.band_, f.entry(0, l, j), f.band_, out.entry(c, i, j),
                    out.band_, cplx{1.0, 0.0});
  return out;
}

FourierForm fform_bracket(const FourierForm& w, const FourierForm& f) {
  return frmul0(w, f) - flmul0(f, w);
}

}  // namespace mlab
