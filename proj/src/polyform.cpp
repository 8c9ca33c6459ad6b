#include "mlab/polyform.hpp"

#include <cmath>

namespace mlab {

namespace poly {

double simplex_monomial_integral(int a, int b) {
  // a! b! / (a+b+2)! = 1 / (C(a+b, a) * (a+b+1) * (a+b+2))
  double binom = 1.0;
  for (int i = 1; i <= b; ++i) binom *= static_cast<double>(a + i) / i;
  return 1.0 / (binom * (a + b + 1) * (a + b + 2));
}

}  // namespace poly

namespace {

// (u0 + du*s, v0 + dv*s) for local edges 0,1,2
constexpr double kEdgeParam[3][4] = {
    {0.0, 1.0, 0.0, 0.0},
    {1.0, -1.0, 0.0, 1.0},
    {0.0, 0.0, 1.0, -1.0},
};

std::vector<double> scalar_linear_pow(double c0, double c1, int n) {
  // (c0 + c1 s)^n as coefficients in s
  std::vector<double> p{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += c0 * p[i];
      q[i + 1] += c1 * p[i];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

Mat seval(const SPoly& p, double s) {
  Mat r = Mat::Zero(p.front().rows(), p.front().cols());
  for (std::size_t k = p.size(); k-- > 0;) r = s * r + p[k];
  return r;
}

SPoly smul(const SPoly& f, const SPoly& g) {
  SPoly out(f.size() + g.size() - 1, Mat::Zero(f.front().rows(), g.front().cols()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

SPoly sderiv(const SPoly& p) {
  if (p.size() <= 1) return {Mat::Zero(p.front().rows(), p.front().cols())};
  SPoly out(p.size() - 1, Mat::Zero(p.front().rows(), p.front().cols()));
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = static_cast<double>(k) * p[k];
  return out;
}

Mat sintegral01(const SPoly& p) {
  Mat r = Mat::Zero(p.front().rows(), p.front().cols());
  for (std::size_t k = 0; k < p.size(); ++k) r += p[k] / static_cast<double>(k + 1);
  return r;
}

SPoly sflip(const SPoly& p) {
  // substitute s -> 1-s
  SPoly out(p.size(), Mat::Zero(p.front().rows(), p.front().cols()));
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto pw = scalar_linear_pow(1.0, -1.0, static_cast<int>(k));
    for (std::size_t j = 0; j < pw.size(); ++j) out[j] += pw[j] * p[k];
  }
  return out;
}

std::vector<double> gauss_legendre_nodes(int m, std::vector<double>& weights) {
  std::vector<double> nodes(m);
  weights.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = m * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return nodes;
}

TriRule triangle_rule(int deg) {
  int m = deg / 2 + 2;
  std::vector<double> gw;
  auto gx = gauss_legendre_nodes(m, gw);
  TriRule rule;
  for (int i = 0; i < m; ++i) {
    double xi = 0.5 * (gx[i] + 1.0), wi = 0.5 * gw[i];
    for (int j = 0; j < m; ++j) {
      double eta = 0.5 * (gx[j] + 1.0), wj = 0.5 * gw[j];
      rule.u.push_back(xi);
      rule.v.push_back(eta * (1.0 - xi));
      rule.w.push_back(wi * wj * (1.0 - xi));
    }
  }
  return rule;
}

PwPolyForm PwPolyForm::zero(SurfacePtr surf, StructureGroup tag, int form_deg, int poly_deg) {
  PwPolyForm f;
  f.surf_ = std::move(surf);
  f.tag_ = tag;
  f.fdeg_ = form_deg;
  f.pdeg_ = poly_deg;
  const int nc = f.components();
  const int nm = poly::count(poly_deg);
  f.data_.assign(nc, std::vector<std::vector<Mat>>(
                         f.surf_->num_triangles(), std::vector<Mat>(nm, Mat::Zero(tag.n, tag.n))));
  return f;
}

Mat PwPolyForm::eval(int tri, double u, double v, int comp) const {
  Mat r = Mat::Zero(tag_.n, tag_.n);
  const auto& cs = data_[comp][tri];
  for (int a = 0; a <= pdeg_; ++a)
    for (int b = 0; a + b <= pdeg_; ++b)
      r += std::pow(u, a) * std::pow(v, b) * cs[poly::index(a, b)];
  return r;
}

PwPolyForm& PwPolyForm::operator+=(const PwPolyForm& o) {
  if (surf_.get() != o.surf_.get() || fdeg_ != o.fdeg_ || tag_.n != o.tag_.n)
    throw TagMismatch("PwPolyForm: incompatible operands");
  if (o.pdeg_ > pdeg_) {
    for (auto& comp : data_)
      for (auto& tri : comp) tri.resize(poly::count(o.pdeg_), Mat::Zero(tag_.n, tag_.n));
    pdeg_ = o.pdeg_;
  }
  for (int c = 0; c < components(); ++c)
    for (int t = 0; t < surf_->num_triangles(); ++t)
      for (std::size_t m = 0; m < o.data_[c][t].size(); ++m) data_[c][t][m] += o.data_[c][t][m];
  return *this;
}

PwPolyForm& PwPolyForm::operator-=(const PwPolyForm& o) {
  PwPolyForm neg = o;
  neg *= cplx{-1.0, 0.0};
  return *this += neg;
}

PwPolyForm& PwPolyForm::operator*=(cplx s) {
  for (auto& comp : data_)
    for (auto& tri : comp)
      for (auto& m : tri) m *= s;
  return *this;
}

PwPolyForm PwPolyForm::d() const {
  if (fdeg_ >= 2) throw std::invalid_argument("d: degree-2 input");
  const int T = surf_->num_triangles();
  PwPolyForm out = zero(surf_, tag_, fdeg_ + 1, std::max(0, pdeg_ - 1));
  auto deriv = [&](const std::vector<Mat>& in, int wrt, std::vector<Mat>& acc, double sign) {
    for (int a = 0; a <= pdeg_; ++a)
      for (int b = 0; a + b <= pdeg_; ++b) {
        const Mat& c = in[poly::index(a, b)];
        if (wrt == 0 && a > 0) acc[poly::index(a - 1, b)] += sign * a * c;
        if (wrt == 1 && b > 0) acc[poly::index(a, b - 1)] += sign * b * c;
      }
  };
  for (int t = 0; t < T; ++t) {
    if (fdeg_ == 0) {
      deriv(data_[0][t], 0, out.data_[0][t], 1.0);  // P = df/du
      deriv(data_[0][t], 1, out.data_[1][t], 1.0);  // Q = df/dv
    } else {
      deriv(data_[1][t], 0, out.data_[0][t], 1.0);   // dQ/du
      deriv(data_[0][t], 1, out.data_[0][t], -1.0);  // -dP/dv
    }
  }
  return out;
}

PwPolyForm PwPolyForm::trace() const {
  PwPolyForm out = zero(surf_, StructureGroup::cstar(), fdeg_, pdeg_);
  for (int c = 0; c < components(); ++c)
    for (int t = 0; t < surf_->num_triangles(); ++t)
      for (std::size_t m = 0; m < data_[c][t].size(); ++m)
        out.data_[c][t][m](0, 0) = data_[c][t][m].trace();
  return out;
}

Mat PwPolyForm::integrate() const {
  if (fdeg_ != 2) throw std::invalid_argument("integrate: needs a 2-form");
  Mat r = Mat::Zero(tag_.n, tag_.n);
  for (int t = 0; t < surf_->num_triangles(); ++t)
    for (int a = 0; a <= pdeg_; ++a)
      for (int b = 0; a + b <= pdeg_; ++b)
        r += poly::simplex_monomial_integral(a, b) * data_[0][t][poly::index(a, b)];
  return r;
}

cplx PwPolyForm::integrate_trace() const { return integrate().trace(); }

SPoly PwPolyForm::edge_trace(int edge_id, int side) const {
  const auto& e = surf_->edges[edge_id];
  const int t = e.tri[side];
  const int l = e.local[side];
  const double u0 = kEdgeParam[l][0], du = kEdgeParam[l][1];
  const double v0 = kEdgeParam[l][2], dv = kEdgeParam[l][3];

  SPoly local(pdeg_ + 1, Mat::Zero(tag_.n, tag_.n));
  auto accumulate = [&](const std::vector<Mat>& cs, double scale) {
    for (int a = 0; a <= pdeg_; ++a) {
      auto up = scalar_linear_pow(u0, du, a);
      for (int b = 0; a + b <= pdeg_; ++b) {
        auto vp = scalar_linear_pow(v0, dv, b);
        const Mat& c = cs[poly::index(a, b)];
        for (std::size_t i = 0; i < up.size(); ++i)
          for (std::size_t j = 0; j < vp.size(); ++j)
            local[i + j] += (scale * up[i] * vp[j]) * c;
      }
    }
  };
  if (fdeg_ == 0) {
    accumulate(data_[0][t], 1.0);
  } else if (fdeg_ == 1) {
    accumulate(data_[0][t], du);
    accumulate(data_[1][t], dv);
  } else {
    throw std::invalid_argument("edge_trace: 2-forms have no tangential trace");
  }
  // canonicalize to the a->b parametrization
  if (e.forward[side]) return local;
  SPoly flipped = sflip(local);
  if (fdeg_ == 1)
    for (auto& m : flipped) m = -m;
  return flipped;
}

double PwPolyForm::max_trace_jump() const {
  double worst = 0.0;
  for (int ei = 0; ei < surf_->num_edges(); ++ei) {
    const auto& e = surf_->edges[ei];
    if (e.boundary()) continue;
    SPoly t0 = edge_trace(ei, 0);
    SPoly t1 = edge_trace(ei, 1);
    std::size_t n = std::max(t0.size(), t1.size());
    t0.resize(n, Mat::Zero(tag_.n, tag_.n));
    t1.resize(n, Mat::Zero(tag_.n, tag_.n));
    for (std::size_t k = 0; k < n; ++k)
      worst = std::max(worst, (t0[k] - t1[k]).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

void poly_mul_acc(const std::vector<Mat>& f, int df, const std::vector<Mat>& g, int dg,
                  std::vector<Mat>& out, double sign) {
  for (int a1 = 0; a1 <= df; ++a1)
    for (int b1 = 0; a1 + b1 <= df; ++b1) {
      const Mat& c1 = f[poly::index(a1, b1)];
      if (c1.isZero(0.0)) continue;
      for (int a2 = 0; a2 <= dg; ++a2)
        for (int b2 = 0; a2 + b2 <= dg; ++b2) {
          const Mat& c2 = g[poly::index(a2, b2)];
          out[poly::index(a1 + a2, b1 + b2)] += sign * (c1 * c2);
        }
    }
}

}  // namespace

PwPolyForm wedge11(const PwPolyForm& a, const PwPolyForm& b) {
  if (a.fdeg_ != 1 || b.fdeg_ != 1) throw std::invalid_argument("wedge11: needs two 1-forms");
  if (a.surf_.get() != b.surf_.get()) throw TagMismatch("wedge11: different surfaces");
  PwPolyForm out = PwPolyForm::zero(a.surf_, a.tag_, 2, a.pdeg_ + b.pdeg_);
  for (int t = 0; t < a.surf_->num_triangles(); ++t) {
    poly_mul_acc(a.data_[0][t], a.pdeg_, b.data_[1][t], b.pdeg_, out.data_[0][t], 1.0);
    poly_mul_acc(a.data_[1][t], a.pdeg_, b.data_[0][t], b.pdeg_, out.data_[0][t], -1.0);
  }
  return out;
}

PwPolyForm mul00(const PwPolyForm& f, const PwPolyForm& g) {
  if (f.fdeg_ != 0 || g.fdeg_ != 0) throw std::invalid_argument("mul00: needs two 0-forms");
  if (f.surf_.get() != g.surf_.get()) throw TagMismatch("mul00: different surfaces");
  PwPolyForm out = PwPolyForm::zero(f.surf_, f.tag_, 0, f.pdeg_ + g.pdeg_);
  for (int t = 0; t < f.surf_->num_triangles(); ++t)
    poly_mul_acc(f.data_[0][t], f.pdeg_, g.data_[0][t], g.pdeg_, out.data_[0][t], 1.0);
  return out;
}

PwPolyForm lmul0(const PwPolyForm& f, const PwPolyForm& w) {
  if (f.fdeg_ != 0) throw std::invalid_argument("lmul0: first argument must be a 0-form");
  PwPolyForm out = PwPolyForm::zero(w.surf_, w.tag_, w.fdeg_, f.pdeg_ + w.pdeg_);
  for (int c = 0; c < w.components(); ++c)
    for (int t = 0; t < w.surf_->num_triangles(); ++t)
      poly_mul_acc(f.data_[0][t], f.pdeg_, w.data_[c][t], w.pdeg_, out.data_[c][t], 1.0);
  return out;
}

PwPolyForm rmul0(const PwPolyForm& w, const PwPolyForm& f) {
  if (f.fdeg_ != 0) throw std::invalid_argument("rmul0: second argument must be a 0-form");
  PwPolyForm out = PwPolyForm::zero(w.surf_, w.tag_, w.fdeg_, f.pdeg_ + w.pdeg_);
  for (int c = 0; c < w.components(); ++c)
    for (int t = 0; t < w.surf_->num_triangles(); ++t)
      poly_mul_acc(w.data_[c][t], w.pdeg_, f.data_[0][t], f.pdeg_, out.data_[c][t], 1.0);
  return out;
}

PwPolyForm form_bracket(const PwPolyForm& w, const PwPolyForm& f) {
  return rmul0(w, f) - lmul0(f, w);
}

PwPolyForm scalar_times(const PwPolyForm& s, const Mat& value) {
  if (s.tag_.n != 1) throw std::invalid_argument("scalar_times: needs a scalar-valued form");
  StructureGroup tag{GroupKind::ComplexGeneral, static_cast<int>(value.rows())};
  PwPolyForm out = PwPolyForm::zero(s.surf_, tag, s.fdeg_, s.pdeg_);
  for (int c = 0; c < s.components(); ++c)
    for (int t = 0; t < s.surf_->num_triangles(); ++t)
      for (std::size_t m = 0; m < s.data_[c][t].size(); ++m)
        out.data_[c][t][m] = s.data_[c][t][m](0, 0) * value;
  return out;
}

namespace {

// lambda_i as (const, u, v) coefficients and their gradients
constexpr double kLambda[3][3] = {{1.0, -1.0, -1.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
constexpr double kGradLambda[3][2] = {{-1.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}};

int local_index_of(const std::array<int, 3>& tri, int v) {
  for (int i = 0; i < 3; ++i)
    if (tri[i] == v) return i;
  return -1;
}

}  // namespace

namespace {

void add_whitney(PwPolyForm& out, int edge_id, const Mat& coefficient) {
  const auto& surf = *out.surface();
  const auto& e = surf.edges[edge_id];
  for (int side = 0; side < e.count; ++side) {
    int t = e.tri[side];
    int i = local_index_of(surf.triangles[t], e.a);
    int j = local_index_of(surf.triangles[t], e.b);
    // lambda_i d(lambda_j) - lambda_j d(lambda_i), oriented a->b
    for (int comp = 0; comp < 2; ++comp) {
      double gi = kGradLambda[i][comp], gj = kGradLambda[j][comp];
      auto& cs = out.tri_coeffs(comp, t);
      cs[poly::index(0, 0)] += (kLambda[i][0] * gj - kLambda[j][0] * gi) * coefficient;
      cs[poly::index(1, 0)] += (kLambda[i][1] * gj - kLambda[j][1] * gi) * coefficient;
      cs[poly::index(0, 1)] += (kLambda[i][2] * gj - kLambda[j][2] * gi) * coefficient;
    }
  }
}

void add_hat(PwPolyForm& out, int vertex, const Mat& coefficient) {
  const auto& surf = *out.surface();
  for (int t = 0; t < surf.num_triangles(); ++t) {
    int i = local_index_of(surf.triangles[t], vertex);
    if (i < 0) continue;
    auto& cs = out.tri_coeffs(0, t);
    cs[poly::index(0, 0)] += kLambda[i][0] * coefficient;
    cs[poly::index(1, 0)] += kLambda[i][1] * coefficient;
    cs[poly::index(0, 1)] += kLambda[i][2] * coefficient;
  }
}

}  // namespace

PwPolyForm whitney_form(SurfacePtr surf, int edge_id, const Mat& coefficient, StructureGroup tag) {
  PwPolyForm out = PwPolyForm::zero(std::move(surf), tag, 1, 1);
  add_whitney(out, edge_id, coefficient);
  return out;
}

PwPolyForm hat_form(SurfacePtr surf, int vertex, const Mat& coefficient, StructureGroup tag) {
  PwPolyForm out = PwPolyForm::zero(std::move(surf), tag, 0, 1);
  add_hat(out, vertex, coefficient);
  return out;
}

PwPolyForm bubble_form(SurfacePtr surf, int tri, const Mat& coefficient, StructureGroup tag) {
  PwPolyForm out = PwPolyForm::zero(surf, tag, 0, 3);
  auto& cs = out.tri_coeffs(0, tri);
  cs[poly::index(1, 1)] += coefficient;
  cs[poly::index(2, 1)] -= coefficient;
  cs[poly::index(1, 2)] -= coefficient;
  return out;
}

PwPolyForm random_continuous_0form(SurfacePtr surf, StructureGroup tag, Rng& rng, bool enrich) {
  PwPolyForm f = PwPolyForm::zero(surf, tag, 0, 1);
  for (int v = 0; v < surf->num_vertices(); ++v) add_hat(f, v, random_algebra(rng, tag).m);
  if (enrich) {
    StructureGroup sc = StructureGroup::cstar();
    Mat one = Mat::Identity(1, 1);
    for (int k = 0; k < 3; ++k) {
      int e = static_cast<int>(rng.below(surf->num_edges()));
      const auto& ed = surf->edges[e];
      PwPolyForm s = mul00(hat_form(surf, ed.a, one, sc), hat_form(surf, ed.b, one, sc));
      PwPolyForm term = scalar_times(s, random_algebra(rng, tag).m);
      term *= cplx{rng.sym(), 0.0};
      f += term;
    }
  }
  return f;
}

PwPolyForm random_continuous_1form(SurfacePtr surf, StructureGroup tag, Rng& rng, bool enrich) {
  PwPolyForm w = PwPolyForm::zero(surf, tag, 1, 1);
  for (int e = 0; e < surf->num_edges(); ++e) add_whitney(w, e, random_algebra(rng, tag).m);
  if (enrich) {
    StructureGroup sc = StructureGroup::cstar();
    Mat one = Mat::Identity(1, 1);
    for (int k = 0; k < 3; ++k) {
      int e = static_cast<int>(rng.below(surf->num_edges()));
      int v = static_cast<int>(rng.below(surf->num_vertices()));
      PwPolyForm ws = whitney_form(surf, e, Mat::Identity(tag.n, tag.n), tag);
      PwPolyForm hs = hat_form(surf, v, one, sc);
      PwPolyForm term = lmul0(scalar_times(hs, random_algebra(rng, tag).m), ws);
      w += term;
    }
  }
  return w;
}

}  // namespace mlab
