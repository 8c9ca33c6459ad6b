#include "mlab/quadrature.hpp"

#include <cmath>

#include "mlab/kernels.hpp"
#include "mlab/polyform.hpp"

namespace mlab {

namespace {

// C^2 cutoff: 1 on [0, 1/2], 0 on [1, inf)
double cutoff(double t) {
  if (t <= 0.5) return 1.0;
  if (t >= 1.0) return 0.0;
  double s = 2.0 * t - 1.0;
  return 1.0 - s * s * s * (10.0 - 15.0 * s + 6.0 * s * s);
}

struct WeightedPoint {
  double x, y;  // torus coordinates
  cplx w;       // quadrature weight times eta value
};

}  // namespace

QuadratureScheme QuadratureScheme::level(int lvl) {
  if (lvl < 1) lvl = 1;
  QuadratureScheme s;
  s.base_n = 6 << lvl;  // 12, 24, 48, 96, 192
  s.depth = lvl + 1;
  s.n_rho = 2 + lvl;
  s.n_phi = 4 * (lvl + 2);
  s.r0 = 0.35;
  return s;
}

SigmaMoments::SigmaMoments(const EllipticCurve& E1, std::optional<cplx> pole_p,
                           const QuadratureScheme& s, int band)
    : band_(band) {
  const int L = 2 * band + 1;
  moments_.assign(static_cast<std::size_t>(L) * L, cplx{0.0, 0.0});

  std::vector<WeightedPoint> pts;
  const double cell_area = E1.cell_area();

  if (!pole_p) {
    // holomorphic coefficient 1: plain midpoint grid, exact below Nyquist
    int N = std::max(s.base_n, 2 * band + 3);
    pts.reserve(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        pts.push_back({(i + 0.5) / N, (j + 0.5) / N, cplx{1.0 / (double(N) * N), 0.0}});
  } else {
    const cplx p = *pole_p;
    const std::vector<cplx> poles{cplx{0.0, 0.0}, p};
    // patch radius: keeps the two patches disjoint and inside the cell
    double sep = E1.torus_distance(p, 0.0);
    double lat = std::min(std::abs(E1.w1()), std::abs(E1.w2()));
    double r0 = s.r0 * std::min(sep, lat);

    auto eta = [&](cplx z) { return E1.zeta(z) - E1.zeta(z - p); };

    // base grid with the polar neighborhoods cut out smoothly
    int N = std::max(s.base_n, 2 * band + 3);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        double x = (i + 0.5) / N, y = (j + 0.5) / N;
        cplx z = E1.point(x, y);
        double cut = 1.0;
        for (cplx c : poles) cut -= cutoff(E1.torus_distance(z, c) / r0);
        if (cut <= 0.0) continue;
        pts.push_back({x, y, cut / (double(N) * N) * eta(z)});
      }

    // polar patches: dyadic radial segments, Gauss in rho, uniform angles.
    // The angular average kills the 1/rho mode exactly, so the radial
    // integrand is smooth on every segment.
    std::vector<double> gw;
    auto gx = gauss_legendre_nodes(s.n_rho, gw);
    for (cplx c : poles) {
      double r_hi = r0;
      for (int seg = 0; seg <= s.depth; ++seg) {
        double r_lo = (seg == s.depth) ? 0.0 : r_hi * 0.5;
        for (int ir = 0; ir < s.n_rho; ++ir) {
          double rho = 0.5 * (r_lo + r_hi) + 0.5 * (r_hi - r_lo) * gx[ir];
          double wr = 0.5 * (r_hi - r_lo) * gw[ir];
          for (int ip = 0; ip < s.n_phi; ++ip) {
            double phi = 2.0 * kPi * (ip + 0.5) / s.n_phi;
            cplx z = c + rho * std::polar(1.0, phi);
            auto [x, y] = E1.torus_coords(z);
            double w = wr * (2.0 * kPi / s.n_phi) * rho * cutoff(rho / r0) / cell_area;
            pts.push_back({x, y, w * eta(z)});
          }
        }
        r_hi = r_lo;
        if (r_hi == 0.0) break;
      }
    }
  }

  points_ = pts.size();

  // rank-1 accumulation of the mode matrix: M[k1][k2] += (w p1^k1) p2^k2
  std::vector<cplx> a(L), b(L);
  for (const auto& pt : pts) {
    cplx p1 = std::exp(kTwoPiI * pt.x);
    cplx p2 = std::exp(kTwoPiI * pt.y);
    a[band] = pt.w;
    b[band] = cplx{1.0, 0.0};
    for (int k = 1; k <= band; ++k) {
      a[band + k] = a[band + k - 1] * p1;
      a[band - k] = a[band - k + 1] / p1;
      b[band + k] = b[band + k - 1] * p2;
      b[band - k] = b[band - k + 1] / p2;
    }
    for (int i = 0; i < L; ++i) kern::caxpy(moments_.data() + i * L, a[i], b.data(), L);
  }
}

}  // namespace mlab
