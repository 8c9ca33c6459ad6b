#include "mlab/elliptic.hpp"

#include <cmath>

namespace mlab {

namespace {
constexpr int kMaxTerms = 96;
}

EllipticCurve::EllipticCurve(cplx w1, cplx w2) : w1_(w1), w2_(w2) {
  tau_ = w2_ / w1_;
  if (!(tau_.imag() > 0.0)) throw std::invalid_argument("EllipticCurve: Im(w2/w1) must be positive");
  q_ = std::exp(cplx{0.0, kPi} * tau_);
  if (std::abs(q_) > 0.98)
    throw std::invalid_argument("EllipticCurve: lattice too degenerate for the theta series");
  D_ = w1_ * std::conj(w2_) - std::conj(w1_) * w2_;

  // eta1 from theta constants: theta1'(0), theta1'''(0)
  cplx tp{0.0, 0.0}, tppp{0.0, 0.0};
  double sign = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    cplx qe = std::pow(q_, (n + 0.5) * (n + 0.5));
    double m = 2.0 * n + 1.0;
    tp += sign * qe * m;
    tppp += -sign * qe * m * m * m;
    if (std::abs(qe) < 1e-18 && n > 2) break;
    sign = -sign;
  }
  eta1_ = -kPi * kPi * tppp / (3.0 * w1_ * tp);
  eta2_ = 2.0 * zeta_raw(0.5 * w2_);
}

std::pair<double, double> EllipticCurve::torus_coords(cplx z) const {
  cplx det = D_;
  cplx x = (z * std::conj(w2_) - std::conj(z) * w2_) / det;
  cplx y = (std::conj(z) * w1_ - z * std::conj(w1_)) / det;
  return {x.real(), y.real()};
}

double EllipticCurve::torus_distance(cplx z, cplx c) const {
  auto [x, y] = torus_coords(z - c);
  x -= std::round(x);
  y -= std::round(y);
  return std::abs(point(x, y));
}

double EllipticCurve::cell_area() const { return 0.5 * std::abs(D_); }

cplx EllipticCurve::dbar_coeff(int kx, int ky) const {
  // x = (z conj(w2) - zbar w2)/D: dx/dzbar = -w2/D, dy/dzbar = w1/D
  return kTwoPiI * (-static_cast<double>(kx) * w2_ + static_cast<double>(ky) * w1_) / D_;
}

cplx EllipticCurve::theta1(cplx v) const {
  cplx s{0.0, 0.0};
  double sign = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    cplx term = sign * std::pow(q_, (n + 0.5) * (n + 0.5)) * std::sin((2.0 * n + 1.0) * v);
    s += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(s)) && n > 2) break;
    sign = -sign;
  }
  return 2.0 * s;
}

cplx EllipticCurve::theta1_prime(cplx v) const {
  cplx s{0.0, 0.0};
  double sign = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    double m = 2.0 * n + 1.0;
    cplx term = sign * std::pow(q_, (n + 0.5) * (n + 0.5)) * m * std::cos(m * v);
    s += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(s)) && n > 2) break;
    sign = -sign;
  }
  return 2.0 * s;
}

cplx EllipticCurve::zeta_raw(cplx z) const {
  cplx v = kPi * z / w1_;
  return eta1_ * z / w1_ + kPi / w1_ * theta1_prime(v) / theta1(v);
}

cplx EllipticCurve::zeta(cplx z) const {
  auto [x, y] = torus_coords(z);
  double m = std::round(x), n = std::round(y);
  cplx z0 = z - point(m, n);
  if (std::abs(z0) < 1e-13 * (std::abs(w1_) + std::abs(w2_)))
    throw std::domain_error("zeta: lattice point");
  return zeta_raw(z0) + m * eta1_ + n * eta2_;
}

}  // namespace mlab
