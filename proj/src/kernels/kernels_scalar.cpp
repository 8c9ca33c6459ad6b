#include "mlab/kernels.hpp"

namespace mlab::kern::scalar {

cplx cdot(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

void caxpy(cplx* dst, cplx s, const cplx* src, std::size_t n) {
  const double sr = s.real(), si = s.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = src[i].real(), xi = src[i].imag();
    dst[i] += cplx{sr * xr - si * xi, sr * xi + si * xr};
  }
}

cplx wsum(const double* w, const cplx* f, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += w[i] * f[i].real();
    im += w[i] * f[i].imag();
  }
  return {re, im};
}

}  // namespace mlab::kern::scalar
