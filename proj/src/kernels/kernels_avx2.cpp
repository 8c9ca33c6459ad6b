#include "mlab/kernels.hpp"

#if defined(MLAB_HAVE_AVX2_KERNELS)

#include <immintrin.h>

// Interleaved complex<double> layout: one __m256d holds two complex values
// [re0, im0, re1, im1]. Complex products use the movedup / permute /
// fmaddsub recipe. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the runtime CPU check in kernels.cpp.

namespace mlab::kern::avx2 {

namespace {

// [a*c - b*d, a*d + b*c] for packed pairs (a+bi)(c+di)
inline __m256d cmul(__m256d x, __m256d y) {
  __m256d xr = _mm256_movedup_pd(x);               // [a, a, a1, a1]
  __m256d xi = _mm256_permute_pd(x, 0xF);          // [b, b, b1, b1]
  __m256d ys = _mm256_permute_pd(y, 0x5);          // [d, c, d1, c1]
  return _mm256_fmaddsub_pd(xr, y, _mm256_mul_pd(xi, ys));
}

// conj(x) * y
inline __m256d cmul_conj(__m256d x, __m256d y) {
  __m256d xr = _mm256_movedup_pd(x);
  __m256d xi = _mm256_permute_pd(x, 0xF);
  __m256d ys = _mm256_permute_pd(y, 0x5);
  return _mm256_fmsubadd_pd(xr, y, _mm256_mul_pd(xi, ys));
}

inline cplx reduce_pairs(__m256d acc) {
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  return {buf[0] + buf[2], buf[1] + buf[3]};
}

}  // namespace

cplx cdot(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  for (; i + 2 <= n; i += 2) {
    __m256d x = _mm256_loadu_pd(pa + 2 * i);
    __m256d y = _mm256_loadu_pd(pb + 2 * i);
    acc = _mm256_add_pd(acc, cmul(x, y));
  }
  cplx r = reduce_pairs(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  for (; i + 2 <= n; i += 2) {
    __m256d x = _mm256_loadu_pd(pa + 2 * i);
    __m256d y = _mm256_loadu_pd(pb + 2 * i);
    acc = _mm256_add_pd(acc, cmul_conj(x, y));
  }
  cplx r = reduce_pairs(acc);
  for (; i < n; ++i) r += std::conj(a[i]) * b[i];
  return r;
}

void caxpy(cplx* dst, cplx s, const cplx* src, std::size_t n) {
  const __m256d sv = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
  std::size_t i = 0;
  double* pd = reinterpret_cast<double*>(dst);
  const double* ps = reinterpret_cast<const double*>(src);
  for (; i + 2 <= n; i += 2) {
    __m256d x = _mm256_loadu_pd(ps + 2 * i);
    __m256d d = _mm256_loadu_pd(pd + 2 * i);
    _mm256_storeu_pd(pd + 2 * i, _mm256_add_pd(d, cmul(sv, x)));
  }
  for (; i < n; ++i) dst[i] += s * src[i];
}

cplx wsum(const double* w, const cplx* f, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* pf = reinterpret_cast<const double*>(f);
  for (; i + 2 <= n; i += 2) {
    __m256d wv = _mm256_setr_pd(w[i], w[i], w[i + 1], w[i + 1]);
    __m256d x = _mm256_loadu_pd(pf + 2 * i);
    acc = _mm256_fmadd_pd(wv, x, acc);
  }
  cplx r = reduce_pairs(acc);
  for (; i < n; ++i) r += w[i] * f[i];
  return r;
}

}  // namespace mlab::kern::avx2

#endif  // MLAB_HAVE_AVX2_KERNELS
