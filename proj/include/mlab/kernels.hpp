#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops behind the quadrature engine and the Fourier
// coefficient algebra. Scalar kernels are the reference semantics; the AVX2
// variants are selected at runtime and must agree with them to rounding
// (equivalence-tested in tests/test_kernels.cpp).

namespace mlab::kern {

using cplx = std::complex<double>;

namespace scalar {
cplx cdot(const cplx* a, const cplx* b, std::size_t n);
cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n);
void caxpy(cplx* dst, cplx s, const cplx* src, std::size_t n);
cplx wsum(const double* w, const cplx* f, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define MLAB_HAVE_AVX2_KERNELS 1
namespace avx2 {
cplx cdot(const cplx* a, const cplx* b, std::size_t n);
cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n);
void caxpy(cplx* dst, cplx s, const cplx* src, std::size_t n);
cplx wsum(const double* w, const cplx* f, std::size_t n);
}  // namespace avx2
#endif

/// Sum of a_i * b_i (no conjugation).
cplx cdot(const cplx* a, const cplx* b, std::size_t n);
/// Sum of conj(a_i) * b_i.
cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n);
/// dst_i += s * src_i.
void caxpy(cplx* dst, cplx s, const cplx* src, std::size_t n);
/// Sum of w_i * f_i with real weights.
cplx wsum(const double* w, const cplx* f, std::size_t n);

/// Name of the backend the dispatcher resolved to ("avx2" or "scalar").
/// MODULI_LAB_SIMD=scalar forces the reference path.
const char* active_backend();

}  // namespace mlab::kern
