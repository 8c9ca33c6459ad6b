#include "mlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mlab::kern {

namespace {

struct Backend {
  cplx (*cdot)(const cplx*, const cplx*, std::size_t);
  cplx (*cdot_conj)(const cplx*, const cplx*, std::size_t);
  void (*caxpy)(cplx*, cplx, const cplx*, std::size_t);
  cplx (*wsum)(const double*, const cplx*, std::size_t);
  const char* name;
};

Backend pick_backend() {
  const char* force = std::getenv("MODULI_LAB_SIMD");
#if defined(MLAB_HAVE_AVX2_KERNELS)
  bool want_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (force && std::strcmp(force, "scalar") == 0) want_avx2 = false;
  if (want_avx2) {
    return {avx2::cdot, avx2::cdot_conj, avx2::caxpy, avx2::wsum, "avx2"};
  }
#else
  (void)force;
#endif
  return {scalar::cdot, scalar::cdot_conj, scalar::caxpy, scalar::wsum, "scalar"};
}

const Backend& backend() {
  static const Backend b = pick_backend();
  return b;
}

}  // namespace

cplx cdot(const cplx* a, const cplx* b, std::size_t n) { return backend().cdot(a, b, n); }
cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n) { return backend().cdot_conj(a, b, n); }
void caxpy(cplx* dst, cplx s, const cplx* src, std::size_t n) { backend().caxpy(dst, s, src, n); }
cplx wsum(const double* w, const cplx* f, std::size_t n) { return backend().wsum(w, f, n); }
const char* active_backend() { return backend().name; }

}  // namespace mlab::kern
