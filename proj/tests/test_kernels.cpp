#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mlab/kernels.hpp"
#include "mlab/rng.hpp"

using namespace mlab;
using kern::cplx;

namespace {

std::vector<cplx> random_vec(Rng& rng, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& z : v) z = rng.csym();
  return v;
}

double rel_err(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

}  // namespace

TEST_CASE("scalar reference kernels match a naive loop") {
  Rng rng(11);
  auto a = random_vec(rng, 137), b = random_vec(rng, 137);
  cplx dot = 0.0, dotc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    dotc += std::conj(a[i]) * b[i];
  }
  CHECK(rel_err(kern::scalar::cdot(a.data(), b.data(), a.size()), dot) < 1e-14);
  CHECK(rel_err(kern::scalar::cdot_conj(a.data(), b.data(), a.size()), dotc) < 1e-14);
}

#if defined(MLAB_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 kernels are equivalent to the scalar reference") {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return;
  Rng rng(7);
  // sizes cover the vector body and every remainder
  for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 31u, 64u, 1001u}) {
    auto a = random_vec(rng, n), b = random_vec(rng, n);
    std::vector<double> w(n);
    for (auto& x : w) x = rng.sym();

    CHECK(rel_err(kern::avx2::cdot(a.data(), b.data(), n),
                  kern::scalar::cdot(a.data(), b.data(), n)) < 1e-13);
    CHECK(rel_err(kern::avx2::cdot_conj(a.data(), b.data(), n),
                  kern::scalar::cdot_conj(a.data(), b.data(), n)) < 1e-13);
    CHECK(rel_err(kern::avx2::wsum(w.data(), a.data(), n),
                  kern::scalar::wsum(w.data(), a.data(), n)) < 1e-13);

    auto d1 = b, d2 = b;
    cplx s = rng.csym();
    kern::avx2::caxpy(d1.data(), s, a.data(), n);
    kern::scalar::caxpy(d2.data(), s, a.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(d1[i] - d2[i]) < 1e-13);
  }
}
#endif

TEST_CASE("dispatcher resolves to a working backend") {
  Rng rng(3);
  auto a = random_vec(rng, 17);
  cplx d = kern::cdot(a.data(), a.data(), a.size());
  cplx s = kern::scalar::cdot(a.data(), a.data(), a.size());
  CHECK(rel_err(d, s) < 1e-13);
  CHECK(kern::active_backend() != nullptr);
}
