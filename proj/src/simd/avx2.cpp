#include <immintrin.h>

#include <cmath>
#include <vector>

#include "holoquant/simd.hpp"

namespace holoquant::simd::avx2 {

// two interleaved complex values per register: [re0, im0, re1, im1]
void cgemm(std::size_t m, std::size_t n, std::size_t k, const Complex* a, const Complex* b,
           Complex* c) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  const std::size_t m2 = m & ~std::size_t(1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      const double br = bd[2 * (l + j * k)];
      const double bi = bd[2 * (l + j * k) + 1];
      if (br == 0.0 && bi == 0.0) continue;
      const __m256d vbr = _mm256_set1_pd(br);
      const __m256d vbi = _mm256_set1_pd(bi);
      const double* acol = ad + 2 * l * m;
      double* ccol = cd + 2 * j * m;
      std::size_t i = 0;
      for (; i < m2; i += 2) {
        const __m256d va = _mm256_loadu_pd(acol + 2 * i);
        const __m256d vs = _mm256_permute_pd(va, 0b0101);
        const __m256d t = _mm256_mul_pd(vs, vbi);
        const __m256d prod = _mm256_fmaddsub_pd(va, vbr, t);
        _mm256_storeu_pd(ccol + 2 * i, _mm256_add_pd(_mm256_loadu_pd(ccol + 2 * i), prod));
      }
      for (; i < m; ++i) {
        const double ar = acol[2 * i], ai = acol[2 * i + 1];
        ccol[2 * i] += ar * br - ai * bi;
        ccol[2 * i + 1] += ar * bi + ai * br;
      }
    }
  }
}

// four evaluation points per register
void hermite_synthesis(const Complex* coeffs, std::size_t ncoeffs, const double* xs,
                       std::size_t npoints, double hbar, Complex* out) {
  std::vector<double> up(ncoeffs + 1), down(ncoeffs + 1);
  for (std::size_t n = 0; n + 1 < ncoeffs; ++n) {
    up[n] = std::sqrt(2.0 / (hbar * double(n + 1)));
    down[n] = std::sqrt(double(n) / double(n + 1));
  }
  const double norm = std::pow(pi * hbar, -0.25);
  std::size_t j = 0;
  for (; j + 4 <= npoints; j += 4) {
    alignas(32) double h0[4];
    for (int q = 0; q < 4; ++q) h0[q] = norm * std::exp(-xs[j + q] * xs[j + q] / (2.0 * hbar));
    const __m256d x = _mm256_loadu_pd(xs + j);
    __m256d h = _mm256_load_pd(h0);
    __m256d hm = _mm256_setzero_pd();
    __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
    for (std::size_t n = 0; n < ncoeffs; ++n) {
      sr = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[n].real()), h, sr);
      si = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[n].imag()), h, si);
      const __m256d ux = _mm256_mul_pd(_mm256_set1_pd(up[n]), x);
      const __m256d hn = _mm256_fmsub_pd(ux, h, _mm256_mul_pd(_mm256_set1_pd(down[n]), hm));
      hm = h;
      h = hn;
    }
    alignas(32) double rr[4], ii[4];
    _mm256_store_pd(rr, sr);
    _mm256_store_pd(ii, si);
    for (int q = 0; q < 4; ++q) out[j + q] = Complex(rr[q], ii[q]);
  }
  if (j < npoints) scalar::hermite_synthesis(coeffs, ncoeffs, xs + j, npoints - j, hbar, out + j);
}

Complex weighted_sum(const double* w, const Complex* f, std::size_t n) {
  const double* fd = reinterpret_cast<const double*>(f);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vw = _mm256_set_pd(w[i + 1], w[i + 1], w[i], w[i]);
    acc = _mm256_fmadd_pd(vw, _mm256_loadu_pd(fd + 2 * i), acc);
  }
  alignas(32) double r[4];
  _mm256_store_pd(r, acc);
  double sr = r[0] + r[2], si = r[1] + r[3];
  for (; i < n; ++i) {
    sr += w[i] * f[i].real();
    si += w[i] * f[i].imag();
  }
  return {sr, si};
}

}  // namespace holoquant::simd::avx2
