#include <cmath>
#include <vector>

#include "holoquant/simd.hpp"

namespace holoquant::simd::scalar {

void cgemm(std::size_t m, std::size_t n, std::size_t k, const Complex* a, const Complex* b,
           Complex* c) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      const double br = bd[2 * (l + j * k)];
      const double bi = bd[2 * (l + j * k) + 1];
      if (br == 0.0 && bi == 0.0) continue;
      const double* acol = ad + 2 * l * m;
      double* ccol = cd + 2 * j * m;
      for (std::size_t i = 0; i < m; ++i) {
        const double ar = acol[2 * i], ai = acol[2 * i + 1];
        ccol[2 * i] += ar * br - ai * bi;
        ccol[2 * i + 1] += ar * bi + ai * br;
      }
    }
  }
}

void hermite_synthesis(const Complex* coeffs, std::size_t ncoeffs, const double* xs,
                       std::size_t npoints, double hbar, Complex* out) {
  std::vector<double> up(ncoeffs + 1), down(ncoeffs + 1);
  for (std::size_t n = 0; n + 1 < ncoeffs; ++n) {
    up[n] = std::sqrt(2.0 / (hbar * double(n + 1)));
    down[n] = std::sqrt(double(n) / double(n + 1));
  }
  const double norm = std::pow(pi * hbar, -0.25);
  for (std::size_t j = 0; j < npoints; ++j) {
    const double x = xs[j];
    double hm = 0.0, h = norm * std::exp(-x * x / (2.0 * hbar));
    double sr = 0.0, si = 0.0;
    for (std::size_t n = 0; n < ncoeffs; ++n) {
      sr += coeffs[n].real() * h;
      si += coeffs[n].imag() * h;
      const double hn = up[n] * x * h - down[n] * hm;
      hm = h;
      h = hn;
    }
    out[j] = Complex(sr, si);
  }
}

Complex weighted_sum(const double* w, const Complex* f, std::size_t n) {
  double sr = 0.0, si = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sr += w[i] * f[i].real();
    si += w[i] * f[i].imag();
  }
  return {sr, si};
}

}  // namespace holoquant::simd::scalar
