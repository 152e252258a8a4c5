#pragma once

#include <cstddef>

#include "holoquant/core.hpp"

// Runtime-dispatched numeric kernels. Every kernel has a portable scalar
// reference; the AVX2 variant is chosen when the CPU supports it, unless
// HOLOQUANT_SIMD=scalar is set in the environment.
namespace holoquant::simd {

enum class Isa { Scalar, Avx2 };

struct Kernels {
  // C += A*B, column-major, A is m x k, B is k x n, C is m x n
  void (*cgemm)(std::size_t m, std::size_t n, std::size_t k, const Complex* a,
                const Complex* b, Complex* c);
  // out[j] = sum_n coeffs[n] * h_n(xs[j]) for normalized Hermite functions
  void (*hermite_synthesis)(const Complex* coeffs, std::size_t ncoeffs, const double* xs,
                            std::size_t npoints, double hbar, Complex* out);
  Complex (*weighted_sum)(const double* w, const Complex* f, std::size_t n);
};

bool isa_available(Isa isa);
const char* isa_name(Isa isa);
const Kernels& kernels(Isa isa);
Isa active_isa();
const Kernels& active();

namespace scalar {
void cgemm(std::size_t, std::size_t, std::size_t, const Complex*, const Complex*, Complex*);
void hermite_synthesis(const Complex*, std::size_t, const double*, std::size_t, double, Complex*);
Complex weighted_sum(const double*, const Complex*, std::size_t);
}  // namespace scalar

#if defined(HOLOQUANT_HAVE_AVX2)
namespace avx2 {
void cgemm(std::size_t, std::size_t, std::size_t, const Complex*, const Complex*, Complex*);
void hermite_synthesis(const Complex*, std::size_t, const double*, std::size_t, double, Complex*);
Complex weighted_sum(const double*, const Complex*, std::size_t);
}  // namespace avx2
#endif

}  // namespace holoquant::simd
