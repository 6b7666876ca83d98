#pragma once

#include <cstddef>

namespace qmclab::kernels {

// Hot inner loops of the laboratory, factored out so they can be swapped
// between a scalar reference and SIMD variants picked at runtime.
//
// Every kernel is pure, and every variant evaluates the same per-element
// expression tree; the only reductions are max/min, which are exact. Scalar
// and SIMD results are therefore bitwise identical (the equivalence tests
// assert exactly that). Inputs must be finite; -inf is permitted in the
// modulus-of-variation state arrays as the "no open interval" sentinel.
struct KernelTable {
    const char* name;

    // max_i |x[i] - (2i+1)/(2n)|, i = 0..n-1. With D* = 1/(2n) + this,
    // the sorted-point star discrepancy attains the midpoint-set equality
    // case exactly.
    double (*midpoint_deviation)(const double* x, std::size_t n);

    // max_i max(|x[i] - i/n|, |x[i] - (i+1)/n|), i = 0..n-1.
    double (*onesided_deviation)(const double* x, std::size_t n);

    // Residuals r_i = (i+1)/n - x[i]; writes min and max over i.
    void (*index_residual_minmax)(const double* x, std::size_t n,
                                  double* r_min, double* r_max);

    // max over i = 0..n-2 of x[i+1] - x[i]; requires n >= 2.
    double (*max_adjacent_diff)(const double* x, std::size_t n);

    // Modulus-of-variation scan, close pass: for j = 1..k_max,
    //   closed[j] = max(closed[j], open_pos[j] + y, open_neg[j] - y).
    // Intervals opened at an earlier grid point may close at the current one.
    void (*mov_close_pass)(double y, std::size_t k_max, double* closed,
                           const double* open_pos, const double* open_neg);

    // Modulus-of-variation scan, open pass: for j = 1..k_max,
    //   open_pos[j] = max(open_pos[j], closed[j-1] - y)
    //   open_neg[j] = max(open_neg[j], closed[j-1] + y).
    // Runs after the close pass, so a new interval may share its left
    // endpoint with the interval that just closed.
    void (*mov_open_pass)(double y, std::size_t k_max, const double* closed,
                          double* open_pos, double* open_neg);

    // max over j = 0..count-1 of v[j] + |yi - y[j]|^p for p = 1, 2, 4.
    double (*pvar_relax_p1)(const double* v, const double* y,
                            std::size_t count, double yi);
    double (*pvar_relax_p2)(const double* v, const double* y,
                            std::size_t count, double yi);
    double (*pvar_relax_p4)(const double* v, const double* y,
                            std::size_t count, double yi);
};

/// Portable reference implementation. Always available.
const KernelTable& scalar_kernels();

/// AVX2 variant; nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// NEON variant; nullptr off aarch64.
const KernelTable* neon_kernels();

/// The table the library uses. Picks the widest supported variant once at
/// first use; the environment variable QMCLAB_KERNELS=scalar|avx2|neon|auto
/// overrides the choice (unavailable requests fall back to scalar).
const KernelTable& active_kernels();

}  // namespace qmclab::kernels
