#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmclab/functions.hpp"

namespace qmclab {

/// Modulus of variation nu(f; n): the exact maximum over collections of at
/// most n non-overlapping grid intervals (touching endpoints allowed) of
/// sum |f(b_j) - f(a_j)|. Dynamic program over grid positions with per-
/// budget states {closed, open positive, open negative}; O(M*n). The
/// floating accumulation order is fixed (left to right), so the result is
/// bit-reproducible and matches the exhaustive oracle exactly.
double modulus_of_variation(const SampledFunction& f, std::size_t n);
double modulus_of_variation_values(std::span<const double> y, std::size_t n);

/// Exhaustive oracle: enumerates every admissible interval collection.
/// Restricted to grids of at most 24 points (throws above).
double modulus_of_variation_oracle(const SampledFunction& f, std::size_t n);
double modulus_of_variation_oracle_values(std::span<const double> y, std::size_t n);

/// nu(f; k) for k = 0..k_max in one scan (entry 0 is 0). The scan runs the
/// DP only up to the number of monotone runs in the samples; beyond that
/// budget the maximum is the grid total variation and the profile is
/// extended with that saturated value.
std::vector<double> modulus_profile(const SampledFunction& f, std::size_t k_max);
std::vector<double> modulus_profile_values(std::span<const double> y, std::size_t k_max);

/// Grid-restricted total p-variation: DP over partition chains,
/// V(i) = max_{j<i} V(j) + |f(x_i) - f(x_j)|^p, answer V(M-1)^{1/p}.
/// O(M^2). p must lie in [1, 64] (|increment|^p underflows to meaningless
/// values beyond that).
double total_p_variation(const SampledFunction& f, double p);
double total_p_variation_values(std::span<const double> y, double p);

/// Grid-restricted Holder seminorm sup |f(x)-f(y)| / omega(|x-y|) over grid
/// pairs. Rejects omega rules that are not non-decreasing with omega(0)=0
/// on sampled check points.
double holder_seminorm(const SampledFunction& f, const OmegaRule& omega);

/// nu(f;N) <=  N^(1-1/p) * Var_p(f).
double nu_upper_bound_pvar(std::size_t n, double p, double var_p);

/// nu(f;N) <= |f|_{H^omega} * N * omega(1/N).
double nu_upper_bound_holder(std::size_t n, const OmegaRule& omega, double seminorm);

struct VariationProfile {
    std::vector<double> nu;          // nu[k] for k = 0..k_max, nu[0] = 0
    std::map<double, double> var_p;  // exponent -> grid Var_p
    std::optional<std::pair<std::string, double>> holder;  // omega id, seminorm
};

VariationProfile variation_profile(const SampledFunction& f, std::size_t k_max,
                                   std::span<const double> exponents,
                                   const OmegaRule* omega = nullptr);

}  // namespace qmclab
