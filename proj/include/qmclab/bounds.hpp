#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmclab/functions.hpp"
#include "qmclab/point_set.hpp"
#include "qmclab/variation.hpp"

namespace qmclab {

/// (1/N) sum f(x_n), accumulated with compensated (Neumaier) summation in
/// ascending point order. Summation error stays below 1e-14 for N <= 2^20.
double qmc_estimate(const SampledFunction& f, const PointSet& ps);

/// E_N = |qmc_estimate - reference integral|.
double empirical_error(const SampledFunction& f, const PointSet& ps);

/// Koksma: E_N <= D* Var_1. Callers skip it when Var_1 is infinite.
double koksma_bound(double d_star, double var1);

/// E_N <= 25 D* nu(f;N). The constant 25 is the explicit constant of the
/// extended inequality; it is a proof artifact, not sharp.
double thm1_bound(double d_star, double nu_n);

/// Continuous f: E_N <= D* nu(f; 2N+2).
double thm2_bound(double d_star, double nu_2n2);

/// f of bounded p-variation: E_N <= 25 N^(1-1/p) D* Var_p.
double pvar_bound(std::size_t n, double d_star, double p, double var_p);

/// f in H^omega: E_N <= 25 |f| N omega(1/N) D*.
double holder_bound(std::size_t n, double d_star, const OmegaRule& omega,
                    double seminorm);

/// |LHS - RHS| of the error identity
///   (1/N) sum f(x_n) - integral f = sum_n integral_{x_n}^{x_{n+1}} (t - n/N) df
/// for continuously differentiable f (x_0 = 0, x_{N+1} = 1 appended); the
/// right side is evaluated as integrals of (t - n/N) f'(t). The residual
/// stays below 10 * quad_tol * (N+1). Throws if f carries no derivative rule.
double zaremba_residual(const SampledFunction& f, const PointSet& ps,
                        double quad_tol = 1e-10);

/// Largest gap between consecutive points, endpoints 0 and 1 included.
/// Satisfies max_gap <= 4 D* for distinct-point sets.
double max_gap(const PointSet& ps);

/// One row of the laboratory: the QMC estimate, the true error, the star
/// discrepancy, and every bound whose hypotheses the function satisfies.
struct BoundReport {
    std::string function_id;
    std::string sequence_id;
    std::size_t n = 0;
    double estimate = 0.0;
    double true_integral = 0.0;
    double error = 0.0;
    double d_star = 0.0;
    double nu_n = 0.0;
    double nu_2n2 = 0.0;
    std::optional<double> bound_koksma;   // finite Var_1 only
    double bound_thm1 = 0.0;              // always present
    std::optional<double> bound_thm2;     // continuous f only
    std::optional<double> bound_pvar_p2;  // p = 2
    std::optional<double> bound_holder;   // H^omega members only
    double ratio_thm1 = 0.0;
    double tolerance = 1e-12;  // reference-integral tolerance, floored at 1e-12

    /// (bound name, error/bound) for every present bound; ratio is 0 when
    /// both error and bound vanish.
    std::vector<std::pair<std::string, double>> ratios() const;

    /// True when the error exceeds any present bound by more than tolerance.
    bool violates_any_bound() const;
};

/// Per-function work shared across all rows of a sweep: reference integral,
/// modulus-of-variation profile up to k_max, Var_2, Holder seminorm.
struct FunctionAnalysis {
    SampledFunction f;
    double true_integral = 0.0;
    double ref_tolerance = 1e-12;
    std::size_t k_max = 0;
    std::vector<double> nu;  // profile, index 0..k_max
    double var2 = 0.0;
    std::optional<std::pair<OmegaRule, double>> holder;
};

/// Computes the shared analysis; k_max must cover 2N+2 for the largest N
/// the caller will report on.
FunctionAnalysis analyze_function(SampledFunction f, std::size_t k_max);

/// Builds the report for one (function, point set) pair. Requires
/// 2*ps.size()+2 <= analysis.k_max.
BoundReport bound_report(const FunctionAnalysis& analysis, const PointSet& ps,
                         std::string sequence_id);

}  // namespace qmclab
