#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmclab/point_set.hpp"

namespace qmclab {

enum class ContinuityClass { C1, Continuous, Bounded };

/// How the exact integral over [0,1] is obtained: a closed form, or an
/// adaptive quadrature oracle with subdivision hints.
struct ReferenceIntegral {
    enum class Kind { ClosedForm, Quadrature };
    Kind kind = Kind::ClosedForm;
    double value = 0.0;   // closed form only
    double tolerance = 1e-12;
    std::vector<double> breakpoints;  // quadrature subdivision hints
    // Quadrature oracles may truncate near zero; the omitted piece
    // [0, truncation_eps] is bounded in magnitude by truncation_bound.
    double truncation_eps = 0.0;
    double truncation_bound = 0.0;
};

/// An integrand on [0,1]: an evaluation rule plus a finite sample grid with
/// cached values. All grid-restricted functionals (modulus of variation,
/// p-variation, modulus of continuity, Holder seminorm) are computed from
/// the cache and are lower bounds of the true suprema; the corpus grids are
/// built to contain every local extremum down to a cutoff, which makes the
/// variation functionals exact above that scale.
struct SampledFunction {
    std::string id;
    std::function<double(double)> evaluate;
    std::optional<std::function<double(double)>> derivative;  // C1 entries
    ContinuityClass continuity_class = ContinuityClass::Bounded;
    // Total 1-variation when known: a finite value, +infinity for functions
    // of unbounded variation, nullopt when unknown (e.g. file data).
    std::optional<double> known_var1;
    ReferenceIntegral reference;
    std::vector<double> grid;    // strictly increasing, includes 0 and 1
    std::vector<double> values;  // evaluate() cached at the grid
    // Exponent of a modulus omega(d) = d^alpha the function belongs to
    // (H^omega membership with finite true seminorm); nullopt otherwise.
    std::optional<double> holder_alpha;
};

/// Modulus rule omega for the Holder-type functionals: non-decreasing,
/// omega(0) = 0, concave on (0,1).
struct OmegaRule {
    std::string id;
    std::function<double(double)> eval;
    // set when the rule is omega(d) = d^alpha; enables exact fast paths
    std::optional<double> alpha;
};

/// omega(d) = d^alpha for 0 < alpha <= 1.
OmegaRule power_modulus(double alpha);

struct CorpusOptions {
    std::size_t grid_size = 4097;  // uniform grid resolution (2^k + 1)
    int oscillation_kmax = 2000;   // oscillation nodes of g down to 1/(kmax*pi)
};

/// Builds one corpus entry by id. Ids: "const:<c>" (also plain "const"),
/// "linear", "square", "sqrt", "power:<alpha>", "step:<c>", "sawtooth:<k>",
/// "g". Throws std::invalid_argument for unknown ids or bad parameters.
SampledFunction make_corpus_function(const std::string& id,
                                     const CorpusOptions& opts = {});

/// The default corpus shipped with the laboratory.
std::vector<std::string> corpus_ids();

/// Piecewise-linear function through the given samples. Abscissae must be
/// strictly increasing and include 0 and 1.
SampledFunction from_samples_function(std::vector<double> abscissae,
                                      std::vector<double> values,
                                      std::string id);

/// Loads "x y" pairs (one per line, '#' comments) into a sampled function.
SampledFunction load_function_file(const std::string& path);

/// Exact integral of f over [0,1] to the declared tolerance. Closed forms
/// return their value; quadrature oracles run the adaptive scheme and throw
/// std::runtime_error with the achieved error estimate on non-convergence.
double reference_integral(const SampledFunction& f);

/// Steklov (forward moving average) mean f_h(x) = (1/h) * integral of
/// f(x+t) over t in [0,h], with f frozen at f(1) on [1, 1+h]. The result
/// samples on f's grid. C1 whenever f is continuous. Throws on h <= 0 or
/// h > 1.
SampledFunction steklov_mean(const SampledFunction& f, double h);

/// Continuous first-order spline interpolating f at the knot set (the knots
/// augmented with 0 and 1, deduplicated). Throws if fewer than 2 distinct
/// knots remain.
SampledFunction spline_interpolant(const SampledFunction& f, const PointSet& knots);

/// Grid-restricted modulus of continuity: max of |f(x)-f(y)| over grid
/// pairs with x - y <= delta. Lower bound of the true omega(f; delta).
double modulus_of_continuity(const SampledFunction& f, double delta);

}  // namespace qmclab
