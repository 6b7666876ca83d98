#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmclab/bounds.hpp"
#include "qmclab/point_set.hpp"

namespace qmclab {

struct SweepConfig {
    std::vector<std::string> functions;
    std::vector<std::string> sequences;  // e.g. van-der-corput:2, midpoint, random
    std::vector<std::size_t> n_grid;     // strictly increasing
    std::size_t grid_size = 4097;
    std::string output;  // empty = stdout
    enum class Format { Csv, Json } format = Format::Csv;
    std::uint64_t seed = 123456789;
    int threads = 1;

    void validate() const;  // throws std::invalid_argument
};

/// Reads "key = value" lines ('#' comments). Keys: functions, sequences,
/// n_grid (comma lists), grid_size, output, format, seed, threads.
SweepConfig parse_config_file(const std::string& path);

/// Default N grid: powers of two from 2^4 to 2^14.
std::vector<std::size_t> default_n_grid();

/// Instantiates a sequence spec at size n. Specs: "van-der-corput[:base]",
/// "midpoint", "uniform-grid", "random[:seed]" (falls back to default_seed),
/// "file:<path>" (n ignored). Returns the canonical id with the point set.
struct SequenceInstance {
    std::string id;
    PointSet points;
};
SequenceInstance make_sequence(const std::string& spec, std::size_t n,
                               std::uint64_t default_seed);

struct SweepResult {
    std::vector<BoundReport> reports;  // sorted by (function, sequence, n)
    bool has_violation() const;
};

/// Runs the full experiment: one BoundReport per (function, sequence, N).
/// Deterministic for a fixed config, byte-for-byte independent of the
/// thread count (rows are computed into fixed slots and emitted in order).
SweepResult run_sweep(const SweepConfig& config);

/// CSV with exactly the canonical column set, 17 significant digits,
/// empty fields for absent bounds.
std::string emit_csv(const SweepResult& result);

/// JSON mirror of the CSV fields (null for absent bounds). Parsing the
/// output reproduces every numeric field bit-exactly.
std::string emit_json(const SweepResult& result);
SweepResult parse_json(const std::string& text);

struct RateFit {
    enum class Model { PowerLaw, LogCorrected } model = Model::PowerLaw;
    double slope = 0.0;      // power-law: d log(value) / d log(N)
    double intercept = 0.0;
    double r_squared = 0.0;
    double sup_statistic = 0.0;  // log-corrected: max value*N/(log N)^q
    std::size_t sup_at_n = 0;
};

/// Least-squares log-log fit, or the sup of value*N/(log N)^q for the
/// log-corrected model. Requires >= 3 rows and positive values.
RateFit fit_rate(std::span<const std::size_t> ns, std::span<const double> values,
                 RateFit::Model model, double q = 2.0);

}  // namespace qmclab
