#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qmclab {

/// Where a point set came from. Carried so reports and CSV rows can name
/// the generator that produced their evaluation points.
struct Provenance {
    enum class Kind { VanDerCorput, Midpoint, UniformGrid, Random, File };
    Kind kind = Kind::File;
    int base = 0;            // van der Corput only
    std::uint64_t seed = 0;  // random only
    std::string path;        // file only

    std::string label() const;
};

/// A finite multiset of evaluation points in [0,1], stored sorted
/// (non-decreasing). Discrepancy does not depend on the original order,
/// and the sorted-point closed forms require it, so construction sorts.
/// Immutable after construction.
class PointSet {
public:
    /// Sorts, validates every point is in [0,1] and the set is nonempty.
    PointSet(std::vector<double> points, Provenance provenance);

    const std::vector<double>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const Provenance& provenance() const { return prov_; }

private:
    std::vector<double> pts_;
    Provenance prov_;
};

/// Radical inverse of `index` in base `base`: write index in base-b digits
/// d0 d1 d2 ... (d0 least significant) and return sum d_j * b^-(j+1).
/// Exact for base 2 and index < 2^53. Throws std::invalid_argument on
/// index < 1 or base < 2.
double van_der_corput(std::uint64_t index, int base = 2);

/// First n van der Corput points (indices 1..n), sorted.
PointSet van_der_corput_set(std::size_t n, int base = 2);

/// The set {(2k-1)/(2n) : k = 1..n}. This is the unique n-point set whose
/// star discrepancy attains the 1/(2n) lower bound.
PointSet midpoint_set(std::size_t n);

/// The left-endpoint grid {k/n : k = 0..n-1}.
PointSet uniform_grid(std::size_t n);

/// n i.i.d. uniform points on [0,1). Generator: MT19937-64 seeded with
/// `seed`, each draw mapped to a double from the top 53 bits. Identical
/// (n, seed) gives identical output on every platform.
PointSet random_uniform(std::size_t n, std::uint64_t seed);

/// Sorted point set from raw values. Throws std::invalid_argument naming
/// the first offending index if any value lies outside [0,1].
PointSet from_samples(const std::vector<double>& values);

/// Reads one decimal number per line; blank lines ignored, '#' starts a
/// comment. Throws std::runtime_error on I/O failure, std::invalid_argument
/// on malformed or out-of-domain values.
PointSet load_point_file(const std::string& path);

}  // namespace qmclab
