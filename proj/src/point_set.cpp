#include "qmclab/point_set.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qmclab {

std::string Provenance::label() const {
    switch (kind) {
        case Kind::VanDerCorput: return "van-der-corput:" + std::to_string(base);
        case Kind::Midpoint: return "midpoint";
        case Kind::UniformGrid: return "uniform-grid";
        case Kind::Random: return "random:" + std::to_string(seed);
        case Kind::File: return path.empty() ? "file" : "file:" + path;
    }
    return "unknown";
}

PointSet::PointSet(std::vector<double> points, Provenance provenance)
    : pts_(std::move(points)), prov_(std::move(provenance)) {
    if (pts_.empty()) throw std::invalid_argument("PointSet: empty point list");
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        const double p = pts_[i];
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("PointSet: point " + std::to_string(i) +
                                        " = " + std::to_string(p) +
                                        " outside [0,1]");
    }
    std::sort(pts_.begin(), pts_.end());
}

double van_der_corput(std::uint64_t index, int base) {
    if (index < 1) throw std::invalid_argument("van_der_corput: index must be >= 1");
    if (base < 2) throw std::invalid_argument("van_der_corput: base must be >= 2");
    // Digits of index, most significant first.
    double digits[64];
    int count = 0;
    std::uint64_t rest = index;
    while (rest > 0) {
        digits[count++] = static_cast<double>(rest % static_cast<std::uint64_t>(base));
        rest /= static_cast<std::uint64_t>(base);
    }
    // Horner from the least significant contributor: each step one add and
    // one division, so the most significant digit is rounded last. Exact for
    // base 2 with index below 2^53.
    const double b = static_cast<double>(base);
    double acc = 0.0;
    for (int j = count - 1; j >= 0; --j) acc = (acc + digits[j]) / b;
    return acc;
}

PointSet van_der_corput_set(std::size_t n, int base) {
    if (n == 0) throw std::invalid_argument("van_der_corput_set: n must be >= 1");
    std::vector<double> pts;
    pts.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        pts.push_back(van_der_corput(static_cast<std::uint64_t>(i), base));
    Provenance prov;
    prov.kind = Provenance::Kind::VanDerCorput;
    prov.base = base;
    return PointSet(std::move(pts), prov);
}

PointSet midpoint_set(std::size_t n) {
    if (n == 0) throw std::invalid_argument("midpoint_set: n must be >= 1");
    std::vector<double> pts;
    pts.reserve(n);
    // Must match the node expression used by the discrepancy kernels so the
    // midpoint deviation is exactly zero.
    const double den = 2.0 * static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k)
        pts.push_back((2.0 * static_cast<double>(k) + 1.0) / den);
    Provenance prov;
    prov.kind = Provenance::Kind::Midpoint;
    return PointSet(std::move(pts), prov);
}

PointSet uniform_grid(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_grid: n must be >= 1");
    std::vector<double> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        pts.push_back(static_cast<double>(k) / static_cast<double>(n));
    Provenance prov;
    prov.kind = Provenance::Kind::UniformGrid;
    return PointSet(std::move(pts), prov);
}

PointSet random_uniform(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_uniform: n must be >= 1");
    // MT19937-64 with an explicit 53-bit mapping; std::mt19937_64 output is
    // fully specified by the standard, so this is platform-independent.
    std::mt19937_64 engine(seed);
    std::vector<double> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(static_cast<double>(engine() >> 11) * 0x1.0p-53);
    Provenance prov;
    prov.kind = Provenance::Kind::Random;
    prov.seed = seed;
    return PointSet(std::move(pts), prov);
}

PointSet from_samples(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "from_samples: value %zu = %.17g outside [0,1]", i,
                          values[i]);
            throw std::invalid_argument(buf);
        }
    }
    Provenance prov;
    prov.kind = Provenance::Kind::File;
    return PointSet(values, prov);
}

PointSet load_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_point_file: cannot open " + path);
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double v;
        if (!(ss >> v)) continue;  // blank or comment-only line
        std::string trailing;
        if (ss >> trailing)
            throw std::invalid_argument("load_point_file: " + path + ":" +
                                        std::to_string(lineno) +
                                        ": trailing content '" + trailing + "'");
        values.push_back(v);
    }
    PointSet ps = from_samples(values);
    Provenance prov;
    prov.kind = Provenance::Kind::File;
    prov.path = path;
    return PointSet(ps.points(), prov);
}

}  // namespace qmclab
