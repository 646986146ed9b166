#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "ovenctl/matrix.hpp"

namespace test_support {

// splitmix64: tiny, seedable, identical on every platform (std distributions
// are implementation-defined, which would break frozen expectations).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    ovenctl::Matrix matrix(int rows, int cols, double lo, double hi) {
        ovenctl::Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
        }
        return m;
    }

   private:
    std::uint64_t state_;
};

inline std::vector<std::complex<double>> sorted_by_parts(std::vector<std::complex<double>> v) {
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    return v;
}

// Worst absolute distance between two spectra compared as sorted multisets.
inline double spectrum_distance(std::vector<std::complex<double>> a,
                                std::vector<std::complex<double>> b) {
    a = sorted_by_parts(std::move(a));
    b = sorted_by_parts(std::move(b));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline double max_abs_diff(const ovenctl::Matrix& a, const ovenctl::Matrix& b) {
    return (a - b).max_abs();
}

}  // namespace test_support
