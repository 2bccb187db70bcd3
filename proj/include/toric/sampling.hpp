#pragma once

// Deterministic low-discrepancy sequences used for sampling: Halton points
// for boxes, golden-angle and spherical Fibonacci layouts for directions.
// Everything here is seed-free so repeated runs agree bit for bit.

#include <cmath>
#include <cstddef>
#include <vector>

namespace toric {

inline double halton(std::size_t index, unsigned base) {
    double f = 1.0, r = 0.0;
    std::size_t i = index + 1;  // skip the origin
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

/// point #index of the Halton sequence in [0,1)^dims
inline std::vector<double> halton_point(std::size_t index, std::size_t dims) {
    static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<double> p(dims);
    for (std::size_t d = 0; d < dims; ++d) p[d] = halton(index, primes[d % 12]);
    return p;
}

/// count unit directions in R^n: +-1 on the line, golden-angle points on the
/// circle, spherical Fibonacci on the 2-sphere, normalized Halton above
inline std::vector<std::vector<double>> unit_directions(std::size_t n, std::size_t count) {
    std::vector<std::vector<double>> dirs;
    if (n == 0) return dirs;
    if (n == 1) {
        dirs.push_back({1.0});
        dirs.push_back({-1.0});
        return dirs;
    }
    const double pi = 3.14159265358979323846;
    if (n == 2) {
        const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
        for (std::size_t k = 0; k < count; ++k) {
            double theta = 2.0 * pi * std::fmod(golden * static_cast<double>(k) + 1.0 / 7.0, 1.0);
            dirs.push_back({std::cos(theta), std::sin(theta)});
        }
        return dirs;
    }
    if (n == 3) {
        const double golden_angle = pi * (3.0 - std::sqrt(5.0));
        for (std::size_t k = 0; k < count; ++k) {
            double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
            double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
            double theta = golden_angle * static_cast<double>(k);
            dirs.push_back({rad * std::cos(theta), rad * std::sin(theta), z});
        }
        return dirs;
    }
    for (std::size_t k = 0; k < count; ++k) {
        auto h = halton_point(k, n);
        double norm2 = 0.0;
        std::vector<double> v(n);
        for (std::size_t d = 0; d < n; ++d) {
            v[d] = 2.0 * h[d] - 1.0;
            norm2 += v[d] * v[d];
        }
        if (norm2 < 1e-12) continue;
        double norm = std::sqrt(norm2);
        for (auto& x : v) x /= norm;
        dirs.push_back(std::move(v));
    }
    return dirs;
}

}  // namespace toric
