#pragma once

// Seeded random sources for property tests and state sampling.
// Gaussian draws are hand-rolled Box-Muller on raw mt19937_64 output so that
// a given seed produces the same stream on every standard library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "hexamer/matrix.hpp"

namespace hexamer {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; two uniforms per draw keeps the stream
    // position independent of any pairing state.
    double gauss() {
        const double u1 = 1.0 - uniform();  // (0, 1]: keeps the log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    Complex complex_gauss() { return Complex(gauss(), gauss()); }

    // Haar-uniform point on the complex unit sphere in dimension n.
    Cvec unit_vector(int n) {
        Cvec v(n);
        for (auto& z : v) z = complex_gauss();
        return normalized(std::move(v));
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace hexamer
