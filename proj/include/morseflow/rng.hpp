#pragma once

#include <cstdint>
#include <random>

#include "morseflow/matrix.hpp"

namespace morseflow {

// Deterministic RNG.  Gaussians come from an explicit Box-Muller transform on
// mt19937_64 output, so identical seeds give bit-identical streams on every
// platform (std::normal_distribution does not promise that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();                 // [0, 1)
    double gaussian();                // standard normal
    std::uint64_t integer() { return gen_(); }

    // iid standard Gaussian components in every field slot.
    Mat gaussian_matrix(Field f, int rows, int cols);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace morseflow
