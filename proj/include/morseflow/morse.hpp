#pragma once

#include <vector>

#include "morseflow/intpoly.hpp"
#include "morseflow/symmetric_spaces.hpp"

namespace morseflow {

// Sign vector naming the critical point diag(eps_1, ..., eps_n).
using SignVector = std::vector<int>;

// All 2^n sign vectors, lexicographic with -1 before +1.  Pre: 1 <= n <= 20.
std::vector<SignVector> enumerate_critical(int n);

Mat sign_matrix(Field f, const SignVector& eps);

// Exact index of diag(eps) for a diagonal height matrix with increasing
// positive entries: sum over +1 positions k of (d k - 1), d = dim_R k.
int morse_index(const SignVector& eps, Field f);

// Diagonal matrix diag(d-1, 2d-1, ..., nd-1) whose height at each critical
// point equals the Hessian signature there.
Mat morse_smale_matrix(int n, Field f);

struct HessianSignature {
    int n_plus = 0, n_minus = 0, n_zero = 0;
    int signature() const { return n_plus - n_minus; }
    int dim() const { return n_plus + n_minus + n_zero; }
};

// Eigenvalue signs of the numerically assembled Hessian of the height
// function restricted to the space, at a critical point x.  Second central
// differences along an orthonormal tangent basis in the chart x exp(B),
// Richardson-extrapolated once; zero band hessian_zero * max(1, ||A||).
// Pre: tangential gradient norm below grad_critical.
HessianSignature hessian_signature(const HeightSpec& h, const Mat& x, const SpaceSpec& space,
                                   const Tolerances& tol = default_tolerances());

// Sum of t^{index} over all 2^n sign vectors; equals prod_k (1 + t^{dk-1}).
IntPolynomial index_generating_polynomial(int n, Field f);

// One row of the critical-point census emitted by the CLI.
struct MorseRecord {
    SignVector eps;
    int index_formula = 0;
    HessianSignature signature;
    double height_value = 0.0;
};

// Census over all sign vectors for a diagonal Morse height matrix.
std::vector<MorseRecord> morse_census(const GroupSpec& g, const Mat& a,
                                      const Tolerances& tol = default_tolerances());

}  // namespace morseflow
