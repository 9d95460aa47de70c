#pragma once

#include <vector>

#include "morseflow/matrix.hpp"
#include "morseflow/tolerances.hpp"

namespace morseflow {

// Spectral factorization S = V diag(eigenvalues) V* of a Hermitian matrix.
// Eigenvalues are real and nondecreasing; ties keep the order in which the
// rotated basis produced them, so results are deterministic.
struct HermEig {
    std::vector<double> eigenvalues;
    Mat vectors;  // orthonormal columns; right eigenvectors over H

    Mat reconstruct() const;
    // V f(lambda) V* for an arbitrary real function of the spectrum.
    Mat apply(const std::vector<double>& f_of_lambda) const;
};

// Cyclic Jacobi over the unified scalar type.  The rotation for a pivot with
// quaternion phase u reduces the 2x2 block to a real symmetric one, so the
// same sweep diagonalizes real, complex and quaternionic Hermitian input.
// Pre: ||S - S*|| <= hermitian_check * max(1, ||S||).
HermEig herm_eig(const Mat& s, const Tolerances& tol = default_tolerances());

// Singular values of a rectangular matrix, nondecreasing (via S = A*A).
std::vector<double> singular_values(const Mat& a, const Tolerances& tol = default_tolerances());

double smallest_singular_value(const Mat& a, const Tolerances& tol = default_tolerances());

}  // namespace morseflow
