#pragma once

#include "morseflow/eig.hpp"
#include "morseflow/matrix.hpp"

namespace morseflow {

enum class MatFuncKind { Exp, Sinh, Cosh, Tanh };

MatFuncKind parse_mat_func(const std::string& name);

// f(A t) of a Hermitian matrix through one eigendecomposition: U f(L t) U*.
Mat mat_func(const Mat& a, double t, MatFuncKind kind,
             const Tolerances& tol = default_tolerances());

// Same, reusing an existing factorization of A.
Mat mat_func(const HermEig& eig, double t, MatFuncKind kind);

// exp(M) for an arbitrary (typically skew-Hermitian) matrix by
// scaling-and-squaring with a truncated Taylor series.
Mat expm(const Mat& m);

// Cayley transform Y = (I - X)(I + X)^-1; involutive, exchanges group
// elements without eigenvalue -1 and skew-Hermitian matrices.
// Pre: smallest singular value of I + X above cayley_domain.
Mat cayley(const Mat& x, const Tolerances& tol = default_tolerances());

}  // namespace morseflow
