#pragma once

#include <vector>

#include "morseflow/intpoly.hpp"
#include "morseflow/symmetric_spaces.hpp"

namespace morseflow {

// Jump sequence of a subspace against the standard coordinate flag
// U_l = span(e_1..e_l): the positions where dim(V cap U_l) increments.
// Canonical cell label; strictly increasing, one jump per basis vector.
struct SchubertSymbol {
    std::vector<int> jumps;  // 1-based, strictly increasing

    bool operator==(const SchubertSymbol& o) const { return jumps == o.jumps; }
    bool operator!=(const SchubertSymbol& o) const { return !(*this == o); }

    // Equivalent partition (lambda_i = j_{m+1-i} - (m+1-i), weakly decreasing).
    std::vector<int> to_partition() const;
    static SchubertSymbol from_partition(const std::vector<int>& lambda, int m);
};

// Cell of the group decomposition: an element belongs to the cell whose
// symbol is carried by the orthogonal complement of its -1 eigenspace.
struct CellID {
    int m = 0;  // dimension of that complement
    SchubertSymbol symbol;

    bool operator==(const CellID& o) const { return m == o.m && symbol == o.symbol; }
    bool operator!=(const CellID& o) const { return !(*this == o); }
};

// Symbol of span(Z) from numerical ranks of the bottom blocks of an
// orthonormalized basis.  Singular values inside (rank_zero, rank_nonzero)
// raise IndeterminateError instead of guessing.
SchubertSymbol schubert_symbol(const SubspaceBasis& z,
                               const Tolerances& tol = default_tolerances());

// Real cell dimension.  The Grassmannian part is d * sum (j_k - k); in the
// group it gains sum_{k<=m} (dk - 1) so the top of each cell matches the
// index of its critical point.
int cell_dimension_grassmann(const SchubertSymbol& symbol, int n, Field f);
int cell_dimension(const CellID& cell, int n, Field f);

// Cell of a group element under a diagonal Morse height matrix: eigenvalues
// within eig_minus_one of -1 span V_-; the complement's symbol labels the
// cell.  Eigenvalues in the ambiguity band raise IndeterminateError.
CellID classify(const Mat& x, const HeightSpec& a,
                const Tolerances& tol = default_tolerances());

// CellID of the critical point diag(eps): jumps are the +1 positions.
CellID cell_of_sign_vector(const std::vector<int>& eps);

// Sign vector of the nearest diag(+-1) to a flowed limit.
std::vector<int> nearest_sign_vector(const Mat& x);

// All cells of the group decomposition for size n.
std::vector<CellID> enumerate_cells(int n);

// Sum of t^{cell_dimension} over every cell; must reproduce the Morse count
// polynomial.
IntPolynomial cell_dimension_polynomial(int n, Field f);

struct SharedDecompositionReport {
    int samples = 0;
    int mismatches = 0;
    bool pass = false;
};

// Flow seeded points to their limits under two commuting diagonal Morse
// matrices and compare the limit critical points.
SharedDecompositionReport shared_decomposition_check(const HeightSpec& a1, const HeightSpec& a2,
                                                     const GroupSpec& g, int samples,
                                                     std::uint64_t seed, double t_limit = 60.0,
                                                     const Tolerances& tol = default_tolerances());

}  // namespace morseflow
