#pragma once

#include <map>
#include <string>

namespace morseflow {

// Every numeric threshold used by the library, with its default.
// All are overridable by name (CLI --tol NAME=VALUE, config files).
struct Tolerances {
    double jacobi_converge = 1e-12;   // off-diagonal norm / ||S|| stop for the eigensolver
    double hermitian_check = 1e-10;   // ||S - S*|| / max(1,||S||) acceptance
    double cayley_domain = 1e-10;     // smallest singular value of I + X
    double membership_pre = 1e-8;     // group/space membership on inputs
    double membership_post = 1e-7;    // membership after flowing
    double random_membership = 1e-10; // residual for generated group elements
    double nondegenerate_sv = 1e-8;   // smallest singular value for "nondegenerate"
    double polar_residual = 1e-10;    // gradient norm stop for flow-based polar
    double grad_critical = 1e-8;      // gradient norm qualifying a critical point
    double rank_zero = 1e-10;         // singular value below: treated as zero
    double rank_nonzero = 1e-6;       // singular value above: full; between: indeterminate
    double eig_minus_one = 1e-7;      // |lambda + 1| below: in the -1 eigenspace
    double eig_ambiguous = 1e-4;      // |lambda + 1| below this but above eig_minus_one: refuse
    double hessian_zero = 1e-6;       // Hessian eigenvalue zero band, times ||A||
    double hessian_step = 1e-4;       // finite-difference step for Hessians
    double cluster_gap = 1e-7;        // eigenvalue clustering gap for eigenflags
    double subspace_match = 1e-7;     // projector distance for equal subspaces
    double sphere_invariant = 1e-9;   // trace / norm conservation on the sphere

    // Look a tolerance up, or assign one, by its field name above.
    // Unknown names raise ParseError.
    double get(const std::string& name) const;
    void set(const std::string& name, double value);
    static const std::map<std::string, double Tolerances::*>& registry();
};

const Tolerances& default_tolerances();

}  // namespace morseflow
