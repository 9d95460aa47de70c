#pragma once

#include <vector>

#include "morseflow/eig.hpp"
#include "morseflow/symmetric_spaces.hpp"

namespace morseflow {

// Point of the sphere of traceless unit-norm Hermitian matrices,
// Tr X = 0 and Tr X^2 = 1.
struct SpherePoint {
    Mat x;

    SpherePoint(Mat m, const Tolerances& tol = default_tolerances());
    int n() const { return x.rows(); }
    Field field() const { return x.field(); }
};

// Ambient sphere dimension n - 2 + d n(n-1)/2.
int sphere_dim(int n, Field f);

// (1/3) Re Tr X^3.
double f_cubic(const SpherePoint& p);

// Tangential gradient X^2 - (Tr X^3) X - (1/n) I; traceless and orthogonal
// to X.
Mat sphere_grad_rhs(const SpherePoint& p);

// Critical point attached to a subspace V of dimension m: the two-eigenvalue
// matrix with -sqrt((n-m)/(nm)) on V and sqrt(m/(n(n-m))) on its complement.
// Pre: 1 <= m <= n-1.
SpherePoint critical_matrix(const SubspaceBasis& v,
                            const Tolerances& tol = default_tolerances());

// The two eigenvalues above for given (n, m).
std::pair<double, double> critical_eigenvalues(int n, int m);

// Nested chain of eigenvalue-cluster sums U_1 c ... c U_k; incomplete when
// eigenvalues collide.
struct EigenflagState {
    std::vector<double> eigenvalues;   // all n, nondecreasing
    Mat vectors;                       // orthonormal eigenbasis
    std::vector<int> cluster_sizes;    // multiplicity pattern, sums to n
    bool confident = true;             // false when a gap sits near the threshold

    int clusters() const { return static_cast<int>(cluster_sizes.size()); }
    // Orthonormal basis of U_k (the first k clusters).
    SubspaceBasis flag_subspace(int k) const;
};

EigenflagState eigenflag(const SpherePoint& p, double gap_tol = 1e-7,
                         const Tolerances& tol = default_tolerances());

// Normalized consecutive spectral gaps a_i = (l_{i+1} - l_i)/(l_n - l_1);
// barycentric coordinates on the flag simplex.
struct BarycentricCoords {
    std::vector<double> a;  // n-1 entries, nonnegative, summing to 1
};

BarycentricCoords barycentric(const SpherePoint& p,
                              const Tolerances& tol = default_tolerances());
BarycentricCoords barycentric_of_spectrum(const std::vector<double>& lambda);

// Unique spectrum with the given gaps, zero sum, unit square sum, increasing.
std::vector<double> spectrum_from_barycentric(const BarycentricCoords& a);

// Matrix with the flag's eigenbasis and the reconstructed spectrum.
SpherePoint reconstruct(const EigenflagState& flag, const BarycentricCoords& a,
                        const Tolerances& tol = default_tolerances());

std::pair<EigenflagState, BarycentricCoords> flag_join_coords(
    const SpherePoint& p, const Tolerances& tol = default_tolerances());

struct SphereTrajectory {
    std::vector<double> t;
    std::vector<Mat> x;

    SpherePoint at(int i, const Tolerances& tol = default_tolerances()) const {
        return SpherePoint(x[i], tol);
    }
    int size() const { return static_cast<int>(t.size()); }
};

// RK4 on the sphere flow with exact re-projection (center the trace, rescale
// the norm) after every step; samples are stored every `stride` steps plus
// the endpoints.
SphereTrajectory integrate_sphere_flow(const SpherePoint& x0, double t, int steps,
                                       int stride = 1,
                                       const Tolerances& tol = default_tolerances());

// Volterra right-hand side da_i/dtau = a_i (sum_{k<i} a_k - sum_{l>i} a_l).
std::vector<double> volterra_rhs(const BarycentricCoords& a);

// Explicit integrals b_i(tau) = 1/(1 - c_i e^tau), c_i = 1 - 1/b_i(0);
// boundary values 0 and 1 stay constant.
std::vector<double> closed_form_b(const std::vector<double>& b0, double tau);

// Rescaled time tau(t) = integral of (l_n - l_1) dt along the trajectory,
// by cumulative trapezoid rule over the stored samples.
std::vector<double> time_reparam(const SphereTrajectory& traj,
                                 const Tolerances& tol = default_tolerances());

// Projective cross ratio (l_i - l_k)(l_j - l_l) / ((l_j - l_k)(l_i - l_l)).
double cross_ratio(double li, double lj, double lk, double ll);

// Seeded start on the sphere.
SpherePoint random_sphere_point(Field f, int n, std::uint64_t seed,
                                const Tolerances& tol = default_tolerances());

}  // namespace morseflow
