#pragma once

#include <vector>

#include "morseflow/group_flow.hpp"
#include "morseflow/matrix.hpp"

namespace morseflow {

// Basis of a subspace V of k^n: columns of Z span V, full column rank.
struct SubspaceBasis {
    Mat z;

    SubspaceBasis(Mat basis, const Tolerances& tol = default_tolerances());
    int ambient_dim() const { return z.rows(); }
    int dim() const { return z.cols(); }
    // Orthogonal projector onto V; basis independent.
    Mat projector() const;
};

double projector_distance(const SubspaceBasis& a, const SubspaceBasis& b);

// The symmetrically embedded spaces: a classical group itself, Grassmannians
// as reflections, Lagrangian Grassmannian U(n)/O(n) as symmetric unitaries,
// complex structures O(2n)/U(n) as skew orthogonals, quaternionic structures
// U(2n)/Sp(n) as skew unitaries, and Sp(n)/U(n) as skew-Hermitian elements
// of Sp(n).
struct SpaceSpec {
    enum class Kind { Group, Grassmann, LagGrass, ComplexStruct, QuatStruct, SpModU };
    Kind kind;
    int n = 0;              // defining parameter
    int m = 0;              // Grassmann subspace dimension
    Field field = Field::R; // Grassmann ground field; fixed for the others

    static SpaceSpec group(GroupSpec g) { return {Kind::Group, g.n, 0, g.field()}; }
    static SpaceSpec grassmann(int n, int m, Field f) { return {Kind::Grassmann, n, m, f}; }
    static SpaceSpec lag_grass(int n) { return {Kind::LagGrass, n, 0, Field::C}; }
    static SpaceSpec complex_struct(int n) { return {Kind::ComplexStruct, n, 0, Field::R}; }
    static SpaceSpec quat_struct(int n) { return {Kind::QuatStruct, n, 0, Field::C}; }
    static SpaceSpec sp_mod_u(int n) { return {Kind::SpModU, n, 0, Field::H}; }

    Field ambient_field() const;
    int ambient_size() const;       // matrices are ambient_size x ambient_size
    GroupSpec ambient_group() const;
    int dim() const;                // real dimension of the manifold
    const char* name() const;
};

// Distance of X from satisfying the space's defining equations.
double space_membership_residual(const SpaceSpec& space, const Mat& x);

// Seeded point on the space (group orbits of the standard base points).
Mat random_point(const SpaceSpec& space, std::uint64_t seed,
                 const Tolerances& tol = default_tolerances());

// Point reflection S_x(y) of the symmetric embedding.
// Pre: x, y satisfy the membership equations within membership_pre.
Mat reflect(const SpaceSpec& space, const Mat& x, const Mat& y,
            const Tolerances& tol = default_tolerances());

// Reflection with respect to span(Z): X = 2 Z (Z*Z)^-1 Z* - I.
Mat grassmann_embed(const SubspaceBasis& z);

// Subspace evolution V(t) = exp(At) V, re-orthonormalized.
SubspaceBasis grassmann_flow(const SubspaceBasis& z, const Mat& a, double t,
                             const Tolerances& tol = default_tolerances());

// Does the height-flow constraint this space puts on A hold?
bool height_constraint_holds(const SpaceSpec& space, const Mat& a, double tol_val = 1e-10);

struct InvarianceReport {
    int samples = 0;
    double max_residual = 0.0;
    bool pass = false;
};

// Flow seeded points of the space to time t with the ambient group flow and
// report the worst membership residual afterwards.
// Pre: A satisfies the space's height constraint.
InvarianceReport check_invariance(const SpaceSpec& space, const Mat& a, int samples,
                                  double t, std::uint64_t seed,
                                  const Tolerances& tol = default_tolerances());

// Ambient closed-form flow of f_A started at X; picks the Hermitian fast path
// when A allows it.
Mat ambient_flow(const Mat& a, const Mat& x, double t,
                 const Tolerances& tol = default_tolerances());

// Orthonormal basis of skew-Hermitian directions: T_I of the unitary group
// of the field.  Deterministic order.
std::vector<Mat> tangent_basis_group(Field f, int n);

// Orthonormal basis of T_x M inside T_x G, found as the null space of the
// linearized membership equations over the group tangent directions x*B.
std::vector<Mat> tangent_basis_space(const SpaceSpec& space, const Mat& x,
                                     const Tolerances& tol = default_tolerances());

// Orthogonal projection of an ambient matrix onto the real span of a basis.
Mat project_onto_span(const Mat& v, const std::vector<Mat>& basis);

}  // namespace morseflow
