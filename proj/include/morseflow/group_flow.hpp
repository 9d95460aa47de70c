#pragma once

#include "morseflow/eig.hpp"
#include "morseflow/matrix.hpp"
#include "morseflow/rng.hpp"

namespace morseflow {

// One of the compact classical groups O(n), U(n), Sp(n); Sp(n) is the
// quaternionic unitary group.  The ground field is determined by the family.
struct GroupSpec {
    enum class Family { O, U, Sp } family;
    int n;

    Field field() const {
        switch (family) {
            case Family::O: return Field::R;
            case Family::U: return Field::C;
            case Family::Sp: return Field::H;
        }
        return Field::R;
    }
    // Real dimension of the group manifold.
    int dim() const {
        const int d = field_dim(field());
        return n * (n - 1) / 2 * d + (d - 1) * n;
    }
    static GroupSpec for_field(Field f, int n) {
        switch (f) {
            case Field::R: return {Family::O, n};
            case Field::C: return {Family::U, n};
            case Field::H: return {Family::Sp, n};
        }
        return {Family::O, n};
    }
};

GroupSpec parse_group(const std::string& family, int n);

// Linear height function f_A(X) = Re Tr(AX) on the embedded group.
struct HeightSpec {
    Mat a;

    bool is_hermitian(double tol = 1e-10) const;
    // Diagonal with distinct positive entries: the Morse case.
    bool is_diagonal_morse() const;
};

double height(const HeightSpec& h, const Mat& x);

// Flow right-hand side A* - X A X; lies in T_X G when X is in the group.
// Pre: membership residual of X below membership_pre.
Mat grad_rhs(const HeightSpec& h, const Mat& x,
             const Tolerances& tol = default_tolerances());

// Same expression without the membership gate, for internal residual probes.
Mat flow_rhs_raw(const Mat& a, const Mat& x);

// Closed-form solution of the flow for Hermitian A:
//   X(t) = (sinh(At) + cosh(At) X0)(cosh(At) + sinh(At) X0)^-1.
// One eigendecomposition of A serves every t.  Long times are reached by
// composing capped substeps, which keeps the hyperbolic factors in range and
// pins critical points exactly.  X0 need not be in the group; the resolvent
// can then be genuinely singular, which raises SingularityError.
class FlowSolver {
public:
    FlowSolver(const HeightSpec& h, const Tolerances& tol = default_tolerances());

    Mat at(const Mat& x0, double t) const;
    const HermEig& eig() const { return eig_; }

private:
    Mat step(const Mat& x_eigbasis, double s) const;

    HermEig eig_;
    double spectral_radius_;
    Field field_;
    int n_;
};

Mat closed_flow(const HeightSpec& h, const Mat& x0, double t,
                const Tolerances& tol = default_tolerances());

// Closed-form flow for arbitrary (possibly non-Hermitian) A through the
// doubled Hermitian pencil [[0, A*],[A, 0]]: the flow is the Moebius action
// of exp of that pencil on the graph of X.
Mat general_flow(const Mat& a, const Mat& x0, double t,
                 const Tolerances& tol = default_tolerances());

// Flow started at X0 = 0; stable for every t since only tanh appears:
//   X(t) = A* (AA*)^{-1/2} tanh(sqrt(AA*) t).
Mat flow_from_zero(const Mat& a, double t,
                   const Tolerances& tol = default_tolerances());

// Classical RK4 on the flow equation with a polar retraction to the group
// after every step; the numeric oracle for the closed form.
Mat numeric_flow(const HeightSpec& h, const Mat& x0, double t, int steps,
                 const Tolerances& tol = default_tolerances());

// Solution exp(-At) Y0 exp(-At) of the Cayley-linearized equation
// Ydot = -(AY + YA).
Mat linearized_flow(const HeightSpec& h, const Mat& y0, double t,
                    const Tolerances& tol = default_tolerances());

// Nearest group element X (X*X)^{-1/2} by the Newton sign iteration.
Mat polar_retract(const Mat& x, int max_iter = 40);

struct PolarDecomposition {
    Mat j;  // Hermitian positive definite left factor
    Mat q;  // group factor
};

// Polar decomposition A = JQ by flowing from X0 = 0 with doubling times
// until the gradient stalls below polar_residual; the limit is Q*.
// Pre: smallest singular value of A above nondegenerate_sv.
PolarDecomposition polar_via_flow(const Mat& a,
                                  const Tolerances& tol = default_tolerances());

// Newton polar iteration Q <- (Q + Q^-*)/2; an independent route to the
// group factor, also used as the retraction above.
Mat polar_newton(const Mat& a, int max_iter = 80);

// || (A2 A1 - A1 A2) X + X (A1 A2 - A2 A1) ||_F: the Lie bracket of the two
// height flows at X, which vanishes when A1 and A2 commute.
double bracket_residual(const Mat& a1, const Mat& a2, const Mat& x);

// Group element from orthonormalizing a seeded Gaussian matrix; deterministic
// per seed, membership residual below random_membership.
Mat random_element(const GroupSpec& g, std::uint64_t seed,
                   const Tolerances& tol = default_tolerances());

// Seeded Hermitian matrix (G + G*)/2, handy for flow experiments.
Mat random_hermitian(Field f, int n, std::uint64_t seed);

}  // namespace morseflow
