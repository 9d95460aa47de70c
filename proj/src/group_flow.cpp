#include "morseflow/group_flow.hpp"

#include <cmath>

#include "morseflow/matfunc.hpp"

namespace morseflow {

namespace {

// Largest eigenvalue phase |lambda| * s per flow substep.  Keeps the
// hyperbolic factors small and the resolvent solve well conditioned even
// when tanh saturates along a -1 eigendirection.
constexpr double kMaxPhase = 1.5;

}  // namespace

GroupSpec parse_group(const std::string& family, int n) {
    if (n < 1) throw ParseError("group size must be positive");
    if (family == "O" || family == "o") return {GroupSpec::Family::O, n};
    if (family == "U" || family == "u") return {GroupSpec::Family::U, n};
    if (family == "Sp" || family == "sp" || family == "SP")
        return {GroupSpec::Family::Sp, n};
    throw ParseError("unknown group family '" + family + "' (want O, U or Sp)");
}

bool HeightSpec::is_hermitian(double tol) const {
    return dist_fro(a, a.conj_transpose()) <= tol * std::max(1.0, a.norm_fro());
}

bool HeightSpec::is_diagonal_morse() const {
    if (!a.is_square()) return false;
    const int n = a.rows();
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a.at(i, j).abs() != 0.0) return false;
        }
        const Scalar& d = a.at(i, i);
        if (!d.is_real() || d.w <= prev) return false;
        prev = d.w;
    }
    return true;
}

double height(const HeightSpec& h, const Mat& x) {
    if (h.a.field() != x.field() || h.a.cols() != x.rows())
        throw DimensionError("height: incompatible A and X");
    return (h.a * x).trace_re();
}

Mat flow_rhs_raw(const Mat& a, const Mat& x) {
    return a.conj_transpose() - x * a * x;
}

Mat grad_rhs(const HeightSpec& h, const Mat& x, const Tolerances& tol) {
    require_same_shape(h.a, x, "grad_rhs");
    if (membership_residual(x) > tol.membership_pre)
        throw PreconditionError("grad_rhs: X is not in the group to tolerance");
    return flow_rhs_raw(h.a, x);
}

FlowSolver::FlowSolver(const HeightSpec& h, const Tolerances& tol) {
    require_square(h.a, "FlowSolver");
    if (!h.is_hermitian(tol.hermitian_check))
        throw PreconditionError("FlowSolver: A must be Hermitian");
    eig_ = herm_eig(h.a, tol);
    spectral_radius_ = 0.0;
    for (double l : eig_.eigenvalues) spectral_radius_ = std::max(spectral_radius_, std::abs(l));
    field_ = h.a.field();
    n_ = h.a.rows();
}

Mat FlowSolver::step(const Mat& x, double s) const {
    // In the eigenbasis of A the hyperbolic factors are diagonal:
    //   X' = (sinh(Ls) + cosh(Ls) X)(cosh(Ls) + sinh(Ls) X)^-1.
    // Solving den* Y = num* and conjugating back keeps diagonal fixed points
    // exact to the bit.
    Mat num = x, den = x;
    for (int i = 0; i < n_; ++i) {
        const double c = std::cosh(eig_.eigenvalues[i] * s);
        const double sh = std::sinh(eig_.eigenvalues[i] * s);
        for (int j = 0; j < n_; ++j) {
            num.at(i, j) *= c;
            den.at(i, j) *= sh;
        }
        num.at(i, i) += Scalar(sh);
        den.at(i, i) += Scalar(c);
    }
    return solve(den.conj_transpose(), num.conj_transpose()).conj_transpose();
}

Mat FlowSolver::at(const Mat& x0, double t) const {
    if (x0.field() != field_ || x0.rows() != n_ || x0.cols() != n_)
        throw DimensionError("FlowSolver::at: X0 has the wrong shape or field");
    if (t == 0.0) return x0;
    // The exact flow maps the group to itself, while in floating point the
    // off-group error component is dynamically unstable near saddles.  For
    // group starts a polar retraction after each substep removes exactly
    // that component (and leaves critical points diag(+-1) untouched).
    const bool on_group = membership_residual(x0) < 1e-9;
    Mat x = eig_.vectors.conj_transpose() * x0 * eig_.vectors;
    const double cap = spectral_radius_ > 0.0 ? kMaxPhase / spectral_radius_
                                              : std::abs(t);
    double remaining = t;
    const double dir = t >= 0.0 ? 1.0 : -1.0;
    do {
        const double s = dir * std::min(std::abs(remaining), cap);
        x = step(x, s);
        if (on_group) x = polar_retract(x);
        remaining -= s;
    } while (std::abs(remaining) > 0.0);
    return eig_.vectors * x * eig_.vectors.conj_transpose();
}

Mat closed_flow(const HeightSpec& h, const Mat& x0, double t, const Tolerances& tol) {
    return FlowSolver(h, tol).at(x0, t);
}

Mat general_flow(const Mat& a, const Mat& x0, double t, const Tolerances& tol) {
    require_square(a, "general_flow");
    require_same_shape(a, x0, "general_flow");
    const int n = a.rows();
    Mat pencil(a.field(), 2 * n, 2 * n);
    const Mat ah = a.conj_transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            pencil.at(i, j + n) = ah.at(i, j);
            pencil.at(i + n, j) = a.at(i, j);
        }
    const HermEig eig = herm_eig(pencil, tol);
    double rho = 0.0;
    for (double l : eig.eigenvalues) rho = std::max(rho, std::abs(l));

    if (t == 0.0) return x0;
    const bool on_group = membership_residual(x0) < 1e-9;
    const double cap = rho > 0.0 ? kMaxPhase / rho : std::abs(t);
    double remaining = t;
    const double dir = t >= 0.0 ? 1.0 : -1.0;
    Mat x = x0;
    do {
        const double s = dir * std::min(std::abs(remaining), cap);
        const Mat e = mat_func(eig, s, MatFuncKind::Exp);
        Mat e11(a.field(), n, n), e12(a.field(), n, n), e21(a.field(), n, n), e22(a.field(), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                e11.at(i, j) = e.at(i, j);
                e12.at(i, j) = e.at(i, j + n);
                e21.at(i, j) = e.at(i + n, j);
                e22.at(i, j) = e.at(i + n, j + n);
            }
        const Mat num = e11 * x + e12;
        const Mat den = e21 * x + e22;
        x = solve(den.conj_transpose(), num.conj_transpose()).conj_transpose();
        if (on_group) x = polar_retract(x);
        remaining -= s;
    } while (std::abs(remaining) > 0.0);
    return x;
}

Mat flow_from_zero(const Mat& a, double t, const Tolerances& tol) {
    require_square(a, "flow_from_zero");
    const HermEig e = herm_eig(a * a.conj_transpose(), tol);
    std::vector<double> g(e.eigenvalues.size());
    for (size_t i = 0; i < g.size(); ++i) {
        const double s = std::sqrt(std::max(0.0, e.eigenvalues[i]));
        g[i] = s * std::abs(t) > 1e-8 ? std::tanh(s * t) / s : t;
    }
    return a.conj_transpose() * e.apply(g);
}

Mat polar_retract(const Mat& x, int max_iter) { return polar_newton(x, max_iter); }

Mat polar_newton(const Mat& a, int max_iter) {
    require_square(a, "polar_newton");
    Mat q = a;
    const Mat id = Mat::identity(a.field(), a.rows());
    for (int it = 0; it < max_iter; ++it) {
        q = (q + inverse(q).conj_transpose()) * 0.5;
        if (dist_fro(q.conj_transpose() * q, id) < 1e-14) break;
    }
    return q;
}

Mat numeric_flow(const HeightSpec& h, const Mat& x0, double t, int steps,
                 const Tolerances& tol) {
    require_same_shape(h.a, x0, "numeric_flow");
    if (steps < 1) throw PreconditionError("numeric_flow: steps must be >= 1");
    if (membership_residual(x0) > tol.membership_pre)
        throw PreconditionError("numeric_flow: X0 is not in the group to tolerance");
    const double dt = t / steps;
    Mat x = x0;
    for (int s = 0; s < steps; ++s) {
        const Mat k1 = flow_rhs_raw(h.a, x);
        const Mat k2 = flow_rhs_raw(h.a, x + k1 * (dt / 2));
        const Mat k3 = flow_rhs_raw(h.a, x + k2 * (dt / 2));
        const Mat k4 = flow_rhs_raw(h.a, x + k3 * dt);
        x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
        x = polar_retract(x);
    }
    return x;
}

Mat linearized_flow(const HeightSpec& h, const Mat& y0, double t, const Tolerances& tol) {
    require_same_shape(h.a, y0, "linearized_flow");
    if (!h.is_hermitian(tol.hermitian_check))
        throw PreconditionError("linearized_flow: A must be Hermitian");
    const Mat e = mat_func(h.a, -t, MatFuncKind::Exp, tol);
    return e * y0 * e;
}

PolarDecomposition polar_via_flow(const Mat& a, const Tolerances& tol) {
    require_square(a, "polar_via_flow");
    const double gap = smallest_singular_value(a, tol);
    if (gap <= tol.nondegenerate_sv)
        throw ConditioningError("polar_via_flow: A is degenerate to tolerance");

    const double t_max = 65536.0 / gap;
    Mat x = a;  // placeholder, assigned below
    double t = 1.0;
    for (;;) {
        x = flow_from_zero(a, t, tol);
        if (flow_rhs_raw(a, x).norm_fro() < tol.polar_residual) break;
        t *= 2.0;
        if (t > t_max)
            throw ConditioningError("polar_via_flow: no convergence before the time bound");
    }

    PolarDecomposition pd{a * x, x.conj_transpose()};
    const double scale = std::max(1.0, a.norm_fro());
    if (dist_fro(pd.j, pd.j.conj_transpose()) > tol.membership_pre * scale ||
        dist_fro(pd.j * pd.q, a) > tol.membership_pre * scale)
        throw NumericalError("polar_via_flow: factor residual out of tolerance");
    return pd;
}

double bracket_residual(const Mat& a1, const Mat& a2, const Mat& x) {
    require_same_shape(a1, a2, "bracket_residual");
    require_same_shape(a1, x, "bracket_residual");
    const Mat c21 = a2 * a1 - a1 * a2;
    return (c21 * x - x * c21).norm_fro();
}

Mat random_element(const GroupSpec& g, std::uint64_t seed, const Tolerances& tol) {
    Rng rng(seed);
    const Field f = g.field();
    // Retry on (measure-zero) rank deficiency of the Gaussian draw.
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            Mat x = orthonormalize_columns(rng.gaussian_matrix(f, g.n, g.n));
            if (membership_residual(x) > tol.random_membership)
                throw NumericalError("random_element: orthonormalization residual");
            return x;
        } catch (const SingularityError&) {
            continue;
        }
    }
    throw NumericalError("random_element: repeated rank-deficient draws");
}

Mat random_hermitian(Field f, int n, std::uint64_t seed) {
    Rng rng(seed);
    const Mat g = rng.gaussian_matrix(f, n, n);
    return (g + g.conj_transpose()) * 0.5;
}

}  // namespace morseflow
