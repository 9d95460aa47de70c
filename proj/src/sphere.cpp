#include "morseflow/sphere.hpp"

#include <cmath>

#include "morseflow/group_flow.hpp"

namespace morseflow {

namespace {

// Center the trace and rescale to unit Frobenius norm; restores both sphere
// constraints exactly.
Mat project_to_sphere(Mat x) {
    const int n = x.rows();
    const double tr = x.trace_re() / n;
    for (int i = 0; i < n; ++i) x.at(i, i) -= Scalar(tr);
    const double nrm = x.norm_fro();
    if (nrm < 1e-14) throw NumericalError("sphere projection: zero matrix");
    return x * (1.0 / nrm);
}

}  // namespace

SpherePoint::SpherePoint(Mat m, const Tolerances& tol) : x(std::move(m)) {
    require_square(x, "SpherePoint");
    if (dist_fro(x, x.conj_transpose()) > tol.hermitian_check * std::max(1.0, x.norm_fro()))
        throw PreconditionError("SpherePoint: matrix is not Hermitian");
    if (std::abs(x.trace_re()) > tol.sphere_invariant * 10)
        throw PreconditionError("SpherePoint: trace is not zero");
    if (std::abs(inner(x, x) - 1.0) > tol.sphere_invariant * 10)
        throw PreconditionError("SpherePoint: Tr X^2 is not one");
}

int sphere_dim(int n, Field f) { return n - 2 + field_dim(f) * n * (n - 1) / 2; }

double f_cubic(const SpherePoint& p) { return (p.x * p.x * p.x).trace_re() / 3.0; }

Mat sphere_grad_rhs(const SpherePoint& p) {
    const int n = p.n();
    const Mat x2 = p.x * p.x;
    const double tr_x3 = (x2 * p.x).trace_re();
    Mat rhs = x2 - p.x * tr_x3;
    for (int i = 0; i < n; ++i) rhs.at(i, i) -= Scalar(1.0 / n);
    return rhs;
}

std::pair<double, double> critical_eigenvalues(int n, int m) {
    return {-std::sqrt(static_cast<double>(n - m) / (static_cast<double>(n) * m)),
            std::sqrt(static_cast<double>(m) / (static_cast<double>(n) * (n - m)))};
}

SpherePoint critical_matrix(const SubspaceBasis& v, const Tolerances& tol) {
    const int n = v.ambient_dim(), m = v.dim();
    if (m < 1 || m > n - 1)
        throw PreconditionError("critical_matrix: need 1 <= dim V <= n-1");
    const auto [mu1, mu2] = critical_eigenvalues(n, m);
    const Mat p = v.projector();
    Mat x = p * (mu1 - mu2);
    for (int i = 0; i < n; ++i) x.at(i, i) += Scalar(mu2);
    return SpherePoint(std::move(x), tol);
}

EigenflagState eigenflag(const SpherePoint& p, double gap_tol, const Tolerances& tol) {
    const HermEig eig = herm_eig(p.x, tol);
    EigenflagState state;
    state.eigenvalues = eig.eigenvalues;
    state.vectors = eig.vectors;
    int current = 1;
    for (size_t i = 1; i < eig.eigenvalues.size(); ++i) {
        const double gap = eig.eigenvalues[i] - eig.eigenvalues[i - 1];
        if (gap > gap_tol) {
            state.cluster_sizes.push_back(current);
            current = 1;
        } else {
            ++current;
        }
        if (gap > gap_tol / 10.0 && gap < gap_tol * 10.0) state.confident = false;
    }
    state.cluster_sizes.push_back(current);
    return state;
}

SubspaceBasis EigenflagState::flag_subspace(int k) const {
    if (k < 1 || k > clusters()) throw PreconditionError("flag_subspace: k out of range");
    int cols = 0;
    for (int c = 0; c < k; ++c) cols += cluster_sizes[c];
    return SubspaceBasis(vectors.cols_range(0, cols));
}

BarycentricCoords barycentric_of_spectrum(const std::vector<double>& lambda) {
    const int n = static_cast<int>(lambda.size());
    const double spread = lambda[n - 1] - lambda[0];
    if (spread <= 0.0)
        throw PreconditionError("barycentric: spectrum has no spread");
    BarycentricCoords bc;
    bc.a.resize(n - 1);
    for (int i = 0; i + 1 < n; ++i) bc.a[i] = (lambda[i + 1] - lambda[i]) / spread;
    return bc;
}

BarycentricCoords barycentric(const SpherePoint& p, const Tolerances& tol) {
    return barycentric_of_spectrum(herm_eig(p.x, tol).eigenvalues);
}

std::vector<double> spectrum_from_barycentric(const BarycentricCoords& a) {
    const int n = static_cast<int>(a.a.size()) + 1;
    // g_i = partial sums of gaps; the spectrum is an affine image of g fixed
    // by zero sum and unit square sum with positive orientation.
    std::vector<double> g(n, 0.0);
    for (int i = 1; i < n; ++i) g[i] = g[i - 1] + a.a[i - 1];
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : g) var += (v - mean) * (v - mean);
    if (var <= 0.0) throw PreconditionError("spectrum_from_barycentric: degenerate gaps");
    const double beta = 1.0 / std::sqrt(var);
    std::vector<double> lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = beta * (g[i] - mean);
    return lambda;
}

SpherePoint reconstruct(const EigenflagState& flag, const BarycentricCoords& a,
                        const Tolerances& tol) {
    const int n = static_cast<int>(flag.eigenvalues.size());
    if (static_cast<int>(a.a.size()) != n - 1)
        throw DimensionError("reconstruct: coordinate count mismatch");
    const std::vector<double> lambda = spectrum_from_barycentric(a);
    Mat scaled = flag.vectors;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled.at(i, j) *= lambda[j];
    return SpherePoint(scaled * flag.vectors.conj_transpose(), tol);
}

std::pair<EigenflagState, BarycentricCoords> flag_join_coords(const SpherePoint& p,
                                                              const Tolerances& tol) {
    EigenflagState flag = eigenflag(p, tol.cluster_gap, tol);
    return {flag, barycentric_of_spectrum(flag.eigenvalues)};
}

SphereTrajectory integrate_sphere_flow(const SpherePoint& x0, double t, int steps,
                                       int stride, const Tolerances& tol) {
    if (steps < 1) throw PreconditionError("integrate_sphere_flow: steps must be >= 1");
    if (stride < 1) stride = 1;
    const double dt = t / steps;
    SphereTrajectory traj;
    traj.t.push_back(0.0);
    traj.x.push_back(x0.x);
    Mat x = x0.x;
    auto rhs = [&](const Mat& m) {
        const Mat m2 = m * m;
        const double tr3 = (m2 * m).trace_re();
        Mat r = m2 - m * tr3;
        for (int i = 0; i < m.rows(); ++i) r.at(i, i) -= Scalar(1.0 / m.rows());
        return r;
    };
    for (int s = 1; s <= steps; ++s) {
        const Mat k1 = rhs(x);
        const Mat k2 = rhs(x + k1 * (dt / 2));
        const Mat k3 = rhs(x + k2 * (dt / 2));
        const Mat k4 = rhs(x + k3 * dt);
        x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
        x = project_to_sphere(std::move(x));
        if (s % stride == 0 || s == steps) {
            traj.t.push_back(dt * s);
            traj.x.push_back(x);
        }
    }
    return traj;
}

std::vector<double> volterra_rhs(const BarycentricCoords& a) {
    const int k = static_cast<int>(a.a.size());
    std::vector<double> rhs(k);
    double below = 0.0, above = 0.0;
    for (double v : a.a) above += v;
    for (int i = 0; i < k; ++i) {
        above -= a.a[i];
        rhs[i] = a.a[i] * (below - above);
        below += a.a[i];
    }
    return rhs;
}

std::vector<double> closed_form_b(const std::vector<double>& b0, double tau) {
    std::vector<double> b(b0.size());
    for (size_t i = 0; i < b0.size(); ++i) {
        if (b0[i] < 0.0 || b0[i] > 1.0)
            throw PreconditionError("closed_form_b: initial values must lie in [0, 1]");
        if (i + 1 < b0.size() && b0[i] > b0[i + 1] + 1e-12)
            throw PreconditionError("closed_form_b: initial values must be nondecreasing");
        if (b0[i] == 0.0) {
            b[i] = 0.0;  // invariant face; the c_i formula is singular here
        } else {
            const double c = 1.0 - 1.0 / b0[i];
            b[i] = 1.0 / (1.0 - c * std::exp(tau));
        }
    }
    return b;
}

std::vector<double> time_reparam(const SphereTrajectory& traj, const Tolerances& tol) {
    std::vector<double> tau(traj.size(), 0.0);
    double prev_spread = 0.0;
    for (int i = 0; i < traj.size(); ++i) {
        const HermEig eig = herm_eig(traj.x[i], tol);
        const double spread = eig.eigenvalues.back() - eig.eigenvalues.front();
        if (i > 0)
            tau[i] = tau[i - 1] + 0.5 * (spread + prev_spread) * (traj.t[i] - traj.t[i - 1]);
        prev_spread = spread;
    }
    return tau;
}

double cross_ratio(double li, double lj, double lk, double ll) {
    return ((li - lk) * (lj - ll)) / ((lj - lk) * (li - ll));
}

SpherePoint random_sphere_point(Field f, int n, std::uint64_t seed, const Tolerances& tol) {
    Rng rng(seed);
    const Mat g = rng.gaussian_matrix(f, n, n);
    return SpherePoint(project_to_sphere((g + g.conj_transpose()) * 0.5), tol);
}

}  // namespace morseflow
