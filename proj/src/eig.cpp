#include "morseflow/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace morseflow {

Mat HermEig::reconstruct() const { return apply(eigenvalues); }

Mat HermEig::apply(const std::vector<double>& f) const {
    const int n = vectors.rows();
    Mat scaled = vectors;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled.at(i, j) *= f[j];
    return scaled * vectors.conj_transpose();
}

namespace {

double off_diag_norm(const Mat& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) s += m.at(i, j).norm_sq();
    return std::sqrt(s);
}

}  // namespace

HermEig herm_eig(const Mat& s, const Tolerances& tol) {
    require_square(s, "herm_eig");
    const int n = s.rows();
    const double scale = std::max(1.0, s.norm_fro());
    if (dist_fro(s, s.conj_transpose()) > tol.hermitian_check * scale)
        throw PreconditionError("herm_eig: matrix is not Hermitian to tolerance");

    // Work on the exactly Hermitian part; the diagonal becomes exactly real.
    Mat m = (s + s.conj_transpose()) * 0.5;
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(m.at(i, i).w);
    Mat v = Mat::identity(s.field(), n);

    const double stop = tol.jacobi_converge * std::max(1e-300, m.norm_fro());
    const int max_sweeps = 60;
    int sweep = 0;
    while (off_diag_norm(m) > stop) {
        if (++sweep > max_sweeps) throw NumericalError("herm_eig: Jacobi did not converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Scalar apq = m.at(p, q);
                const double r = apq.abs();
                if (r <= 1e-3 * stop / n) continue;
                // Unit phase conjugates the pivot to a real entry.
                const Scalar u = apq * (1.0 / r);
                const Scalar uc = conj(u);
                const double app = m.at(p, p).w, aqq = m.at(q, q).w;
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sg = t * c;

                // M <- G* M G with G = [[c, sg],[-conj(u) sg, conj(u) c]] on (p,q).
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Scalar mkp = m.at(k, p);
                    const Scalar mkq_u = m.at(k, q) * uc;
                    m.at(k, p) = mkp * c - mkq_u * sg;
                    m.at(k, q) = mkp * sg + mkq_u * c;
                    m.at(p, k) = conj(m.at(k, p));
                    m.at(q, k) = conj(m.at(k, q));
                }
                m.at(p, p) = Scalar(app - t * r);
                m.at(q, q) = Scalar(aqq + t * r);
                m.at(p, q) = Scalar();
                m.at(q, p) = Scalar();

                for (int k = 0; k < n; ++k) {
                    const Scalar vkp = v.at(k, p);
                    const Scalar vkq_u = v.at(k, q) * uc;
                    v.at(k, p) = vkp * c - vkq_u * sg;
                    v.at(k, q) = vkp * sg + vkq_u * c;
                }
            }
        }
    }

    HermEig out;
    out.eigenvalues.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m.at(a, a).w < m.at(b, b).w; });
    out.vectors = Mat(s.field(), n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = m.at(order[j], order[j]).w;
        for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
    }
    return out;
}

std::vector<double> singular_values(const Mat& a, const Tolerances& tol) {
    HermEig e = herm_eig(a.conj_transpose() * a, tol);
    std::vector<double> sv(e.eigenvalues.size());
    for (size_t i = 0; i < sv.size(); ++i) sv[i] = std::sqrt(std::max(0.0, e.eigenvalues[i]));
    return sv;
}

double smallest_singular_value(const Mat& a, const Tolerances& tol) {
    return singular_values(a, tol).front();
}

}  // namespace morseflow
