#include "morseflow/morse.hpp"

#include <cmath>

#include "morseflow/matfunc.hpp"

namespace morseflow {

std::vector<SignVector> enumerate_critical(int n) {
    if (n < 1 || n > 20) throw PreconditionError("enumerate_critical: need 1 <= n <= 20");
    std::vector<SignVector> out;
    out.reserve(1u << n);
    for (std::uint32_t idx = 0; idx < (1u << n); ++idx) {
        SignVector eps(n);
        for (int k = 0; k < n; ++k) eps[k] = (idx >> (n - 1 - k)) & 1u ? 1 : -1;
        out.push_back(std::move(eps));
    }
    return out;
}

Mat sign_matrix(Field f, const SignVector& eps) {
    Mat x(f, static_cast<int>(eps.size()), static_cast<int>(eps.size()));
    for (size_t i = 0; i < eps.size(); ++i)
        x.at(static_cast<int>(i), static_cast<int>(i)) = Scalar(static_cast<double>(eps[i]));
    return x;
}

int morse_index(const SignVector& eps, Field f) {
    const int d = field_dim(f);
    int ind = 0;
    for (size_t k = 0; k < eps.size(); ++k) {
        if (eps[k] != 1 && eps[k] != -1)
            throw PreconditionError("morse_index: entries must be +1 or -1");
        if (eps[k] == 1) ind += d * static_cast<int>(k + 1) - 1;
    }
    return ind;
}

Mat morse_smale_matrix(int n, Field f) {
    if (n < 1) throw PreconditionError("morse_smale_matrix: n must be >= 1");
    const int d = field_dim(f);
    std::vector<double> diag(n);
    for (int k = 1; k <= n; ++k) diag[k - 1] = static_cast<double>(d * k - 1);
    return Mat::diag(f, diag);
}

HessianSignature hessian_signature(const HeightSpec& h, const Mat& x, const SpaceSpec& space,
                                   const Tolerances& tol) {
    const std::vector<Mat> basis = tangent_basis_space(space, x, tol);
    const Mat rhs = flow_rhs_raw(h.a, x);
    if (project_onto_span(rhs, basis).norm_fro() > tol.grad_critical)
        throw PreconditionError("hessian_signature: X is not a critical point to tolerance");

    const double f0 = height(h, x);
    auto f_at = [&](const Mat& b, double s) { return height(h, x * expm(b * s)); };
    auto second_diff = [&](int k, int l, double s) {
        if (k == l)
            return (f_at(basis[k], s) - 2.0 * f0 + f_at(basis[k], -s)) / (s * s);
        const Mat bp = basis[k] + basis[l];
        const Mat bm = basis[k] - basis[l];
        return (f_at(bp, s) - f_at(bm, s) - f_at(bm, -s) + f_at(bp, -s)) / (4.0 * s * s);
    };

    const int dim = static_cast<int>(basis.size());
    const double s = tol.hessian_step;
    Mat hess(Field::R, dim, dim);
    for (int k = 0; k < dim; ++k) {
        for (int l = k; l < dim; ++l) {
            const double coarse = second_diff(k, l, s);
            const double fine = second_diff(k, l, s / 2.0);
            const double v = (4.0 * fine - coarse) / 3.0;
            hess.at(k, l) = Scalar(v);
            hess.at(l, k) = Scalar(v);
        }
    }

    const HermEig eig = herm_eig(hess, tol);
    const double zero_band = tol.hessian_zero * std::max(1.0, h.a.norm_fro());
    HessianSignature sig;
    for (double lam : eig.eigenvalues) {
        if (lam > zero_band)
            ++sig.n_plus;
        else if (lam < -zero_band)
            ++sig.n_minus;
        else
            ++sig.n_zero;
    }
    return sig;
}

IntPolynomial index_generating_polynomial(int n, Field f) {
    if (n < 1 || n > 20) throw PreconditionError("index_generating_polynomial: need 1 <= n <= 20");
    const int d = field_dim(f);
    int max_ind = 0;
    for (int k = 1; k <= n; ++k) max_ind += d * k - 1;
    std::vector<unsigned long> counts(max_ind + 1, 0);
    for (std::uint32_t idx = 0; idx < (1u << n); ++idx) {
        int ind = 0;
        for (int k = 0; k < n; ++k)
            if ((idx >> k) & 1u) ind += d * (k + 1) - 1;
        ++counts[ind];
    }
    std::vector<mpz_class> coeffs(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) coeffs[i] = mpz_class(counts[i]);
    return IntPolynomial(std::move(coeffs));
}

std::vector<MorseRecord> morse_census(const GroupSpec& g, const Mat& a, const Tolerances& tol) {
    const HeightSpec h{a};
    const SpaceSpec space = SpaceSpec::group(g);
    std::vector<MorseRecord> out;
    for (const SignVector& eps : enumerate_critical(g.n)) {
        MorseRecord rec;
        rec.eps = eps;
        rec.index_formula = morse_index(eps, g.field());
        const Mat x = sign_matrix(g.field(), eps);
        rec.signature = hessian_signature(h, x, space, tol);
        rec.height_value = height(h, x);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace morseflow
