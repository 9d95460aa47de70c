#include "morseflow/schubert.hpp"

#include <algorithm>
#include <cmath>

namespace morseflow {

std::vector<int> SchubertSymbol::to_partition() const {
    const int m = static_cast<int>(jumps.size());
    std::vector<int> lambda(m);
    for (int i = 0; i < m; ++i) lambda[i] = jumps[m - 1 - i] - (m - i);
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

SchubertSymbol SchubertSymbol::from_partition(const std::vector<int>& lambda, int m) {
    SchubertSymbol s;
    s.jumps.resize(m);
    for (int k = 1; k <= m; ++k) {
        const int idx = m - k;  // lambda_{m-k+1}, zero when past the end
        const int part = idx < static_cast<int>(lambda.size()) ? lambda[idx] : 0;
        s.jumps[k - 1] = k + part;
    }
    return s;
}

SchubertSymbol schubert_symbol(const SubspaceBasis& z, const Tolerances& tol) {
    const Mat q = orthonormalize_columns(z.z);
    const int n = q.rows(), m = q.cols();
    // dim(V cap U_l) = m - rank(rows l+1..n of Q); ranks via singular values.
    std::vector<int> cap_dim(n + 1, 0);
    for (int l = 0; l < n; ++l) {
        // bottom block of rows l..n-1 (0-based), i.e. U_l with l basis vectors
        Mat block(q.field(), n - l, m);
        for (int i = l; i < n; ++i)
            for (int j = 0; j < m; ++j) block.at(i - l, j) = q.at(i, j);
        const std::vector<double> sv =
            singular_values((n - l) >= m ? block : block.conj_transpose(), tol);
        int rank = 0;
        for (double s : sv) {
            if (s > tol.rank_nonzero)
                ++rank;
            else if (s > tol.rank_zero)
                throw IndeterminateError("schubert_symbol: singular value in the ambiguity band");
        }
        cap_dim[l] = m - rank;
    }
    cap_dim[n] = m;

    SchubertSymbol sym;
    for (int l = 1; l <= n; ++l)
        if (cap_dim[l] > cap_dim[l - 1]) {
            if (cap_dim[l] != cap_dim[l - 1] + 1)
                throw IndeterminateError("schubert_symbol: rank pattern jumps by more than one");
            sym.jumps.push_back(l);
        }
    if (static_cast<int>(sym.jumps.size()) != m)
        throw IndeterminateError("schubert_symbol: inconsistent rank pattern");
    return sym;
}

int cell_dimension_grassmann(const SchubertSymbol& symbol, int n, Field f) {
    const int d = field_dim(f);
    int sum = 0;
    for (size_t k = 0; k < symbol.jumps.size(); ++k) {
        const int j = symbol.jumps[k];
        if (j < 1 || j > n || (k > 0 && j <= symbol.jumps[k - 1]))
            throw PreconditionError("cell_dimension: invalid symbol");
        sum += j - static_cast<int>(k + 1);
    }
    return d * sum;
}

int cell_dimension(const CellID& cell, int n, Field f) {
    if (static_cast<int>(cell.symbol.jumps.size()) != cell.m)
        throw PreconditionError("cell_dimension: symbol length disagrees with m");
    const int d = field_dim(f);
    int shift = 0;
    for (int k = 1; k <= cell.m; ++k) shift += d * k - 1;
    return cell_dimension_grassmann(cell.symbol, n, f) + shift;
}

CellID classify(const Mat& x, const HeightSpec& a, const Tolerances& tol) {
    require_square(x, "classify");
    if (membership_residual(x) > tol.membership_pre)
        throw PreconditionError("classify: X is not in the group to tolerance");
    if (!a.is_diagonal_morse())
        throw PreconditionError("classify: height matrix must be diagonal Morse");
    const int n = x.rows();

    // -1 eigenvectors of unitary X = null vectors of the Hermitian
    // H = 2I + X + X*, whose spectrum is |lambda + 1|^2 on the unit circle.
    Mat h = x + x.conj_transpose();
    for (int i = 0; i < n; ++i) h.at(i, i) += Scalar(2.0);
    const HermEig eig = herm_eig(h, tol);

    std::vector<int> complement_cols;
    for (int k = 0; k < n; ++k) {
        const double dist = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
        if (dist <= tol.eig_minus_one) continue;  // inside V_-
        if (dist < tol.eig_ambiguous)
            throw IndeterminateError("classify: eigenvalue inside the -1 ambiguity band");
        complement_cols.push_back(k);
    }

    CellID cell;
    cell.m = static_cast<int>(complement_cols.size());
    if (cell.m == 0) return cell;
    Mat w(x.field(), n, cell.m);
    for (int j = 0; j < cell.m; ++j)
        for (int i = 0; i < n; ++i) w.at(i, j) = eig.vectors.at(i, complement_cols[j]);
    cell.symbol = schubert_symbol(SubspaceBasis(w, tol), tol);
    return cell;
}

CellID cell_of_sign_vector(const std::vector<int>& eps) {
    CellID cell;
    for (size_t k = 0; k < eps.size(); ++k)
        if (eps[k] == 1) cell.symbol.jumps.push_back(static_cast<int>(k + 1));
    cell.m = static_cast<int>(cell.symbol.jumps.size());
    return cell;
}

std::vector<int> nearest_sign_vector(const Mat& x) {
    require_square(x, "nearest_sign_vector");
    std::vector<int> eps(x.rows());
    for (int i = 0; i < x.rows(); ++i) eps[i] = x.at(i, i).w >= 0.0 ? 1 : -1;
    return eps;
}

std::vector<CellID> enumerate_cells(int n) {
    std::vector<CellID> cells;
    for (std::uint32_t idx = 0; idx < (1u << n); ++idx) {
        std::vector<int> eps(n, -1);
        for (int k = 0; k < n; ++k)
            if ((idx >> k) & 1u) eps[k] = 1;
        cells.push_back(cell_of_sign_vector(eps));
    }
    return cells;
}

IntPolynomial cell_dimension_polynomial(int n, Field f) {
    IntPolynomial p;
    for (const CellID& cell : enumerate_cells(n))
        p += IntPolynomial::monomial(cell_dimension(cell, n, f));
    return p;
}

SharedDecompositionReport shared_decomposition_check(const HeightSpec& a1, const HeightSpec& a2,
                                                     const GroupSpec& g, int samples,
                                                     std::uint64_t seed, double t_limit,
                                                     const Tolerances& tol) {
    for (const HeightSpec* h : {&a1, &a2})
        if (!h->is_diagonal_morse())
            throw PreconditionError("shared_decomposition_check: need diagonal Morse matrices");
    const FlowSolver f1(a1, tol), f2(a2, tol);
    SharedDecompositionReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        const Mat x0 = random_element(g, seed + static_cast<std::uint64_t>(s), tol);
        const auto lim1 = nearest_sign_vector(f1.at(x0, t_limit));
        const auto lim2 = nearest_sign_vector(f2.at(x0, t_limit));
        if (lim1 != lim2) ++rep.mismatches;
    }
    rep.pass = rep.mismatches == 0;
    return rep;
}

}  // namespace morseflow
