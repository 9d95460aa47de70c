#include "morseflow/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace morseflow {

Field parse_field(const std::string& s) {
    if (s == "R" || s == "r") return Field::R;
    if (s == "C" || s == "c") return Field::C;
    if (s == "H" || s == "h") return Field::H;
    throw ParseError("unknown field tag '" + s + "' (want R, C or H)");
}

Mat Mat::identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1.0);
    return m;
}

Mat Mat::diag(Field f, const std::vector<double>& d) {
    Mat m(f, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = Scalar(d[i]);
    return m;
}

Mat Mat::from_rows(Field f, int rows, int cols, std::initializer_list<Scalar> entries) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw DimensionError("Mat::from_rows: entry count mismatch");
    Mat m(f, rows, cols);
    int k = 0;
    for (const Scalar& s : entries) m.a_[k++] = s;
    return m;
}

Mat Mat::conj_transpose() const {
    Mat m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = morseflow::conj(at(i, j));
    return m;
}

Mat Mat::transpose() const {
    Mat m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::conj() const {
    Mat m(field_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = morseflow::conj(a_[k]);
    return m;
}

Mat Mat::operator-() const {
    Mat m(field_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    require_same_shape(*this, o, "Mat::operator+=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    require_same_shape(*this, o, "Mat::operator-=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat& Mat::operator*=(double s) {
    for (auto& q : a_) q *= s;
    return *this;
}

Mat Mat::col(int j) const { return cols_range(j, j + 1); }

Mat Mat::cols_range(int j0, int j1) const {
    if (j0 < 0 || j1 > cols_ || j0 > j1) throw DimensionError("Mat::cols_range: bad range");
    Mat m(field_, rows_, j1 - j0);
    for (int i = 0; i < rows_; ++i)
        for (int j = j0; j < j1; ++j) m.at(i, j - j0) = at(i, j);
    return m;
}

void Mat::set_col(int j, const Mat& v) {
    if (v.rows() != rows_ || v.cols() != 1) throw DimensionError("Mat::set_col: shape");
    for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

double Mat::norm_fro() const {
    double s = 0.0;
    for (const auto& q : a_) s += q.norm_sq();
    return std::sqrt(s);
}

double Mat::max_abs() const {
    double s = 0.0;
    for (const auto& q : a_) s = std::max(s, q.abs());
    return s;
}

bool Mat::all_finite() const {
    for (const auto& q : a_)
        if (!q.is_finite()) return false;
    return true;
}

bool Mat::entries_in_field() const {
    for (const auto& q : a_)
        if (!in_field(q, field_)) return false;
    return true;
}

double Mat::trace_re() const {
    require_square(*this, "Mat::trace_re");
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += at(i, i).w;
    return s;
}

Scalar Mat::trace() const {
    require_square(*this, "Mat::trace");
    Scalar s;
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

void require_same_shape(const Mat& a, const Mat& b, const char* where) {
    if (a.field() != b.field())
        throw DimensionError(std::string(where) + ": field mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(where) + ": shape mismatch");
}

void require_square(const Mat& a, const char* where) {
    if (!a.is_square()) throw DimensionError(std::string(where) + ": square matrix required");
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(Mat a, double s) { return a *= s; }
Mat operator*(double s, Mat a) { return a *= s; }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) throw DimensionError("Mat::operator*: field mismatch");
    if (a.cols() != b.rows()) throw DimensionError("Mat::operator*: shape mismatch");
    Mat m(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == Scalar()) continue;
            for (int j = 0; j < b.cols(); ++j) m.at(i, j) += aik * b.at(k, j);
        }
    }
    return m;
}

double inner(const Mat& x, const Mat& y) {
    require_same_shape(x, y, "inner");
    // Re Tr(X*Y) = sum of componentwise products.
    double s = 0.0;
    const auto& xa = x.data();
    const auto& ya = y.data();
    for (size_t k = 0; k < xa.size(); ++k)
        s += xa[k].w * ya[k].w + xa[k].x * ya[k].x + xa[k].y * ya[k].y + xa[k].z * ya[k].z;
    return s;
}

double dist_fro(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "dist_fro");
    double s = 0.0;
    for (size_t k = 0; k < a.data().size(); ++k) s += (a.data()[k] - b.data()[k]).norm_sq();
    return std::sqrt(s);
}

Mat scale_left(const Scalar& a, const Mat& m) {
    Mat r(m.field(), m.rows(), m.cols());
    for (size_t k = 0; k < m.data().size(); ++k) r.data()[k] = a * m.data()[k];
    return r;
}

Mat scale_right(const Mat& m, const Scalar& a) {
    Mat r(m.field(), m.rows(), m.cols());
    for (size_t k = 0; k < m.data().size(); ++k) r.data()[k] = m.data()[k] * a;
    return r;
}

Mat solve(const Mat& m, const Mat& b) {
    require_square(m, "solve");
    if (m.field() != b.field() || m.rows() != b.rows())
        throw DimensionError("solve: incompatible right-hand side");
    const int n = m.rows();
    Mat u = m, x = b;
    // Forward elimination with partial pivoting; all row operations act by
    // left multiplication, which is what a division ring allows.
    for (int p = 0; p < n; ++p) {
        int piv = p;
        double best = u.at(p, p).abs();
        for (int r = p + 1; r < n; ++r) {
            double v = u.at(r, p).abs();
            if (v > best) { best = v; piv = r; }
        }
        if (best < 1e-300) throw SingularityError("solve: singular matrix");
        if (piv != p) {
            for (int j = 0; j < n; ++j) std::swap(u.at(p, j), u.at(piv, j));
            for (int j = 0; j < x.cols(); ++j) std::swap(x.at(p, j), x.at(piv, j));
        }
        const Scalar pv = u.at(p, p);
        for (int j = p; j < n; ++j) u.at(p, j) = left_div(pv, u.at(p, j));
        for (int j = 0; j < x.cols(); ++j) x.at(p, j) = left_div(pv, x.at(p, j));
        for (int r = 0; r < n; ++r) {
            if (r == p) continue;
            Scalar f = u.at(r, p);
            if (f == Scalar()) continue;
            for (int j = p; j < n; ++j) u.at(r, j) -= f * u.at(p, j);
            for (int j = 0; j < x.cols(); ++j) x.at(r, j) -= f * x.at(p, j);
        }
    }
    return x;
}

Mat inverse(const Mat& m) { return solve(m, Mat::identity(m.field(), m.rows())); }

Scalar det(const Mat& m) {
    require_square(m, "det");
    if (m.field() == Field::H)
        throw PreconditionError("det: not defined entrywise over the quaternions");
    const int n = m.rows();
    Mat u = m;
    Scalar d(1.0);
    for (int p = 0; p < n; ++p) {
        int piv = p;
        double best = u.at(p, p).abs();
        for (int r = p + 1; r < n; ++r) {
            double v = u.at(r, p).abs();
            if (v > best) { best = v; piv = r; }
        }
        if (best < 1e-300) return Scalar(0.0);
        if (piv != p) {
            for (int j = 0; j < n; ++j) std::swap(u.at(p, j), u.at(piv, j));
            d = -d;
        }
        d = d * u.at(p, p);
        Scalar pinv = inverse(u.at(p, p));
        for (int r = p + 1; r < n; ++r) {
            Scalar f = u.at(r, p) * pinv;
            if (f == Scalar()) continue;
            for (int j = p; j < n; ++j) u.at(r, j) -= f * u.at(p, j);
        }
    }
    return d;
}

Mat orthonormalize_columns(const Mat& z, double rank_tol) {
    Mat q = z;
    const int n = q.rows(), m = q.cols();
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < j; ++i) {
                // coefficient <u_i, v_j> in right-module conventions
                Scalar c;
                for (int k = 0; k < n; ++k) c += conj(q.at(k, i)) * q.at(k, j);
                for (int k = 0; k < n; ++k) q.at(k, j) -= q.at(k, i) * c;
            }
            double nrm = 0.0;
            for (int k = 0; k < n; ++k) nrm += q.at(k, j).norm_sq();
            nrm = std::sqrt(nrm);
            if (pass == 0 && nrm < rank_tol)
                throw SingularityError("orthonormalize_columns: rank deficient");
            double inv = 1.0 / nrm;
            for (int k = 0; k < n; ++k) q.at(k, j) *= inv;
        }
    }
    return q;
}

double membership_residual(const Mat& x) {
    require_square(x, "membership_residual");
    return dist_fro(x.conj_transpose() * x, Mat::identity(x.field(), x.rows()));
}

Mat complex_rep(const Mat& m) {
    const int n = m.rows(), c = m.cols();
    Mat r(Field::C, 2 * n, 2 * c);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) {
            const Scalar& q = m.at(i, j);
            // q = alpha + beta j with alpha = w + x i, beta = y + z i
            r.at(i, j) = Scalar(q.w, q.x);
            r.at(i, j + c) = Scalar(q.y, q.z);
            r.at(i + n, j) = Scalar(-q.y, q.z);
            r.at(i + n, j + c) = Scalar(q.w, -q.x);
        }
    }
    return r;
}

}  // namespace morseflow
