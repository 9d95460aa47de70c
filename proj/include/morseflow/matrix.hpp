#pragma once

#include <initializer_list>
#include <vector>

#include "morseflow/errors.hpp"
#include "morseflow/scalar.hpp"

namespace morseflow {

// Dense matrix over R, C or H, row-major.  Values are immutable in spirit:
// every operation returns a fresh matrix, so concurrent readers are safe.
class Mat {
public:
    Mat() = default;
    Mat(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("Mat: negative dimensions");
    }

    static Mat zeros(Field f, int n) { return Mat(f, n, n); }
    static Mat identity(Field f, int n);
    static Mat diag(Field f, const std::vector<double>& d);
    // Real diagonal embedded in any field; entries listed row by row otherwise.
    static Mat from_rows(Field f, int rows, int cols, std::initializer_list<Scalar> entries);

    Field field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<Scalar>& data() const { return a_; }
    std::vector<Scalar>& data() { return a_; }

    Mat conj_transpose() const;
    Mat transpose() const;
    Mat conj() const;  // entrywise conjugation

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(double s);

    Mat col(int j) const;
    Mat cols_range(int j0, int j1) const;  // columns [j0, j1)
    void set_col(int j, const Mat& v);

    double norm_fro() const;
    double max_abs() const;
    bool all_finite() const;
    bool entries_in_field() const;

    // Re Tr(M); the trace of a Hermitian matrix is real.
    double trace_re() const;
    Scalar trace() const;

private:
    Field field_ = Field::R;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

void require_same_shape(const Mat& a, const Mat& b, const char* where);
void require_square(const Mat& a, const char* where);

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Mat a, double s);
Mat operator*(double s, Mat a);

// Ambient inner product (X, Y) = Re Tr(X* Y); real, symmetric, positive.
double inner(const Mat& x, const Mat& y);

double dist_fro(const Mat& a, const Mat& b);

// Left scalar multiple a * M and right multiple M * a (distinct over H).
Mat scale_left(const Scalar& a, const Mat& m);
Mat scale_right(const Mat& m, const Scalar& a);

// Solve M X = B by Gaussian elimination with partial pivoting; valid over
// the quaternions as well since all row operations multiply on the left.
Mat solve(const Mat& m, const Mat& b);
Mat inverse(const Mat& m);

// Determinant via LU; defined here for R and C only.
Scalar det(const Mat& m);

// Two-pass modified Gram-Schmidt on columns (right-module conventions over H).
// Throws SingularityError when a column is dependent beyond rank_tol.
Mat orthonormalize_columns(const Mat& z, double rank_tol = 1e-12);

// ||X* X - I||_F: how far X is from the unitary group of its field.
double membership_residual(const Mat& x);

// Complex 2n x 2n image of a quaternionic matrix under a+bj -> [[a,b],[-conj b, conj a]]
// (blocks of size n).  Ring homomorphism; used as an independent cross-check.
Mat complex_rep(const Mat& m);

}  // namespace morseflow
