#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "morseflow/scalar.hpp"

namespace morseflow {

// Polynomial in one variable with exact nonnegative integer coefficients,
// index = degree, no trailing zeros.  Backs every homology-level identity;
// all arithmetic is exact.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial one();
    static IntPolynomial monomial(int degree, const mpz_class& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coefficient_sum() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial shifted(int degree_shift) const;  // times t^shift
    // Substitute t -> t^step.
    IntPolynomial stretched(int step) const;

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    std::string to_string() const;  // human form, e.g. "1 + 2t^2 + t^4"

private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

// Gaussian binomial [n k]_q with q = t^step, by the Pascal recursion
// [n k] = [n-1 k] + q^{n-k} [n-1 k-1].  Pre: 0 <= k <= n, step >= 1.
IntPolynomial gaussian_binomial(int n, int k, int step = 1);

// Poincare polynomial of the Grassmannian G_{n,k}(field); over Z for C and H,
// over Z_2 for R.
IntPolynomial poincare_grassmannian(int n, int k, Field f);

struct IdentityReport {
    bool pass = false;
    std::string name;
    std::string lhs;
    std::string rhs;
};

// Cell-count polynomial of the group decomposition:
//   sum_k t^{s_d(k)} [n k]_{t^d}  with  s_1 = k(k-1)/2, s_2 = k^2, s_4 = k(2k+1),
// checked exactly against the Morse count polynomial.
IdentityReport verify_group_decomposition(int n, Field f);

// The four embedded-space identities; left side is the closed product form of
// the Morse counts, right side the shifted Grassmannian sum.
std::vector<IdentityReport> verify_symmetric_space_decompositions(int n);

// Splitting identity for G_{n,k} with n = n1 + n2 and shift d (n1-k1) k2.
IdentityReport verify_grassmann_split(int n, int n1, int n2, int k, Field f);

// Morse count polynomials of the embedded spaces as closed products.
IntPolynomial morse_poly_lag_grass(int n);       // prod (1 + t^k)
IntPolynomial morse_poly_complex_struct(int n);  // prod (1 + t^{2(k-1)})
IntPolynomial morse_poly_quat_struct(int n);     // prod (1 + t^{4k-2})
IntPolynomial morse_poly_sp_mod_u(int n);        // prod (1 + t^{2k})

}  // namespace morseflow
