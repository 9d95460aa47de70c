#include "morseflow/intpoly.hpp"

#include "morseflow/errors.hpp"

namespace morseflow {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c < 0) throw PreconditionError("IntPolynomial: negative coefficient");
    trim();
}

IntPolynomial IntPolynomial::one() { return monomial(0); }

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& c) {
    if (degree < 0) throw PreconditionError("IntPolynomial: negative degree");
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

const mpz_class& IntPolynomial::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

mpz_class IntPolynomial::coefficient_sum() const {
    mpz_class s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::shifted(int degree_shift) const {
    if (is_zero()) return {};
    std::vector<mpz_class> v(c_.size() + degree_shift);
    for (size_t k = 0; k < c_.size(); ++k) v[k + degree_shift] = c_[k];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::stretched(int step) const {
    if (step < 1) throw PreconditionError("IntPolynomial::stretched: step must be >= 1");
    if (is_zero()) return {};
    std::vector<mpz_class> v(static_cast<size_t>(degree()) * step + 1);
    for (size_t k = 0; k < c_.size(); ++k) v[k * step] = c_[k];
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0 || c_[k] != 1) out += c_[k].get_str();
        if (k >= 1) {
            out += "t";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial gaussian_binomial(int n, int k, int step) {
    if (k < 0 || k > n) throw PreconditionError("gaussian_binomial: k out of range");
    if (step < 1) throw PreconditionError("gaussian_binomial: step must be >= 1");
    // Pascal table in q = t^1; stretch once at the end.
    std::vector<IntPolynomial> row(k + 1);
    row[0] = IntPolynomial::one();
    for (int i = 1; i <= n; ++i) {
        const int jmax = std::min(i, k);
        for (int j = jmax; j >= 1; --j) {
            IntPolynomial acc = (j == i) ? IntPolynomial{} : row[j];
            acc += row[j - 1].shifted(i - j);
            row[j] = std::move(acc);
        }
    }
    return step == 1 ? row[k] : row[k].stretched(step);
}

IntPolynomial poincare_grassmannian(int n, int k, Field f) {
    return gaussian_binomial(n, k, field_dim(f));
}

namespace {

int group_shift(int k, Field f) {
    switch (f) {
        case Field::R: return k * (k - 1) / 2;
        case Field::C: return k * k;
        case Field::H: return k * (2 * k + 1);
    }
    return 0;
}

IntPolynomial group_morse_poly(int n, Field f) {
    // prod_k (1 + t^{dk-1}); the closed form of the index counts.
    const int d = field_dim(f);
    IntPolynomial p = IntPolynomial::one();
    for (int k = 1; k <= n; ++k)
        p = p * (IntPolynomial::one() + IntPolynomial::monomial(d * k - 1));
    return p;
}

IdentityReport report(const std::string& name, const IntPolynomial& lhs,
                      const IntPolynomial& rhs) {
    return {lhs == rhs, name, lhs.to_string(), rhs.to_string()};
}

}  // namespace

IdentityReport verify_group_decomposition(int n, Field f) {
    IntPolynomial rhs;
    for (int k = 0; k <= n; ++k)
        rhs += poincare_grassmannian(n, k, f).shifted(group_shift(k, f));
    const std::string name =
        std::string(f == Field::R ? "O" : (f == Field::C ? "U" : "Sp")) + "(" +
        std::to_string(n) + ")";
    return report(name, group_morse_poly(n, f), rhs);
}

IntPolynomial morse_poly_lag_grass(int n) {
    IntPolynomial p = IntPolynomial::one();
    for (int k = 1; k <= n; ++k) p = p * (IntPolynomial::one() + IntPolynomial::monomial(k));
    return p;
}

IntPolynomial morse_poly_complex_struct(int n) {
    IntPolynomial p = IntPolynomial::one();
    for (int k = 1; k <= n; ++k)
        p = p * (IntPolynomial::one() + IntPolynomial::monomial(2 * (k - 1)));
    return p;
}

IntPolynomial morse_poly_quat_struct(int n) {
    IntPolynomial p = IntPolynomial::one();
    for (int k = 1; k <= n; ++k)
        p = p * (IntPolynomial::one() + IntPolynomial::monomial(4 * k - 2));
    return p;
}

IntPolynomial morse_poly_sp_mod_u(int n) {
    IntPolynomial p = IntPolynomial::one();
    for (int k = 1; k <= n; ++k) p = p * (IntPolynomial::one() + IntPolynomial::monomial(2 * k));
    return p;
}

std::vector<IdentityReport> verify_symmetric_space_decompositions(int n) {
    std::vector<IdentityReport> out;
    {
        IntPolynomial rhs;
        for (int k = 0; k <= n; ++k)
            rhs += poincare_grassmannian(n, k, Field::R).shifted(k * (k + 1) / 2);
        out.push_back(report("U(" + std::to_string(n) + ")/O(" + std::to_string(n) + ")",
                             morse_poly_lag_grass(n), rhs));
    }
    {
        IntPolynomial rhs;
        for (int k = 0; k <= n; ++k)
            rhs += poincare_grassmannian(n, k, Field::C).shifted(k * (k - 1));
        out.push_back(report("O(" + std::to_string(2 * n) + ")/U(" + std::to_string(n) + ")",
                             morse_poly_complex_struct(n), rhs));
    }
    {
        IntPolynomial rhs;
        for (int k = 0; k <= n; ++k)
            rhs += poincare_grassmannian(n, k, Field::H).shifted(2 * k * k);
        out.push_back(report("U(" + std::to_string(2 * n) + ")/Sp(" + std::to_string(n) + ")",
                             morse_poly_quat_struct(n), rhs));
    }
    {
        IntPolynomial rhs;
        for (int k = 0; k <= n; ++k)
            rhs += poincare_grassmannian(n, k, Field::C).shifted(k * (k + 1));
        out.push_back(report("Sp(" + std::to_string(n) + ")/U(" + std::to_string(n) + ")",
                             morse_poly_sp_mod_u(n), rhs));
    }
    return out;
}

IdentityReport verify_grassmann_split(int n, int n1, int n2, int k, Field f) {
    if (n1 + n2 != n) throw PreconditionError("verify_grassmann_split: n1 + n2 != n");
    if (k < 0 || k > n) throw PreconditionError("verify_grassmann_split: k out of range");
    const int d = field_dim(f);
    IntPolynomial rhs;
    for (int k1 = 0; k1 <= std::min(k, n1); ++k1) {
        const int k2 = k - k1;
        if (k2 > n2) continue;
        rhs += (poincare_grassmannian(n1, k1, f) * poincare_grassmannian(n2, k2, f))
                   .shifted(d * (n1 - k1) * k2);
    }
    const std::string name = "G_{" + std::to_string(n) + "," + std::to_string(k) + "}(" +
                             field_name(f) + ") = sum over " + std::to_string(n1) + "+" +
                             std::to_string(n2);
    return report(name, poincare_grassmannian(n, k, f), rhs);
}

}  // namespace morseflow
