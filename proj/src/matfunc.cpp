#include "morseflow/matfunc.hpp"

#include <cmath>

#include "morseflow/errors.hpp"

namespace morseflow {

MatFuncKind parse_mat_func(const std::string& name) {
    if (name == "exp") return MatFuncKind::Exp;
    if (name == "sinh") return MatFuncKind::Sinh;
    if (name == "cosh") return MatFuncKind::Cosh;
    if (name == "tanh") return MatFuncKind::Tanh;
    throw ParseError("unknown matrix function '" + name + "'");
}

Mat mat_func(const Mat& a, double t, MatFuncKind kind, const Tolerances& tol) {
    return mat_func(herm_eig(a, tol), t, kind);
}

Mat mat_func(const HermEig& eig, double t, MatFuncKind kind) {
    std::vector<double> f(eig.eigenvalues.size());
    for (size_t i = 0; i < f.size(); ++i) {
        const double x = eig.eigenvalues[i] * t;
        switch (kind) {
            case MatFuncKind::Exp: f[i] = std::exp(x); break;
            case MatFuncKind::Sinh: f[i] = std::sinh(x); break;
            case MatFuncKind::Cosh: f[i] = std::cosh(x); break;
            case MatFuncKind::Tanh: f[i] = std::tanh(x); break;
        }
    }
    return eig.apply(f);
}

Mat expm(const Mat& m) {
    require_square(m, "expm");
    const int n = m.rows();
    double nrm = m.norm_fro();
    int squarings = 0;
    Mat t = m;
    if (nrm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
        t *= std::ldexp(1.0, -squarings);
    }
    Mat result = Mat::identity(m.field(), n);
    Mat term = Mat::identity(m.field(), n);
    for (int k = 1; k <= 17; ++k) {
        term = term * t;
        term *= 1.0 / k;
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

Mat cayley(const Mat& x, const Tolerances& tol) {
    require_square(x, "cayley");
    const Mat id = Mat::identity(x.field(), x.rows());
    const Mat ipx = id + x;
    if (smallest_singular_value(ipx, tol) <= tol.cayley_domain)
        throw SingularityError("cayley: -1 in the spectrum of X");
    return (id - x) * inverse(ipx);
}

}  // namespace morseflow
