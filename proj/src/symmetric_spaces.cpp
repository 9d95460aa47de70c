#include "morseflow/symmetric_spaces.hpp"

#include <cmath>

#include "morseflow/matfunc.hpp"

namespace morseflow {

SubspaceBasis::SubspaceBasis(Mat basis, const Tolerances& tol) : z(std::move(basis)) {
    if (z.rows() < z.cols() || z.cols() < 1)
        throw DimensionError("SubspaceBasis: need an n x m basis with m <= n");
    if (smallest_singular_value(z, tol) <= tol.rank_zero)
        throw PreconditionError("SubspaceBasis: columns are rank deficient");
}

Mat SubspaceBasis::projector() const {
    const Mat q = orthonormalize_columns(z);
    return q * q.conj_transpose();
}

double projector_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
    return dist_fro(a.projector(), b.projector());
}

Field SpaceSpec::ambient_field() const {
    switch (kind) {
        case Kind::Group:
        case Kind::Grassmann: return field;
        case Kind::LagGrass: return Field::C;
        case Kind::ComplexStruct: return Field::R;
        case Kind::QuatStruct: return Field::C;
        case Kind::SpModU: return Field::H;
    }
    return Field::R;
}

int SpaceSpec::ambient_size() const {
    switch (kind) {
        case Kind::Group:
        case Kind::Grassmann:
        case Kind::LagGrass:
        case Kind::SpModU: return n;
        case Kind::ComplexStruct:
        case Kind::QuatStruct: return 2 * n;
    }
    return n;
}

GroupSpec SpaceSpec::ambient_group() const {
    return GroupSpec::for_field(ambient_field(), ambient_size());
}

int SpaceSpec::dim() const {
    const int d = field_dim(field);
    switch (kind) {
        case Kind::Group: return ambient_group().dim();
        case Kind::Grassmann: return d * m * (n - m);
        case Kind::LagGrass: return n * (n + 1) / 2;
        case Kind::ComplexStruct: return n * (n - 1);
        case Kind::QuatStruct: return 2 * n * n - n;
        case Kind::SpModU: return n * (n + 1);
    }
    return 0;
}

const char* SpaceSpec::name() const {
    switch (kind) {
        case Kind::Group: return "group";
        case Kind::Grassmann: return "grassmann";
        case Kind::LagGrass: return "lagrangian_grassmannian";
        case Kind::ComplexStruct: return "complex_structures";
        case Kind::QuatStruct: return "quaternionic_structures";
        case Kind::SpModU: return "sp_mod_u";
    }
    return "?";
}

double space_membership_residual(const SpaceSpec& space, const Mat& x) {
    if (x.field() != space.ambient_field() || x.rows() != space.ambient_size() ||
        x.cols() != space.ambient_size())
        throw DimensionError("space_membership_residual: wrong shape or field");
    const Mat id = Mat::identity(x.field(), x.rows());
    const double unitary = dist_fro(x.conj_transpose() * x, id);
    switch (space.kind) {
        case SpaceSpec::Kind::Group:
            return unitary;
        case SpaceSpec::Kind::Grassmann: {
            const double herm = dist_fro(x, x.conj_transpose());
            const double invol = dist_fro(x * x, id);
            const double sig = std::abs(x.trace_re() - (2.0 * space.m - space.n));
            return std::max({herm, invol, sig});
        }
        case SpaceSpec::Kind::LagGrass:
            return std::max(unitary, dist_fro(x, x.transpose()));
        case SpaceSpec::Kind::ComplexStruct:
        case SpaceSpec::Kind::QuatStruct:
            return std::max(unitary, dist_fro(x.transpose(), -x));
        case SpaceSpec::Kind::SpModU:
            return std::max(unitary, dist_fro(x.conj_transpose(), -x));
    }
    return 0.0;
}

namespace {

Mat standard_symplectic(Field f, int n2) {
    // block-diagonal [[0,1],[-1,0]] of size 2m
    Mat j(f, n2, n2);
    for (int b = 0; b + 1 < n2; b += 2) {
        j.at(b, b + 1) = Scalar(1.0);
        j.at(b + 1, b) = Scalar(-1.0);
    }
    return j;
}

}  // namespace

Mat random_point(const SpaceSpec& space, std::uint64_t seed, const Tolerances& tol) {
    const GroupSpec amb = space.ambient_group();
    const Mat u = random_element(amb, seed, tol);
    switch (space.kind) {
        case SpaceSpec::Kind::Group:
            return u;
        case SpaceSpec::Kind::Grassmann: {
            Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
            const SubspaceBasis z(rng.gaussian_matrix(space.field, space.n, space.m), tol);
            return grassmann_embed(z);
        }
        case SpaceSpec::Kind::LagGrass:
            return u * u.transpose();
        case SpaceSpec::Kind::ComplexStruct:
        case SpaceSpec::Kind::QuatStruct:
            return u * standard_symplectic(space.ambient_field(), space.ambient_size()) *
                   u.transpose();
        case SpaceSpec::Kind::SpModU: {
            Mat i_unit(Field::H, space.n, space.n);
            for (int k = 0; k < space.n; ++k) i_unit.at(k, k) = Scalar(0.0, 1.0, 0.0, 0.0);
            return u * i_unit * u.conj_transpose();
        }
    }
    throw Error("random_point: unreachable");
}

Mat reflect(const SpaceSpec& space, const Mat& x, const Mat& y, const Tolerances& tol) {
    if (space_membership_residual(space, x) > tol.membership_pre ||
        space_membership_residual(space, y) > tol.membership_pre)
        throw PreconditionError("reflect: point off the space to tolerance");
    switch (space.kind) {
        case SpaceSpec::Kind::Group: return x * y.conj_transpose() * x;
        case SpaceSpec::Kind::Grassmann: return x * y * x;
        case SpaceSpec::Kind::LagGrass: return x * y.conj() * x;
        case SpaceSpec::Kind::ComplexStruct: return -(x * y * x);
        case SpaceSpec::Kind::QuatStruct: return -(x * y.conj() * x);
        case SpaceSpec::Kind::SpModU: return -(x * y * x);
    }
    throw Error("reflect: unreachable");
}

Mat grassmann_embed(const SubspaceBasis& z) {
    const Mat q = orthonormalize_columns(z.z);
    Mat x = q * q.conj_transpose();
    x *= 2.0;
    return x - Mat::identity(z.z.field(), z.ambient_dim());
}

SubspaceBasis grassmann_flow(const SubspaceBasis& z, const Mat& a, double t,
                             const Tolerances& tol) {
    if (a.field() != z.z.field() || a.rows() != z.ambient_dim())
        throw DimensionError("grassmann_flow: A incompatible with the basis");
    const HermEig eig = herm_eig(a, tol);
    double rho = 0.0;
    for (double l : eig.eigenvalues) rho = std::max(rho, std::abs(l));
    const double cap = rho > 0.0 ? 8.0 / rho : std::abs(t);
    Mat v = orthonormalize_columns(z.z);
    double remaining = t;
    const double dir = t >= 0.0 ? 1.0 : -1.0;
    do {
        const double s = dir * std::min(std::abs(remaining), cap);
        v = orthonormalize_columns(mat_func(eig, s, MatFuncKind::Exp) * v);
        remaining -= s;
    } while (std::abs(remaining) > 0.0);
    return SubspaceBasis(v, tol);
}

bool height_constraint_holds(const SpaceSpec& space, const Mat& a, double tol_val) {
    const double scale = std::max(1.0, a.norm_fro());
    switch (space.kind) {
        case SpaceSpec::Kind::Group:
        case SpaceSpec::Kind::Grassmann:
            return dist_fro(a, a.conj_transpose()) <= tol_val * scale;
        case SpaceSpec::Kind::LagGrass:
            return dist_fro(a, a.conj_transpose()) <= tol_val * scale &&
                   dist_fro(a, a.transpose()) <= tol_val * scale;
        case SpaceSpec::Kind::ComplexStruct:
        case SpaceSpec::Kind::QuatStruct:
            return dist_fro(a.transpose(), -a) <= tol_val * scale;
        case SpaceSpec::Kind::SpModU:
            return dist_fro(a.conj_transpose(), -a) <= tol_val * scale;
    }
    return false;
}

Mat ambient_flow(const Mat& a, const Mat& x, double t, const Tolerances& tol) {
    const HeightSpec h{a};
    if (h.is_hermitian(tol.hermitian_check)) return closed_flow(h, x, t, tol);
    return general_flow(a, x, t, tol);
}

InvarianceReport check_invariance(const SpaceSpec& space, const Mat& a, int samples,
                                  double t, std::uint64_t seed, const Tolerances& tol) {
    if (!height_constraint_holds(space, a))
        throw PreconditionError("check_invariance: A violates the space's flow constraint");
    InvarianceReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        const Mat x0 = random_point(space, seed + static_cast<std::uint64_t>(s), tol);
        const Mat xt = ambient_flow(a, x0, t, tol);
        rep.max_residual = std::max(rep.max_residual, space_membership_residual(space, xt));
    }
    rep.pass = rep.max_residual < tol.membership_post;
    return rep;
}

std::vector<Mat> tangent_basis_group(Field f, int n) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Scalar> units;
    units.push_back(Scalar(0, 1));
    if (f == Field::H) {
        units.push_back(Scalar(0, 0, 1, 0));
        units.push_back(Scalar(0, 0, 0, 1));
    }
    std::vector<Mat> basis;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (i == j) {
                if (f == Field::R) continue;
                for (const Scalar& u : units) {
                    Mat b(f, n, n);
                    b.at(i, i) = u;
                    basis.push_back(std::move(b));
                }
            } else {
                Mat b(f, n, n);
                b.at(i, j) = Scalar(inv_sqrt2);
                b.at(j, i) = Scalar(-inv_sqrt2);
                basis.push_back(std::move(b));
                if (f == Field::R) continue;
                for (const Scalar& u : units) {
                    Mat c(f, n, n);
                    c.at(i, j) = u * inv_sqrt2;
                    c.at(j, i) = u * inv_sqrt2;
                    basis.push_back(std::move(c));
                }
            }
        }
    }
    return basis;
}

namespace {

// Linearized membership equations at x, applied to a tangent direction d.
std::vector<Mat> linearized_constraints(const SpaceSpec& space, const Mat& x, const Mat& d) {
    switch (space.kind) {
        case SpaceSpec::Kind::Group: return {};
        case SpaceSpec::Kind::Grassmann:
            return {d - d.conj_transpose(), d * x + x * d};
        case SpaceSpec::Kind::LagGrass: return {d - d.transpose()};
        case SpaceSpec::Kind::ComplexStruct:
        case SpaceSpec::Kind::QuatStruct: return {d + d.transpose()};
        case SpaceSpec::Kind::SpModU: return {d + d.conj_transpose()};
    }
    return {};
}

}  // namespace

std::vector<Mat> tangent_basis_space(const SpaceSpec& space, const Mat& x,
                                     const Tolerances& tol) {
    const Field f = space.ambient_field();
    const int n = space.ambient_size();
    const std::vector<Mat> group_basis = tangent_basis_group(f, n);
    std::vector<Mat> dirs;
    dirs.reserve(group_basis.size());
    for (const Mat& b : group_basis) dirs.push_back(x * b);
    if (space.kind == SpaceSpec::Kind::Group) return dirs;

    const int g = static_cast<int>(dirs.size());
    std::vector<std::vector<Mat>> cons(g);
    for (int k = 0; k < g; ++k) cons[k] = linearized_constraints(space, x, dirs[k]);

    Mat gram(Field::R, g, g);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            double s = 0.0;
            for (size_t c = 0; c < cons[i].size(); ++c) s += inner(cons[i][c], cons[j][c]);
            gram.at(i, j) = Scalar(s);
            gram.at(j, i) = Scalar(s);
        }
    const HermEig eig = herm_eig(gram, tol);
    const double lam_max = std::max(1.0, std::abs(eig.eigenvalues.back()));

    std::vector<Mat> tangent;
    for (int k = 0; k < g; ++k) {
        if (std::abs(eig.eigenvalues[k]) > 1e-8 * lam_max) continue;
        Mat t(f, n, n);
        for (int a_idx = 0; a_idx < g; ++a_idx)
            t += dirs[a_idx] * eig.vectors.at(a_idx, k).w;
        tangent.push_back(std::move(t));
    }
    if (static_cast<int>(tangent.size()) != space.dim())
        throw NumericalError("tangent_basis_space: dimension mismatch at this point");
    return tangent;
}

Mat project_onto_span(const Mat& v, const std::vector<Mat>& basis) {
    Mat p(v.field(), v.rows(), v.cols());
    for (const Mat& b : basis) p += b * inner(b, v);
    return p;
}

}  // namespace morseflow
