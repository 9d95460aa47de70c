#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "morseflow/matfunc.hpp"
#include "morseflow/symmetric_spaces.hpp"

using namespace morseflow;

namespace {

std::vector<SpaceSpec> all_spaces() {
    return {
        SpaceSpec::group({GroupSpec::Family::U, 3}),
        SpaceSpec::grassmann(4, 2, Field::R),
        SpaceSpec::grassmann(4, 2, Field::C),
        SpaceSpec::grassmann(3, 1, Field::H),
        SpaceSpec::lag_grass(3),
        SpaceSpec::complex_struct(2),
        SpaceSpec::quat_struct(2),
        SpaceSpec::sp_mod_u(2),
    };
}

}  // namespace

TEST_CASE("random points satisfy membership") {
    for (const SpaceSpec& space : all_spaces()) {
        for (int seed = 1; seed <= 20; ++seed) {
            const Mat x = random_point(space, seed);
            REQUIRE(space_membership_residual(space, x) < 1e-9);
        }
    }
}

TEST_CASE("reflections") {
    SUBCASE("group reflection at the identity is conjugate transpose") {
        const SpaceSpec space = SpaceSpec::group({GroupSpec::Family::U, 3});
        const Mat y = random_point(space, 4);
        const Mat s = reflect(space, Mat::identity(Field::C, 3), y);
        CHECK(dist_fro(s, y.conj_transpose()) < 1e-12);
    }

    SUBCASE("fixed point, involutivity, closure, isometry") {
        for (const SpaceSpec& space : all_spaces()) {
            for (int seed = 0; seed < 12; ++seed) {
                const Mat x = random_point(space, 100 + seed);
                const Mat y = random_point(space, 200 + seed);
                // S_x(x) = x
                CHECK(dist_fro(reflect(space, x, x), x) < 1e-9);
                // S_x(S_x(y)) = y
                const Mat sy = reflect(space, x, y);
                CHECK(dist_fro(reflect(space, x, sy), y) < 1e-9);
                // S_x(y) stays on the space
                CHECK(space_membership_residual(space, sy) < 1e-8);
            }
            // reflections preserve the ambient inner product
            const Mat x = random_point(space, 31);
            const Mat u = random_point(space, 32);
            const Mat v = random_point(space, 33);
            CHECK(inner(reflect(space, x, u), reflect(space, x, v)) ==
                  doctest::Approx(inner(u, v)).epsilon(1e-9));
        }
    }
}

TEST_CASE("grassmann_embed") {
    SUBCASE("coordinate subspace") {
        Mat z(Field::R, 4, 2);
        z.at(0, 0) = Scalar(1.0);
        z.at(1, 1) = Scalar(1.0);
        const Mat x = grassmann_embed(SubspaceBasis(z));
        CHECK(dist_fro(x, Mat::diag(Field::R, {1, 1, -1, -1})) < 1e-14);
    }

    SUBCASE("full space gives the identity") {
        const Mat x = grassmann_embed(SubspaceBasis(Mat::identity(Field::C, 3)));
        CHECK(dist_fro(x, Mat::identity(Field::C, 3)) < 1e-14);
    }

    SUBCASE("basis-change invariance and spectral structure") {
        for (Field f : {Field::R, Field::C, Field::H}) {
            Rng rng(17);
            const Mat z = rng.gaussian_matrix(f, 5, 2);
            const Mat g = rng.gaussian_matrix(f, 2, 2);
            const Mat x1 = grassmann_embed(SubspaceBasis(z));
            const Mat x2 = grassmann_embed(SubspaceBasis(z * g));
            CHECK(dist_fro(x1, x2) < 1e-9);
            // X = X*, X^2 = I, +1 eigenspace is span(Z)
            CHECK(dist_fro(x1, x1.conj_transpose()) < 1e-12);
            CHECK(dist_fro(x1 * x1, Mat::identity(f, 5)) < 1e-12);
            const Mat proj = SubspaceBasis(z).projector();
            CHECK(dist_fro(x1 * proj, proj) < 1e-12);
        }
    }

    SUBCASE("rank deficiency") {
        Mat z(Field::R, 3, 2);
        z.at(0, 0) = Scalar(1.0);
        z.at(0, 1) = Scalar(2.0);  // second column parallel to first
        CHECK_THROWS_AS((void)SubspaceBasis(z), PreconditionError);
    }
}

TEST_CASE("grassmann_flow") {
    const Mat a = random_hermitian(Field::C, 4, 12);
    Rng rng(13);
    const SubspaceBasis z(rng.gaussian_matrix(Field::C, 4, 2));

    SUBCASE("t = 0 is the same subspace") {
        CHECK(projector_distance(grassmann_flow(z, a, 0.0), z) < 1e-12);
    }

    SUBCASE("embeds to the group flow") {
        const HeightSpec h{a};
        for (double t : {0.4, 1.0, 2.5}) {
            const Mat via_subspace = grassmann_embed(grassmann_flow(z, a, t));
            const Mat via_group = closed_flow(h, grassmann_embed(z), t);
            CHECK(dist_fro(via_subspace, via_group) < 1e-7);
        }
    }

    SUBCASE("long-time limit is a coordinate subspace") {
        const Mat d = Mat::diag(Field::C, {1, 2, 3, 4});
        const SubspaceBasis limit = grassmann_flow(z, d, 60.0);
        // top-eigenvalue coordinate plane span(e3, e4)
        Mat top(Field::C, 4, 2);
        top.at(2, 0) = Scalar(1.0);
        top.at(3, 1) = Scalar(1.0);
        CHECK(projector_distance(limit, SubspaceBasis(top)) < 1e-6);
    }
}

TEST_CASE("flow invariance of the embedded spaces") {
    SUBCASE("lagrangian grassmannian with real diagonal A") {
        const auto rep = check_invariance(SpaceSpec::lag_grass(3),
                                          Mat::diag(Field::C, {1, 2, 3}), 50, 2.0, 5);
        CHECK(rep.pass);
    }

    SUBCASE("grassmannian with Hermitian A") {
        const auto rep = check_invariance(SpaceSpec::grassmann(4, 2, Field::C),
                                          random_hermitian(Field::C, 4, 3), 30, 1.5, 7);
        CHECK(rep.pass);
    }

    SUBCASE("complex structures with skew A") {
        Rng rng(21);
        Mat g = rng.gaussian_matrix(Field::R, 4, 4);
        const Mat skew = (g - g.transpose()) * 0.5;
        const auto rep = check_invariance(SpaceSpec::complex_struct(2), skew, 50, 2.0, 9);
        CHECK(rep.pass);
    }

    SUBCASE("quaternionic structures with complex skew-symmetric A") {
        Rng rng(23);
        Mat g = rng.gaussian_matrix(Field::C, 4, 4);
        const Mat skew = (g - g.transpose()) * 0.5;
        const auto rep = check_invariance(SpaceSpec::quat_struct(2), skew, 30, 1.5, 11);
        CHECK(rep.pass);
    }

    SUBCASE("sp_mod_u with skew-Hermitian quaternionic A") {
        Rng rng(25);
        Mat g = rng.gaussian_matrix(Field::H, 2, 2);
        const Mat skew = (g - g.conj_transpose()) * 0.5;
        const auto rep = check_invariance(SpaceSpec::sp_mod_u(2), skew, 30, 1.5, 13);
        CHECK(rep.pass);
    }

    SUBCASE("violated constraint is rejected, and the flow indeed leaves the space") {
        const Mat generic = random_hermitian(Field::R, 4, 27);
        CHECK_THROWS_AS(check_invariance(SpaceSpec::complex_struct(2), generic, 5, 1.0, 3),
                        PreconditionError);
        // negative control: flowing anyway drifts off the space
        const Mat x0 = random_point(SpaceSpec::complex_struct(2), 3);
        const Mat xt = ambient_flow(generic, x0, 1.0);
        CHECK(space_membership_residual(SpaceSpec::complex_struct(2), xt) > 1e-3);
    }
}

TEST_CASE("restriction principle on the grassmannian") {
    // the ambient velocity at an embedded point equals its tangent projection
    const SpaceSpec space = SpaceSpec::grassmann(4, 2, Field::C);
    const Mat a = random_hermitian(Field::C, 4, 41);
    for (int seed = 50; seed < 55; ++seed) {
        const Mat x = random_point(space, seed);
        const Mat v = flow_rhs_raw(a, x);
        const auto basis = tangent_basis_space(space, x);
        CHECK(static_cast<int>(basis.size()) == space.dim());
        CHECK(dist_fro(v, project_onto_span(v, basis)) < 1e-8);
    }
}

TEST_CASE("tangent bases have the right dimensions") {
    for (const SpaceSpec& space : all_spaces()) {
        const Mat x = random_point(space, 71);
        const auto basis = tangent_basis_space(space, x);
        CHECK(static_cast<int>(basis.size()) == space.dim());
        // orthonormality
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i; j < basis.size(); ++j)
                CHECK(inner(basis[i], basis[j]) ==
                      doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
    }
}

TEST_CASE("f_I fixed points are involutions") {
    // critical set of the trace height consists of involutions
    const HeightSpec id{Mat::identity(Field::C, 3)};
    for (int seed = 80; seed < 90; ++seed) {
        const Mat x0 = random_element({GroupSpec::Family::U, 3}, seed);
        const Mat limit = closed_flow(id, x0, 50.0);
        CHECK(dist_fro(limit * limit, Mat::identity(Field::C, 3)) < 1e-7);
    }
    // a grassmannian point is already critical and stays put (moderate t:
    // these are Bott saddles, so roundoff escapes exponentially eventually)
    const Mat x0 = random_point(SpaceSpec::grassmann(3, 1, Field::C), 91);
    CHECK(dist_fro(closed_flow(id, x0, 5.0), x0) < 1e-7);
}
