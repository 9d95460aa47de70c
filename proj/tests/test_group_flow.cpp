#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "morseflow/group_flow.hpp"
#include "morseflow/matfunc.hpp"
#include "morseflow/morse.hpp"

using namespace morseflow;

namespace {

const Field kFields[] = {Field::R, Field::C, Field::H};

Mat seeded_hermitian_bounded(Field f, int n, std::uint64_t seed) {
    // Hermitian with norm pinned near 2 so time scales are comparable
    Mat a = random_hermitian(f, n, seed);
    return a * (1.0 / std::max(1.0, a.norm_fro() / 2.0));
}

Mat nearest_sign_matrix(const Mat& x) {
    Mat s(x.field(), x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        s.at(i, i) = Scalar(x.at(i, i).w >= 0.0 ? 1.0 : -1.0);
    return s;
}

}  // namespace

TEST_CASE("height") {
    const HeightSpec id3{Mat::identity(Field::R, 3)};
    CHECK(height(id3, Mat::identity(Field::R, 3)) == doctest::Approx(3.0));

    const HeightSpec h12{Mat::diag(Field::R, {1, 2})};
    CHECK(height(h12, Mat::diag(Field::R, {1, -1})) == doctest::Approx(-1.0));

    // the level-equals-signature matrix over C for n = 3 is diag(1, 3, 5)
    const Mat ms = morse_smale_matrix(3, Field::C);
    CHECK(dist_fro(ms, Mat::diag(Field::C, {1, 3, 5})) == 0.0);
    CHECK(height(HeightSpec{ms}, Mat::identity(Field::C, 3)) == doctest::Approx(9.0));

    CHECK_THROWS_AS(height(h12, Mat::identity(Field::R, 3)), DimensionError);
}

TEST_CASE("grad_rhs") {
    const HeightSpec id{Mat::identity(Field::C, 3)};
    CHECK(grad_rhs(id, Mat::identity(Field::C, 3)).norm_fro() < 1e-14);

    // critical points AX = (AX)* have vanishing velocity
    const HeightSpec a{Mat::diag(Field::C, {1, 2, 3})};
    CHECK(grad_rhs(a, Mat::diag(Field::C, {-1, 1, -1})).norm_fro() < 1e-10);

    SUBCASE("tangency at a random point") {
        const Mat x = random_element({GroupSpec::Family::U, 3}, 5);
        const Mat v = grad_rhs(a, x);
        // X* V must be skew-Hermitian
        const Mat xv = x.conj_transpose() * v;
        CHECK(dist_fro(xv, -xv.conj_transpose()) < 1e-9);
        // and V equals the tangent projection of twice the ambient gradient
        const Mat proj = x * (xv - xv.conj_transpose()) * 0.5;
        CHECK(dist_fro(v, proj) < 1e-9);
    }

    SUBCASE("membership gate") {
        CHECK_THROWS_AS(grad_rhs(a, Mat::diag(Field::C, {2, 1, 1})), PreconditionError);
    }
}

TEST_CASE("closed_flow basics") {
    const HeightSpec a{Mat::diag(Field::C, {1, 2, 3})};
    const Mat x0 = random_element({GroupSpec::Family::U, 3}, 21);

    CHECK(dist_fro(closed_flow(a, x0, 0.0), x0) == 0.0);

    SUBCASE("critical points are fixed for any t") {
        for (double t : {0.5, 7.0, 40.0, 333.0}) {
            const Mat eps = Mat::diag(Field::C, {-1, 1, -1});
            CHECK(dist_fro(closed_flow(a, eps, t), eps) < 1e-10);
            CHECK(grad_rhs(a, closed_flow(a, eps, t)).norm_fro() < 1e-9);
        }
    }

    SUBCASE("semigroup property") {
        const Mat via = closed_flow(a, closed_flow(a, x0, 0.8), 1.7);
        CHECK(dist_fro(via, closed_flow(a, x0, 2.5)) < 1e-7);
    }

    SUBCASE("group membership along the flow") {
        for (double t : {0.1, 1.0, 3.0, 10.0, 60.0})
            CHECK(membership_residual(closed_flow(a, x0, t)) < 1e-8);
    }

    SUBCASE("monotone height") {
        double prev = height(a, x0);
        for (double t : {0.2, 0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double val = height(a, closed_flow(a, x0, t));
            CHECK(val >= prev - 1e-10);
            prev = val;
        }
    }

    SUBCASE("non-Hermitian A is rejected") {
        Mat bad = Mat::diag(Field::C, {1, 2, 3});
        bad.at(0, 1) = Scalar(0, 1);
        CHECK_THROWS_AS(closed_flow(HeightSpec{bad}, x0, 1.0), PreconditionError);
    }
}

TEST_CASE("closed_flow solves the flow equation") {
    // central difference in t against A - XAX, 20 sample times
    for (Field f : kFields) {
        const HeightSpec a{seeded_hermitian_bounded(f, 4, 11)};
        const FlowSolver solver(a);
        const Mat x0 = random_element(GroupSpec::for_field(f, 4), 31);
        const double h = 1e-4;
        for (int k = 0; k < 20; ++k) {
            const double t = 0.11 + 0.45 * k;
            const Mat fd = (solver.at(x0, t + h) - solver.at(x0, t - h)) * (0.5 / h);
            const Mat rhs = flow_rhs_raw(a.a, solver.at(x0, t));
            REQUIRE(dist_fro(fd, rhs) < 1e-6);
        }
    }
}

TEST_CASE("closed_flow conserves membership over seeded cases") {
    for (Field f : kFields) {
        for (int c = 0; c < 200; ++c) {
            const int n = 2 + c % 4;
            const HeightSpec a{seeded_hermitian_bounded(f, n, 700 + c)};
            const FlowSolver solver(a);
            const Mat x0 = random_element(GroupSpec::for_field(f, n), 900 + c);
            const double t = 0.25 * (1 + c % 40);
            REQUIRE(membership_residual(solver.at(x0, t)) < 1e-8);
        }
    }
}

TEST_CASE("closed_flow converges to a sign matrix") {
    for (Field f : kFields) {
        const HeightSpec a{Mat::diag(f, {1, 2, 3})};
        for (int seed = 1; seed <= 5; ++seed) {
            const Mat x0 = random_element(GroupSpec::for_field(f, 3), seed);
            const Mat limit = closed_flow(a, x0, 60.0);
            CHECK(dist_fro(limit, nearest_sign_matrix(limit)) < 1e-6);
        }
        // from X0 = 0 the limit is Q* = I
        const Mat from_zero = closed_flow(a, Mat(f, 3, 3), 60.0);
        CHECK(dist_fro(from_zero, Mat::identity(f, 3)) < 1e-9);
    }
}

TEST_CASE("closed_flow from zero reaches the polar factor") {
    // X0 = 0 with Hermitian nondegenerate A at t = 40
    const Mat v = random_element({GroupSpec::Family::U, 3}, 77);
    Mat a = v * Mat::diag(Field::C, {-2.0, 0.7, 1.5}) * v.conj_transpose();
    a = (a + a.conj_transpose()) * 0.5;
    const Mat x40 = closed_flow(HeightSpec{a}, Mat(Field::C, 3, 3), 40.0);
    const Mat q = polar_newton(a);
    CHECK(dist_fro(x40, q.conj_transpose()) < 1e-6);
    // and the dedicated zero-start path agrees
    CHECK(dist_fro(flow_from_zero(a, 40.0), x40) < 1e-9);
}

TEST_CASE("general_flow agrees with closed_flow for Hermitian A") {
    for (Field f : kFields) {
        const HeightSpec a{seeded_hermitian_bounded(f, 3, 13)};
        const Mat x0 = random_element(GroupSpec::for_field(f, 3), 17);
        for (double t : {0.3, 1.0, 4.0})
            CHECK(dist_fro(general_flow(a.a, x0, t), closed_flow(a, x0, t)) < 1e-8);
    }
}

TEST_CASE("numeric_flow") {
    const HeightSpec a{Mat::diag(Field::C, {0.5, 1.1, 1.9})};
    const Mat x0 = random_element({GroupSpec::Family::U, 3}, 3);

    CHECK(dist_fro(numeric_flow(a, x0, 0.0, 5), x0) < 1e-14);

    SUBCASE("oracle agreement at t = 2 with 2000 steps") {
        const Mat rk = numeric_flow(a, x0, 2.0, 2000);
        const Mat cf = closed_flow(a, x0, 2.0);
        CHECK((rk - cf).max_abs() < 1e-6);
    }

    SUBCASE("fourth-order convergence") {
        const Mat ref = closed_flow(a, x0, 2.0);
        const double e1 = dist_fro(numeric_flow(a, x0, 2.0, 50), ref);
        const double e2 = dist_fro(numeric_flow(a, x0, 2.0, 100), ref);
        const double ratio = e1 / e2;
        CHECK(ratio > 8.0);
        CHECK(ratio < 32.0);
    }

    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(numeric_flow(a, x0, 1.0, 0), PreconditionError);
        CHECK_THROWS_AS(numeric_flow(a, x0 * 1.1, 1.0, 10), PreconditionError);
    }
}

TEST_CASE("linearized_flow") {
    const HeightSpec a{random_hermitian(Field::C, 3, 41)};
    Rng rng(43);
    const Mat y0 = rng.gaussian_matrix(Field::C, 3, 3);
    CHECK(dist_fro(linearized_flow(a, y0, 0.0), y0) < 1e-12);

    // A = I scales by exp(-2t)
    const HeightSpec id{Mat::identity(Field::C, 3)};
    CHECK(dist_fro(linearized_flow(id, y0, 0.9), y0 * std::exp(-1.8)) < 1e-12);

    SUBCASE("solves the linear equation") {
        const double h = 1e-5;
        const Mat fd = (linearized_flow(a, y0, 1.0 + h) - linearized_flow(a, y0, 1.0 - h)) *
                       (0.5 / h);
        const Mat y = linearized_flow(a, y0, 1.0);
        CHECK(dist_fro(fd, -(a.a * y + y * a.a)) < 1e-7);
    }

    SUBCASE("Cayley conjugation of the flow") {
        // cayley(closed_flow) = linearized_flow(cayley) on SO(4)
        const HeightSpec h{random_hermitian(Field::R, 4, 47)};
        int checked = 0;
        for (int seed = 60; seed < 75 && checked < 5; ++seed) {
            Mat x0 = random_element({GroupSpec::Family::O, 4}, seed);
            if (det(x0).w < 0.0)
                for (int i = 0; i < 4; ++i) std::swap(x0.at(i, 0), x0.at(i, 1));
            if (smallest_singular_value(x0 + Mat::identity(Field::R, 4)) < 0.3) continue;
            const Mat lhs = cayley(closed_flow(h, x0, 1.0));
            const Mat rhs = linearized_flow(h, cayley(x0), 1.0);
            CHECK(dist_fro(lhs, rhs) < 1e-8);
            ++checked;
        }
        CHECK(checked >= 3);
    }
}

TEST_CASE("polar_via_flow") {
    SUBCASE("positive diagonal") {
        const auto pd = polar_via_flow(Mat::diag(Field::R, {3, 2}));
        CHECK(dist_fro(pd.j, Mat::diag(Field::R, {3, 2})) < 1e-8);
        CHECK(dist_fro(pd.q, Mat::identity(Field::R, 2)) < 1e-8);
    }

    SUBCASE("rotation input returns itself as the group factor") {
        const double c = std::cos(0.7), s = std::sin(0.7);
        const Mat rot = Mat::from_rows(Field::R, 2, 2, {c, -s, s, c});
        const auto pd = polar_via_flow(rot);
        CHECK(dist_fro(pd.j, Mat::identity(Field::R, 2)) < 1e-8);
        CHECK(dist_fro(pd.q, rot) < 1e-8);
    }

    SUBCASE("random complex matrix against the Newton oracle") {
        Rng rng(55);
        const Mat a = rng.gaussian_matrix(Field::C, 4, 4);
        const auto pd = polar_via_flow(a);
        CHECK(dist_fro(pd.j * pd.q, a) < 1e-8);
        CHECK(dist_fro(pd.q, polar_newton(a)) < 1e-6);
        CHECK(dist_fro(pd.j, pd.j.conj_transpose()) < 1e-8);
        CHECK(herm_eig(pd.j).eigenvalues.front() > 0.0);
    }

    SUBCASE("degenerate input") {
        CHECK_THROWS_AS(polar_via_flow(Mat::diag(Field::R, {1.0, 0.0})), ConditioningError);
    }
}

TEST_CASE("bracket_residual") {
    const Mat a1 = Mat::diag(Field::C, {1, 2, 3});
    const Mat a2 = Mat::diag(Field::C, {2, 5, 7});
    const Mat x = random_element({GroupSpec::Family::U, 3}, 9);
    CHECK(bracket_residual(a1, a2, x) < 1e-12);
    CHECK(bracket_residual(a1, a1, x) == 0.0);

    const Mat b = random_hermitian(Field::C, 3, 61);
    CHECK(bracket_residual(a1, b, x) > 1e-3);
}
