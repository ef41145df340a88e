#include <catch2/catch_amalgamated.hpp>

#include "amat/matrix.hpp"
#include "test_support.hpp"

using namespace amat;

TEST_CASE("identity is neutral") {
    testing::TestRng rng(1);
    const MatH a = rng.matrix<Quat>(3, 3);
    const MatH ai = a * MatH::identity(3);
    CHECK((ai - a).frobenius_norm() == 0.0);
}

TEST_CASE("1x1 quaternionic products follow the Hamilton table") {
    MatH i(1, 1), j(1, 1);
    i(0, 0) = Quat::unit_i();
    j(0, 0) = Quat::unit_j();
    CHECK(((i * j)(0, 0) == Quat::unit_k()));
    CHECK(((j * i)(0, 0) == -Quat::unit_k()));
}

TEST_CASE("(AB)* = B*A* over the quaternions") {
    testing::TestRng rng(20240602);
    for (int t = 0; t < 10; ++t) {
        const MatH a = rng.matrix<Quat>(3, 3);
        const MatH b = rng.matrix<Quat>(3, 3);
        const MatH lhs = (a * b).adjoint();
        const MatH rhs = b.adjoint() * a.adjoint();
        CHECK((lhs - rhs).frobenius_norm() <= 1e-13 * (1.0 + lhs.frobenius_norm()));
    }
}

TEST_CASE("adjoint is an involution") {
    testing::TestRng rng(5);
    const MatC m = rng.matrix<Cplx>(4, 2);
    CHECK((m.adjoint().adjoint() - m).frobenius_norm() == 0.0);
}

TEST_CASE("dimension mismatch throws") {
    const MatR a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionMismatch);
    CHECK_THROWS_AS(a + MatR(3, 2), DimensionMismatch);
}

TEST_CASE("orthonormalize_columns produces a unitary") {
    testing::TestRng rng(77);
    MatH m = rng.matrix<Quat>(6, 6);
    orthonormalize_columns(m);
    const MatH gram = m.adjoint() * m;
    CHECK((gram - MatH::identity(6)).frobenius_norm() <= 1e-13);
}
