#include <catch2/catch_amalgamated.hpp>

#include "amat/quaternion.hpp"
#include "test_support.hpp"

using namespace amat;

TEST_CASE("Hamilton relations") {
    const Quat i = Quat::unit_i(), j = Quat::unit_j(), k = Quat::unit_k();
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == Quat{-1.0});
    CHECK(j * j == Quat{-1.0});
    CHECK(k * k == Quat{-1.0});
    CHECK(j * i == -k);
}

TEST_CASE("conjugate pair (1+i)(1-i) = 2") {
    const Quat p{1.0, 1.0, 0.0, 0.0};
    const Quat q{1.0, -1.0, 0.0, 0.0};
    CHECK(p * q == Quat{2.0});
}

TEST_CASE("norm is multiplicative on random pairs") {
    testing::TestRng rng(20240601);
    for (int t = 0; t < 100; ++t) {
        const Quat p = rng.scalar<Quat>();
        const Quat q = rng.scalar<Quat>();
        CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) <= 1e-14 * (1.0 + p.norm() * q.norm()));
    }
}

TEST_CASE("conj is an antihomomorphism and q conj(q) is real") {
    testing::TestRng rng(7);
    for (int t = 0; t < 50; ++t) {
        const Quat p = rng.scalar<Quat>();
        const Quat q = rng.scalar<Quat>();
        const Quat lhs = (p * q).conj();
        const Quat rhs = q.conj() * p.conj();
        CHECK((lhs - rhs).norm() <= 1e-14 * (1.0 + lhs.norm()));
        const Quat nq = q.conj() * q;
        CHECK(std::abs(nq.a - q.norm_sq()) <= 1e-14 * (1.0 + q.norm_sq()));
        CHECK(std::abs(nq.b) + std::abs(nq.c) + std::abs(nq.d) <= 1e-14 * (1.0 + q.norm_sq()));
    }
}

TEST_CASE("associativity on random triples") {
    testing::TestRng rng(99);
    for (int t = 0; t < 50; ++t) {
        const Quat p = rng.scalar<Quat>(), q = rng.scalar<Quat>(), r = rng.scalar<Quat>();
        const Quat lhs = (p * q) * r, rhs = p * (q * r);
        CHECK((lhs - rhs).norm() <= 1e-13 * (1.0 + lhs.norm()));
    }
}

TEST_CASE("complex pair split round trips") {
    testing::TestRng rng(123);
    for (int t = 0; t < 20; ++t) {
        const Quat q = rng.scalar<Quat>();
        CHECK(quat_from_complex_pair(complex_first(q), complex_second(q)) == q);
    }
}
