#include <catch2/catch_amalgamated.hpp>

#include "amat/almost_commuting.hpp"
#include "test_support.hpp"

using namespace amat;

namespace {
constexpr double kPi = 3.14159265358979323846;

template <class S>
std::pair<Projection<S>, Projection<S>> block_pair(double theta) {
    return {validate_projection(block_p<S>()), validate_projection(block_q<S>(theta))};
}
}  // namespace

TEST_CASE("commutator norm of the pi/6 block") {
    const auto [p, q] = block_pair<double>(kPi / 6.0);
    CHECK(commutator_norm(p, q) == Catch::Approx(0.4330127).margin(1e-7));
    CHECK(commutator_norm(p, q) == Catch::Approx(0.5 * std::sin(kPi / 3.0)).margin(1e-14));
    CHECK(commutator_norm(p, p) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("commutator norm matches the canonical angle list") {
    testing::TestRng rng(20240624);
    const std::vector<double> angles = {0.2, 0.55, 1.25};
    const auto [p, q] = testing::make_pair<Cplx>(angles, 1, 1, rng);
    double best = 0.0;
    for (double t : angles) best = std::max(best, 0.5 * std::sin(2.0 * t));
    CHECK(std::abs(commutator_norm(p, q) - best) <= 1e-9);
}

TEST_CASE("max displacement bound closed forms") {
    CHECK(max_displacement_bound(0.0) == 0.0);
    CHECK(max_displacement_bound(0.5) == Catch::Approx(std::sin(kPi / 8.0)).margin(1e-15));
    CHECK(max_displacement_bound(0.5) == Catch::Approx(0.3826834).margin(1e-7));
    // delta = sqrt(3)/4: arcsin(2 delta) = pi/3, bound = sin(pi/12); the
    // nested radical goes 1-4d^2 = 1/4 -> 3/4 -> sqrt(3)/2.
    const double d = std::sqrt(3.0) / 4.0;
    CHECK(max_displacement_bound(d) == Catch::Approx(std::sin(kPi / 12.0)).margin(1e-15));
    CHECK(max_displacement_bound(d) == Catch::Approx(0.2588190).margin(1e-7));
    const double radical = std::sqrt(0.5 - std::sqrt(3.0) / 4.0);
    CHECK(max_displacement_bound(d) == Catch::Approx(radical).margin(1e-15));
    CHECK_THROWS_AS(max_displacement_bound(0.7), DomainError);
    CHECK_THROWS_AS(max_displacement_bound(-0.2), DomainError);
}

TEST_CASE("closed forms agree on a grid and increase monotonically") {
    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double d = 0.5 * i / 10000.0;
        const double arcsin_form = std::sin(0.25 * std::asin(2.0 * d));
        const double radical_form =
            std::sqrt(0.5 - 0.5 * std::sqrt(0.5 + 0.5 * std::sqrt(1.0 - 4.0 * d * d)));
        CHECK(std::abs(arcsin_form - radical_form) <= 1e-12);
        CHECK(max_displacement_bound(d) > prev);
        prev = max_displacement_bound(d);
    }
}

TEST_CASE("sum fix on the pi/6 block snaps Q to P") {
    const auto [p, q] = block_pair<double>(kPi / 6.0);
    const auto fix = sum_fix(p, q);
    // The averaged operator is diag(3/4, 1/4), so Q' = diag(1, 0) = P.
    CHECK((fix.q_fixed.mat - p.mat).frobenius_norm() <= 1e-12);
    CHECK(fix.disp_p == Catch::Approx(0.0).margin(1e-14));
    CHECK(fix.disp_q == Catch::Approx(0.5).margin(1e-9));
    CHECK(fix.bound == Catch::Approx(0.5).margin(1e-12));
    CHECK(std::abs(fix.disp_p + fix.disp_q - fix.bound) <= 1e-8);
    CHECK(fix.relation_residual <= 1e-9);
}

TEST_CASE("sum fix on the pi/3 block snaps Q to I - P") {
    const auto [p, q] = block_pair<double>(kPi / 3.0);
    const auto fix = sum_fix(p, q);
    const MatR expected = MatR::identity(2) - p.mat;
    CHECK((fix.q_fixed.mat - expected).frobenius_norm() <= 1e-12);
    CHECK(fix.disp_q == Catch::Approx(std::cos(kPi / 3.0)).margin(1e-9));
    CHECK(std::abs(fix.disp_p + fix.disp_q - fix.bound) <= 1e-8);
}

TEST_CASE("sum fix keeps commuting inputs") {
    testing::TestRng rng(20240625);
    const auto [p, q] = testing::make_pair<double>({0.0, kHalfPi}, 1, 1, rng);
    const auto fix = sum_fix(p, q);
    CHECK(fix.delta <= 1e-12);
    CHECK(fix.disp_p <= 1e-10);
    CHECK(fix.disp_q <= 1e-10);
    CHECK((fix.q_fixed.mat - q.mat).frobenius_norm() <= 1e-9);
}

TEST_CASE("max fix on the pi/6 block lands on the midpoint") {
    const auto [p, q] = block_pair<double>(kPi / 6.0);
    const auto fix = max_fix(p, q);
    const MatR mid = block_q<double>(kPi / 12.0);
    CHECK((fix.p_fixed.mat - mid).frobenius_norm() <= 1e-12);
    CHECK((fix.q_fixed.mat - mid).frobenius_norm() <= 1e-12);
    CHECK(fix.p_fixed.mat(0, 0) == Catch::Approx(0.9330127).margin(1e-7));
    CHECK(fix.p_fixed.mat(0, 1) == Catch::Approx(0.25).margin(1e-12));
    CHECK(fix.p_fixed.mat(1, 1) == Catch::Approx(0.0669873).margin(1e-7));
    CHECK(fix.disp_p == Catch::Approx(0.2588190).margin(1e-7));
    CHECK(fix.disp_q == Catch::Approx(0.2588190).margin(1e-7));
    CHECK(std::abs(std::max(fix.disp_p, fix.disp_q) - fix.bound) <= 1e-8);
    CHECK(fix.relation_residual <= 1e-9);
}

TEST_CASE("max fix past pi/4 splits into complementary projections") {
    const auto [p, q] = block_pair<double>(kPi / 3.0);
    const auto fix = max_fix(p, q);
    const MatR qprime = block_q<double>(5.0 * kPi / 12.0);
    const MatR pprime = MatR::identity(2) - qprime;
    CHECK((fix.p_fixed.mat - pprime).frobenius_norm() <= 1e-12);
    CHECK((fix.q_fixed.mat - qprime).frobenius_norm() <= 1e-12);
    CHECK(fix.p_fixed.mat(0, 0) == Catch::Approx(0.9330127).margin(1e-7));
    CHECK(fix.p_fixed.mat(0, 1) == Catch::Approx(-0.25).margin(1e-12));
    CHECK(fix.disp_p == Catch::Approx(std::sin(kPi / 12.0)).margin(1e-9));
    CHECK(fix.disp_q == Catch::Approx(std::sin(kPi / 12.0)).margin(1e-9));
    // P'Q' = 0 for the complementary pair.
    CHECK(operator_norm(fix.p_fixed.mat * fix.q_fixed.mat) <= 1e-12);
}

TEST_CASE("degenerate one-dimensional blocks pass through") {
    auto scalar_pair = [](double pv, double qv) {
        MatR pm(1, 1), qm(1, 1);
        pm(0, 0) = pv;
        qm(0, 0) = qv;
        return std::make_pair(validate_projection(pm), validate_projection(qm));
    };
    for (auto [pv, qv] : {std::pair<double, double>{0, 0}, {1, 1}, {1, 0}, {0, 1}}) {
        const auto [p, q] = scalar_pair(pv, qv);
        const auto fix = max_fix(p, q);
        CHECK(fix.p_fixed.mat(0, 0) == Catch::Approx(pv).margin(1e-12));
        CHECK(fix.q_fixed.mat(0, 0) == Catch::Approx(qv).margin(1e-12));
        CHECK(fix.disp_p <= 1e-12);
        CHECK(fix.disp_q <= 1e-12);
        const auto oracle = block_oracle_fix(p, q, FixObjective::Max);
        CHECK(oracle.disp_p <= 1e-12);
        CHECK(oracle.disp_q <= 1e-12);
    }
}

TEST_CASE("max fix refuses delta at one half") {
    const auto [p, q] = block_pair<double>(kPi / 4.0);
    CHECK_THROWS_AS(max_fix(p, q), DeltaTooLarge);
    CHECK_THROWS_AS(block_oracle_fix(p, q, FixObjective::Max), DeltaTooLarge);
}

TEST_CASE("oracle matches max fix on the block examples") {
    for (double theta : {kPi / 6.0, kPi / 3.0}) {
        const auto [p, q] = block_pair<double>(theta);
        const auto direct = max_fix(p, q);
        const auto oracle = block_oracle_fix(p, q, FixObjective::Max);
        CHECK(std::abs(direct.disp_p - oracle.disp_p) <= 1e-8);
        CHECK(std::abs(direct.disp_q - oracle.disp_q) <= 1e-8);
        CHECK(operator_norm(direct.p_fixed.mat - oracle.p_fixed.mat) <= 1e-8);
        CHECK(operator_norm(direct.q_fixed.mat - oracle.q_fixed.mat) <= 1e-8);
    }
}

TEST_CASE("oracle and formulas agree on random pairs over each field") {
    testing::TestRng rng(20240626);
    const std::vector<double> angles = {0.15, 0.6, 0.95, 1.35};

    auto run = [&](auto tag) {
        using S = decltype(tag);
        const auto [p, q] = testing::make_pair<S>(angles, 1, 1, rng);
        const auto direct = max_fix(p, q);
        const auto oracle = block_oracle_fix(p, q, FixObjective::Max);
        CHECK(std::abs(direct.disp_p - oracle.disp_p) <= 1e-8);
        CHECK(std::abs(direct.disp_q - oracle.disp_q) <= 1e-8);
        CHECK(operator_norm(direct.p_fixed.mat - oracle.p_fixed.mat) <= 1e-8);
        CHECK(operator_norm(direct.q_fixed.mat - oracle.q_fixed.mat) <= 1e-8);
        CHECK(std::abs(std::max(direct.disp_p, direct.disp_q) - direct.bound) <= 1e-8);
        CHECK(direct.relation_residual <= 1e-9);

        // Sum objective: the oracle reproduces the spectral construction.
        const auto sum_direct = sum_fix(p, q);
        const auto sum_oracle = block_oracle_fix(p, q, FixObjective::Sum);
        CHECK(operator_norm(sum_direct.q_fixed.mat - sum_oracle.q_fixed.mat) <= 1e-8);
        CHECK(std::abs(sum_direct.disp_p + sum_direct.disp_q - sum_direct.bound) <= 1e-8);
    };
    run(0.0);
    run(Cplx{});
    run(Quat{});
}

TEST_CASE("max fix is equivariant and symmetric under the swap") {
    testing::TestRng rng(20240627);
    const std::vector<double> angles = {0.3, 1.1};
    const auto [p, q] = testing::make_pair<double>(angles, 1, 1, rng);

    // Equivariance under conjugation.
    const MatR w = rng.unitary<double>(p.n());
    const auto pw = validate_projection(w * p.mat * w.adjoint(), 1e-11);
    const auto qw = validate_projection(w * q.mat * w.adjoint(), 1e-11);
    const auto plain = max_fix(p, q);
    const auto conj = max_fix(pw, qw);
    CHECK(operator_norm(conj.p_fixed.mat - w * plain.p_fixed.mat * w.adjoint()) <= 1e-9);
    CHECK(operator_norm(conj.q_fixed.mat - w * plain.q_fixed.mat * w.adjoint()) <= 1e-9);

    // Swapped input (dim P > dim Q) through the oracle path.
    const auto direct = max_fix(q, p);
    const auto oracle = block_oracle_fix(q, p, FixObjective::Max);
    CHECK(operator_norm(direct.p_fixed.mat - oracle.p_fixed.mat) <= 1e-8);
    CHECK(operator_norm(direct.q_fixed.mat - oracle.q_fixed.mat) <= 1e-8);
}

TEST_CASE("the R operator eigenvalues trace the lambda curves") {
    // lambda_1(x) = cos^2(x)(cos(x)/2 + 1/2), lambda_2 its mirror, with
    // the anchor values (2 +- sqrt(2))/8 at pi/4.
    for (int i = 0; i <= 100; ++i) {
        const double x = kHalfPi * i / 100.0;
        const MatR p = block_p<double>();
        const MatR q = block_q<double>(x);
        const MatR r = 0.5 * (p * q * p + q * p * q);
        const auto es = hermitian_eigen(r);
        const double c = std::cos(x);
        const double l1 = c * c * (0.5 * c + 0.5);
        const double l2 = -c * c * (0.5 * c - 0.5);
        CHECK(std::abs(es.eigenvalues[1] - std::max(l1, l2)) <= 1e-12);
        CHECK(std::abs(es.eigenvalues[0] - std::min(l1, l2)) <= 1e-12);
    }
}

TEST_CASE("real pairs processed as complex give the same fix") {
    testing::TestRng rng(20240628);
    const auto [p, q] = testing::make_pair<double>({0.25, 0.8}, 0, 1, rng);
    MatC pc(p.n(), p.n()), qc(p.n(), p.n());
    for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j) {
            pc(i, j) = Cplx{p.mat(i, j), 0.0};
            qc(i, j) = Cplx{q.mat(i, j), 0.0};
        }
    const auto fr = max_fix(p, q);
    const auto fc = max_fix(validate_projection(pc), validate_projection(qc));
    double diff = 0.0;
    for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j)
            diff = std::max(diff,
                            std::abs(Cplx{fr.p_fixed.mat(i, j), 0.0} - fc.p_fixed.mat(i, j)));
    CHECK(diff <= 1e-10);
}

TEST_CASE("quaternionic fixes stay quaternionic") {
    testing::TestRng rng(20240629);
    const auto [p, q] = testing::make_pair<Quat>({0.2, 0.7}, 1, 1, rng);
    const auto fix = max_fix(p, q);
    // Unembedding its own embedding certifies the structure residual.
    CHECK(structure_residual(embed_complex(fix.p_fixed.mat)) <= 1e-10);
    CHECK(fix.relation_residual <= 1e-9);
}
