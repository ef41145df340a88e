#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "amat/canonical.hpp"
#include "amat/projection.hpp"

namespace amat {

/// Deterministic random stream. mt19937_64 is fully specified by the
/// standard; the uniform and normal transforms are written out explicitly
/// so the output never depends on the standard library's distribution
/// implementations. Identical seeds give identical bits.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    /// Decorrelated seed for (seed, index) so parallel trials cannot
    /// interact; splitmix64 scrambling.
    static uint64_t derive(uint64_t seed, uint64_t index) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng stream(uint64_t seed, uint64_t index) { return Rng(derive(seed, index)); }

    double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, k).
    int below(int k) { return std::min(k - 1, static_cast<int>(uniform01() * k)); }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = ((eng_() >> 11) + 1) * 0x1.0p-53;  // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    template <class S>
    S gauss_scalar() {
        if constexpr (field_of<S> == Field::Real) {
            return gauss();
        } else if constexpr (field_of<S> == Field::Complex) {
            const double re = gauss(), im = gauss();
            return Cplx{re, im};
        } else {
            const double a = gauss(), b = gauss(), c = gauss(), d = gauss();
            return Quat{a, b, c, d};
        }
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-style random unitary over the field: modified Gram-Schmidt of an
/// entrywise Gaussian matrix. MGS produces the QR factor with a positive
/// real R-diagonal, which is exactly the phase fix the Haar construction
/// needs.
template <class S>
Matrix<S> haar_unitary(int n, Rng& rng) {
    Matrix<S> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.gauss_scalar<S>();
    orthonormalize_columns(m);
    return m;
}

enum class AnglePolicy { UniformInIC, ExplicitList };

/// Recipe for a random projection pair. With the UniformInIC policy the
/// block angles are drawn from I_C = [0, C] u [pi/2 - C, pi/2] where
/// C = arcsin(2 delta_max)/2, which caps the commutator norm at delta_max;
/// one angle is resampled to land within 0.1% of the cap so the bound is
/// actually exercised. The ExplicitList policy takes the angles (and
/// optionally r, s) verbatim.
struct PairSpec {
    Field field = Field::Real;
    int n = 0;
    double delta_max = 0.0;
    AnglePolicy angle_policy = AnglePolicy::UniformInIC;
    std::vector<double> angles;  // ExplicitList only
    int r = -1;                  // ExplicitList only; -1 draws randomly
    int s = -1;
    uint64_t seed = 0;
};

namespace detail {

inline double commutator_of_angle(double theta) { return 0.5 * std::sin(2.0 * theta); }

}  // namespace detail

/// Seeded random pair with commutator_norm <= delta_max (+rounding).
/// Bit-reproducible for a fixed spec.
template <class S>
std::pair<Projection<S>, Projection<S>> gen_pair(const PairSpec& spec) {
    if (spec.field != field_of<S>) throw InvalidSpec("gen_pair: field tag mismatch");
    if (spec.n <= 0) throw InvalidSpec("gen_pair: n must be positive");
    if (!(spec.delta_max >= 0.0 && spec.delta_max < 0.5))
        throw InvalidSpec("gen_pair: delta_max outside [0, 1/2)");

    Rng rng(spec.seed);
    std::vector<double> angles;
    int r = 0, s = 0;

    if (spec.angle_policy == AnglePolicy::ExplicitList) {
        angles = spec.angles;
        for (double a : angles)
            if (!(a >= 0.0 && a <= kHalfPi))
                throw InvalidSpec("gen_pair: explicit angle outside [0, pi/2]");
        const int j = static_cast<int>(angles.size());
        if (2 * j > spec.n) throw InvalidSpec("gen_pair: too many angles for n");
        if (spec.r >= 0 && spec.s >= 0) {
            r = spec.r;
            s = spec.s;
            if (2 * j + r + s != spec.n) throw InvalidSpec("gen_pair: 2J + r + s != n");
        } else {
            r = rng.below(spec.n - 2 * j + 1);
            s = spec.n - 2 * j - r;
        }
    } else {
        const double cap = 0.5 * std::asin(2.0 * spec.delta_max);
        const int j_max = spec.n / 2;
        const int j = spec.delta_max > 0.0 ? 1 + rng.below(j_max) : rng.below(j_max + 1);
        r = rng.below(spec.n - 2 * j + 1);
        s = spec.n - 2 * j - r;
        angles.resize(j);
        for (double& a : angles) {
            a = cap * rng.uniform01();
            if (rng.uniform01() < 0.5) a = kHalfPi - a;
        }
        if (spec.delta_max > 0.0) {
            // Resample the angle carrying the largest commutator so the
            // pair lands within 0.1% of the cap.
            int best = 0;
            for (int k = 1; k < j; ++k)
                if (detail::commutator_of_angle(angles[k]) >
                    detail::commutator_of_angle(angles[best]))
                    best = k;
            const double target = spec.delta_max * (1.0 - 1e-3 * rng.uniform01());
            double theta = 0.5 * std::asin(2.0 * target);
            if (angles[best] > kHalfPi / 2.0) theta = kHalfPi - theta;  // keep its subinterval
            angles[best] = theta;
        }
    }

    std::sort(angles.begin(), angles.end());
    auto [dp, dq] = canonical_blocks<S>(angles, r, s);
    const Matrix<S> w = haar_unitary<S>(spec.n, rng);
    const Matrix<S> wa = w.adjoint();
    return {validate_projection(w * dp * wa, 1e-12),
            validate_projection(w * dq * wa, 1e-12)};
}

}  // namespace amat
