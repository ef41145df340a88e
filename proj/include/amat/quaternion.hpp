#pragma once

#include <cmath>
#include <complex>
#include <ostream>

namespace amat {

/// Hamilton quaternion q = a + b*i + c*j + d*k with double coefficients.
///
/// Multiplication follows i*j = k, j*k = i, k*i = j, i^2 = j^2 = k^2 = -1.
/// Note the product is noncommutative; code that scales quaternionic
/// vectors must pick a side and stick to it.
struct Quaternion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    constexpr double norm_sq() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }

    Quaternion& operator+=(const Quaternion& o) {
        a += o.a;
        b += o.b;
        c += o.c;
        d += o.d;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        a -= o.a;
        b -= o.b;
        c -= o.c;
        d -= o.d;
        return *this;
    }
    Quaternion& operator*=(double t) {
        a *= t;
        b *= t;
        c *= t;
        d *= t;
        return *this;
    }

    Quaternion inverse() const {
        const double n2 = norm_sq();
        return {a / n2, -b / n2, -c / n2, -d / n2};
    }

    friend constexpr Quaternion operator+(Quaternion p, const Quaternion& q) {
        return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
    }
    friend constexpr Quaternion operator-(Quaternion p, const Quaternion& q) {
        return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
    }

    // Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
                p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
                p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
                p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
    }

    friend constexpr Quaternion operator*(double t, const Quaternion& q) {
        return {t * q.a, t * q.b, t * q.c, t * q.d};
    }
    friend constexpr Quaternion operator*(const Quaternion& q, double t) { return t * q; }

    friend constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << "(" << q.a << " + " << q.b << "i + " << q.c << "j + " << q.d << "k)";
    }
};

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Split q = z + j*w into complex halves, z = a + b*i and w = c - d*i.
/// This is the convention behind the symplectic embedding; see embedding.hpp.
inline std::complex<double> complex_first(const Quaternion& q) { return {q.a, q.b}; }
inline std::complex<double> complex_second(const Quaternion& q) { return {q.c, -q.d}; }

inline Quaternion quat_from_complex_pair(std::complex<double> z, std::complex<double> w) {
    return {z.real(), z.imag(), w.real(), -w.imag()};
}

}  // namespace amat
