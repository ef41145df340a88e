#pragma once

#include <complex>
#include <string>

#include "amat/quaternion.hpp"

namespace amat {

using Cplx = std::complex<double>;
using Quat = Quaternion;

/// Which of the three coefficient fields a matrix lives over.
enum class Field { Real, Complex, Quaternion };

inline const char* field_name(Field f) {
    switch (f) {
        case Field::Real: return "R";
        case Field::Complex: return "C";
        case Field::Quaternion: return "H";
    }
    return "?";
}

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr Field field = Field::Real;
    static constexpr int reals_per_entry = 1;
    static double conj(double x) { return x; }
    static double real(double x) { return x; }
    static double abs_sq(double x) { return x * x; }
    static double from_real(double x) { return x; }
};

template <>
struct ScalarTraits<Cplx> {
    static constexpr Field field = Field::Complex;
    static constexpr int reals_per_entry = 2;
    static Cplx conj(const Cplx& x) { return std::conj(x); }
    static double real(const Cplx& x) { return x.real(); }
    static double abs_sq(const Cplx& x) { return x.real() * x.real() + x.imag() * x.imag(); }
    static Cplx from_real(double x) { return {x, 0.0}; }
};

template <>
struct ScalarTraits<Quat> {
    static constexpr Field field = Field::Quaternion;
    static constexpr int reals_per_entry = 4;
    static Quat conj(const Quat& x) { return x.conj(); }
    static double real(const Quat& x) { return x.a; }
    static double abs_sq(const Quat& x) { return x.norm_sq(); }
    static Quat from_real(double x) { return Quat{x}; }
};

template <class S>
inline constexpr Field field_of = ScalarTraits<S>::field;

template <class S>
S scalar_conj(const S& x) {
    return ScalarTraits<S>::conj(x);
}

template <class S>
double scalar_real(const S& x) {
    return ScalarTraits<S>::real(x);
}

template <class S>
double scalar_abs_sq(const S& x) {
    return ScalarTraits<S>::abs_sq(x);
}

template <class S>
double scalar_abs(const S& x) {
    return std::sqrt(ScalarTraits<S>::abs_sq(x));
}

template <class S>
S scalar_from_real(double x) {
    return ScalarTraits<S>::from_real(x);
}

}  // namespace amat
