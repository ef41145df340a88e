#pragma once

// Glue between amat::Matrix and Eigen for the real/complex carriers.
// Quaternionic matrices never reach Eigen directly; they go through the
// symplectic embedding first (see eigensolve.hpp / svd.hpp).

#include <Eigen/Dense>

#include "amat/matrix.hpp"

namespace amat::detail {

template <class S>
struct EigenOf;

template <>
struct EigenOf<double> {
    using type = Eigen::MatrixXd;
};

template <>
struct EigenOf<Cplx> {
    using type = Eigen::MatrixXcd;
};

template <class S>
typename EigenOf<S>::type to_eigen(const Matrix<S>& m) {
    typename EigenOf<S>::type e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

template <class E>
auto from_eigen(const E& e) {
    using S = typename E::Scalar;
    Matrix<S> m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

}  // namespace amat::detail
