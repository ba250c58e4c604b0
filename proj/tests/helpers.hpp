#pragma once

// Shared generators for the property tests: seeded, so failures reproduce.

#include <random>

#include "screw/se3.hpp"
#include "screw/pinv.hpp"

namespace testgen {

using screw::Matrix;
using screw::Rat;
using screw::Twist;
using screw::Vec3;

inline Rat rat(std::mt19937& rng, int lo = -5, int hi = 5, int max_den = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline Matrix<Rat> matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -5,
                          int hi = 5, int max_den = 1) {
    Matrix<Rat> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat(rng, lo, hi, max_den);
    return m;
}

template <class S>
Matrix<S> matrix(std::size_t rows, std::size_t cols, std::initializer_list<S> vals) {
    Matrix<S> m(rows, cols);
    auto it = vals.begin();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

inline Matrix<Rat> full_column_rank_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                           int lo = -5, int hi = 5) {
    for (;;) {
        Matrix<Rat> m = matrix(rng, rows, cols, lo, hi);
        if (screw::rank(m) == cols) return m;
    }
}

inline Matrix<Rat> invertible_matrix(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
    return full_column_rank_matrix(rng, n, n, lo, hi);
}

inline Twist<Rat> twist(std::mt19937& rng, int lo = -5, int hi = 5) {
    return Twist<Rat>(rat(rng, lo, hi, 1), rat(rng, lo, hi, 1), rat(rng, lo, hi, 1),
                      rat(rng, lo, hi, 1), rat(rng, lo, hi, 1), rat(rng, lo, hi, 1));
}

// Zero-pitch twist (a line): random direction and a random point on the axis.
inline Twist<Rat> line(std::mt19937& rng, int lo = -4, int hi = 4) {
    for (;;) {
        Vec3<Rat> dir{rat(rng, lo, hi, 1), rat(rng, lo, hi, 1), rat(rng, lo, hi, 1)};
        if (screw::vec_is_zero(dir)) continue;
        Vec3<Rat> point{rat(rng, lo, hi, 1), rat(rng, lo, hi, 1), rat(rng, lo, hi, 1)};
        return Twist<Rat>(dir, screw::cross(point, dir));
    }
}

// Exact rational rotation via the Cayley transform of a random skew matrix.
inline screw::RigidDisplacement<Rat> rigid(std::mt19937& rng) {
    const Vec3<Rat> axis{rat(rng, -3, 3, 2), rat(rng, -3, 3, 2), rat(rng, -3, 3, 2)};
    const Matrix<Rat> a = screw::skew(axis);
    const Matrix<Rat> i3 = Matrix<Rat>::identity(3);
    const Matrix<Rat> r = (i3 - a) * screw::inverse(i3 + a);
    const Vec3<Rat> t{rat(rng, -4, 4, 2), rat(rng, -4, 4, 2), rat(rng, -4, 4, 2)};
    return screw::RigidDisplacement<Rat>(r, t);
}

inline Matrix<double> to_double(const Matrix<Rat>& m) {
    Matrix<double> d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d(i, j) = screw::ScalarTraits<Rat>::to_double(m(i, j));
    return d;
}

} // namespace testgen
