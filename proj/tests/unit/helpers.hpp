#pragma once

#include <cmath>
#include <initializer_list>
#include <numbers>

#include "symbidisc/numerics.hpp"

namespace testing {

using symbidisc::cplx;
using symbidisc::Matrix;

inline Matrix mat(std::initializer_list<std::initializer_list<cplx>> rows)
{
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (const cplx& v : row) {
            m(r, c++) = v;
        }
        ++r;
    }
    return m;
}

inline Matrix scalar(cplx v)
{
    return Matrix::Constant(1, 1, v);
}

// Brute-force numerical radius on a dense angular grid.
inline double dense_numerical_radius(const Matrix& a, int points = 100000)
{
    double best = 0.0;
    for (int k = 0; k < points; ++k) {
        const cplx u = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
        const Matrix h = 0.5 * (u * a + std::conj(u) * a.adjoint());
        best = std::max(best, symbidisc::lambda_max(h));
    }
    return best;
}

}  // namespace testing
