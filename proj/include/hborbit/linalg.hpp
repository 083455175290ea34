#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hborbit/real.hpp"

namespace hborbit {

template <class Real>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Real& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Real& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Real> data_;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Real>
Real max_norm(const std::vector<Real>& v) {
    using std::abs;
    Real n(0);
    for (const Real& x : v)
        if (abs(x) > n) n = abs(x);
    return n;
}

// Solves A x = b by Gaussian elimination with partial pivoting (LU, no
// explicit inverse). A pivot below n * eps * max|A| means the matrix is
// singular to working precision; that raises SingularMatrixError.
template <class Real>
std::vector<Real> lu_solve(Matrix<Real> a, std::vector<Real> b) {
    using std::abs;
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("lu_solve: dimensions do not match");

    Real amax(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (abs(a(i, j)) > amax) amax = abs(a(i, j));
    const Real pivot_floor = Real(n) * std::numeric_limits<Real>::epsilon() * amax;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        Real best = abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (abs(a(i, k)) > best) {
                best = abs(a(i, k));
                piv = i;
            }
        }
        if (!(best > pivot_floor))
            throw SingularMatrixError("pivot " + std::to_string(k) + " below conditioning threshold");
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const Real m = a(i, k) / a(k, k);
            if (m == Real(0)) continue;
            b[i] -= m * b[k];
            for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }

    for (int i = n - 1; i >= 0; --i) {
        Real acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= a(i, j) * b[j];
        b[i] = acc / a(i, i);
    }
    return b;
}

}  // namespace hborbit
