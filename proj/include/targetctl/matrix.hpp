#pragma once

#include "targetctl/rational.hpp"

#include <utility>
#include <vector>

namespace targetctl {

/// Dense matrix over the rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& rhs) const;
    bool operator==(const RatMatrix& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Dense matrix over the integers, row-major. Internal workhorse: matrix
/// powers and rank computations run here after denominators are cleared.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

/// M = c * X with integer M and positive integer c (the lcm of all entry
/// denominators). Scalar multiples preserve zero patterns of every power
/// and the rank of every block assembled from powers.
std::pair<IntMatrix, BigInt> clear_denominators(const RatMatrix& x);

/// Exact rank via fraction-free Bareiss elimination.
int rank_exact(const IntMatrix& m);
int rank_exact(const RatMatrix& m);

/// Floating-point rank via SVD, for cross-checking the exact kernel.
/// Singular values below rel_tol times the largest count as zero.
int rank_float(const RatMatrix& m, double rel_tol = 1e-8);

} // namespace targetctl
