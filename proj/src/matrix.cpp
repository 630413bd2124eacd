#include "targetctl/matrix.hpp"

#include "targetctl/errors.hpp"

#include <Eigen/Core>
#include <Eigen/SVD>

#include <algorithm>

namespace targetctl {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) {
        throw InternalError("negative matrix dimension");
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw InternalError("matrix shape mismatch in multiply");
    }
    RatMatrix out(rows_, rhs.cols_);
    Rational term;
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) {
                continue;
            }
            for (int j = 0; j < rhs.cols_; ++j) {
                term = aik * rhs.at(k, j);
                out.at(i, j) += term;
            }
        }
    }
    return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) {
        throw InternalError("negative matrix dimension");
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw InternalError("matrix shape mismatch in multiply");
    }
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) {
                continue;
            }
            for (int j = 0; j < rhs.cols_; ++j) {
                mpz_addmul(out.at(i, j).get_mpz_t(), aik.get_mpz_t(), rhs.at(k, j).get_mpz_t());
            }
        }
    }
    return out;
}

std::pair<IntMatrix, BigInt> clear_denominators(const RatMatrix& x) {
    BigInt scale = 1;
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.at(i, j).get_den().get_mpz_t());
        }
    }
    IntMatrix m(x.rows(), x.cols());
    BigInt factor;
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j) {
            const Rational& q = x.at(i, j);
            mpz_divexact(factor.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t());
            m.at(i, j) = q.get_num() * factor;
        }
    }
    return {std::move(m), std::move(scale)};
}

int rank_exact(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows();
    const int cols = a.cols();
    BigInt prev = 1;
    BigInt tmp;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        if (pivot != rank) {
            for (int j = col; j < cols; ++j) {
                std::swap(a.at(rank, j), a.at(pivot, j));
            }
        }
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                tmp = a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    return rank;
}

int rank_exact(const RatMatrix& m) {
    // Row scaling by the per-row denominator lcm preserves rank and keeps
    // the Bareiss intermediates small.
    IntMatrix a(m.rows(), m.cols());
    BigInt row_scale;
    BigInt factor;
    for (int i = 0; i < m.rows(); ++i) {
        row_scale = 1;
        for (int j = 0; j < m.cols(); ++j) {
            mpz_lcm(row_scale.get_mpz_t(), row_scale.get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            mpz_divexact(factor.get_mpz_t(), row_scale.get_mpz_t(), q.get_den().get_mpz_t());
            a.at(i, j) = q.get_num() * factor;
        }
    }
    return rank_exact(a);
}

int rank_float(const RatMatrix& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            a(i, j) = m.at(i, j).get_d();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    const double cutoff = rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

} // namespace targetctl
