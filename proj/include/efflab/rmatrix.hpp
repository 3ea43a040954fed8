#ifndef EFFLAB_RMATRIX_HPP
#define EFFLAB_RMATRIX_HPP

#include <cassert>
#include <vector>

#include "efflab/common.hpp"

namespace efflab {

// Dense real matrix used for superoperators acting on the real vector space
// of Hermitian block tuples.
class RMat {
public:
    RMat() = default;
    RMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static RMat identity(int n) {
        RMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const double& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    RMat& operator+=(const RMat& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    RMat& operator-=(const RMat& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    RMat& operator*=(double s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend RMat operator+(RMat a, const RMat& b) { return a += b; }
    friend RMat operator-(RMat a, const RMat& b) { return a -= b; }
    friend RMat operator*(RMat a, double s) { return a *= s; }
    friend RMat operator*(double s, RMat a) { return a *= s; }

    friend RMat operator*(const RMat& a, const RMat& b) {
        assert(a.cols_ == b.rows_);
        RMat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        assert(int(x.size()) == cols_);
        std::vector<double> y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            double s = 0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

double inf_norm(const RMat& m);
double fro_norm(const RMat& m);
double symmetry_defect(const RMat& m);

// Solves a X = b by LU with partial pivoting. Throws on (near-)singularity.
RMat lu_solve(RMat a, RMat b);

// Matrix exponential: eigendecomposition for symmetric input, otherwise
// Pade degree 6 with scaling and squaring.
RMat expm(const RMat& a);

}  // namespace efflab

#endif  // EFFLAB_RMATRIX_HPP
