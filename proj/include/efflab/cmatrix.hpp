#ifndef EFFLAB_CMATRIX_HPP
#define EFFLAB_CMATRIX_HPP

#include <cassert>
#include <vector>

#include "efflab/common.hpp"

namespace efflab {

// Dense complex matrix, row-major. Sized for desk-scale work (dims <= 64).
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    cplx& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    CMat& operator+=(const CMat& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    CMat& operator*=(cplx s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(CMat a, cplx s) { return a *= s; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }

    friend CMat operator*(const CMat& a, const CMat& b) {
        assert(a.cols_ == b.rows_);
        CMat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

inline CMat adjoint(const CMat& m) {
    CMat r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

inline cplx trace(const CMat& m) {
    cplx t = 0;
    for (int i = 0; i < m.rows() && i < m.cols(); ++i) t += m(i, i);
    return t;
}

inline double fro_norm(const CMat& m) {
    double s = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

inline double max_abs(const CMat& m) {
    double s = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s = std::max(s, std::abs(m(i, j)));
    return s;
}

inline double herm_defect(const CMat& m) {
    if (m.rows() != m.cols()) return 1.0;
    double d = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

inline bool is_hermitian(const CMat& m, double eps = tol().herm) {
    return m.rows() == m.cols() && herm_defect(m) <= eps * std::max(1.0, max_abs(m));
}

// Kronecker product, left factor on the slow index.
inline CMat kron(const CMat& a, const CMat& b) {
    CMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

// Column-stacking vectorisation, used for Choi matrices.
inline CMat vec(const CMat& m) {
    CMat v(m.rows() * m.cols(), 1);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) v(j * m.rows() + i, 0) = m(i, j);
    return v;
}

}  // namespace efflab

#endif  // EFFLAB_CMATRIX_HPP
