#include "efflab/rmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "efflab/eigen.hpp"

namespace efflab {

double inf_norm(const RMat& m) {
    double best = 0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0;
        for (int j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

double fro_norm(const RMat& m) {
    double s = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

double symmetry_defect(const RMat& m) {
    if (m.rows() != m.cols()) return 1.0;
    double d = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - m(j, i)));
    return d;
}

RMat lu_solve(RMat a, RMat b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw Error("invalid-argument", "lu_solve: dimension mismatch");
    const int n = a.rows();
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (std::abs(a(p, k)) < 1e-300)
            throw Error("singular-matrix", "lu_solve: singular system");
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(p, j));
        }
        for (int i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (int j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        for (int j = 0; j < b.cols(); ++j) {
            double s = b(k, j);
            for (int i = k + 1; i < n; ++i) s -= a(k, i) * b(i, j);
            b(k, j) = s / a(k, k);
        }
    }
    return b;
}

namespace {

RMat expm_symmetric(const RMat& a) {
    const int n = a.rows();
    CMat h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + a(j, i));
    const EigenSys es = eigen_hermitian(h);
    RMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < n; ++k)
                s += es.vectors(i, k).real() * std::exp(es.values[k]) *
                     es.vectors(j, k).real();
            // Real-symmetric input has real eigenvectors up to phase; the
            // canonical phase fix makes them real, imaginary dust ignored.
            out(i, j) = s;
        }
    return out;
}

RMat expm_pade6(RMat a) {
    // [6/6] Pade coefficients.
    static const double b[7] = {1.0,       1.0 / 2.0,     5.0 / 44.0, 1.0 / 66.0,
                                1.0 / 792, 1.0 / 15840.0, 1.0 / 665280.0};
    const int n = a.rows();
    int squarings = 0;
    double nrm = inf_norm(a);
    const double theta = 0.5;
    if (nrm > theta) {
        squarings = int(std::ceil(std::log2(nrm / theta)));
        a *= std::ldexp(1.0, -squarings);
    }
    const RMat a2 = a * a;
    const RMat a4 = a2 * a2;
    const RMat a6 = a2 * a4;
    RMat even = RMat::identity(n) * b[0] + a2 * b[2] + a4 * b[4] + a6 * b[6];
    RMat odd_core = RMat::identity(n) * b[1] + a2 * b[3] + a4 * b[5];
    RMat odd = a * odd_core;
    RMat r = lu_solve(even - odd, even + odd);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

}  // namespace

RMat expm(const RMat& a) {
    if (a.rows() != a.cols()) throw Error("invalid-argument", "expm: matrix not square");
    if (a.rows() == 0) return a;
    const double scale = std::max(1.0, fro_norm(a));
    if (symmetry_defect(a) <= 1e-10 * scale) return expm_symmetric(a);
    return expm_pade6(a);
}

}  // namespace efflab
