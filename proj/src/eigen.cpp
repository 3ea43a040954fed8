#include "efflab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace efflab {

namespace {

double offdiag_norm(const CMat& a) {
    double s = 0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation is a diagonal
// phase absorbing arg(a_pq) followed by a real Givens rotation.
void rotate(CMat& a, CMat& v, int p, int q) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cplx phase = apq / mag;  // a_pq = mag * phase

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    double t;
    if (tau >= 0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Plane transform G: G_pp = c, G_pq = s, G_qp = -s*conj(phase), G_qq = c*conj(phase).
    const cplx gqp = -s * std::conj(phase);
    const cplx gqq = c * std::conj(phase);

    const int n = a.rows();
    // A <- A * G (columns p and q).
    for (int k = 0; k < n; ++k) {
        const cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + gqp * akq;
        a(k, q) = s * akp + gqq * akq;
    }
    // A <- G^dagger * A (rows p and q).
    for (int k = 0; k < n; ++k) {
        const cplx apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + std::conj(gqp) * aqk;
        a(q, k) = s * apk + std::conj(gqq) * aqk;
    }
    // Exact annihilation of the target entry and realification of the diagonal.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;

    // V <- V * G.
    for (int k = 0; k < n; ++k) {
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + gqp * vkq;
        v(k, q) = s * vkp + gqq * vkq;
    }
}

// Canonical phase: make the largest-modulus component real and positive.
void fix_phase(CMat& v, int col) {
    int best = 0;
    double bestmag = -1;
    for (int i = 0; i < v.rows(); ++i) {
        const double m = std::abs(v(i, col));
        if (m > bestmag + 1e-12) {
            bestmag = m;
            best = i;
        }
    }
    if (bestmag <= 0) return;
    const cplx ph = v(best, col) / std::abs(v(best, col));
    for (int i = 0; i < v.rows(); ++i) v(i, col) /= ph;
}

}  // namespace

EigenSys eigen_hermitian(const CMat& input) {
    if (input.rows() != input.cols())
        throw Error("invalid-argument", "eigen_hermitian: matrix not square");
    if (herm_defect(input) > tol().herm * std::max(1.0, max_abs(input)))
        throw Error("invalid-argument", "eigen_hermitian: matrix not Hermitian");

    const int n = input.rows();
    CMat a = input;
    // Symmetrise exactly so rounding in the input cannot bias the sweeps.
    for (int i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    CMat v = CMat::identity(n);

    const double target = kJacobiOffTarget * std::max(1.0, fro_norm(a));
    bool converged = n <= 1 || offdiag_norm(a) <= target;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 0.0) rotate(a, v, p, q);
        converged = offdiag_norm(a) <= target;
    }
    if (!converged)
        throw Error("eigensolver-nonconvergence", "Jacobi sweep cap exceeded");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int j = 0; j < n; ++j) fix_phase(v, j);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        const double di = a(i, i).real(), dj = a(j, j).real();
        if (di != dj) return di > dj;
        for (int k = 0; k < n; ++k) {  // deterministic tie-break
            const cplx x = v(k, i), y = v(k, j);
            if (x.real() != y.real()) return x.real() > y.real();
            if (x.imag() != y.imag()) return x.imag() > y.imag();
        }
        return false;
    });

    EigenSys out;
    out.values.resize(n);
    out.vectors = CMat(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace efflab
