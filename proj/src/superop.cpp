#include "efflab/superop.hpp"

#include <cmath>
#include <sstream>

namespace efflab {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

std::vector<SelfAdjoint> herm_basis(const BlockSignature& sig) {
    std::vector<SelfAdjoint> basis;
    basis.reserve(sig.herm_dim());
    for (int b = 0; b < sig.blocks(); ++b) {
        const int n = sig.dims[b];
        for (int i = 0; i < n; ++i) {
            SelfAdjoint e = SelfAdjoint::zero(sig);
            e.blocks[b](i, i) = 1.0;
            basis.push_back(std::move(e));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                SelfAdjoint s = SelfAdjoint::zero(sig);
                s.blocks[b](i, j) = kInvSqrt2;
                s.blocks[b](j, i) = kInvSqrt2;
                basis.push_back(std::move(s));
                SelfAdjoint a = SelfAdjoint::zero(sig);
                a.blocks[b](i, j) = cplx(0, -kInvSqrt2);
                a.blocks[b](j, i) = cplx(0, kInvSqrt2);
                basis.push_back(std::move(a));
            }
    }
    return basis;
}

std::vector<double> herm_coords(const SelfAdjoint& a) {
    std::vector<double> x;
    x.reserve(a.sig.herm_dim());
    for (int b = 0; b < a.sig.blocks(); ++b) {
        const CMat& m = a.blocks[b];
        const int n = m.rows();
        for (int i = 0; i < n; ++i) x.push_back(m(i, i).real());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                x.push_back(m(i, j).real() / kInvSqrt2);
                x.push_back(-m(i, j).imag() / kInvSqrt2);
            }
    }
    return x;
}

SelfAdjoint from_herm_coords(const BlockSignature& sig, const std::vector<double>& x) {
    SelfAdjoint a = SelfAdjoint::zero(sig);
    size_t k = 0;
    for (int b = 0; b < sig.blocks(); ++b) {
        CMat& m = a.blocks[b];
        const int n = m.rows();
        for (int i = 0; i < n; ++i) m(i, i) = x[k++];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double re = x[k++] * kInvSqrt2;
                const double im = -x[k++] * kInvSqrt2;
                m(i, j) = cplx(re, im);
                m(j, i) = cplx(re, -im);
            }
    }
    return a;
}

SelfAdjoint SuperOp::apply(const SelfAdjoint& a) const {
    if (a.sig != in) throw Error("signature-mismatch", "superoperator input signature");
    return from_herm_coords(out, m.apply(herm_coords(a)));
}

SuperOp superop_identity(const BlockSignature& sig) {
    return SuperOp{sig, sig, RMat::identity(sig.herm_dim())};
}

SuperOp superop_of(const BlockSignature& in, const BlockSignature& out,
                   const std::function<SelfAdjoint(const SelfAdjoint&)>& f) {
    SuperOp s{in, out, RMat(out.herm_dim(), in.herm_dim())};
    const auto basis = herm_basis(in);
    for (size_t j = 0; j < basis.size(); ++j) {
        const auto y = herm_coords(f(basis[j]));
        for (size_t i = 0; i < y.size(); ++i) s.m(int(i), int(j)) = y[i];
    }
    return s;
}

SuperOp operator*(const SuperOp& a, const SuperOp& b) {
    if (b.out != a.in) throw Error("signature-mismatch", "superoperator composition");
    return SuperOp{b.in, a.out, a.m * b.m};
}

SuperOp operator+(const SuperOp& a, const SuperOp& b) {
    if (a.in != b.in || a.out != b.out)
        throw Error("signature-mismatch", "superoperator sum");
    return SuperOp{a.in, a.out, a.m + b.m};
}

SuperOp operator-(const SuperOp& a, const SuperOp& b) {
    if (a.in != b.in || a.out != b.out)
        throw Error("signature-mismatch", "superoperator difference");
    return SuperOp{a.in, a.out, a.m - b.m};
}

SuperOp operator*(double s, const SuperOp& a) { return SuperOp{a.in, a.out, a.m * s}; }

double distance(const SuperOp& a, const SuperOp& b) {
    if (a.in != b.in || a.out != b.out)
        throw Error("signature-mismatch", "superoperator distance");
    return fro_norm(a.m - b.m);
}

SuperOp expm(const SuperOp& a, double t) {
    if (a.in != a.out) throw Error("invalid-argument", "expm needs an endo-superoperator");
    return SuperOp{a.in, a.out, expm(a.m * t)};
}

SuperOp derivation_operator(const Projection& p) {
    const BlockSignature sig = p.sig();
    const SelfAdjoint pm = p.sa();
    const SelfAdjoint pc = p.complement().p.m;
    return superop_of(sig, sig, [&](const SelfAdjoint& q) {
        return conjugate(pm, q) - conjugate(pc, q);
    });
}

SuperOp mult_operator(const Projection& p) {
    return 0.5 * (superop_identity(p.sig()) + derivation_operator(p));
}

LawReport check_order_derivation(const SuperOp& d, const std::vector<double>& t_samples,
                                 int trials, uint64_t seed) {
    if (d.in != d.out)
        throw Error("invalid-argument", "order derivation check needs an endo-superoperator");
    double tmax = 0;
    for (double t : t_samples) tmax = std::max(tmax, std::abs(t));
    if (tmax * inf_norm(d.m) > 60.0)
        throw Error("exponential-overflow", "|t|*norm exceeds the exponential budget");

    std::ostringstream inst;
    inst << "superop on " << d.in.str() << " trials=" << trials;
    Rng rng(seed, "order-derivation");
    double worst = 0;
    for (double t : t_samples) {
        const SuperOp e = expm(d, t);
        for (int k = 0; k < trials; ++k) {
            SelfAdjoint q = random_density(d.in, rng);
            q = (1.0 / std::max(1e-12, max_eigenvalue(q))) * q;  // unit operator norm
            const double lo = min_eigenvalue(e.apply(q));
            worst = std::max(worst, std::max(0.0, -lo));
            if (lo < -tol().psd) {
                std::ostringstream ce;
                ce << "t=" << t << " trial=" << k << " min-eig=" << lo;
                return law_fail("prop5.16", inst.str(), worst, ce.str());
            }
        }
    }
    return law_pass("prop5.16", inst.str(), worst);
}

}  // namespace efflab
