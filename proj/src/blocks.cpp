#include "efflab/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "efflab/eigen.hpp"

namespace efflab {

BlockSignature::BlockSignature(std::vector<int> d) : dims(std::move(d)) {
    for (int n : dims)
        if (n <= 0) throw Error("invalid-argument", "block dimensions must be positive");
}

int BlockSignature::total_dim() const {
    int t = 0;
    for (int n : dims) t += n;
    return t;
}

int BlockSignature::herm_dim() const {
    int t = 0;
    for (int n : dims) t += n * n;
    return t;
}

std::string BlockSignature::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ',';
        os << dims[i];
    }
    os << ']';
    return os.str();
}

SelfAdjoint SelfAdjoint::zero(const BlockSignature& sig) {
    SelfAdjoint a;
    a.sig = sig;
    for (int n : sig.dims) a.blocks.emplace_back(n, n);
    return a;
}

SelfAdjoint SelfAdjoint::identity(const BlockSignature& sig) {
    SelfAdjoint a;
    a.sig = sig;
    for (int n : sig.dims) a.blocks.push_back(CMat::identity(n));
    return a;
}

SelfAdjoint SelfAdjoint::make(BlockSignature sig, std::vector<CMat> blocks) {
    if (sig.blocks() != int(blocks.size()))
        throw Error("invalid-argument", "block count does not match signature");
    for (int i = 0; i < sig.blocks(); ++i) {
        const CMat& b = blocks[i];
        if (b.rows() != sig.dims[i] || b.cols() != sig.dims[i])
            throw Error("invalid-argument", "block shape does not match signature");
        if (!is_hermitian(b))
            throw Error("not-hermitian", "block fails the Hermiticity tolerance");
    }
    SelfAdjoint a;
    a.sig = std::move(sig);
    a.blocks = std::move(blocks);
    // Symmetrise exactly; downstream spectral code assumes clean input.
    for (auto& b : a.blocks)
        for (int i = 0; i < b.rows(); ++i) {
            b(i, i) = b(i, i).real();
            for (int j = i + 1; j < b.cols(); ++j) {
                const cplx m = 0.5 * (b(i, j) + std::conj(b(j, i)));
                b(i, j) = m;
                b(j, i) = std::conj(m);
            }
        }
    return a;
}

static void check_same_sig(const SelfAdjoint& a, const SelfAdjoint& b) {
    if (a.sig != b.sig) throw Error("signature-mismatch", "block signatures differ");
}

SelfAdjoint operator+(const SelfAdjoint& a, const SelfAdjoint& b) {
    check_same_sig(a, b);
    SelfAdjoint r = a;
    for (size_t i = 0; i < r.blocks.size(); ++i) r.blocks[i] += b.blocks[i];
    return r;
}

SelfAdjoint operator-(const SelfAdjoint& a, const SelfAdjoint& b) {
    check_same_sig(a, b);
    SelfAdjoint r = a;
    for (size_t i = 0; i < r.blocks.size(); ++i) r.blocks[i] -= b.blocks[i];
    return r;
}

SelfAdjoint operator*(double s, const SelfAdjoint& a) {
    SelfAdjoint r = a;
    for (auto& b : r.blocks) b *= cplx(s, 0.0);
    return r;
}

double fro_norm(const SelfAdjoint& a) {
    double s = 0;
    for (const auto& b : a.blocks) {
        const double f = fro_norm(b);
        s += f * f;
    }
    return std::sqrt(s);
}

double max_abs(const SelfAdjoint& a) {
    double s = 0;
    for (const auto& b : a.blocks) s = std::max(s, max_abs(b));
    return s;
}

double trace_real(const SelfAdjoint& a) {
    double s = 0;
    for (const auto& b : a.blocks) s += trace(b).real();
    return s;
}

double inner(const SelfAdjoint& a, const SelfAdjoint& b) {
    check_same_sig(a, b);
    double s = 0;
    for (size_t i = 0; i < a.blocks.size(); ++i) s += trace(a.blocks[i] * b.blocks[i]).real();
    return s;
}

double distance(const SelfAdjoint& a, const SelfAdjoint& b) {
    check_same_sig(a, b);
    double s = 0;
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        const double f = fro_norm(a.blocks[i] - b.blocks[i]);
        s += f * f;
    }
    return std::sqrt(s);
}

std::vector<CMat> raw_mul(const SelfAdjoint& a, const SelfAdjoint& b) {
    check_same_sig(a, b);
    std::vector<CMat> r;
    r.reserve(a.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) r.push_back(a.blocks[i] * b.blocks[i]);
    return r;
}

SelfAdjoint conjugate(const SelfAdjoint& a, const SelfAdjoint& q) {
    check_same_sig(a, q);
    SelfAdjoint r = SelfAdjoint::zero(a.sig);
    for (size_t i = 0; i < a.blocks.size(); ++i)
        r.blocks[i] = a.blocks[i] * q.blocks[i] * a.blocks[i];
    return SelfAdjoint::make(r.sig, r.blocks);
}

MatrixEffect MatrixEffect::make(SelfAdjoint a) {
    const auto comps = spectral(a);
    bool needs_clamp = false;
    for (const auto& c : comps) {
        if (c.value < -tol().psd || c.value > 1.0 + tol().psd)
            throw Error("not-an-effect", "eigenvalue outside [0,1] beyond tolerance");
        if (c.value < 0.0 || c.value > 1.0) needs_clamp = true;
    }
    MatrixEffect e;
    if (!needs_clamp) {
        e.m = std::move(a);
        return e;
    }
    SelfAdjoint clamped = SelfAdjoint::zero(a.sig);
    for (const auto& c : comps) {
        const double v = std::clamp(c.value, 0.0, 1.0);
        if (v != 0.0) clamped = clamped + v * c.projection;
    }
    e.m = std::move(clamped);
    return e;
}

MatrixEffect MatrixEffect::zero(const BlockSignature& sig) {
    MatrixEffect e;
    e.m = SelfAdjoint::zero(sig);
    return e;
}

MatrixEffect MatrixEffect::one(const BlockSignature& sig) {
    MatrixEffect e;
    e.m = SelfAdjoint::identity(sig);
    return e;
}

MatrixEffect MatrixEffect::complement() const {
    MatrixEffect e;
    e.m = SelfAdjoint::identity(m.sig) - m;
    return e;
}

Projection Projection::make(MatrixEffect e) {
    for (size_t i = 0; i < e.m.blocks.size(); ++i) {
        const CMat& b = e.m.blocks[i];
        if (fro_norm(b * b - b) > tol().idem * std::max(1.0, fro_norm(b)))
            throw Error("not-sharp", "effect is not idempotent within tolerance");
    }
    Projection p;
    p.p = std::move(e);
    return p;
}

Projection Projection::complement() const { return Projection::make(p.complement()); }

int Projection::rank_in_block(int b) const {
    const double t = trace(p.m.blocks[b]).real();
    return int(std::lround(t));
}

std::vector<int> Projection::ranks() const {
    std::vector<int> r;
    for (int b = 0; b < sig().blocks(); ++b) r.push_back(rank_in_block(b));
    return r;
}

std::vector<SpectralComponent> spectral(const SelfAdjoint& a) {
    struct Item {
        double value;
        int block;
        int col;
    };
    std::vector<Item> items;
    std::vector<EigenSys> sys;
    sys.reserve(a.blocks.size());
    for (int b = 0; b < int(a.blocks.size()); ++b) {
        sys.push_back(eigen_hermitian(a.blocks[b]));
        for (int j = 0; j < a.sig.dims[b]; ++j) items.push_back({sys[b].values[j], b, j});
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& x, const Item& y) { return x.value > y.value; });

    std::vector<SpectralComponent> out;
    size_t i = 0;
    while (i < items.size()) {
        size_t j = i;
        // Chain-cluster eigenvalues closer than the cluster width.
        while (j + 1 < items.size() && items[j].value - items[j + 1].value <= tol().cluster)
            ++j;
        SpectralComponent comp;
        comp.projection = SelfAdjoint::zero(a.sig);
        double vsum = 0;
        for (size_t k = i; k <= j; ++k) {
            const auto& it = items[k];
            CMat& blk = comp.projection.blocks[it.block];
            const CMat& v = sys[it.block].vectors;
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c)
                    blk(r, c) += v(r, it.col) * std::conj(v(c, it.col));
            vsum += it.value;
            comp.rank++;
        }
        comp.value = vsum / comp.rank;
        out.push_back(std::move(comp));
        i = j + 1;
    }
    return out;
}

SelfAdjoint apply_spectral(const SelfAdjoint& a, const std::function<double(double)>& f) {
    SelfAdjoint r = SelfAdjoint::zero(a.sig);
    for (const auto& c : spectral(a)) {
        const double v = f(c.value);
        if (v != 0.0) r = r + v * c.projection;
    }
    return r;
}

double min_eigenvalue(const SelfAdjoint& a) {
    double m = a.blocks.empty() ? 0.0 : 1e300;
    for (const auto& b : a.blocks) {
        const auto es = eigen_hermitian(b);
        if (!es.values.empty()) m = std::min(m, es.values.back());
    }
    return a.blocks.empty() ? 0.0 : m;
}

double max_eigenvalue(const SelfAdjoint& a) {
    double m = a.blocks.empty() ? 0.0 : -1e300;
    for (const auto& b : a.blocks) {
        const auto es = eigen_hermitian(b);
        if (!es.values.empty()) m = std::max(m, es.values.front());
    }
    return a.blocks.empty() ? 0.0 : m;
}

double op_distance(const SelfAdjoint& a, const SelfAdjoint& b) {
    const SelfAdjoint d = a - b;
    return std::max(std::abs(min_eigenvalue(d)), std::abs(max_eigenvalue(d)));
}

MatrixEffect sqrt_effect(const MatrixEffect& p) {
    // Rounding dust in the spectrum must not survive the root: sqrt would
    // amplify O(1e-16) noise above the support threshold. The cut is
    // relative and far below any genuine eigenvalue the samplers produce.
    const double cut = 1e-13 * std::max(1.0, max_eigenvalue(p.m));
    MatrixEffect e;
    e.m = apply_spectral(p.m, [cut](double v) { return v > cut ? std::sqrt(v) : 0.0; });
    return e;
}

SelfAdjoint pseudo_inv_sqrt(const SelfAdjoint& psd, double rank_cut) {
    return apply_spectral(psd, [rank_cut](double v) {
        return v > rank_cut ? 1.0 / std::sqrt(v) : 0.0;
    });
}

Projection effect_floor(const MatrixEffect& p) {
    SelfAdjoint f = SelfAdjoint::zero(p.sig());
    for (const auto& c : spectral(p.m))
        if (c.value >= 1.0 - tol().sharp) f = f + c.projection;
    return Projection::make(MatrixEffect::make(f));
}

Projection effect_ceil(const MatrixEffect& p) {
    SelfAdjoint f = SelfAdjoint::zero(p.sig());
    for (const auto& c : spectral(p.m))
        if (c.value > tol().sharp) f = f + c.projection;
    return Projection::make(MatrixEffect::make(f));
}

SelfAdjoint jordan_product(const SelfAdjoint& a, const SelfAdjoint& b) {
    check_same_sig(a, b);
    SelfAdjoint r = SelfAdjoint::zero(a.sig);
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        const CMat ab = a.blocks[i] * b.blocks[i];
        r.blocks[i] = 0.5 * (ab + adjoint(ab));
    }
    return r;
}

SelfAdjoint quadratic(const SelfAdjoint& a, const SelfAdjoint& b) {
    const SelfAdjoint ab = jordan_product(a, b);
    const SelfAdjoint aa = jordan_product(a, a);
    return 2.0 * jordan_product(a, ab) - jordan_product(aa, b);
}

SelfAdjoint triple(const SelfAdjoint& a, const SelfAdjoint& b, const SelfAdjoint& c) {
    // Polarisation of the quadratic map: symmetric and bilinear in (a, b),
    // collapsing to quadratic(a, c) at b = a.
    return jordan_product(a, jordan_product(b, c)) +
           jordan_product(b, jordan_product(a, c)) -
           jordan_product(jordan_product(a, b), c);
}

MatrixEffect seq_product(const MatrixEffect& p, const MatrixEffect& q) {
    const MatrixEffect rt = sqrt_effect(p);
    return MatrixEffect::make(quadratic(rt.m, q.m));
}

bool effect_leq(const SelfAdjoint& p, const SelfAdjoint& q, double eps) {
    return min_eigenvalue(q - p) >= -eps;
}

SelfAdjoint random_self_adjoint(const BlockSignature& sig, Rng& rng) {
    SelfAdjoint a = SelfAdjoint::zero(sig);
    for (auto& b : a.blocks) {
        const int n = b.rows();
        CMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
        const CMat h = 0.5 * (g + adjoint(g));
        b = h;
    }
    return SelfAdjoint::make(a.sig, a.blocks);
}

MatrixEffect random_effect(const BlockSignature& sig, Rng& rng) {
    // Affinely rescale the spectrum into a random subinterval of [0,1].
    // Generic draws stay strictly inside the interval so spectra remain
    // numerically identifiable; exact 0/1 clusters are exercised by the
    // structured samplers of the law suites.
    const SelfAdjoint h = random_self_adjoint(sig, rng);
    const double lo = min_eigenvalue(h), hi = max_eigenvalue(h);
    const double a = rng.uniform(0.02, 0.45), b = rng.uniform(0.55, 0.98);
    const double span = hi - lo;
    SelfAdjoint scaled;
    if (span < 1e-12) {
        scaled = 0.5 * (a + b) * SelfAdjoint::identity(sig);
    } else {
        scaled = ((b - a) / span) * (h - lo * SelfAdjoint::identity(sig)) +
                 a * SelfAdjoint::identity(sig);
    }
    return MatrixEffect::make(scaled);
}

Projection random_projection(const BlockSignature& sig, Rng& rng) {
    // Threshold a random Hermitian spectrum at its median.
    const SelfAdjoint h = random_self_adjoint(sig, rng);
    std::vector<double> vals;
    for (const auto& c : spectral(h))
        for (int k = 0; k < c.rank; ++k) vals.push_back(c.value);
    std::sort(vals.begin(), vals.end());
    const double cut = vals[vals.size() / 2];
    SelfAdjoint proj = SelfAdjoint::zero(sig);
    for (const auto& c : spectral(h))
        if (c.value >= cut) proj = proj + c.projection;
    return Projection::make(MatrixEffect::make(proj));
}

SelfAdjoint random_density(const BlockSignature& sig, Rng& rng) {
    SelfAdjoint a = SelfAdjoint::zero(sig);
    for (auto& b : a.blocks) {
        const int n = b.rows();
        CMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
        b = g * adjoint(g);
    }
    const double t = trace_real(a);
    return (1.0 / t) * a;
}

CMat random_unitary(int n, Rng& rng) {
    // Gram-Schmidt on a Gaussian matrix.
    CMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx dot = 0;
            for (int i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
            for (int i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
        }
        double nrm = 0;
        for (int i = 0; i < n; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) g(i, j) /= nrm;
    }
    return g;
}

}  // namespace efflab
