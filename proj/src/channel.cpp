#include "efflab/channel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace efflab {

ChannelMap ChannelMap::zero(const BlockSignature& src, const BlockSignature& tgt) {
    return ChannelMap{src, tgt, {}};
}

ChannelMap ChannelMap::identity(const BlockSignature& sig) {
    ChannelMap f{sig, sig, {}};
    for (int b = 0; b < sig.blocks(); ++b)
        f.kraus.push_back({b, b, CMat::identity(sig.dims[b])});
    return f;
}

ChannelMap ChannelMap::make(BlockSignature src, BlockSignature tgt,
                            std::vector<KrausTerm> kraus) {
    for (const auto& t : kraus) {
        if (t.src_block < 0 || t.src_block >= src.blocks() || t.tgt_block < 0 ||
            t.tgt_block >= tgt.blocks())
            throw Error("malformed-channel", "kraus block index out of range");
        if (t.k.rows() != tgt.dims[t.tgt_block] || t.k.cols() != src.dims[t.src_block])
            throw Error("malformed-channel", "kraus matrix shape mismatch");
    }
    ChannelMap f{std::move(src), std::move(tgt), std::move(kraus)};
    const MatrixEffect u = truth_of(f);  // throws if eigenvalues escape [0,1]
    (void)u;
    return f;
}

SelfAdjoint heisenberg(const ChannelMap& f, const SelfAdjoint& p) {
    if (p.sig != f.target) throw Error("signature-mismatch", "predicate not on target");
    SelfAdjoint r = SelfAdjoint::zero(f.source);
    for (const auto& t : f.kraus)
        r.blocks[t.src_block] += adjoint(t.k) * p.blocks[t.tgt_block] * t.k;
    return SelfAdjoint::make(r.sig, r.blocks);
}

SelfAdjoint schroedinger(const ChannelMap& f, const SelfAdjoint& rho) {
    if (rho.sig != f.source) throw Error("signature-mismatch", "state not on source");
    SelfAdjoint r = SelfAdjoint::zero(f.target);
    for (const auto& t : f.kraus)
        r.blocks[t.tgt_block] += t.k * rho.blocks[t.src_block] * adjoint(t.k);
    return SelfAdjoint::make(r.sig, r.blocks);
}

MatrixEffect truth_of(const ChannelMap& f) {
    return MatrixEffect::make(heisenberg(f, SelfAdjoint::identity(f.target)));
}

bool is_total(const ChannelMap& f, double eps) {
    return distance(truth_of(f).m, SelfAdjoint::identity(f.source)) <= eps;
}

ChannelMap compose(const ChannelMap& g, const ChannelMap& f) {
    if (f.target != g.source) throw Error("signature-mismatch", "composition");
    ChannelMap h{f.source, g.target, {}};
    for (const auto& tf : f.kraus)
        for (const auto& tg : g.kraus) {
            if (tf.tgt_block != tg.src_block) continue;
            CMat k = tg.k * tf.k;
            if (fro_norm(k) == 0.0) continue;
            h.kraus.push_back({tf.src_block, tg.tgt_block, std::move(k)});
        }
    return h;
}

std::optional<ChannelMap> ovee_maps(const ChannelMap& f, const ChannelMap& g) {
    if (f.source != g.source || f.target != g.target)
        throw Error("signature-mismatch", "partial sum of maps");
    const SelfAdjoint total = truth_of(f).m + truth_of(g).m;
    if (max_eigenvalue(total) > 1.0 + tol().psd) return std::nullopt;
    ChannelMap h = f;
    h.kraus.insert(h.kraus.end(), g.kraus.begin(), g.kraus.end());
    return h;
}

ChannelMap scale_map(double s, const ChannelMap& f) {
    if (s < 0.0 || s > 1.0 + tol().psd)
        throw Error("invalid-argument", "scalar must lie in [0,1]");
    ChannelMap h = f;
    const double r = std::sqrt(std::max(0.0, s));
    for (auto& t : h.kraus) t.k *= cplx(r, 0.0);
    return h;
}

double choi_distance(const ChannelMap& f, const ChannelMap& g) {
    if (f.source != g.source || f.target != g.target)
        throw Error("signature-mismatch", "choi distance");
    double total = 0;
    for (int i = 0; i < f.source.blocks(); ++i)
        for (int j = 0; j < f.target.blocks(); ++j) {
            const int d = f.source.dims[i] * f.target.dims[j];
            CMat cf(d, d), cg(d, d);
            for (const auto& t : f.kraus)
                if (t.src_block == i && t.tgt_block == j) {
                    const CMat v = vec(t.k);
                    cf += v * adjoint(v);
                }
            for (const auto& t : g.kraus)
                if (t.src_block == i && t.tgt_block == j) {
                    const CMat v = vec(t.k);
                    cg += v * adjoint(v);
                }
            const double n = fro_norm(cf - cg);
            total += n * n;
        }
    return std::sqrt(total);
}

Projection image_of(const ChannelMap& f) {
    SelfAdjoint acc = SelfAdjoint::zero(f.target);
    for (const auto& t : f.kraus) acc.blocks[t.tgt_block] += t.k * adjoint(t.k);
    const SelfAdjoint sym = SelfAdjoint::make(acc.sig, acc.blocks);
    // Support projection: eigenvalues above the sharpness threshold
    // relative to the largest one.
    const double top = std::max(1.0, max_eigenvalue(sym));
    SelfAdjoint proj = SelfAdjoint::zero(f.target);
    for (const auto& c : spectral((1.0 / top) * sym))
        if (c.value > tol().sharp) proj = proj + c.projection;
    return Projection::make(MatrixEffect::make(proj));
}

ChannelMap CoproductObj::inj_left() const {
    ChannelMap f{left, obj, {}};
    for (int b = 0; b < left.blocks(); ++b)
        f.kraus.push_back({b, b, CMat::identity(left.dims[b])});
    return f;
}

ChannelMap CoproductObj::inj_right() const {
    ChannelMap f{right, obj, {}};
    const int off = left.blocks();
    for (int b = 0; b < right.blocks(); ++b)
        f.kraus.push_back({b, off + b, CMat::identity(right.dims[b])});
    return f;
}

ChannelMap CoproductObj::proj_left() const {
    ChannelMap f{obj, left, {}};
    for (int b = 0; b < left.blocks(); ++b)
        f.kraus.push_back({b, b, CMat::identity(left.dims[b])});
    return f;
}

ChannelMap CoproductObj::proj_right() const {
    ChannelMap f{obj, right, {}};
    const int off = left.blocks();
    for (int b = 0; b < right.blocks(); ++b)
        f.kraus.push_back({off + b, b, CMat::identity(right.dims[b])});
    return f;
}

CoproductObj coproduct(const BlockSignature& a, const BlockSignature& b) {
    CoproductObj c;
    c.left = a;
    c.right = b;
    std::vector<int> dims = a.dims;
    dims.insert(dims.end(), b.dims.begin(), b.dims.end());
    c.obj = BlockSignature{dims};
    return c;
}

std::optional<ChannelMap> cotuple(const CoproductObj& c, const ChannelMap& f1,
                                  const ChannelMap& f2) {
    return ovee_maps(compose(c.inj_left(), f1), compose(c.inj_right(), f2));
}

ChannelMap random_channel(const BlockSignature& src, const BlockSignature& tgt, Rng& rng,
                          bool total) {
    ChannelMap f{src, tgt, {}};
    for (int i = 0; i < src.blocks(); ++i)
        for (int j = 0; j < tgt.blocks(); ++j) {
            CMat k(tgt.dims[j], src.dims[i]);
            for (int r = 0; r < k.rows(); ++r)
                for (int cc = 0; cc < k.cols(); ++cc)
                    k(r, cc) = cplx(rng.normal(), rng.normal());
            f.kraus.push_back({i, j, std::move(k)});
        }
    // Normalise f*(1) into the unit interval.
    SelfAdjoint s = SelfAdjoint::zero(src);
    for (const auto& t : f.kraus)
        s.blocks[t.src_block] += adjoint(t.k) * t.k;
    const SelfAdjoint sym = SelfAdjoint::make(s.sig, s.blocks);
    if (total) {
        // Right-multiply blockwise by s^{-1/2}; Gaussian blocks are full
        // rank almost surely, making the result unital exactly.
        const SelfAdjoint isr = pseudo_inv_sqrt(sym, 1e-12);
        for (auto& t : f.kraus) t.k = t.k * isr.blocks[t.src_block];
    } else {
        const double lam = max_eigenvalue(sym);
        const double shrink = rng.uniform(0.3, 0.95);
        const double sc = std::sqrt(shrink / std::max(lam, 1e-12));
        for (auto& t : f.kraus) t.k *= cplx(sc, 0.0);
    }
    return f;
}

}  // namespace efflab
