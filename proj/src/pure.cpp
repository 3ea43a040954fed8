#include "efflab/pure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "efflab/eigen.hpp"

namespace efflab {

PureMap PureMap::zero(const BlockSignature& src, const BlockSignature& tgt) {
    return PureMap{src, tgt, {}};
}

PureMap PureMap::identity(const BlockSignature& sig) {
    PureMap f{sig, sig, {}};
    for (int b = 0; b < sig.blocks(); ++b)
        f.terms.push_back({b, b, CMat::identity(sig.dims[b])});
    return f;
}

PureMap PureMap::make(BlockSignature src, BlockSignature tgt, std::vector<KrausTerm> terms) {
    std::set<int> used_src, used_tgt;
    for (const auto& t : terms) {
        if (t.src_block < 0 || t.src_block >= src.blocks() || t.tgt_block < 0 ||
            t.tgt_block >= tgt.blocks())
            throw Error("not-pure", "conjugation block index out of range");
        if (t.k.rows() != tgt.dims[t.tgt_block] || t.k.cols() != src.dims[t.src_block])
            throw Error("not-pure", "conjugation matrix shape mismatch");
        if (!used_src.insert(t.src_block).second || !used_tgt.insert(t.tgt_block).second)
            throw Error("not-pure", "block pairing not injective");
    }
    PureMap f{std::move(src), std::move(tgt), std::move(terms)};
    const MatrixEffect u = truth_of(f);
    (void)u;
    return f;
}

ChannelMap PureMap::channel() const { return ChannelMap{source, target, terms}; }

SelfAdjoint heisenberg(const PureMap& f, const SelfAdjoint& p) {
    return heisenberg(f.channel(), p);
}

MatrixEffect truth_of(const PureMap& f) { return truth_of(f.channel()); }

PureMap compose(const PureMap& g, const PureMap& f) {
    if (f.target != g.source) throw Error("signature-mismatch", "pure composition");
    PureMap h{f.source, g.target, {}};
    for (const auto& tf : f.terms)
        for (const auto& tg : g.terms) {
            if (tf.tgt_block != tg.src_block) continue;
            CMat k = tg.k * tf.k;
            if (fro_norm(k) == 0.0) continue;
            h.terms.push_back({tf.src_block, tg.tgt_block, std::move(k)});
        }
    return h;
}

double choi_distance(const PureMap& f, const PureMap& g) {
    return choi_distance(f.channel(), g.channel());
}

double choi_distance(const PureMap& f, const ChannelMap& g) {
    return choi_distance(f.channel(), g);
}

Projection image_of(const PureMap& f) { return image_of(f.channel()); }

PureMap dagger(const PureMap& f) {
    PureMap d{f.target, f.source, {}};
    for (const auto& t : f.terms) d.terms.push_back({t.tgt_block, t.src_block, adjoint(t.k)});
    return d;
}

namespace {

// Isometry whose columns span the eigenspaces of `block` selected by `keep`.
CMat cluster_isometry(const CMat& block, const std::function<bool(double)>& keep) {
    const EigenSys es = eigen_hermitian(block);
    std::vector<int> cols;
    for (int j = 0; j < block.rows(); ++j)
        if (keep(es.values[j])) cols.push_back(j);
    CMat v(block.rows(), int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < block.rows(); ++i) v(i, int(j)) = es.vectors(i, cols[j]);
    return v;
}

}  // namespace

Comprehension comprehension(const MatrixEffect& p) {
    Comprehension c;
    c.predicate = p;
    std::vector<int> carrier_dims;
    std::vector<KrausTerm> terms;
    for (int b = 0; b < p.sig().blocks(); ++b) {
        const CMat v = cluster_isometry(p.m.blocks[b],
                                        [](double x) { return x >= 1.0 - tol().sharp; });
        if (v.cols() == 0) continue;
        const int cb = int(carrier_dims.size());
        carrier_dims.push_back(v.cols());
        terms.push_back({cb, b, v});
    }
    c.carrier = BlockSignature{carrier_dims};
    c.map = PureMap::make(c.carrier, p.sig(), std::move(terms));
    return c;
}

Filter filter_of(const MatrixEffect& p) {
    Filter f;
    f.predicate = p;
    const MatrixEffect rt = sqrt_effect(p);
    std::vector<int> carrier_dims;
    std::vector<KrausTerm> terms;
    for (int b = 0; b < p.sig().blocks(); ++b) {
        const CMat w = cluster_isometry(p.m.blocks[b],
                                        [](double x) { return x > tol().sharp; });
        if (w.cols() == 0) continue;
        const int cb = int(carrier_dims.size());
        carrier_dims.push_back(w.cols());
        terms.push_back({b, cb, adjoint(w) * rt.m.blocks[b]});
    }
    f.carrier = BlockSignature{carrier_dims};
    f.map = PureMap::make(p.sig(), f.carrier, std::move(terms));
    return f;
}

PureMap assert_map(const MatrixEffect& p) {
    const MatrixEffect rt = sqrt_effect(p);
    std::vector<KrausTerm> terms;
    for (int b = 0; b < p.sig().blocks(); ++b) {
        if (fro_norm(rt.m.blocks[b]) == 0.0) continue;
        terms.push_back({b, b, rt.m.blocks[b]});
    }
    return PureMap::make(p.sig(), p.sig(), std::move(terms));
}

PureMap PureFactorization::recomposed() const {
    return compose(compr.map, compose(iso, compose(filt.map, asrt)));
}

namespace {

// Support projection with a fine cut. Factorisation must not truncate
// genuinely small singular directions of the map, so the threshold here is
// the dust scale, not the sharpness-classification threshold.
Projection fine_support(const SelfAdjoint& psd) {
    const double cut = 1e-12 * std::max(1.0, max_eigenvalue(psd));
    SelfAdjoint proj = SelfAdjoint::zero(psd.sig);
    for (const auto& c : spectral(psd))
        if (c.value > cut) proj = proj + c.projection;
    return Projection::make(MatrixEffect::make(proj));
}

}  // namespace

PureFactorization pure_factorize(const PureMap& f) {
    PureFactorization out;
    const MatrixEffect q = truth_of(f);  // 1 o f on the source
    out.asrt = assert_map(q);
    const Projection ceil_q = fine_support(q.m);
    out.filt = filter_of(ceil_q.p);
    SelfAdjoint img_acc = SelfAdjoint::zero(f.target);
    for (const auto& t : f.terms) img_acc.blocks[t.tgt_block] += t.k * adjoint(t.k);
    const Projection im_f = fine_support(SelfAdjoint::make(img_acc.sig, img_acc.blocks));
    out.compr = comprehension(im_f.p);

    // The unitary middle factor, solved per routed block pair:
    // theta = V^dagger a sqrt(q)^+ W.
    const SelfAdjoint q_pis = pseudo_inv_sqrt(q.m, 1e-12 * std::max(1.0, max_eigenvalue(q.m)));
    std::vector<KrausTerm> theta;
    for (const auto& tf : f.terms) {
        const int i = tf.src_block, j = tf.tgt_block;
        // Carrier block of the filter fed by source block i.
        int c1 = -1, c2 = -1;
        for (const auto& t : out.filt.map.terms)
            if (t.src_block == i) c1 = t.tgt_block;
        for (const auto& t : out.compr.map.terms)
            if (t.tgt_block == j) c2 = t.src_block;
        if (c1 < 0 || c2 < 0) continue;  // zero-rank route
        const CMat w = cluster_isometry(ceil_q.p.m.blocks[i],
                                        [](double x) { return x > tol().sharp; });
        const CMat v = cluster_isometry(out.compr.predicate.m.blocks[j],
                                        [](double x) { return x >= 1.0 - tol().sharp; });
        theta.push_back({c1, c2, adjoint(v) * tf.k * q_pis.blocks[i] * w});
    }
    out.iso = PureMap::make(out.filt.carrier, out.compr.carrier, std::move(theta));
    return out;
}

PureMap random_pure(const BlockSignature& src, const BlockSignature& tgt, Rng& rng) {
    if (src.is_zero_object() || tgt.is_zero_object()) return PureMap::zero(src, tgt);
    std::vector<int> tgt_order(tgt.blocks());
    std::iota(tgt_order.begin(), tgt_order.end(), 0);
    for (int i = tgt.blocks() - 1; i > 0; --i)
        std::swap(tgt_order[i], tgt_order[rng.uniform_int(0, i)]);

    std::vector<KrausTerm> terms;
    const int pairs = std::min(src.blocks(), tgt.blocks());
    for (int i = 0; i < pairs; ++i) {
        const int j = tgt_order[i];
        CMat k(tgt.dims[j], src.dims[i]);
        for (int r = 0; r < k.rows(); ++r)
            for (int c = 0; c < k.cols(); ++c) k(r, c) = cplx(rng.normal(), rng.normal());
        terms.push_back({i, j, std::move(k)});
    }
    // Subunital normalisation.
    double lam = 0;
    for (const auto& t : terms) {
        CMat s = adjoint(t.k) * t.k;
        const EigenSys es = eigen_hermitian(s);
        lam = std::max(lam, es.values.empty() ? 0.0 : es.values.front());
    }
    const double sc = std::sqrt(rng.uniform(0.3, 0.95) / std::max(lam, 1e-12));
    for (auto& t : terms) t.k *= cplx(sc, 0.0);
    return PureMap::make(src, tgt, std::move(terms));
}

}  // namespace efflab
