#ifndef EFFLAB_CHANNEL_HPP
#define EFFLAB_CHANNEL_HPP

#include <optional>

#include "efflab/blocks.hpp"

namespace efflab {

// One Kraus operator routed between a source and a target block. The matrix
// is the Schroedinger-direction operator (shape target_dim x source_dim).
struct KrausTerm {
    int src_block = 0;
    int tgt_block = 0;
    CMat k;
};

// A completely positive subunital map between direct sums of matrix
// algebras, in Kraus form. Heisenberg action on a predicate p of the
// target: p |-> sum K^dagger p K, routed blockwise.
struct ChannelMap {
    BlockSignature source, target;
    std::vector<KrausTerm> kraus;

    static ChannelMap zero(const BlockSignature& src, const BlockSignature& tgt);
    static ChannelMap identity(const BlockSignature& sig);
    // Validates shapes and subunitality (throws "not-subunital" beyond tol).
    static ChannelMap make(BlockSignature src, BlockSignature tgt,
                           std::vector<KrausTerm> kraus);
};

// Heisenberg action: predicate on the target pulled back to the source.
SelfAdjoint heisenberg(const ChannelMap& f, const SelfAdjoint& p);
// Schroedinger action: state on the source pushed to the target.
SelfAdjoint schroedinger(const ChannelMap& f, const SelfAdjoint& rho);

MatrixEffect truth_of(const ChannelMap& f);  // 1 o f = f*(1)
bool is_total(const ChannelMap& f, double eps = tol().law);

// g after f (source of the composite = source of f).
ChannelMap compose(const ChannelMap& g, const ChannelMap& f);
// Partial sum: defined when f*(1) + g*(1) <= 1.
std::optional<ChannelMap> ovee_maps(const ChannelMap& f, const ChannelMap& g);
ChannelMap scale_map(double s, const ChannelMap& f);  // s in [0,1]

// Choi-matrix distance per block pair; the canonical equality test for maps
// with non-unique Kraus decompositions.
double choi_distance(const ChannelMap& f, const ChannelMap& g);

// Support projection of the Schroedinger image of a full-rank input.
Projection image_of(const ChannelMap& f);

// Coproduct of objects: block lists concatenate.
struct CoproductObj {
    BlockSignature left, right, obj;
    ChannelMap inj_left() const;    // kappa_1
    ChannelMap inj_right() const;   // kappa_2
    ChannelMap proj_left() const;   // partial projection onto the left
    ChannelMap proj_right() const;
};
CoproductObj coproduct(const BlockSignature& a, const BlockSignature& b);
// Tuple of a summable pair into the coproduct.
std::optional<ChannelMap> cotuple(const CoproductObj& c, const ChannelMap& f1,
                                  const ChannelMap& f2);

// Sampling: CP subunital (or total) channels with Gaussian Kraus operators.
ChannelMap random_channel(const BlockSignature& src, const BlockSignature& tgt, Rng& rng,
                          bool total = false);

}  // namespace efflab

#endif  // EFFLAB_CHANNEL_HPP
