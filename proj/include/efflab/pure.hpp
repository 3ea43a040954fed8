#ifndef EFFLAB_PURE_HPP
#define EFFLAB_PURE_HPP

#include "efflab/channel.hpp"

namespace efflab {

// A pure (conjugation) map: at most one Kraus operator per block pair, with
// injective block pairing. Closed under dagger and composition.
struct PureMap {
    BlockSignature source, target;
    std::vector<KrausTerm> terms;

    static PureMap zero(const BlockSignature& src, const BlockSignature& tgt);
    static PureMap identity(const BlockSignature& sig);
    // Validates the single-Kraus structure (throws "not-pure").
    static PureMap make(BlockSignature src, BlockSignature tgt,
                        std::vector<KrausTerm> terms);
    ChannelMap channel() const;
};

SelfAdjoint heisenberg(const PureMap& f, const SelfAdjoint& p);
MatrixEffect truth_of(const PureMap& f);
PureMap compose(const PureMap& g, const PureMap& f);
double choi_distance(const PureMap& f, const PureMap& g);
double choi_distance(const PureMap& f, const ChannelMap& g);
Projection image_of(const PureMap& f);

// Conjugate-transpose each conjugation matrix and reverse the pairing.
PureMap dagger(const PureMap& f);

// Standard comprehension of p: carrier spans the eigenvalue-1 space of p,
// structure map is the isometry inclusion (zero-rank blocks dropped).
struct Comprehension {
    MatrixEffect predicate;
    BlockSignature carrier;
    PureMap map;  // carrier -> object
};
Comprehension comprehension(const MatrixEffect& p);

// Standard filter of p: carrier spans the support of p, Heisenberg action
// q |-> sqrt(p) W q W^dagger sqrt(p).
struct Filter {
    MatrixEffect predicate;
    BlockSignature carrier;
    PureMap map;  // object -> carrier
};
Filter filter_of(const MatrixEffect& p);

// q |-> sqrt(p) q sqrt(p) on the same object.
PureMap assert_map(const MatrixEffect& p);

// Factorisation of a pure map into comprehension of its image, a unitary
// conjugation, the filter of ceil(1 o f) and the assert map of 1 o f.
struct PureFactorization {
    Comprehension compr;
    PureMap iso;      // between the two carriers
    Filter filt;      // filter of ceil(1 o f)
    PureMap asrt;     // assert map of 1 o f
    PureMap recomposed() const;
};
PureFactorization pure_factorize(const PureMap& f);

// Random pure map: one Gaussian conjugation per block of a random injective
// pairing, normalised subunital.
PureMap random_pure(const BlockSignature& src, const BlockSignature& tgt, Rng& rng);

}  // namespace efflab

#endif  // EFFLAB_PURE_HPP
