#ifndef EFFLAB_BLOCKS_HPP
#define EFFLAB_BLOCKS_HPP

#include <functional>
#include <string>
#include <vector>

#include "efflab/cmatrix.hpp"
#include "efflab/rng.hpp"

namespace efflab {

// A direct sum of complex matrix algebras, given by the block side lengths.
// The empty signature is the zero object of the category.
struct BlockSignature {
    std::vector<int> dims;

    BlockSignature() = default;
    explicit BlockSignature(std::vector<int> d);

    int blocks() const { return int(dims.size()); }
    int total_dim() const;
    // Real dimension of the Hermitian part, sum of dims[i]^2.
    int herm_dim() const;
    bool is_zero_object() const { return dims.empty(); }
    bool operator==(const BlockSignature& o) const { return dims == o.dims; }
    bool operator!=(const BlockSignature& o) const { return dims != o.dims; }
    std::string str() const;
};

// A Hermitian block tuple over a signature.
struct SelfAdjoint {
    BlockSignature sig;
    std::vector<CMat> blocks;

    static SelfAdjoint zero(const BlockSignature& sig);
    static SelfAdjoint identity(const BlockSignature& sig);
    // Validates block shapes and Hermiticity (within tol().herm).
    static SelfAdjoint make(BlockSignature sig, std::vector<CMat> blocks);
};

SelfAdjoint operator+(const SelfAdjoint& a, const SelfAdjoint& b);
SelfAdjoint operator-(const SelfAdjoint& a, const SelfAdjoint& b);
SelfAdjoint operator*(double s, const SelfAdjoint& a);
double fro_norm(const SelfAdjoint& a);
double max_abs(const SelfAdjoint& a);
double trace_real(const SelfAdjoint& a);
double inner(const SelfAdjoint& a, const SelfAdjoint& b);  // tr(ab)
double distance(const SelfAdjoint& a, const SelfAdjoint& b);

// Blockwise associative product a.b (not Hermitian in general); used by
// oracles and conjugations.
std::vector<CMat> raw_mul(const SelfAdjoint& a, const SelfAdjoint& b);
SelfAdjoint conjugate(const SelfAdjoint& a, const SelfAdjoint& q);  // a q a, a Hermitian

// An effect: 0 <= p <= 1 blockwise. Construction clamps eigenvalues into
// [0,1] when they are within tol().psd of the interval and rejects otherwise.
struct MatrixEffect {
    SelfAdjoint m;
    static MatrixEffect make(SelfAdjoint a);
    static MatrixEffect zero(const BlockSignature& sig);
    static MatrixEffect one(const BlockSignature& sig);
    MatrixEffect complement() const;  // 1 - p
    const BlockSignature& sig() const { return m.sig; }
};

// A sharp predicate: idempotent effect (within tol().idem per block).
struct Projection {
    MatrixEffect p;
    static Projection make(MatrixEffect e);
    const BlockSignature& sig() const { return p.sig(); }
    const SelfAdjoint& sa() const { return p.m; }
    Projection complement() const;
    int rank_in_block(int b) const;
    std::vector<int> ranks() const;
};

// Spectral decomposition with eigenvalue clustering (width tol().cluster).
// Components are ordered by descending eigenvalue; their projections are
// mutually orthogonal and sum to the identity.
struct SpectralComponent {
    double value = 0.0;
    SelfAdjoint projection;
    int rank = 0;
};
std::vector<SpectralComponent> spectral(const SelfAdjoint& a);

SelfAdjoint apply_spectral(const SelfAdjoint& a, const std::function<double(double)>& f);
double min_eigenvalue(const SelfAdjoint& a);
double max_eigenvalue(const SelfAdjoint& a);
// Operator-norm distance (largest |eigenvalue| of a-b).
double op_distance(const SelfAdjoint& a, const SelfAdjoint& b);

MatrixEffect sqrt_effect(const MatrixEffect& p);
SelfAdjoint pseudo_inv_sqrt(const SelfAdjoint& psd, double rank_cut);

// Largest sharp predicate below p: eigenvalue-1 cluster (lambda >= 1 - tol().sharp).
Projection effect_floor(const MatrixEffect& p);
// Least sharp predicate above p: support (lambda > tol().sharp).
Projection effect_ceil(const MatrixEffect& p);

// Jordan layer.
SelfAdjoint jordan_product(const SelfAdjoint& a, const SelfAdjoint& b);
// Q_a b = 2 a*(a*b) - (a*a)*b; equals a.b.a in the associative realisation.
SelfAdjoint quadratic(const SelfAdjoint& a, const SelfAdjoint& b);
// Linearisation T with T(a,a,c) = quadratic(a, c); symmetric bilinear in (a,b).
SelfAdjoint triple(const SelfAdjoint& a, const SelfAdjoint& b, const SelfAdjoint& c);
// p & q = Q_sqrt(p) q.
MatrixEffect seq_product(const MatrixEffect& p, const MatrixEffect& q);

// Order relation p <= q within slack eps on the smallest eigenvalue of q - p.
bool effect_leq(const SelfAdjoint& p, const SelfAdjoint& q, double eps);

// Sampling. All draws are deterministic given the Rng state.
SelfAdjoint random_self_adjoint(const BlockSignature& sig, Rng& rng);
MatrixEffect random_effect(const BlockSignature& sig, Rng& rng);
Projection random_projection(const BlockSignature& sig, Rng& rng);
// Unit-trace PSD block tuple (a state in Schroedinger form).
SelfAdjoint random_density(const BlockSignature& sig, Rng& rng);
CMat random_unitary(int n, Rng& rng);

}  // namespace efflab

#endif  // EFFLAB_BLOCKS_HPP
