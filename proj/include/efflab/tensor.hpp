#ifndef EFFLAB_TENSOR_HPP
#define EFFLAB_TENSOR_HPP

#include "efflab/laws.hpp"

namespace efflab {

// Tensor product of two matrix objects. Blocks are flattened row-major over
// the factor blocks (left factor on the slow index), and each flattened
// block is the Kronecker product with the left factor outermost.
struct TensorObject {
    BlockSignature left, right, flattened;
    int flat_block(int i, int j) const { return i * right.blocks() + j; }
};
// Total dimension of the flattened object is capped at 36.
TensorObject tensor_object(const BlockSignature& a, const BlockSignature& b);

SelfAdjoint tensor_effects(const TensorObject& t, const SelfAdjoint& a,
                           const SelfAdjoint& b);
ChannelMap tensor_maps(const TensorObject& src, const TensorObject& tgt,
                       const ChannelMap& f, const ChannelMap& g);
PureMap tensor_pure(const TensorObject& src, const TensorObject& tgt, const PureMap& f,
                    const PureMap& g);

// Braiding A (x) B -> B (x) A as a permutation conjugation.
ChannelMap braiding(const TensorObject& ab, const TensorObject& ba);

// Superoperator tensor: (s (x) t)(x (x) y) = s(x) (x) t(y), expressed on
// the flattened Hermitian space.
SuperOp tensor_superop(const TensorObject& t, const SuperOp& s_left,
                       const SuperOp& s_right);

// Tensor-compatibility law batteries on one factor pair.
LawReport check_tensor_assert(const BlockSignature& a, const BlockSignature& b,
                              int trials, uint64_t seed, double tol_law);
LawReport check_tensor_quadratic(const BlockSignature& a, const BlockSignature& b,
                                 int trials, uint64_t seed, double tol_law);
LawReport check_jordan_embedding(const BlockSignature& a, const BlockSignature& b,
                                 int trials, uint64_t seed, double tol_law);
LawReport check_symmetry_exchange(const BlockSignature& a, const BlockSignature& b,
                                  int trials, uint64_t seed, double tol_law);
std::vector<LawReport> run_tensor_laws(const BlockSignature& a, const BlockSignature& b,
                                       int trials, uint64_t seed, double tol_law);

}  // namespace efflab

#endif  // EFFLAB_TENSOR_HPP
