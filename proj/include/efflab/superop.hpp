#ifndef EFFLAB_SUPEROP_HPP
#define EFFLAB_SUPEROP_HPP

#include <functional>
#include <vector>

#include "efflab/blocks.hpp"
#include "efflab/rmatrix.hpp"

namespace efflab {

// Orthonormal real basis of the Hermitian block tuples over a signature
// (diagonal units, symmetric and antisymmetric off-diagonal pairs).
std::vector<SelfAdjoint> herm_basis(const BlockSignature& sig);
std::vector<double> herm_coords(const SelfAdjoint& a);
SelfAdjoint from_herm_coords(const BlockSignature& sig, const std::vector<double>& x);

// A real-linear operator on Hermitian block tuples, stored densely in the
// orthonormal basis above.
struct SuperOp {
    BlockSignature in, out;
    RMat m;

    SelfAdjoint apply(const SelfAdjoint& a) const;
};

SuperOp superop_identity(const BlockSignature& sig);
SuperOp superop_of(const BlockSignature& in, const BlockSignature& out,
                   const std::function<SelfAdjoint(const SelfAdjoint&)>& f);
SuperOp operator*(const SuperOp& a, const SuperOp& b);  // composition a after b
SuperOp operator+(const SuperOp& a, const SuperOp& b);
SuperOp operator-(const SuperOp& a, const SuperOp& b);
SuperOp operator*(double s, const SuperOp& a);
double distance(const SuperOp& a, const SuperOp& b);
SuperOp expm(const SuperOp& a, double t);  // exp(t a)

// For sharp p: the difference of the two assert conjugations,
// q |-> p q p - p' q p' with p' = 1 - p. An order derivation.
SuperOp derivation_operator(const Projection& p);
// For sharp p: (id + derivation)/2, which acts as Jordan multiplication by p.
SuperOp mult_operator(const Projection& p);

// Checks that exp(t d) maps sampled PSD inputs into the PSD cone (min
// eigenvalue >= -tol().psd) for every t in t_samples.
LawReport check_order_derivation(const SuperOp& d, const std::vector<double>& t_samples,
                                 int trials, uint64_t seed);

}  // namespace efflab

#endif  // EFFLAB_SUPEROP_HPP
