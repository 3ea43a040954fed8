#ifndef EFFLAB_PRODUCT_BACKEND_HPP
#define EFFLAB_PRODUCT_BACKEND_HPP

#include "efflab/channel.hpp"
#include "efflab/set_backend.hpp"

namespace efflab {

// The product of the set backend and the matrix backend, realised as
// literal pairs. Its scalars {0,1} x [0,1] carry the non-trivial
// idempotents that split the category.
struct ProdObject {
    SetObject s;
    BlockSignature m;
};

struct ProdMap {
    SetMap s;
    ChannelMap m;
};

struct ProdPred {
    SetPred s;
    MatrixEffect m;
};

struct ProdScalar {
    bool b = false;
    double r = 0.0;
};

ProdMap prod_identity(const ProdObject& a);
ProdMap compose_prod(const ProdMap& g, const ProdMap& f);
ProdMap random_prod_map(const ProdObject& a, const ProdObject& b, Rng& rng);
double prod_distance(const ProdMap& f, const ProdMap& g);
ProdMap scale_prod(const ProdScalar& s, const ProdMap& f);

// Scalar structure.
struct ScalarMonoidInfo {
    std::string description;
    std::vector<std::string> idempotents;
};
ScalarMonoidInfo scalar_monoid_matrix();
ScalarMonoidInfo scalar_monoid_set();
ScalarMonoidInfo scalar_monoid_product();
std::vector<ProdScalar> find_idempotent_scalars();

// Splitting of the product backend along a non-trivial idempotent scalar.
struct SplitReport {
    std::string left_factor;   // backend the s-side is equivalent to
    std::string right_factor;  // backend the complement side is equivalent to
    double split_residual = 0.0;      // pi o xi vs s.id and xi o pi vs id
    double roundtrip_residual = 0.0;  // F(G(f)) vs f over sampled morphisms
    double predicate_residual = 0.0;  // p = s.p + s'.p recovery
    int sampled_morphisms = 0;
    bool pass = false;
};
// Throws Error("trivial-scalar") for s in {(0,0),(1,1)}.
SplitReport split_by_scalar(const ProdScalar& s, int trials, uint64_t seed);

// Boolean (+) convex decomposition of the predicate space of one object.
struct DecomposeReport {
    bool boolean_side_monoid = false;
    bool boolean_side_boolean = false;
    double convex_action_residual = 0.0;
    bool pass = false;
};
DecomposeReport decompose_pred_space(const ProdObject& obj, int trials, uint64_t seed);

// Finite separating predicate sets with a span-rank certificate.
LawReport finite_tomography_matrix(const BlockSignature& sig, int budget);
LawReport finite_tomography_set(const SetObject& obj, int budget);
LawReport finite_tomography_product(const ProdObject& obj, int budget);

// Separation of the matrix backend via spanning families.
LawReport check_matrix_separation(const BlockSignature& sig, bool by_predicates,
                                  int trials, uint64_t seed);

// Product-backend law battery: componentwise effectus laws, scalar
// idempotents, splitting and decomposition.
std::vector<LawReport> run_product_laws(const ProdObject& obj, int trials, uint64_t seed);

}  // namespace efflab

#endif  // EFFLAB_PRODUCT_BACKEND_HPP
