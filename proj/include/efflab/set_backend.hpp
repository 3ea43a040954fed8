#ifndef EFFLAB_SET_BACKEND_HPP
#define EFFLAB_SET_BACKEND_HPP

#include <vector>

#include "efflab/effect_table.hpp"
#include "efflab/rng.hpp"

namespace efflab {

// The deterministic backend: finite sets with partial functions. Predicates
// are subsets, states are elements, scalars are the booleans.
struct SetObject {
    int size = 0;
};

struct SetMap {
    int src = 0, tgt = 0;
    std::vector<int> graph;  // graph[i] in [-1, tgt); -1 means undefined

    static SetMap identity(int n);
    static SetMap zero(int src, int tgt);
};

using SetPred = std::vector<bool>;

SetMap compose_set(const SetMap& g, const SetMap& f);
// Defined when the domains are disjoint.
std::optional<SetMap> ovee_set(const SetMap& f, const SetMap& g);
bool is_total(const SetMap& f);
SetPred truth_of(const SetMap& f);                       // domain subset
SetPred heisenberg(const SetMap& f, const SetPred& q);   // preimage
SetPred image_of(const SetMap& f);                       // range subset

struct SetComprehension {
    SetPred predicate;
    int carrier = 0;
    SetMap map;  // inclusion carrier -> object
};
SetComprehension set_comprehension(const SetPred& p);

struct SetFilter {
    SetPred predicate;
    int carrier = 0;
    SetMap map;  // partial surjection object -> carrier
};
SetFilter set_filter(const SetPred& p);
SetMap set_assert(const SetPred& p);  // partial identity on p

// Predicate algebra of a set object as an explicit table (the powerset).
EffectTable set_pred_table(const SetObject& obj);

SetMap random_set_map(int src, int tgt, Rng& rng);

// Pointwise separation by predicates (singletons) and by states (elements).
LawReport check_set_separation(const SetObject& obj, bool by_predicates, int trials,
                               uint64_t seed);

// Law battery for the set backend: partial-sum laws, effectus axioms,
// image laws, comprehension/filter identities. All checks are exact.
std::vector<LawReport> run_set_laws(const SetObject& obj, int trials, uint64_t seed);

}  // namespace efflab

#endif  // EFFLAB_SET_BACKEND_HPP
