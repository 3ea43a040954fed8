#ifndef EFFLAB_TESTS_NAIVE_ENUM_HPP
#define EFFLAB_TESTS_NAIVE_ENUM_HPP

#include <set>
#include <vector>

#include "efflab/effect_table.hpp"

namespace efflab::testing {

// Independent brute-force enumerators, deliberately free of the search-tree
// pruning used by the library: they scan raw tables and keep whatever passes
// the axiom checkers. Feasible for n <= 4.

// Effect algebras on n labeled elements up to isomorphism.
std::vector<EffectTable> naive_effect_algebras(int n);

// Effect monoids up to isomorphism with exactly n elements.
std::vector<EffectTable> naive_effect_monoids(int n);

}  // namespace efflab::testing

#endif
