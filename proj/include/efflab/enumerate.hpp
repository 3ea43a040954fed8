#ifndef EFFLAB_ENUMERATE_HPP
#define EFFLAB_ENUMERATE_HPP

#include <map>

#include "efflab/effect_table.hpp"

namespace efflab {

struct EnumeratedStructure {
    EffectTable table;
    bool boolean = false;
};

struct EnumerationResult {
    std::vector<EnumeratedStructure> structures;
    // Count of structures per size, up to full (monoid / SEA) isomorphism.
    std::map<int, int> count_by_size;
    // Count of effect-algebra isomorphism classes carrying at least one
    // compatible product, per size.
    std::map<int, int> ea_classes_by_size;
};

// All effect algebras with `size` elements, one representative per
// isomorphism class (relabelings fixing 0 and 1).
std::vector<EffectTable> enumerate_effect_algebras(int size);

// All effect monoids up to isomorphism with at most max_size elements.
// max_size is capped by the enumeration budget (6).
EnumerationResult enumerate_effect_monoids(int max_size);

// All sequential effect algebra tables up to isomorphism with at most
// max_size elements (budget 5; the SEA product search space grows fast).
EnumerationResult enumerate_sea_tables(int max_size);

}  // namespace efflab

#endif  // EFFLAB_ENUMERATE_HPP
