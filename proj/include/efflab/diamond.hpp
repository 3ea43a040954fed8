#ifndef EFFLAB_DIAMOND_HPP
#define EFFLAB_DIAMOND_HPP

#include "efflab/pure.hpp"

namespace efflab {

// Possibilistic predicate transformers on sharp predicates.
// diamond(f, p) = ceil(p o f) lives on the source of f;
// lower_diamond(f, q) = im(f o compr_q) lives on the target;
// box is the De Morgan dual of diamond.
Projection diamond(const ChannelMap& f, const Projection& p);
Projection box_of(const ChannelMap& f, const Projection& p);
Projection lower_diamond(const ChannelMap& f, const Projection& q);

Projection diamond(const PureMap& f, const Projection& p);
Projection box_of(const PureMap& f, const Projection& p);
Projection lower_diamond(const PureMap& f, const Projection& q);

// Meet via the comprehension formula (pi_p)_lower(pi_p^box(q)).
Projection sharp_meet(const Projection& p, const Projection& q);
// Independent oracle: projection onto ran(p) n ran(q) via the kernel of
// p' + q'.
Projection sharp_meet_by_ranges(const Projection& p, const Projection& q);
Projection sharp_join(const Projection& p, const Projection& q);

// Projection order within numerical slack.
bool proj_leq(const Projection& p, const Projection& q, double eps = tol().law);

}  // namespace efflab

#endif  // EFFLAB_DIAMOND_HPP
