#include "efflab/diamond.hpp"

namespace efflab {

Projection diamond(const ChannelMap& f, const Projection& p) {
    return effect_ceil(MatrixEffect::make(heisenberg(f, p.sa())));
}

Projection box_of(const ChannelMap& f, const Projection& p) {
    return diamond(f, p.complement()).complement();
}

Projection lower_diamond(const ChannelMap& f, const Projection& q) {
    const Comprehension c = comprehension(q.p);
    return image_of(compose(f, c.map.channel()));
}

Projection diamond(const PureMap& f, const Projection& p) { return diamond(f.channel(), p); }
Projection box_of(const PureMap& f, const Projection& p) { return box_of(f.channel(), p); }
Projection lower_diamond(const PureMap& f, const Projection& q) {
    return lower_diamond(f.channel(), q);
}

Projection sharp_meet(const Projection& p, const Projection& q) {
    const Comprehension c = comprehension(p.p);
    const ChannelMap pi = c.map.channel();
    const Projection boxed = box_of(pi, q);
    return lower_diamond(pi, boxed);
}

Projection sharp_meet_by_ranges(const Projection& p, const Projection& q) {
    const SelfAdjoint s = p.complement().sa() + q.complement().sa();
    SelfAdjoint proj = SelfAdjoint::zero(p.sig());
    for (const auto& c : spectral(s))
        if (c.value < tol().sharp) proj = proj + c.projection;
    return Projection::make(MatrixEffect::make(proj));
}

Projection sharp_join(const Projection& p, const Projection& q) {
    return sharp_meet(p.complement(), q.complement()).complement();
}

bool proj_leq(const Projection& p, const Projection& q, double eps) {
    // For projections p <= q iff q p = p.
    double worst = 0;
    for (int b = 0; b < p.sig().blocks(); ++b) {
        const CMat qp = q.sa().blocks[b] * p.sa().blocks[b];
        worst = std::max(worst, fro_norm(qp - p.sa().blocks[b]));
    }
    return worst <= eps;
}

}  // namespace efflab
