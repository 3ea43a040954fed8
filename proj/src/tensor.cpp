#include "efflab/tensor.hpp"

#include <cmath>
#include <sstream>

namespace efflab {

TensorObject tensor_object(const BlockSignature& a, const BlockSignature& b) {
    TensorObject t;
    t.left = a;
    t.right = b;
    std::vector<int> dims;
    for (int i = 0; i < a.blocks(); ++i)
        for (int j = 0; j < b.blocks(); ++j) dims.push_back(a.dims[i] * b.dims[j]);
    t.flattened = BlockSignature{dims};
    if (t.flattened.total_dim() > 36)
        throw Error("budget-exceeded", "tensor objects are capped at total dimension 36");
    return t;
}

SelfAdjoint tensor_effects(const TensorObject& t, const SelfAdjoint& a,
                           const SelfAdjoint& b) {
    if (a.sig != t.left || b.sig != t.right)
        throw Error("signature-mismatch", "tensor factors");
    SelfAdjoint r = SelfAdjoint::zero(t.flattened);
    for (int i = 0; i < t.left.blocks(); ++i)
        for (int j = 0; j < t.right.blocks(); ++j)
            r.blocks[t.flat_block(i, j)] = kron(a.blocks[i], b.blocks[j]);
    return SelfAdjoint::make(r.sig, r.blocks);
}

ChannelMap tensor_maps(const TensorObject& src, const TensorObject& tgt,
                       const ChannelMap& f, const ChannelMap& g) {
    if (f.source != src.left || g.source != src.right || f.target != tgt.left ||
        g.target != tgt.right)
        throw Error("signature-mismatch", "tensor of maps");
    ChannelMap h{src.flattened, tgt.flattened, {}};
    for (const auto& kf : f.kraus)
        for (const auto& kg : g.kraus)
            h.kraus.push_back({src.flat_block(kf.src_block, kg.src_block),
                               tgt.flat_block(kf.tgt_block, kg.tgt_block),
                               kron(kf.k, kg.k)});
    return h;
}

PureMap tensor_pure(const TensorObject& src, const TensorObject& tgt, const PureMap& f,
                    const PureMap& g) {
    const ChannelMap h = tensor_maps(src, tgt, f.channel(), g.channel());
    return PureMap::make(h.source, h.target, h.kraus);
}

ChannelMap braiding(const TensorObject& ab, const TensorObject& ba) {
    if (ab.left != ba.right || ab.right != ba.left)
        throw Error("signature-mismatch", "braiding");
    ChannelMap c{ab.flattened, ba.flattened, {}};
    for (int i = 0; i < ab.left.blocks(); ++i)
        for (int j = 0; j < ab.right.blocks(); ++j) {
            const int da = ab.left.dims[i], db = ab.right.dims[j];
            CMat p(db * da, da * db);
            for (int x = 0; x < da; ++x)
                for (int y = 0; y < db; ++y) p(y * da + x, x * db + y) = 1.0;
            c.kraus.push_back({ab.flat_block(i, j), ba.flat_block(j, i), std::move(p)});
        }
    return c;
}

SuperOp tensor_superop(const TensorObject& t, const SuperOp& s_left,
                       const SuperOp& s_right) {
    if (s_left.in != t.left || s_left.out != t.left || s_right.in != t.right ||
        s_right.out != t.right)
        throw Error("signature-mismatch", "tensor superoperator");
    const auto basis_a = herm_basis(t.left);
    const auto basis_b = herm_basis(t.right);
    // Images of the factor bases under the factor superoperators.
    std::vector<SelfAdjoint> img_a, img_b;
    for (const auto& e : basis_a) img_a.push_back(s_left.apply(e));
    for (const auto& e : basis_b) img_b.push_back(s_right.apply(e));

    return superop_of(t.flattened, t.flattened, [&](const SelfAdjoint& q) {
        // Expand q over the product basis kron(e_a, e_b) (orthonormal) and
        // push each term through the factors.
        SelfAdjoint out = SelfAdjoint::zero(t.flattened);
        for (size_t x = 0; x < basis_a.size(); ++x)
            for (size_t y = 0; y < basis_b.size(); ++y) {
                const double c = inner(q, tensor_effects(t, basis_a[x], basis_b[y]));
                if (std::abs(c) < 1e-300) continue;
                out = out + c * tensor_effects(t, img_a[x], img_b[y]);
            }
        return out;
    });
}

namespace {

std::string tensor_instance(const BlockSignature& a, const BlockSignature& b, int trials,
                            uint64_t seed) {
    std::ostringstream os;
    os << "tensor " << a.str() << " (x) " << b.str() << " trials=" << trials
       << " seed=" << seed;
    return os.str();
}

std::string tr_label(int k) { return "trial " + std::to_string(k); }

struct Acc {
    double worst = 0;
    double tol;
    std::string ce;
    explicit Acc(double t) : tol(t) {}
    bool ok() const { return ce.empty(); }
    void add(double r, const std::string& where) {
        worst = std::max(worst, r);
        if (r > tol && ce.empty()) {
            std::ostringstream os;
            os << where << " residual=" << r;
            ce = os.str();
        }
    }
    LawReport finish(const std::string& law, const std::string& inst) const {
        return ce.empty() ? law_pass(law, inst, worst) : law_fail(law, inst, worst, ce);
    }
};

SuperOp conj_superop(const BlockSignature& sig, const SelfAdjoint& a) {
    return superop_of(sig, sig, [&](const SelfAdjoint& q) { return conjugate(a, q); });
}

SelfAdjoint normalized(SelfAdjoint a) {
    return (1.0 / std::max(1.0, fro_norm(a))) * a;
}

}  // namespace

LawReport check_tensor_assert(const BlockSignature& a, const BlockSignature& b,
                              int trials, uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "prop6.2");
    Acc acc(tol_law);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const MatrixEffect pa = k % 4 == 0 ? random_projection(a, rng).p
                                           : random_effect(a, rng);
        const MatrixEffect pb = k % 4 == 0 ? random_projection(b, rng).p
                                           : random_effect(b, rng);
        const MatrixEffect pab = MatrixEffect::make(tensor_effects(t, pa.m, pb.m));
        // Conjugation by sqrt(a (x) b) versus the Kronecker of the factor
        // square roots: two independent spectral paths.
        const SelfAdjoint lhs_root = sqrt_effect(pab).m;
        const SelfAdjoint rhs_root = tensor_effects(t, sqrt_effect(pa).m, sqrt_effect(pb).m);
        acc.add(distance(lhs_root, rhs_root), tr_label(k) + " roots");
        acc.add(distance(conj_superop(t.flattened, lhs_root),
                         conj_superop(t.flattened, rhs_root)),
                tr_label(k) + " superop");
        // asrt_{a (x) 1} = asrt_a (x) id.
        const MatrixEffect pa1 =
            MatrixEffect::make(tensor_effects(t, pa.m, SelfAdjoint::identity(b)));
        const SuperOp lhs1 = conj_superop(t.flattened, sqrt_effect(pa1).m);
        const SuperOp rhs1 = tensor_superop(
            t, conj_superop(a, sqrt_effect(pa).m), superop_identity(b));
        acc.add(distance(lhs1, rhs1), tr_label(k) + " unit-side");
    }
    return acc.finish("prop6.2", inst);
}

LawReport check_tensor_quadratic(const BlockSignature& a, const BlockSignature& b,
                                 int trials, uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "prop6.8");
    Acc acc(tol_law);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const SelfAdjoint xa = normalized(random_self_adjoint(a, rng));
        const SelfAdjoint xb = normalized(random_self_adjoint(b, rng));
        const SelfAdjoint xab = tensor_effects(t, xa, xb);
        const SuperOp lhs = superop_of(t.flattened, t.flattened,
                                       [&](const SelfAdjoint& q) { return quadratic(xab, q); });
        const SuperOp rhs = tensor_superop(
            t,
            superop_of(a, a, [&](const SelfAdjoint& q) { return quadratic(xa, q); }),
            superop_of(b, b, [&](const SelfAdjoint& q) { return quadratic(xb, q); }));
        acc.add(distance(lhs, rhs), tr_label(k) + " quadratic");

        // Signed-decomposition path: split xa into positive and negative
        // parts and rebuild Q through triple products.
        SelfAdjoint ap = SelfAdjoint::zero(a), an = SelfAdjoint::zero(a);
        for (const auto& c : spectral(xa)) {
            if (c.value >= 0) ap = ap + c.value * c.projection;
            else an = an + (-c.value) * c.projection;
        }
        const SelfAdjoint probe = normalized(random_self_adjoint(t.flattened, rng));
        const SelfAdjoint one_b = SelfAdjoint::identity(b);
        const SelfAdjoint t_ap = tensor_effects(t, ap, one_b);
        const SelfAdjoint t_an = tensor_effects(t, an, one_b);
        const SelfAdjoint direct = quadratic(tensor_effects(t, xa, one_b), probe);
        const SelfAdjoint expanded = quadratic(t_ap, probe) + quadratic(t_an, probe) -
                                     2.0 * triple(t_ap, t_an, probe);
        acc.add(distance(direct, expanded), tr_label(k) + " signed");

        // Bilinear tensor identity for triple products.
        const SelfAdjoint ya = normalized(random_self_adjoint(a, rng));
        const SelfAdjoint yb = normalized(random_self_adjoint(b, rng));
        const SelfAdjoint u = tensor_effects(t, xa, xb);
        const SelfAdjoint v = tensor_effects(t, ya, yb);
        const SelfAdjoint w = tensor_effects(t, xa, yb);
        const SelfAdjoint z = tensor_effects(t, ya, xb);
        // 2 Q_{xa,ya} (x) Q_{xb,yb} = Q_{u,v} + Q_{w,z} applied to the probe.
        SelfAdjoint lhs_probe = SelfAdjoint::zero(t.flattened);
        {
            // Apply the tensor of the two linearised maps through the basis
            // expansion used by tensor_superop.
            const SuperOp sa = superop_of(
                a, a, [&](const SelfAdjoint& q) { return triple(xa, ya, q); });
            const SuperOp sb = superop_of(
                b, b, [&](const SelfAdjoint& q) { return triple(xb, yb, q); });
            lhs_probe = 2.0 * tensor_superop(t, sa, sb).apply(probe);
        }
        const SelfAdjoint rhs_probe = triple(u, v, probe) + triple(w, z, probe);
        acc.add(distance(lhs_probe, rhs_probe), tr_label(k) + " triple-tensor");
    }
    return acc.finish("prop6.8", inst);
}

LawReport check_jordan_embedding(const BlockSignature& a, const BlockSignature& b,
                                 int trials, uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "prop6.6");
    Acc acc(tol_law);
    const SelfAdjoint one_a = SelfAdjoint::identity(a);
    const SelfAdjoint one_b = SelfAdjoint::identity(b);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const SelfAdjoint a1 = normalized(random_self_adjoint(a, rng));
        const SelfAdjoint a2 = normalized(random_self_adjoint(a, rng));
        const SelfAdjoint xb = normalized(random_self_adjoint(b, rng));
        // Jordan homomorphism.
        const SelfAdjoint lhs = jordan_product(tensor_effects(t, a1, one_b),
                                               tensor_effects(t, a2, one_b));
        const SelfAdjoint rhs = tensor_effects(t, jordan_product(a1, a2), one_b);
        acc.add(distance(lhs, rhs), tr_label(k) + " homomorphism");
        // Operator commutation of the two embeddings.
        const SelfAdjoint u = tensor_effects(t, a1, one_b);
        const SelfAdjoint v = tensor_effects(t, one_a, xb);
        const SuperOp tu = superop_of(t.flattened, t.flattened, [&](const SelfAdjoint& q) {
            return jordan_product(u, q);
        });
        const SuperOp tv = superop_of(t.flattened, t.flattened, [&](const SelfAdjoint& q) {
            return jordan_product(v, q);
        });
        acc.add(distance(tu * tv, tv * tu), tr_label(k) + " commute");
        // T_{a (x) 1} = T_a (x) id.
        const SuperOp ta = superop_of(a, a, [&](const SelfAdjoint& q) {
            return jordan_product(a1, q);
        });
        acc.add(distance(tu, tensor_superop(t, ta, superop_identity(b))),
                tr_label(k) + " t-factor");
        // Isometry of the embedding on operator norms.
        const double n1 = std::max(std::abs(min_eigenvalue(a1 - a2)),
                                   std::abs(max_eigenvalue(a1 - a2)));
        const SelfAdjoint du = tensor_effects(t, a1 - a2, one_b);
        const double n2 = std::max(std::abs(min_eigenvalue(du)),
                                   std::abs(max_eigenvalue(du)));
        acc.add(std::abs(n1 - n2), tr_label(k) + " isometry");
    }
    return acc.finish("prop6.6", inst);
}

LawReport check_symmetry_exchange(const BlockSignature& a, const BlockSignature& b,
                                  int trials, uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "lem6.12");
    Acc acc(tol_law);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        // Symmetries from random projections: s = 2r - 1.
        const Projection r1 = random_projection(a, rng);
        const Projection r2 = random_projection(b, rng);
        const SelfAdjoint s1 = 2.0 * r1.sa() - SelfAdjoint::identity(a);
        const SelfAdjoint s2 = 2.0 * r2.sa() - SelfAdjoint::identity(b);
        const Projection p1 = random_projection(a, rng);
        const Projection p2 = random_projection(b, rng);
        const SelfAdjoint q1 = conjugate(s1, p1.sa());
        const SelfAdjoint q2 = conjugate(s2, p2.sa());
        const SelfAdjoint s12 = tensor_effects(t, s1, s2);
        acc.add(distance(jordan_product(s12, s12), SelfAdjoint::identity(t.flattened)),
                tr_label(k) + " involution");
        const SelfAdjoint lhs = quadratic(s12, tensor_effects(t, p1.sa(), p2.sa()));
        acc.add(distance(lhs, tensor_effects(t, q1, q2)), tr_label(k) + " exchange");
        // Exchanged pairs stay sharp.
        acc.add(distance(jordan_product(q1, q1), q1), tr_label(k) + " sharp-left");
    }
    return acc.finish("lem6.12", inst);
}

namespace {

LawReport check_monoidal_structure(const BlockSignature& a, const BlockSignature& b,
                                   int trials, uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "def2.26");
    Acc acc(tol_law);
    // 1 (x) 1 = 1 exactly.
    acc.add(distance(tensor_effects(t, SelfAdjoint::identity(a), SelfAdjoint::identity(b)),
                     SelfAdjoint::identity(t.flattened)),
            "unit");
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const double w = rng.uniform(0.2, 0.8);
        const ChannelMap f = scale_map(w, random_channel(a, a, rng));
        const ChannelMap g = scale_map(1.0 - w, random_channel(a, a, rng));
        const ChannelMap h = random_channel(b, b, rng);
        const auto fg = ovee_maps(f, g);
        if (!fg) {
            acc.add(1.0, tr_label(k) + " factor sum undefined");
            continue;
        }
        const ChannelMap lhs = tensor_maps(t, t, *fg, h);
        const auto rhs = ovee_maps(tensor_maps(t, t, f, h), tensor_maps(t, t, g, h));
        if (!rhs) {
            acc.add(1.0, tr_label(k) + " tensor sum undefined");
            continue;
        }
        acc.add(choi_distance(lhs, *rhs), tr_label(k) + " biadditive");
        acc.add(choi_distance(tensor_maps(t, t, scale_map(0.0, f), h),
                              ChannelMap::zero(t.flattened, t.flattened)),
                tr_label(k) + " zero");
    }
    return acc.finish("def2.26.monoidal", inst);
}

LawReport check_scalar_action(const BlockSignature& a, const BlockSignature& b,
                              int trials, uint64_t seed, double tol_law) {
    // Scalars act through the tensor unit: s.f = lambda o (s (x) f) o
    // lambda^{-1}; on Kraus terms this is multiplication by sqrt(s).
    const BlockSignature unit{{1}};
    const TensorObject ua = tensor_object(unit, a);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "lem2.27");
    Acc acc(tol_law);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const double s = rng.uniform(0.0, 1.0);
        const double u = rng.uniform(0.0, 1.0 - s);
        const ChannelMap f = random_channel(a, a, rng);
        const ChannelMap g = random_channel(a, a, rng);
        // Scalar as an endochannel of the unit object.
        CMat sk(1, 1);
        sk(0, 0) = std::sqrt(s);
        const ChannelMap s_chan{unit, unit, {{0, 0, sk}}};
        const ChannelMap via_tensor = tensor_maps(ua, ua, s_chan, f);
        // The unitors are identities with this flattening.
        acc.add(choi_distance(via_tensor, scale_map(s, f)), tr_label(k) + " action");
        acc.add(choi_distance(compose(g, scale_map(s, f)), scale_map(s, compose(g, f))),
                tr_label(k) + " compose-right");
        acc.add(choi_distance(compose(scale_map(s, g), f), scale_map(s, compose(g, f))),
                tr_label(k) + " compose-left");
        const auto sum = ovee_maps(scale_map(s, f), scale_map(u, f));
        if (!sum) {
            acc.add(1.0, tr_label(k) + " scalar sum undefined");
            continue;
        }
        acc.add(choi_distance(*sum, scale_map(s + u, f)), tr_label(k) + " additive");
        // On predicates the action is composition of scalars.
        const MatrixEffect p = random_effect(a, rng);
        acc.add(distance(s * p.m, heisenberg(scale_map(s, ChannelMap::identity(a)), p.m)),
                tr_label(k) + " predicates");
        // Scalars multiply under the tensor: s.id (x) u.id = (s u).id.
        const TensorObject uu = tensor_object(unit, unit);
        CMat uk(1, 1);
        uk(0, 0) = std::sqrt(u);
        const ChannelMap u_chan{unit, unit, {{0, 0, uk}}};
        acc.add(choi_distance(tensor_maps(uu, uu, s_chan, u_chan),
                              scale_map(s * u, ChannelMap::identity(unit))),
                tr_label(k) + " scalar-product");
    }
    return acc.finish("lem2.27", inst);
}

LawReport check_coherence(const BlockSignature& a, const BlockSignature& b, int trials,
                          uint64_t seed, double tol_law) {
    const TensorObject ab = tensor_object(a, b);
    const TensorObject ba = tensor_object(b, a);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "tensor.coherence");
    Acc acc(tol_law);
    const ChannelMap swap_ab = braiding(ab, ba);
    const ChannelMap swap_ba = braiding(ba, ab);
    acc.add(choi_distance(compose(swap_ba, swap_ab), ChannelMap::identity(ab.flattened)),
            "braiding involutive");
    acc.add(is_total(swap_ab) ? 0.0 : 1.0, "braiding total");
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const MatrixEffect pa = random_effect(a, rng);
        const MatrixEffect pb = random_effect(b, rng);
        // Pulling a swapped tensor predicate back along the braiding.
        const SelfAdjoint swapped = heisenberg(swap_ab, tensor_effects(ba, pb.m, pa.m));
        acc.add(distance(swapped, tensor_effects(ab, pa.m, pb.m)), tr_label(k) + " swap");
    }
    // Unitors and the associator are identities in the flattened encoding.
    const TensorObject ua = tensor_object(BlockSignature{{1}}, a);
    const TensorObject au = tensor_object(a, BlockSignature{{1}});
    acc.add(ua.flattened == a ? 0.0 : 1.0, "left unitor");
    acc.add(au.flattened == a ? 0.0 : 1.0, "right unitor");
    if (ab.flattened.total_dim() * b.total_dim() <= 36) {
        const TensorObject ab_c = tensor_object(ab.flattened, b);
        const TensorObject a_bc = tensor_object(a, tensor_object(b, b).flattened);
        acc.add(ab_c.flattened == a_bc.flattened ? 0.0 : 1.0, "associator");
    }
    return acc.finish("tensor.coherence", inst);
}

LawReport check_tensor_pure(const BlockSignature& a, const BlockSignature& b, int trials,
                            uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "tensor.pure");
    Acc acc(tol_law);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const PureMap f = random_pure(a, a, rng);
        const PureMap g = random_pure(b, b, rng);
        const PureMap fg = tensor_pure(t, t, f, g);  // purity is structural
        acc.add(choi_distance(dagger(fg), tensor_pure(t, t, dagger(f), dagger(g))),
                tr_label(k) + " dagger");
        const PureFactorization fac = pure_factorize(fg);
        acc.add(choi_distance(fac.recomposed(), fg), tr_label(k) + " refactor");
    }
    return acc.finish("tensor.pure", inst);
}

LawReport check_cor63(const BlockSignature& a, const BlockSignature& b, int trials,
                      uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "cor6.3");
    Acc acc(tol_law);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const MatrixEffect pa = random_effect(a, rng);
        const MatrixEffect pb = random_effect(b, rng);
        const SelfAdjoint ab = tensor_effects(t, pa.m, pb.m);
        SelfAdjoint sq = SelfAdjoint::zero(t.flattened);
        for (size_t i = 0; i < sq.blocks.size(); ++i)
            sq.blocks[i] = ab.blocks[i] * ab.blocks[i];
        SelfAdjoint asq = SelfAdjoint::zero(a);
        for (size_t i = 0; i < asq.blocks.size(); ++i)
            asq.blocks[i] = pa.m.blocks[i] * pa.m.blocks[i];
        SelfAdjoint bsq = SelfAdjoint::zero(b);
        for (size_t i = 0; i < bsq.blocks.size(); ++i)
            bsq.blocks[i] = pb.m.blocks[i] * pb.m.blocks[i];
        acc.add(distance(SelfAdjoint::make(sq.sig, sq.blocks),
                         tensor_effects(t, asq, bsq)),
                tr_label(k) + " squares");
        // Sharpness is preserved.
        const Projection ra = random_projection(a, rng);
        const Projection rb = random_projection(b, rng);
        const SelfAdjoint rr = tensor_effects(t, ra.sa(), rb.sa());
        acc.add(distance(jordan_product(rr, rr), rr), tr_label(k) + " sharp");
        acc.add(distance(effect_floor(MatrixEffect::make(rr)).sa(), rr),
                tr_label(k) + " floor");
    }
    return acc.finish("cor6.3", inst);
}

LawReport check_prop64(const BlockSignature& a, const BlockSignature& b, int trials,
                       uint64_t seed, double tol_law) {
    const TensorObject t = tensor_object(a, b);
    const std::string inst = tensor_instance(a, b, trials, seed);
    Rng rng(seed, "prop6.4");
    Acc acc(tol_law);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const Projection p = random_projection(a, rng);
        const Projection p1 = Projection::make(MatrixEffect::make(
            tensor_effects(t, p.sa(), SelfAdjoint::identity(b))));
        const SuperOp lhs = mult_operator(p1);
        const SuperOp rhs = tensor_superop(t, mult_operator(p), superop_identity(b));
        acc.add(distance(lhs, rhs), tr_label(k));
    }
    return acc.finish("prop6.4", inst);
}

}  // namespace

std::vector<LawReport> run_tensor_laws(const BlockSignature& a, const BlockSignature& b,
                                       int trials, uint64_t seed, double tol_law) {
    using Task = std::pair<std::string, std::function<LawReport()>>;
    std::vector<Task> tasks;
    tasks.emplace_back("def2.26.monoidal", [=] {
        return check_monoidal_structure(a, b, trials, seed, tol_law);
    });
    tasks.emplace_back("lem2.27", [=] {
        return check_scalar_action(a, b, trials, seed, tol_law);
    });
    tasks.emplace_back("prop6.2", [=] {
        return check_tensor_assert(a, b, trials, seed, tol_law);
    });
    tasks.emplace_back("cor6.3", [=] { return check_cor63(a, b, trials, seed, tol_law); });
    tasks.emplace_back("prop6.4", [=] { return check_prop64(a, b, trials, seed, tol_law); });
    tasks.emplace_back("prop6.6", [=] {
        return check_jordan_embedding(a, b, trials, seed, tol_law);
    });
    tasks.emplace_back("prop6.8", [=] {
        return check_tensor_quadratic(a, b, trials, seed, tol_law);
    });
    tasks.emplace_back("lem6.12", [=] {
        return check_symmetry_exchange(a, b, trials, seed, tol_law);
    });
    tasks.emplace_back("tensor.pure", [=] {
        return check_tensor_pure(a, b, trials, seed, tol_law);
    });
    tasks.emplace_back("tensor.coherence", [=] {
        return check_coherence(a, b, trials, seed, tol_law);
    });
    return run_law_tasks(std::move(tasks));
}

}  // namespace efflab
