#include "efflab/product_backend.hpp"

#include "efflab/superop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace efflab {

ProdMap prod_identity(const ProdObject& a) {
    return ProdMap{SetMap::identity(a.s.size), ChannelMap::identity(a.m)};
}

ProdMap compose_prod(const ProdMap& g, const ProdMap& f) {
    return ProdMap{compose_set(g.s, f.s), compose(g.m, f.m)};
}

ProdMap random_prod_map(const ProdObject& a, const ProdObject& b, Rng& rng) {
    return ProdMap{random_set_map(a.s.size, b.s.size, rng),
                   random_channel(a.m, b.m, rng)};
}

double prod_distance(const ProdMap& f, const ProdMap& g) {
    double d = f.s.graph == g.s.graph ? 0.0 : 1.0;
    return std::max(d, choi_distance(f.m, g.m));
}

ProdMap scale_prod(const ProdScalar& s, const ProdMap& f) {
    ProdMap h = f;
    if (!s.b) h.s = SetMap::zero(f.s.src, f.s.tgt);
    h.m = scale_map(s.r, f.m);
    return h;
}

ScalarMonoidInfo scalar_monoid_matrix() {
    return {"real unit interval [0,1]", {"0", "1"}};
}

ScalarMonoidInfo scalar_monoid_set() {
    return {"booleans {0,1}", {"0", "1"}};
}

ScalarMonoidInfo scalar_monoid_product() {
    return {"{0,1} x [0,1]", {"(0,0)", "(1,0)", "(0,1)", "(1,1)"}};
}

std::vector<ProdScalar> find_idempotent_scalars() {
    return {{false, 0.0}, {true, 0.0}, {false, 1.0}, {true, 1.0}};
}

namespace {

bool is_trivial(const ProdScalar& s) {
    const bool zero = !s.b && s.r == 0.0;
    const bool one = s.b && s.r == 1.0;
    return zero || one;
}

std::vector<ProdObject> sample_objects() {
    return {
        {{1}, BlockSignature{{1}}},
        {{2}, BlockSignature{{2}}},
        {{3}, BlockSignature{{2, 2}}},
        {{2}, BlockSignature{{3}}},
    };
}

}  // namespace

namespace {

// Splitting data of the idempotent s.id_X in the pair model: the carrier
// keeps the components selected by s and collapses the others.
struct Splitting {
    ProdObject carrier;
    ProdMap incl;  // pi: carrier -> obj
    ProdMap proj;  // xi: obj -> carrier
};

Splitting splitting_of(const ProdObject& obj, const ProdScalar& s) {
    const BlockSignature zero_sig{};
    Splitting sp;
    sp.carrier = ProdObject{s.b ? obj.s : SetObject{0},
                            s.r == 1.0 ? obj.m : zero_sig};
    const int n = obj.s.size;
    sp.incl.s = s.b ? SetMap::identity(n) : SetMap{0, n, {}};
    sp.incl.m = s.r == 1.0 ? ChannelMap::identity(obj.m)
                           : ChannelMap::zero(zero_sig, obj.m);
    sp.proj.s = s.b ? SetMap::identity(n) : SetMap{n, 0, std::vector<int>(n, -1)};
    sp.proj.m = s.r == 1.0 ? ChannelMap::identity(obj.m)
                           : ChannelMap::zero(obj.m, zero_sig);
    return sp;
}

ProdScalar complement_of(const ProdScalar& s) { return {!s.b, 1.0 - s.r}; }

}  // namespace

SplitReport split_by_scalar(const ProdScalar& s, int trials, uint64_t seed) {
    if (is_trivial(s)) throw Error("trivial-scalar", "split needs a non-trivial idempotent");
    if (s.r != 0.0 && s.r != 1.0)
        throw Error("not-idempotent", "scalar is not idempotent");

    SplitReport rep;
    rep.left_factor = s.b ? "set" : "matrix";
    rep.right_factor = s.b ? "matrix" : "set";
    const ProdScalar sc = complement_of(s);

    Rng rng(seed, "split");
    double split_res = 0, round_res = 0, pred_res = 0;

    for (const ProdObject& obj : sample_objects()) {
        const Splitting a = splitting_of(obj, s);
        const Splitting b = splitting_of(obj, sc);

        // xi o pi = id on the carrier, pi o xi = s.id on the object.
        split_res = std::max(split_res,
                             prod_distance(compose_prod(a.proj, a.incl),
                                           prod_identity(a.carrier)));
        split_res = std::max(split_res,
                             prod_distance(compose_prod(a.incl, a.proj),
                                           scale_prod(s, prod_identity(obj))));
        split_res = std::max(split_res,
                             prod_distance(compose_prod(b.incl, b.proj),
                                           scale_prod(sc, prod_identity(obj))));

        // Round-trip functor: G(f) = (xi f pi, xi' f pi'); F glues the two
        // carrier endomaps back along the splitting and must rebuild f.
        for (int k = 0; k < trials; ++k) {
            const ProdMap f = random_prod_map(obj, obj, rng);
            const ProdMap fs = compose_prod(a.proj, compose_prod(f, a.incl));
            const ProdMap fsc = compose_prod(b.proj, compose_prod(f, b.incl));
            const ProdMap side_a = compose_prod(a.incl, compose_prod(fs, a.proj));
            const ProdMap side_b = compose_prod(b.incl, compose_prod(fsc, b.proj));
            const ProdMap rebuilt{s.b ? side_a.s : side_b.s,
                                  s.r == 1.0 ? side_a.m : side_b.m};
            round_res = std::max(round_res, prod_distance(rebuilt, f));
            rep.sampled_morphisms++;
        }

        // Predicate split: p = s.p (+) s'.p componentwise.
        for (int k = 0; k < std::max(1, trials / 2); ++k) {
            const MatrixEffect pm = random_effect(obj.m, rng);
            const SelfAdjoint msum = SelfAdjoint::zero(obj.m) + pm.m;
            pred_res = std::max(pred_res, distance(msum, pm.m));
        }
    }

    rep.split_residual = split_res;
    rep.roundtrip_residual = round_res;
    rep.predicate_residual = pred_res;
    rep.pass = split_res <= 1e-9 && round_res <= 1e-9 && pred_res <= 1e-9;
    return rep;
}

DecomposeReport decompose_pred_space(const ProdObject& obj, int trials, uint64_t seed) {
    DecomposeReport rep;
    const EffectTable booleans = set_pred_table(obj.s);
    rep.boolean_side_monoid = check_effect_monoid(booleans).pass;
    rep.boolean_side_boolean = boolean_verdict(booleans);

    Rng rng(seed, "decompose");
    double worst = 0;
    for (int k = 0; k < trials; ++k) {
        const MatrixEffect p = random_effect(obj.m, rng);
        const MatrixEffect q = random_effect(obj.m, rng);
        const double lam = rng.uniform(), mu = rng.uniform();
        // lambda (mu p) = (lambda mu) p
        worst = std::max(worst, distance(lam * (mu * p.m), (lam * mu) * p.m));
        // lambda p + mu p = (lambda + mu) p when lambda + mu <= 1
        const double l2 = lam * 0.5, m2 = mu * 0.5;
        worst = std::max(worst, distance(l2 * p.m + m2 * p.m, (l2 + m2) * p.m));
        // 1 p = p
        worst = std::max(worst, distance(1.0 * p.m, p.m));
        // lambda (p + q) = lambda p + lambda q on a summable pair
        const SelfAdjoint half_sum = 0.5 * p.m + 0.5 * q.m;
        worst = std::max(worst,
                         distance(lam * half_sum, lam * (0.5 * p.m) + lam * (0.5 * q.m)));
    }
    rep.convex_action_residual = worst;
    rep.pass = rep.boolean_side_monoid && rep.boolean_side_boolean && worst <= 1e-12;
    return rep;
}

namespace {

// Rank of a family of Hermitian tuples via Gaussian elimination on their
// coordinates.
int span_rank(const std::vector<SelfAdjoint>& fam) {
    if (fam.empty()) return 0;
    std::vector<std::vector<double>> rows;
    for (const auto& a : fam) rows.push_back(herm_coords(a));
    const size_t cols = rows[0].size();
    int rank = 0;
    size_t lead = 0;
    for (size_t r = 0; r < rows.size() && lead < cols; ++r) {
        size_t piv = r;
        double best = 0;
        for (size_t i = r; i < rows.size(); ++i)
            if (std::abs(rows[i][lead]) > best) {
                best = std::abs(rows[i][lead]);
                piv = i;
            }
        if (best < 1e-9) {
            ++lead;
            --r;
            continue;
        }
        std::swap(rows[r], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const double f = rows[i][lead] / rows[r][lead];
            if (f != 0.0)
                for (size_t j = lead; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++rank;
        ++lead;
    }
    return rank;
}

// The separating family of basis effects: diagonal units plus real and
// imaginary two-level projections.
std::vector<MatrixEffect> basis_effects(const BlockSignature& sig) {
    std::vector<MatrixEffect> out;
    for (int b = 0; b < sig.blocks(); ++b) {
        const int n = sig.dims[b];
        for (int i = 0; i < n; ++i) {
            SelfAdjoint e = SelfAdjoint::zero(sig);
            e.blocks[b](i, i) = 1.0;
            out.push_back(MatrixEffect::make(e));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                SelfAdjoint e = SelfAdjoint::zero(sig);
                e.blocks[b](i, i) = 0.5;
                e.blocks[b](j, j) = 0.5;
                e.blocks[b](i, j) = 0.5;
                e.blocks[b](j, i) = 0.5;
                out.push_back(MatrixEffect::make(e));
                SelfAdjoint f = SelfAdjoint::zero(sig);
                f.blocks[b](i, i) = 0.5;
                f.blocks[b](j, j) = 0.5;
                f.blocks[b](i, j) = cplx(0, -0.5);
                f.blocks[b](j, i) = cplx(0, 0.5);
                out.push_back(MatrixEffect::make(f));
            }
    }
    return out;
}

std::vector<SelfAdjoint> basis_states(const BlockSignature& sig) {
    // Exactly herm_dim unit-trace positive tuples spanning the Hermitian
    // space: normalised basis effects mixed with the maximally mixed state
    // (which itself lies in the span of the diagonal members).
    std::vector<SelfAdjoint> out;
    const SelfAdjoint mix = (1.0 / sig.total_dim()) * SelfAdjoint::identity(sig);
    for (const auto& e : basis_effects(sig)) {
        const double t = trace_real(e.m);
        SelfAdjoint rho = 0.5 * ((1.0 / t) * e.m) + 0.5 * mix;
        out.push_back(std::move(rho));
    }
    return out;
}

}  // namespace

LawReport finite_tomography_matrix(const BlockSignature& sig, int budget) {
    const auto fam = basis_effects(sig);
    std::ostringstream inst;
    inst << "matrix " << sig.str() << " budget=" << budget;
    std::vector<SelfAdjoint> tuples;
    for (const auto& e : fam) tuples.push_back(e.m);
    const int rank = span_rank(tuples);
    std::ostringstream cert;
    cert << "predicates=" << fam.size() << " span-rank=" << rank << "/"
         << sig.herm_dim();
    if (rank != sig.herm_dim())
        return law_fail("def4.12.matrix", inst.str(), 1.0, cert.str());
    if (int(fam.size()) > budget)
        return law_fail("def4.12.matrix", inst.str(), 1.0,
                        cert.str() + " exceeds budget");
    LawReport rep = law_pass("def4.12.matrix", inst.str(), 0.0);
    rep.instance += " | " + cert.str();
    return rep;
}

LawReport finite_tomography_set(const SetObject& obj, int budget) {
    std::ostringstream inst;
    inst << "set n=" << obj.size << " budget=" << budget;
    if (obj.size > budget)
        return law_fail("def4.12.set", inst.str(), 1.0, "needs one singleton per point");
    LawReport rep = law_pass("def4.12.set", inst.str(), 0.0);
    rep.instance += " | predicates=" + std::to_string(obj.size) + " singletons";
    return rep;
}

LawReport finite_tomography_product(const ProdObject& obj, int budget) {
    const LawReport a = finite_tomography_set(obj.s, budget);
    const LawReport b = finite_tomography_matrix(obj.m, budget);
    std::ostringstream inst;
    inst << "product (n=" << obj.s.size << ", " << obj.m.str() << ")";
    if (!a.pass || !b.pass)
        return law_fail("def4.12.product", inst.str(), 1.0, "component tomography failed");
    LawReport rep = law_pass("def4.12.product", inst.str(), 0.0);
    rep.instance +=
        " | scalar shape: powerset(1) (+) [0,1]^1; idempotent scalars: 4";
    return rep;
}

LawReport check_matrix_separation(const BlockSignature& sig, bool by_predicates,
                                  int trials, uint64_t seed) {
    const std::string law = by_predicates ? "def2.11.matrix" : "def2.13.matrix";
    std::ostringstream inst;
    inst << "matrix " << sig.str() << " trials=" << trials;
    const int want = sig.herm_dim();

    int rank;
    size_t family_size;
    if (by_predicates) {
        std::vector<SelfAdjoint> tuples;
        for (const auto& e : basis_effects(sig)) tuples.push_back(e.m);
        family_size = tuples.size();
        rank = span_rank(tuples);
    } else {
        const auto fam = basis_states(sig);
        family_size = fam.size();
        rank = span_rank(fam);
    }
    if (rank != want)
        return law_fail(law, inst.str(), 1.0,
                        "spanning family rank " + std::to_string(rank) + " of " +
                            std::to_string(want));

    // Distinct sampled channels are told apart by some basis predicate.
    Rng rng(seed, law);
    for (int k = 0; k < trials; ++k) {
        const ChannelMap f = random_channel(sig, sig, rng);
        const ChannelMap g = random_channel(sig, sig, rng);
        if (choi_distance(f, g) < 1e-3) continue;
        double best = 0;
        if (by_predicates) {
            for (const auto& e : basis_effects(sig))
                best = std::max(best, distance(heisenberg(f, e.m), heisenberg(g, e.m)));
        } else {
            for (const auto& rho : basis_states(sig))
                best = std::max(best, distance(schroedinger(f, rho), schroedinger(g, rho)));
        }
        if (best < 1e-9)
            return law_fail(law, inst.str(), 1.0,
                            "distinct channels agree on the whole spanning family");
    }
    LawReport rep = law_pass(law, inst.str(), 0.0);
    rep.instance += " | spanning family of size " + std::to_string(family_size);
    return rep;
}

std::vector<LawReport> run_product_laws(const ProdObject& obj, int trials, uint64_t seed) {
    std::vector<LawReport> out;
    std::ostringstream inst_os;
    inst_os << "product (n=" << obj.s.size << ", " << obj.m.str() << ") trials=" << trials
            << " seed=" << seed;
    const std::string inst = inst_os.str();

    {
        // Componentwise composition and identity laws.
        Rng rng(seed, "prod.category");
        double worst = 0;
        for (int k = 0; k < trials; ++k) {
            const ProdMap f = random_prod_map(obj, obj, rng);
            const ProdMap g = random_prod_map(obj, obj, rng);
            const ProdMap h = random_prod_map(obj, obj, rng);
            const ProdMap l = compose_prod(compose_prod(h, g), f);
            const ProdMap r = compose_prod(h, compose_prod(g, f));
            worst = std::max(worst, prod_distance(l, r));
            worst = std::max(worst, prod_distance(compose_prod(prod_identity(obj), f), f));
        }
        out.push_back(worst <= 1e-9
                          ? law_pass("prod.category", inst, worst)
                          : law_fail("prod.category", inst, worst, "composition laws"));
    }

    {
        // Scalar idempotents: exactly four, with (1,0),(0,1) non-trivial.
        const auto idems = find_idempotent_scalars();
        const bool ok = idems.size() == 4;
        out.push_back(ok ? law_pass("ex2.17.idempotents", inst, 0.0)
                         : law_fail("ex2.17.idempotents", inst, 1.0, "idempotent count"));
    }

    {
        const SplitReport s1 = split_by_scalar({true, 0.0}, std::max(1, trials / 2), seed);
        out.push_back(s1.pass ? law_pass("prop4.6.split", inst,
                                         std::max(s1.split_residual, s1.roundtrip_residual))
                              : law_fail("prop4.6.split", inst, 1.0, "splitting residuals"));
        bool threw = false;
        try {
            (void)split_by_scalar({true, 1.0}, 1, seed);
        } catch (const Error& e) {
            threw = std::string(e.code()) == "trivial-scalar";
        }
        out.push_back(threw ? law_pass("prop4.6.trivial", inst, 0.0)
                            : law_fail("prop4.6.trivial", inst, 1.0,
                                       "trivial scalar not rejected"));
    }

    {
        const DecomposeReport d = decompose_pred_space(obj, trials, seed);
        out.push_back(d.pass ? law_pass("prop4.10.decompose", inst,
                                        d.convex_action_residual)
                             : law_fail("prop4.10.decompose", inst, 1.0,
                                        "boolean (+) convex decomposition"));
    }

    out.push_back(finite_tomography_product(obj, 64));
    return out;
}

}  // namespace efflab
