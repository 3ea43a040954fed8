#include "efflab/laws.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "efflab/product_backend.hpp"

namespace efflab {

namespace {

std::string instance_str(const BlockSignature& sig, int trials, uint64_t seed) {
    std::ostringstream os;
    os << "matrix " << sig.str() << " trials=" << trials << " seed=" << seed;
    return os.str();
}

// Worst-residual accumulator with a first-failure witness.
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
        if (ok()) return law_pass(law, inst, worst);
        return law_fail(law, inst, worst, ce);
    }
};

std::string tr(int k) { return "trial " + std::to_string(k); }

// Effect with handcrafted spectrum: exact 0 and 1 clusters appear with
// positive probability so floors and ceilings are exercised non-trivially.
MatrixEffect structured_effect(const BlockSignature& sig, Rng& rng) {
    const SelfAdjoint h = random_self_adjoint(sig, rng);
    SelfAdjoint out = SelfAdjoint::zero(sig);
    for (const auto& c : spectral(h)) {
        const double dice = rng.uniform();
        double v;
        if (dice < 0.25) v = 0.0;
        else if (dice < 0.5) v = 1.0;
        else v = rng.uniform(0.1, 0.9);
        if (v != 0.0) out = out + v * c.projection;
    }
    return MatrixEffect::make(out);
}

// Two effects with a defined sum.
std::pair<MatrixEffect, MatrixEffect> summable_pair(const BlockSignature& sig, Rng& rng) {
    const double t = rng.uniform(0.15, 0.85);
    const MatrixEffect a = random_effect(sig, rng);
    const MatrixEffect b = random_effect(sig, rng);
    return {MatrixEffect::make(t * a.m), MatrixEffect::make((1.0 - t) * b.m)};
}

// Effects that are functions of one Hermitian, hence commuting.
std::pair<MatrixEffect, MatrixEffect> commuting_pair(const BlockSignature& sig, Rng& rng) {
    const SelfAdjoint h = random_self_adjoint(sig, rng);
    SelfAdjoint a = SelfAdjoint::zero(sig), b = SelfAdjoint::zero(sig);
    for (const auto& c : spectral(h)) {
        a = a + rng.uniform(0.0, 1.0) * c.projection;
        b = b + rng.uniform(0.0, 1.0) * c.projection;
    }
    return {MatrixEffect::make(a), MatrixEffect::make(b)};
}

// Compression of a random effect into a projection's range.
MatrixEffect effect_under(const Projection& r, const BlockSignature& sig, Rng& rng) {
    const MatrixEffect e = random_effect(sig, rng);
    return MatrixEffect::make(conjugate(r.sa(), e.m));
}

// Effect q <= p with the spectrum of q snapped away from the support
// threshold, so ceilings classify stably.
MatrixEffect effect_below(const MatrixEffect& p, const BlockSignature& sig, Rng& rng) {
    const MatrixEffect e = random_effect(sig, rng);
    const SelfAdjoint q0 = conjugate(sqrt_effect(p).m, e.m);
    SelfAdjoint q = SelfAdjoint::zero(sig);
    for (const auto& c : spectral(q0))
        if (c.value > 1e-4) q = q + c.value * c.projection;
    return MatrixEffect::make(q);
}

Projection nonzero_projection(const BlockSignature& sig, Rng& rng) {
    for (int i = 0; i < 32; ++i) {
        const Projection r = random_projection(sig, rng);
        const auto ranks = r.ranks();
        int total = 0;
        for (int x : ranks) total += x;
        if (total > 0 && total < sig.total_dim()) return r;
        if (total > 0 && sig.total_dim() == 1) return r;
    }
    return Projection::make(MatrixEffect::one(sig));
}

SelfAdjoint assoc_sandwich(const SelfAdjoint& a, const SelfAdjoint& b) {
    // a b a via plain block multiplication; the oracle counterpart of the
    // quadratic map.
    SelfAdjoint r = SelfAdjoint::zero(a.sig);
    for (size_t i = 0; i < a.blocks.size(); ++i)
        r.blocks[i] = a.blocks[i] * b.blocks[i] * a.blocks[i];
    return SelfAdjoint::make(r.sig, r.blocks);
}

MatrixEffect mat_square(const MatrixEffect& p) {
    SelfAdjoint r = SelfAdjoint::zero(p.sig());
    for (size_t i = 0; i < p.m.blocks.size(); ++i)
        r.blocks[i] = p.m.blocks[i] * p.m.blocks[i];
    return MatrixEffect::make(SelfAdjoint::make(r.sig, r.blocks));
}

PureMap random_unitary_conj(const BlockSignature& sig, Rng& rng) {
    std::vector<KrausTerm> terms;
    for (int b = 0; b < sig.blocks(); ++b)
        terms.push_back({b, b, random_unitary(sig.dims[b], rng)});
    return PureMap::make(sig, sig, std::move(terms));
}

double proj_violation(const Projection& small, const Projection& big) {
    // How far `small <= big` fails, for projections.
    double worst = 0;
    for (int b = 0; b < small.sig().blocks(); ++b) {
        const CMat qp = big.sa().blocks[b] * small.sa().blocks[b];
        worst = std::max(worst, fro_norm(qp - small.sa().blocks[b]));
    }
    return worst;
}

}  // namespace

Projection ceil_impl(const MatrixEffect& p, const LawOptions& opts) {
    if (opts.ceil == LawOptions::Ceil::standard) return effect_ceil(p);
    SelfAdjoint f = SelfAdjoint::zero(p.sig());
    for (const auto& c : spectral(p.m))
        if (c.value > 0.5) f = f + c.projection;
    return Projection::make(MatrixEffect::make(f));
}

MatrixEffect seq_impl(const MatrixEffect& p, const MatrixEffect& q, const LawOptions& opts) {
    if (opts.seq == LawOptions::Seq::standard) return seq_product(p, q);
    return MatrixEffect::make(conjugate(p.m, q.m));
}

PureMap asrt_impl(const MatrixEffect& p, const LawOptions& opts) {
    if (opts.seq == LawOptions::Seq::standard) return assert_map(p);
    std::vector<KrausTerm> terms;
    for (int b = 0; b < p.sig().blocks(); ++b) {
        if (fro_norm(p.m.blocks[b]) == 0.0) continue;
        terms.push_back({b, b, p.m.blocks[b]});
    }
    return PureMap::make(p.sig(), p.sig(), std::move(terms));
}

std::vector<LawReport> run_law_tasks(
    std::vector<std::pair<std::string, std::function<LawReport()>>> tasks) {
    int threads = int(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EFFECTUS_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) threads = v;
    }
    threads = std::max(1, std::min<int>(threads, int(tasks.size())));

    std::vector<LawReport> out(tasks.size());
    if (threads == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) {
            try {
                out[i] = tasks[i].second();
            } catch (const std::exception& e) {
                out[i] = law_fail(tasks[i].first, "exception", 1.0, e.what());
            }
        }
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                out[i] = tasks[i].second();
            } catch (const std::exception& e) {
                out[i] = law_fail(tasks[i].first, "exception", 1.0, e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

// ---------------------------------------------------------------------------
// Jordan / sequential product suite
// ---------------------------------------------------------------------------

std::vector<LawReport> run_jordan_laws(const BlockSignature& sig, int trials,
                                       uint64_t seed, double tol_law,
                                       const LawOptions& opts) {
    if (trials < 1) throw Error("invalid-argument", "trials must be >= 1");
    const std::string inst = instance_str(sig, trials, seed);
    using Task = std::pair<std::string, std::function<LawReport()>>;
    std::vector<Task> tasks;
    auto add = [&](const std::string& id, std::function<LawReport()> fn) {
        tasks.emplace_back(id, std::move(fn));
    };

    add("def2.57.a", [=] {
        Rng rng(seed, "def2.57.a");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = random_effect(sig, rng);
            const auto [b, c] = summable_pair(sig, rng);
            const MatrixEffect bc = MatrixEffect::make(b.m + c.m);
            const SelfAdjoint lhs = seq_impl(p, bc, opts).m;
            const SelfAdjoint rhs = seq_impl(p, b, opts).m + seq_impl(p, c, opts).m;
            acc.add(distance(lhs, rhs), tr(k));
        }
        return acc.finish("def2.57.a", inst);
    });

    add("def2.57.b", [=] {
        Rng rng(seed, "def2.57.b");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect a = random_effect(sig, rng);
            acc.add(distance(seq_impl(MatrixEffect::one(sig), a, opts).m, a.m), tr(k));
        }
        return acc.finish("def2.57.b", inst);
    });

    add("def2.57.c", [=] {
        Rng rng(seed, "def2.57.c");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection r = nonzero_projection(sig, rng);
            const MatrixEffect a = effect_under(r, sig, rng);
            const MatrixEffect b = effect_under(r.complement(), sig, rng);
            const double fwd = fro_norm(seq_impl(a, b, opts).m);
            const double bwd = fro_norm(seq_impl(b, a, opts).m);
            acc.add(std::max(fwd, bwd), tr(k));
        }
        return acc.finish("def2.57.c", inst);
    });

    add("def2.57.d", [=] {
        Rng rng(seed, "def2.57.d");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const auto [a, b] = commuting_pair(sig, rng);
            const MatrixEffect c = random_effect(sig, rng);
            acc.add(distance(seq_impl(a, b, opts).m, seq_impl(b, a, opts).m),
                    tr(k) + " premise");
            const MatrixEffect bp = b.complement();
            acc.add(distance(seq_impl(a, bp, opts).m, seq_impl(bp, a, opts).m),
                    tr(k) + " orthosupplement");
            const SelfAdjoint lhs = seq_impl(a, seq_impl(b, c, opts), opts).m;
            const SelfAdjoint rhs = seq_impl(seq_impl(a, b, opts), c, opts).m;
            acc.add(distance(lhs, rhs), tr(k) + " associativity");
        }
        return acc.finish("def2.57.d", inst);
    });

    add("def2.57.e", [=] {
        Rng rng(seed, "def2.57.e");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection r = nonzero_projection(sig, rng);
            // c is a two-level function of r, a and b are r-block-diagonal.
            const double l1 = rng.uniform(0.0, 1.0), l2 = rng.uniform(0.0, 1.0);
            const MatrixEffect c = MatrixEffect::make(l1 * r.sa() + l2 * r.complement().sa());
            auto blockdiag = [&](Rng& g) {
                const MatrixEffect e1 = effect_under(r, sig, g);
                const MatrixEffect e2 = effect_under(r.complement(), sig, g);
                return MatrixEffect::make(e1.m + e2.m);
            };
            const MatrixEffect a = blockdiag(rng);
            const MatrixEffect b = blockdiag(rng);
            acc.add(distance(seq_impl(c, a, opts).m, seq_impl(a, c, opts).m),
                    tr(k) + " premise-a");
            acc.add(distance(seq_impl(c, b, opts).m, seq_impl(b, c, opts).m),
                    tr(k) + " premise-b");
            const MatrixEffect ab = seq_impl(a, b, opts);
            acc.add(distance(seq_impl(c, ab, opts).m, seq_impl(ab, c, opts).m),
                    tr(k) + " product");
            const MatrixEffect half_a = MatrixEffect::make(0.5 * a.m);
            const MatrixEffect half_b = MatrixEffect::make(0.5 * b.m);
            const MatrixEffect sum = MatrixEffect::make(half_a.m + half_b.m);
            acc.add(distance(seq_impl(c, sum, opts).m, seq_impl(sum, c, opts).m),
                    tr(k) + " sum");
        }
        return acc.finish("def2.57.e", inst);
    });

    add("def2.57.f", [=] {
        Rng rng(seed, "def2.57.f");
        Acc acc(tol_law);
        for (int k = 0; k < std::max(1, trials / 4) && acc.ok(); ++k) {
            const MatrixEffect a = random_effect(sig, rng);
            const MatrixEffect p = random_effect(sig, rng);
            const MatrixEffect ap = seq_impl(a, p, opts);
            SelfAdjoint prev = SelfAdjoint::zero(sig);
            for (int n = 1; n <= 8; ++n) {
                const MatrixEffect pn = MatrixEffect::make((1.0 - 1.0 / n) * p.m);
                const SelfAdjoint cur = seq_impl(a, pn, opts).m;
                acc.add(std::max(0.0, -min_eigenvalue(cur - prev)),
                        tr(k) + " monotone n=" + std::to_string(n));
                prev = cur;
            }
            const double gap = op_distance(prev, ap.m);
            const double expect = op_distance(MatrixEffect::make((7.0 / 8.0) * ap.m).m, ap.m);
            acc.add(std::abs(gap - expect), tr(k) + " limit");
        }
        return acc.finish("def2.57.f", inst);
    });

    add("def2.41.identity", [=] {
        Rng rng(seed, "def2.41.identity");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            SelfAdjoint a = random_self_adjoint(sig, rng);
            SelfAdjoint b = random_self_adjoint(sig, rng);
            a = (1.0 / std::max(1.0, fro_norm(a))) * a;
            b = (1.0 / std::max(1.0, fro_norm(b))) * b;
            const SelfAdjoint a2 = jordan_product(a, a);
            const SelfAdjoint lhs = jordan_product(jordan_product(a, b), a2);
            const SelfAdjoint rhs = jordan_product(a, jordan_product(b, a2));
            acc.add(distance(lhs, rhs), tr(k));
        }
        return acc.finish("def2.41.identity", inst);
    });

    add("def2.41.square", [=] {
        Rng rng(seed, "def2.41.square");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            SelfAdjoint a = random_self_adjoint(sig, rng);
            const double m = std::max(std::abs(min_eigenvalue(a)),
                                      std::abs(max_eigenvalue(a)));
            if (m > 1.0) a = (1.0 / m) * a;
            const SelfAdjoint sq = jordan_product(a, a);
            acc.add(std::max(0.0, -min_eigenvalue(sq)), tr(k) + " lower");
            acc.add(std::max(0.0, max_eigenvalue(sq) - 1.0), tr(k) + " upper");
        }
        return acc.finish("def2.41.square", inst);
    });

    add("sec2.5.q_aba", [=] {
        Rng rng(seed, "sec2.5.q_aba");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            SelfAdjoint a = random_self_adjoint(sig, rng);
            SelfAdjoint b = random_self_adjoint(sig, rng);
            a = (1.0 / std::max(1.0, fro_norm(a))) * a;
            b = (1.0 / std::max(1.0, fro_norm(b))) * b;
            acc.add(distance(quadratic(a, b), assoc_sandwich(a, b)), tr(k));
        }
        return acc.finish("sec2.5.q_aba", inst);
    });

    add("sec2.5.triple", [=] {
        Rng rng(seed, "sec2.5.triple");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            auto norm1 = [&] {
                SelfAdjoint x = random_self_adjoint(sig, rng);
                return (1.0 / std::max(1.0, fro_norm(x))) * x;
            };
            const SelfAdjoint a = norm1(), b = norm1(), c = norm1();
            acc.add(distance(triple(a, a, c), quadratic(a, c)), tr(k) + " collapse");
            const SelfAdjoint lhs = triple(a + b, b, c);
            const SelfAdjoint rhs = triple(a, b, c) + triple(b, b, c);
            acc.add(distance(lhs, rhs), tr(k) + " bilinear");
            // Associative form (a c b + b c a)/2.
            SelfAdjoint w = SelfAdjoint::zero(sig);
            for (size_t i = 0; i < w.blocks.size(); ++i)
                w.blocks[i] = 0.5 * (a.blocks[i] * c.blocks[i] * b.blocks[i] +
                                     b.blocks[i] * c.blocks[i] * a.blocks[i]);
            acc.add(distance(triple(a, b, c), SelfAdjoint::make(w.sig, w.blocks)),
                    tr(k) + " sandwich");
        }
        return acc.finish("sec2.5.triple", inst);
    });

    add("prop3.4.a", [=] {
        Rng rng(seed, "prop3.4.a");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const Projection fl = effect_floor(p);
            const Projection ce = ceil_impl(p, opts);
            acc.add(std::max(0.0, -min_eigenvalue(p.m - fl.sa())), tr(k) + " floor");
            acc.add(std::max(0.0, -min_eigenvalue(ce.sa() - p.m)), tr(k) + " ceil");
        }
        return acc.finish("prop3.4.a", inst);
    });

    add("prop3.4.b", [=] {
        Rng rng(seed, "prop3.4.b");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const Projection fl = effect_floor(p);
            acc.add(distance(effect_floor(fl.p).sa(), fl.sa()), tr(k) + " floor");
            const Projection ce = ceil_impl(p, opts);
            acc.add(distance(ceil_impl(ce.p, opts).sa(), ce.sa()), tr(k) + " ceil");
        }
        return acc.finish("prop3.4.b", inst);
    });

    add("prop3.4.c", [=] {
        Rng rng(seed, "prop3.4.c");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const MatrixEffect q = effect_below(p, sig, rng);
            acc.add(proj_violation(effect_floor(q), effect_floor(p)), tr(k) + " floor");
            acc.add(proj_violation(ceil_impl(q, opts), ceil_impl(p, opts)), tr(k) + " ceil");
        }
        return acc.finish("prop3.4.c", inst);
    });

    add("prop3.4.d", [=] {
        Rng rng(seed, "prop3.4.d");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            ChannelMap f = random_channel(sig, sig, rng);
            if (k % 3 == 0) f = scale_map(0.7, ChannelMap::identity(sig));
            const MatrixEffect pf = MatrixEffect::make(heisenberg(f, p.m));
            const MatrixEffect cpf = MatrixEffect::make(heisenberg(f, ceil_impl(p, opts).sa()));
            acc.add(distance(ceil_impl(pf, opts).sa(), ceil_impl(cpf, opts).sa()), tr(k));
        }
        return acc.finish("prop3.4.d", inst);
    });

    add("prop3.4.e", [=] {
        Rng rng(seed, "prop3.4.e");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection r = nonzero_projection(sig, rng);
            MatrixEffect p = effect_under(r, sig, rng);
            p = MatrixEffect::make(0.4 * p.m);  // keep the spectrum low
            const Projection cp = ceil_impl(p, opts);
            // Channel whose outputs avoid the support of p.
            ChannelMap f = random_channel(sig, sig, rng);
            const SelfAdjoint killer = SelfAdjoint::identity(sig) - effect_ceil(p).sa();
            for (auto& t : f.kraus) t.k = killer.blocks[t.tgt_block] * t.k;
            acc.add(fro_norm(heisenberg(f, p.m)), tr(k) + " p-side");
            acc.add(fro_norm(heisenberg(f, cp.sa())), tr(k) + " ceil-side");
            // Converse: a generic channel must not separate the two.
            const ChannelMap g = random_channel(sig, sig, rng);
            const double vp = fro_norm(heisenberg(g, p.m));
            const double vc = fro_norm(heisenberg(g, cp.sa()));
            if (vp > 0.01 && vc <= tol_law)
                acc.add(vp, tr(k) + " ceil vanished on a visible predicate");
            if (vc > 0.01 && vp <= tol_law)
                acc.add(vc, tr(k) + " predicate vanished under a visible ceiling");
        }
        return acc.finish("prop3.4.e", inst);
    });

    add("prop3.4.f", [=] {
        Rng rng(seed, "prop3.4.f");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection r = random_projection(sig, rng);
            acc.add(distance(effect_floor(r.p).sa(), r.sa()), tr(k) + " sharp");
            const Projection s = nonzero_projection(sig, rng);
            const MatrixEffect blurred = MatrixEffect::make(0.5 * s.sa());
            const double gap = distance(effect_floor(blurred).sa(), blurred.m);
            if (gap <= 0.05) acc.add(1.0, tr(k) + " non-sharp effect claimed sharp");
        }
        return acc.finish("prop3.4.f", inst);
    });

    add("lem2.59.a", [=] {
        Rng rng(seed, "lem2.59.a");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const Projection cp = ceil_impl(p, opts);
            // ceil(p) lies below every projection above p. Constructed
            // upper bounds first, then the equivalence on random ones.
            const Projection above = sharp_join(cp, random_projection(sig, rng));
            acc.add(std::max(0.0, -min_eigenvalue(above.sa() - p.m)),
                    tr(k) + " constructed-above");
            acc.add(proj_violation(cp, above), tr(k) + " minimal");
            const Projection r = random_projection(sig, rng);
            const double lo = min_eigenvalue(r.sa() - p.m);
            if (lo >= -1e-7) {
                acc.add(proj_violation(cp, r), tr(k) + " random-above");
            } else if (lo <= -1e-3) {
                // r fails to dominate p, so it must not dominate ceil(p).
                if (proj_leq(cp, r, tol_law))
                    acc.add(1.0, tr(k) + " dominates ceil but not p");
            }
        }
        return acc.finish("lem2.59.a", inst);
    });

    add("lem2.59.c", [=] {
        Rng rng(seed, "lem2.59.c");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect a = structured_effect(sig, rng);
            const Projection ca = effect_ceil(a);
            const MatrixEffect c = effect_under(ca.complement(), sig, rng);
            const MatrixEffect b = MatrixEffect::make(ca.sa() + c.m);
            acc.add(distance(seq_impl(b, a, opts).m, a.m), tr(k) + " premise");
            acc.add(std::max(0.0, -min_eigenvalue(b.m - ca.sa())), tr(k) + " conclusion");
            // Random pairs: whenever the premise happens to hold, check it too.
            const MatrixEffect b2 = random_effect(sig, rng);
            if (distance(seq_impl(b2, a, opts).m, a.m) <= tol_law)
                acc.add(std::max(0.0, -min_eigenvalue(b2.m - ca.sa())), tr(k) + " random");
        }
        return acc.finish("lem2.59.c", inst);
    });

    add("def2.61", [=] {
        Rng rng(seed, "def2.61");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = nonzero_projection(sig, rng);
            const MatrixEffect a = random_effect(sig, rng);
            SelfAdjoint rho = conjugate(p.sa(), random_density(sig, rng));
            const double t = trace_real(rho);
            if (t < 1e-9) continue;
            rho = (1.0 / t) * rho;
            const double lhs = inner(rho, seq_impl(p.p, a, opts).m);
            const double rhs = inner(rho, a.m);
            acc.add(std::abs(lhs - rhs), tr(k));
        }
        return acc.finish("def2.61", inst);
    });

    add("cor5.14", [=] {
        Rng rng(seed, "cor5.14");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = random_projection(sig, rng);
            const Projection q = random_projection(sig, rng);
            const MatrixEffect pq = seq_impl(p.p, q.p, opts);
            const MatrixEffect qp = seq_impl(q.p, p.p, opts);
            acc.add(distance(mat_square(pq).m, seq_impl(p.p, qp, opts).m), tr(k));
        }
        return acc.finish("cor5.14", inst);
    });

    add("def2.62", [=] {
        Rng rng(seed, "def2.62");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = random_projection(sig, rng);
            const Projection q = random_projection(sig, rng);
            const MatrixEffect qp = seq_impl(q.p, p.p, opts);
            const SelfAdjoint lhs = seq_impl(q.p, seq_impl(p.p, q.p, opts), opts).m;
            acc.add(distance(lhs, mat_square(qp).m), tr(k));
        }
        return acc.finish("def2.62", inst);
    });

    add("def5.1.unital", [=] {
        Rng rng(seed, "def5.1.unital");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = random_effect(sig, rng);
            acc.add(distance(truth_of(asrt_impl(p, opts)).m, p.m), tr(k));
        }
        return acc.finish("def5.1.unital", inst);
    });

    add("prop5.13", [=] {
        Rng rng(seed, "prop5.13");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = random_effect(sig, rng);
            const MatrixEffect q = random_effect(sig, rng);
            const MatrixEffect pq = seq_impl(p, q, opts);
            const PureMap ap = asrt_impl(p, opts);
            const PureMap aq = asrt_impl(q, opts);
            const PureMap apq = asrt_impl(pq, opts);
            const PureMap lhs = compose(apq, apq);
            const PureMap rhs = compose(ap, compose(aq, compose(aq, ap)));
            acc.add(choi_distance(lhs, rhs), tr(k));
        }
        return acc.finish("prop5.13", inst);
    });

    add("prop5.17", [=] {
        Rng rng(seed, "prop5.17");
        Acc acc(tol_law);
        for (int k = 0; k < std::max(1, trials / 10) && acc.ok(); ++k) {
            const Projection p = random_projection(sig, rng);
            const SuperOp tp = mult_operator(p);
            const SuperOp jm = superop_of(sig, sig, [&](const SelfAdjoint& q) {
                return jordan_product(p.sa(), q);
            });
            acc.add(distance(tp, jm), tr(k) + " operator");
            const SelfAdjoint q = random_self_adjoint(sig, rng);
            acc.add(distance(tp.apply(q), jordan_product(p.sa(), q)), tr(k) + " sample");
        }
        return acc.finish("prop5.17", inst);
    });

    add("prop5.16", [=] {
        Rng rng(seed, "prop5.16");
        Acc acc(tol_law);
        for (int k = 0; k < std::max(1, trials / 20) && acc.ok(); ++k) {
            const Projection p = random_projection(sig, rng);
            const LawReport r =
                check_order_derivation(derivation_operator(p), {-1.0, 1.0, -5.0, 5.0}, 10,
                                       Rng::mix(seed, "prop5.16-" + std::to_string(k)));
            if (!r.pass) acc.add(std::max(r.residual, 1.0), tr(k));
            else acc.add(r.residual, tr(k));
        }
        return acc.finish("prop5.16", inst);
    });

    add("sec2.5.seq_le_ceil", [=] {
        Rng rng(seed, "sec2.5.seq_le_ceil");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const MatrixEffect q = random_effect(sig, rng);
            const MatrixEffect pq = seq_product(p, q);
            acc.add(std::max(0.0, -min_eigenvalue(effect_ceil(p).sa() - pq.m)), tr(k));
        }
        return acc.finish("sec2.5.seq_le_ceil", inst);
    });

    return run_law_tasks(std::move(tasks));
}

// ---------------------------------------------------------------------------
// Diamond suite
// ---------------------------------------------------------------------------

std::vector<LawReport> run_diamond_laws(const BlockSignature& sig, int trials,
                                        uint64_t seed, double tol_law,
                                        const LawOptions& opts) {
    if (trials < 1) throw Error("invalid-argument", "trials must be >= 1");
    const std::string inst = instance_str(sig, trials, seed);
    using Task = std::pair<std::string, std::function<LawReport()>>;
    std::vector<Task> tasks;
    auto add = [&](const std::string& id, std::function<LawReport()> fn) {
        tasks.emplace_back(id, std::move(fn));
    };
    (void)opts;

    add("prop3.7.a", [=] {
        Rng rng(seed, "prop3.7.a");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const Projection p = random_projection(sig, rng);
            const Projection q = sharp_join(p, random_projection(sig, rng));
            acc.add(proj_violation(diamond(f, p), diamond(f, q)), tr(k) + " diamond");
            acc.add(proj_violation(box_of(f, p), box_of(f, q)), tr(k) + " box");
        }
        return acc.finish("prop3.7.a", inst);
    });

    add("prop3.7.b", [=] {
        Rng rng(seed, "prop3.7.b");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            // Premise built from one side, conclusion checked on the other.
            const Projection q = random_projection(sig, rng);
            const Projection p = lower_diamond(f, q).complement();
            double overlap = 0;
            const Projection dia = diamond(f, p);
            for (int b = 0; b < sig.blocks(); ++b)
                overlap = std::max(overlap,
                                   fro_norm(dia.sa().blocks[b] * q.sa().blocks[b]));
            acc.add(overlap, tr(k) + " forward");
            const Projection p2 = random_projection(sig, rng);
            const Projection q2 = diamond(f, p2).complement();
            double overlap2 = 0;
            const Projection low = lower_diamond(f, q2);
            for (int b = 0; b < sig.blocks(); ++b)
                overlap2 = std::max(overlap2,
                                    fro_norm(low.sa().blocks[b] * p2.sa().blocks[b]));
            acc.add(overlap2, tr(k) + " backward");
        }
        return acc.finish("prop3.7.b", inst);
    });

    add("prop3.7.c", [=] {
        Rng rng(seed, "prop3.7.c");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const Projection q = random_projection(sig, rng);
            const Projection p = lower_diamond(f, q);
            acc.add(proj_violation(q, box_of(f, p)), tr(k) + " unit");
            const Projection p2 = random_projection(sig, rng);
            const Projection q2 = box_of(f, p2);
            acc.add(proj_violation(lower_diamond(f, q2), p2), tr(k) + " counit");
        }
        return acc.finish("prop3.7.c", inst);
    });

    add("prop3.7.d", [=] {
        Rng rng(seed, "prop3.7.d");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const Projection p = random_projection(sig, rng);
            const Projection q = sharp_join(p, random_projection(sig, rng));
            acc.add(proj_violation(lower_diamond(f, p), lower_diamond(f, q)), tr(k));
        }
        return acc.finish("prop3.7.d", inst);
    });

    add("prop3.7.e", [=] {
        Rng rng(seed, "prop3.7.e");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const Projection q = random_projection(sig, rng);
            const Projection lhs = lower_diamond(f, box_of(f, lower_diamond(f, q)));
            acc.add(distance(lhs.sa(), lower_diamond(f, q).sa()), tr(k));
        }
        return acc.finish("prop3.7.e", inst);
    });

    add("prop3.7.f", [=] {
        Rng rng(seed, "prop3.7.f");
        Acc acc(tol_law);
        const ChannelMap id = ChannelMap::identity(sig);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            Rng local(Rng::mix(seed, "prop3.7.f-" + std::to_string(k)));
            const Projection p = random_projection(sig, local);
            acc.add(distance(diamond(id, p).sa(), p.sa()), tr(k) + " diamond");
            acc.add(distance(box_of(id, p).sa(), p.sa()), tr(k) + " box");
            acc.add(distance(lower_diamond(id, p).sa(), p.sa()), tr(k) + " lower");
        }
        return acc.finish("prop3.7.f", inst);
    });

    add("prop3.7.g", [=] {
        Rng rng(seed, "prop3.7.g");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const ChannelMap g = random_channel(sig, sig, rng);
            const ChannelMap fg = compose(f, g);
            const Projection p = random_projection(sig, rng);
            acc.add(distance(diamond(fg, p).sa(), diamond(g, diamond(f, p)).sa()),
                    tr(k) + " diamond");
            acc.add(distance(box_of(fg, p).sa(), box_of(g, box_of(f, p)).sa()),
                    tr(k) + " box");
        }
        return acc.finish("prop3.7.g", inst);
    });

    add("prop3.7.h", [=] {
        Rng rng(seed, "prop3.7.h");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const ChannelMap g = random_channel(sig, sig, rng);
            const ChannelMap fg = compose(f, g);
            const Projection q = random_projection(sig, rng);
            acc.add(
                distance(lower_diamond(fg, q).sa(), lower_diamond(f, lower_diamond(g, q)).sa()),
                tr(k));
        }
        return acc.finish("prop3.7.h", inst);
    });

    add("diamond.adjoint_symmetry", [=] {
        Rng rng(seed, "diamond.adjoint_symmetry");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const PureMap f = random_pure(sig, sig, rng);
            const PureMap fd = dagger(f);
            const Projection p = random_projection(sig, rng);
            acc.add(distance(diamond(f, p).sa(), lower_diamond(fd, p).sa()),
                    tr(k) + " forward");
            acc.add(distance(diamond(fd, p).sa(), lower_diamond(f, p).sa()),
                    tr(k) + " backward");
        }
        return acc.finish("diamond.adjoint_symmetry", inst);
    });

    add("lem3.13.a", [=] {
        Rng rng(seed, "lem3.13.a");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const Projection p = sharp_join(image_of(f), random_projection(sig, rng));
            const PureMap ap = assert_map(p.p);
            acc.add(choi_distance(compose(ap.channel(), f), f), tr(k) + " forward");
            // Reverse: maps of the form asrt_p o g satisfy im <= p.
            const ChannelMap g = compose(ap.channel(), random_channel(sig, sig, rng));
            acc.add(proj_violation(image_of(g), p), tr(k) + " backward");
        }
        return acc.finish("lem3.13.a", inst);
    });

    add("lem3.13.b", [=] {
        Rng rng(seed, "lem3.13.b");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = nonzero_projection(sig, rng);
            const PureMap ap = assert_map(p.p);
            const ChannelMap g = compose(random_channel(sig, sig, rng), ap.channel());
            acc.add(choi_distance(compose(g, ap.channel()), g), tr(k) + " fix");
            acc.add(std::max(0.0, -min_eigenvalue(p.sa() - truth_of(g).m)),
                    tr(k) + " truth-below");
        }
        return acc.finish("lem3.13.b", inst);
    });

    add("lem5.7", [=] {
        Rng rng(seed, "lem5.7");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = random_effect(sig, rng);
            const PureMap ap = assert_map(p);
            acc.add(choi_distance(compose(ap, ap), assert_map(mat_square(p))), tr(k));
        }
        return acc.finish("lem5.7", inst);
    });

    add("lem5.8", [=] {
        Rng rng(seed, "lem5.8");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = nonzero_projection(sig, rng);
            const Comprehension c = comprehension(p.p);
            const Filter fl = filter_of(p.p);
            acc.add(choi_distance(compose(fl.map, c.map), PureMap::identity(c.carrier)),
                    tr(k) + " retraction");
            acc.add(choi_distance(compose(c.map, fl.map), assert_map(p.p)),
                    tr(k) + " assert");
        }
        return acc.finish("lem5.8", inst);
    });

    add("prop5.9", [=] {
        Rng rng(seed, "prop5.9");
        Acc acc(1e-9);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = nonzero_projection(sig, rng);
            const Comprehension c = comprehension(p.p);
            const Filter fl = filter_of(p.p);
            acc.add(choi_distance(dagger(c.map), fl.map), tr(k));
        }
        return acc.finish("prop5.9", inst);
    });

    add("cor5.10", [=] {
        Rng rng(seed, "cor5.10");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const PureMap u = random_unitary_conj(sig, rng);
            acc.add(choi_distance(compose(dagger(u), u), PureMap::identity(sig)),
                    tr(k) + " left");
            acc.add(choi_distance(compose(u, dagger(u)), PureMap::identity(sig)),
                    tr(k) + " right");
        }
        return acc.finish("cor5.10", inst);
    });

    add("lem5.12", [=] {
        Rng rng(seed, "lem5.12");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const PureMap f = random_pure(sig, sig, rng);
            const PureFactorization fac = pure_factorize(f);
            acc.add(choi_distance(fac.recomposed(), f), tr(k) + " recompose");
            acc.add(choi_distance(compose(dagger(fac.iso), fac.iso),
                                  PureMap::identity(fac.iso.source)),
                    tr(k) + " unitary");
        }
        return acc.finish("lem5.12", inst);
    });

    add("pure.closure", [=] {
        Rng rng(seed, "pure.closure");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            // Compositions of pure maps re-factorise through the canonical
            // compr o iso o filter o assert form.
            const PureMap g1 = random_pure(sig, sig, rng);
            const PureMap g2 = random_pure(sig, sig, rng);
            const PureMap chain = compose(g2, g1);
            const PureFactorization fac = pure_factorize(chain);
            acc.add(choi_distance(fac.recomposed(), chain), tr(k) + " refactor");
            // A recomposition of factor pieces in the pure shape also
            // refactorises: compr o filter chained with compr o filter.
            const MatrixEffect p = structured_effect(sig, rng);
            const PureMap a1 = assert_map(p);  // = compr o filter of p
            const MatrixEffect q = structured_effect(sig, rng);
            const PureMap chain2 = compose(assert_map(q), a1);
            const PureFactorization fac2 = pure_factorize(chain2);
            acc.add(choi_distance(fac2.recomposed(), chain2), tr(k) + " asserts");
            // A composition of filters is a filter for the pulled-back
            // predicate: epic (full image) with the composite truth.
            const Filter f1 = filter_of(p);
            if (!f1.carrier.is_zero_object()) {
                const MatrixEffect p2 = random_effect(f1.carrier, rng);
                const PureMap filters = compose(filter_of(p2).map, f1.map);
                acc.add(distance(truth_of(filters).m, heisenberg(f1.map, p2.m)),
                        tr(k) + " truth");
                const Projection im = image_of(filters);
                if (!im.sig().is_zero_object())
                    acc.add(distance(im.sa(), SelfAdjoint::identity(im.sig())),
                            tr(k) + " epic");
            }
        }
        return acc.finish("pure.closure", inst);
    });

    add("prop5.4", [=] {
        Rng rng(seed, "prop5.4");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            acc.add(distance(image_of(assert_map(p)).sa(), effect_ceil(p).sa()),
                    tr(k) + " image");
            const Projection r = random_projection(sig, rng);
            const PureMap ar = assert_map(r.p);
            acc.add(choi_distance(compose(ar, ar), ar), tr(k) + " idempotent");
            const Projection s = nonzero_projection(sig, rng);
            const MatrixEffect blurred = MatrixEffect::make(0.5 * s.sa());
            const PureMap ab = assert_map(blurred);
            if (choi_distance(compose(ab, ab), ab) <= 0.01)
                acc.add(1.0, tr(k) + " non-sharp assert looked idempotent");
        }
        return acc.finish("prop5.4", inst);
    });

    add("prop5.5", [=] {
        Rng rng(seed, "prop5.5");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const Projection im = image_of(f);
            acc.add(distance(heisenberg(f, im.sa()), heisenberg(f, SelfAdjoint::identity(sig))),
                    tr(k) + " certain");
            const Projection q = sharp_join(im, random_projection(sig, rng));
            acc.add(proj_violation(im, q), tr(k) + " minimal");
        }
        return acc.finish("prop5.5", inst);
    });

    add("lem3.2", [=] {
        Rng rng(seed, "lem3.2");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const ChannelMap g = random_channel(sig, sig, rng);
            acc.add(proj_violation(image_of(compose(f, g)), image_of(f)), tr(k) + " mono");
            const PureMap u = random_unitary_conj(sig, rng);
            acc.add(distance(image_of(compose(f, u.channel())).sa(), image_of(f).sa()),
                    tr(k) + " iso");
        }
        return acc.finish("lem3.2", inst);
    });

    add("prop3.22", [=] { return check_oml(sig, trials, seed, tol_law); });

    add("prop3.21", [=] {
        Rng rng(seed, "prop3.21");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = random_projection(sig, rng);
            const Projection q = effect_ceil(MatrixEffect::make(
                conjugate(p.complement().sa(), random_projection(sig, rng).sa())));
            // p and q are orthogonal projections; the sum is their join.
            const MatrixEffect sum = MatrixEffect::make(p.sa() + q.sa());
            acc.add(distance(sum.m, sharp_join(p, q).sa()), tr(k));
        }
        return acc.finish("prop3.21", inst);
    });

    add("lem3.20", [=] {
        Rng rng(seed, "lem3.20");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const Projection p = random_projection(sig, rng);
            acc.add(fro_norm(sharp_meet(p, p.complement()).sa()), tr(k) + " meet");
            acc.add(distance(sharp_join(p, p.complement()).sa(),
                             SelfAdjoint::identity(sig)),
                    tr(k) + " join");
        }
        return acc.finish("lem3.20", inst);
    });

    add("asrt.self_adjoint", [=] {
        Rng rng(seed, "asrt.self_adjoint");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const PureMap ap = assert_map(p);
            const Projection r = random_projection(sig, rng);
            acc.add(distance(diamond(ap, r).sa(), lower_diamond(ap, r).sa()), tr(k));
        }
        return acc.finish("asrt.self_adjoint", inst);
    });

    add("diamond.scale", [=] {
        Rng rng(seed, "diamond.scale");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const ChannelMap half = scale_map(0.5, f);
            const Projection p = random_projection(sig, rng);
            acc.add(distance(diamond(half, p).sa(), diamond(f, p).sa()), tr(k));
        }
        return acc.finish("diamond.scale", inst);
    });

    add("def3.14.dagger", [=] {
        Rng rng(seed, "def3.14.dagger");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const PureMap f = random_pure(sig, sig, rng);
            const PureMap g = random_pure(sig, sig, rng);
            acc.add(choi_distance(dagger(dagger(f)), f), tr(k) + " involution");
            acc.add(choi_distance(dagger(compose(f, g)), compose(dagger(g), dagger(f))),
                    tr(k) + " antihom");
        }
        return acc.finish("def3.14.dagger", inst);
    });

    add("def2.21.universal", [=] {
        Rng rng(seed, "def2.21.universal");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const Projection fl = effect_floor(p);
            const Comprehension c = comprehension(p);
            if (c.carrier.is_zero_object()) continue;
            // f lands where p is certain, so p o f = 1 o f; the mediator is
            // recovered through the paired filter pi^dagger.
            const ChannelMap h = random_channel(sig, sig, rng);
            const ChannelMap f = compose(assert_map(fl.p).channel(), h);
            acc.add(distance(heisenberg(f, p.m), heisenberg(f, SelfAdjoint::identity(sig))),
                    tr(k) + " premise");
            const ChannelMap mediator = compose(dagger(c.map).channel(), f);
            acc.add(choi_distance(compose(c.map.channel(), mediator), f),
                    tr(k) + " mediate");
        }
        return acc.finish("def2.21.universal", inst);
    });

    add("def2.22.universal", [=] {
        Rng rng(seed, "def2.22.universal");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const MatrixEffect p = structured_effect(sig, rng);
            const Filter fl = filter_of(p);
            acc.add(distance(truth_of(fl.map).m, p.m), tr(k) + " truth");
            if (fl.carrier.is_zero_object()) continue;
            // g with truth below p factors through the filter; the mediator
            // composes with a right section of the filter.
            const ChannelMap h = random_channel(sig, sig, rng);
            const ChannelMap g = compose(h, assert_map(p).channel());
            // t.k = W^dagger sqrt(p); a linear right-inverse conjugates by
            // sqrt(p)^+ W = p^+ t.k^dagger. It is not subunital on its own,
            // so it is only ever used composed.
            const SelfAdjoint inv_sqrt = pseudo_inv_sqrt(p.m, tol().sharp);
            std::vector<KrausTerm> sec;
            for (const auto& t : fl.map.terms) {
                const CMat pinv = inv_sqrt.blocks[t.src_block] * inv_sqrt.blocks[t.src_block];
                sec.push_back({t.tgt_block, t.src_block, pinv * adjoint(t.k)});
            }
            const ChannelMap section{fl.carrier, sig, std::move(sec)};
            acc.add(choi_distance(compose(fl.map.channel(), section),
                                  ChannelMap::identity(fl.carrier)),
                    tr(k) + " section");
            const ChannelMap mediator = compose(g, section);
            acc.add(choi_distance(compose(mediator, fl.map.channel()), g),
                    tr(k) + " mediate");
        }
        return acc.finish("def2.22.universal", inst);
    });

    return run_law_tasks(std::move(tasks));
}

// ---------------------------------------------------------------------------
// Orthomodular lattice of sharp predicates
// ---------------------------------------------------------------------------

LawReport check_oml(const BlockSignature& sig, int trials, uint64_t seed, double tol_law) {
    Rng rng(seed, "prop3.22");
    Acc acc(tol_law);
    const std::string inst = instance_str(sig, trials, seed);
    for (int k = 0; k < trials && acc.ok(); ++k) {
        const Projection p = random_projection(sig, rng);
        const Projection q = random_projection(sig, rng);
        const Projection m = sharp_meet(p, q);
        acc.add(distance(m.sa(), sharp_meet_by_ranges(p, q).sa()), tr(k) + " meet-oracle");
        acc.add(distance(m.sa(), sharp_meet(q, p).sa()), tr(k) + " meet-symmetric");
        acc.add(proj_violation(m, p), tr(k) + " lower-p");
        acc.add(proj_violation(m, q), tr(k) + " lower-q");
        // De Morgan.
        acc.add(distance(sharp_join(p, q).sa(),
                         sharp_meet(p.complement(), q.complement()).complement().sa()),
                tr(k) + " de-morgan");
        // Complement laws.
        acc.add(fro_norm(sharp_meet(p, p.complement()).sa()), tr(k) + " excluded-middle");
        acc.add(distance(sharp_join(p, p.complement()).sa(), SelfAdjoint::identity(sig)),
                tr(k) + " complement-join");
        // Orthomodularity on a comparable pair p <= j.
        const Projection j = sharp_join(p, q);
        const Projection rebuilt = sharp_join(p, sharp_meet(j, p.complement()));
        acc.add(distance(rebuilt.sa(), j.sa()), tr(k) + " orthomodular");
        // Absorption.
        acc.add(distance(sharp_meet(p, sharp_join(p, q)).sa(), p.sa()),
                tr(k) + " absorption");
    }
    return acc.finish("prop3.22", inst);
}

// ---------------------------------------------------------------------------
// Effectus-level laws of the matrix backend
// ---------------------------------------------------------------------------

std::vector<LawReport> run_effectus_laws(const BlockSignature& sig, int trials,
                                         uint64_t seed, double tol_law) {
    if (trials < 1) throw Error("invalid-argument", "trials must be >= 1");
    const std::string inst = instance_str(sig, trials, seed);
    using Task = std::pair<std::string, std::function<LawReport()>>;
    std::vector<Task> tasks;
    auto add = [&](const std::string& id, std::function<LawReport()> fn) {
        tasks.emplace_back(id, std::move(fn));
    };

    add("def2.2.pcm", [=] {
        Rng rng(seed, "def2.2.pcm");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            ChannelMap f = random_channel(sig, sig, rng);
            ChannelMap g = random_channel(sig, sig, rng);
            ChannelMap h = random_channel(sig, sig, rng);
            // Scale into a jointly summable triple.
            f = scale_map(1.0 / 3, f);
            g = scale_map(1.0 / 3, g);
            h = scale_map(1.0 / 3, h);
            const auto fg = ovee_maps(f, g);
            const auto gf = ovee_maps(g, f);
            if (!fg || !gf) {
                acc.add(1.0, tr(k) + " summability lost");
                continue;
            }
            acc.add(choi_distance(*fg, *gf), tr(k) + " commutative");
            const auto fg_h = ovee_maps(*fg, h);
            const auto gh = ovee_maps(g, h);
            const auto f_gh = gh ? ovee_maps(f, *gh) : std::nullopt;
            if (!fg_h || !f_gh) {
                acc.add(1.0, tr(k) + " associativity definedness");
                continue;
            }
            acc.add(choi_distance(*fg_h, *f_gh), tr(k) + " associative");
            const auto fz = ovee_maps(f, ChannelMap::zero(sig, sig));
            acc.add(choi_distance(*fz, f), tr(k) + " unit");
            // Biadditive composition.
            const ChannelMap e = random_channel(sig, sig, rng);
            acc.add(choi_distance(compose(e, *fg),
                                  *ovee_maps(compose(e, f), compose(e, g))),
                    tr(k) + " post-compose");
            acc.add(choi_distance(compose(*fg, e),
                                  *ovee_maps(compose(f, e), compose(g, e))),
                    tr(k) + " pre-compose");
        }
        return acc.finish("def2.2.pcm", inst);
    });

    add("def2.8.zero", [=] {
        Rng rng(seed, "def2.8.zero");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const ChannelMap z = scale_map(0.0, f);
            acc.add(fro_norm(truth_of(z).m), tr(k) + " truth");
            acc.add(choi_distance(z, ChannelMap::zero(sig, sig)), tr(k) + " map");
            // Converse sampling: visible truth cannot come from the zero map.
            if (fro_norm(truth_of(f).m) <= tol_law &&
                choi_distance(f, ChannelMap::zero(sig, sig)) > 0.01)
                acc.add(1.0, tr(k) + " nonzero map with zero truth");
        }
        return acc.finish("def2.8.zero", inst);
    });

    add("def2.8.perp", [=] {
        Rng rng(seed, "def2.8.perp");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const double t = rng.uniform(0.2, 0.8);
            const ChannelMap f = scale_map(t, random_channel(sig, sig, rng, true));
            const ChannelMap g = scale_map(1.0 - t, random_channel(sig, sig, rng, true));
            // Truths are summable by construction; the maps must be too.
            const auto s = ovee_maps(f, g);
            if (!s) {
                acc.add(1.0, tr(k) + " map sum undefined");
                continue;
            }
            acc.add(distance(truth_of(*s).m, truth_of(f).m + truth_of(g).m),
                    tr(k) + " truth additive");
        }
        return acc.finish("def2.8.perp", inst);
    });

    add("finpac.untying", [=] {
        Rng rng(seed, "finpac.untying");
        Acc acc(tol_law);
        const CoproductObj cp = coproduct(sig, sig);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const double t = rng.uniform(0.2, 0.8);
            const ChannelMap f = scale_map(t, random_channel(sig, sig, rng));
            const ChannelMap g = scale_map(1.0 - t, random_channel(sig, sig, rng));
            if (!ovee_maps(f, g)) {
                acc.add(1.0, tr(k) + " pair not summable");
                continue;
            }
            const auto tied = ovee_maps(compose(cp.inj_left(), f), compose(cp.inj_right(), g));
            if (!tied) acc.add(1.0, tr(k) + " untied pair not summable");
        }
        return acc.finish("finpac.untying", inst);
    });

    add("coproduct.laws", [=] {
        Rng rng(seed, "coproduct.laws");
        Acc acc(tol_law);
        const CoproductObj cp = coproduct(sig, sig);
        acc.add(choi_distance(compose(cp.proj_left(), cp.inj_left()),
                              ChannelMap::identity(sig)),
                "retract-left");
        acc.add(choi_distance(compose(cp.proj_right(), cp.inj_right()),
                              ChannelMap::identity(sig)),
                "retract-right");
        acc.add(choi_distance(compose(cp.proj_left(), cp.inj_right()),
                              ChannelMap::zero(sig, sig)),
                "annihilate");
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const double t = rng.uniform(0.2, 0.8);
            const ChannelMap f1 = scale_map(t, random_channel(sig, sig, rng));
            const ChannelMap f2 = scale_map(1.0 - t, random_channel(sig, sig, rng));
            const auto tup = cotuple(cp, f1, f2);
            if (!tup) {
                acc.add(1.0, tr(k) + " tuple undefined");
                continue;
            }
            acc.add(choi_distance(compose(cp.proj_left(), *tup), f1), tr(k) + " beta-left");
            acc.add(choi_distance(compose(cp.proj_right(), *tup), f2), tr(k) + " beta-right");
        }
        return acc.finish("coproduct.laws", inst);
    });

    add("def2.10.contravariant", [=] {
        Rng rng(seed, "def2.10.contravariant");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            const ChannelMap g = random_channel(sig, sig, rng);
            const MatrixEffect p = random_effect(sig, rng);
            const SelfAdjoint lhs = heisenberg(compose(g, f), p.m);
            const SelfAdjoint rhs = heisenberg(f, heisenberg(g, p.m));
            acc.add(distance(lhs, rhs), tr(k));
        }
        return acc.finish("def2.10.contravariant", inst);
    });

    add("compose.zero", [=] {
        Rng rng(seed, "compose.zero");
        Acc acc(tol_law);
        for (int k = 0; k < trials && acc.ok(); ++k) {
            const ChannelMap f = random_channel(sig, sig, rng);
            acc.add(choi_distance(compose(f, ChannelMap::zero(sig, sig)),
                                  ChannelMap::zero(sig, sig)),
                    tr(k));
        }
        return acc.finish("compose.zero", inst);
    });

    add("def2.11.matrix", [=] {
        return check_matrix_separation(sig, true, std::max(1, trials / 5), seed);
    });
    add("def2.13.matrix", [=] {
        return check_matrix_separation(sig, false, std::max(1, trials / 5), seed);
    });

    return run_law_tasks(std::move(tasks));
}

// ---------------------------------------------------------------------------
// Law statements
// ---------------------------------------------------------------------------

std::string law_statement(const std::string& id) {
    static const std::map<std::string, std::string> catalog = {
        {"def2.2.pcm", "hom-set partial sums are commutative, associative, unital; composition biadditive"},
        {"def2.6", "effect algebra axioms: partial sum, unique orthosupplement, positivity"},
        {"def2.8.zero", "1 o f = 0 implies f = 0"},
        {"def2.8.perp", "1 o f perp 1 o g implies f perp g"},
        {"def2.10.contravariant", "p o (g o f) = (p o g) o f"},
        {"def2.15", "effect monoid: unital, bi-additive, associative product"},
        {"def2.21.universal", "comprehension: p o pi = 1 o pi, final among such maps"},
        {"def2.22.universal", "filter: 1 o xi = p, initial among maps with truth below p"},
        {"def2.26.monoidal", "1 x 1 = 1, tensor biadditive, 0 x h = 0"},
        {"def2.35", "orthoalgebra: only 0 is self-summable"},
        {"def2.41.identity", "(a*b)*(a*a) = a*(b*(a*a))"},
        {"def2.41.square", "-1 <= a <= 1 implies 0 <= a*a <= 1"},
        {"def2.57", "sequential product axioms a-e"},
        {"def2.57.a", "a&(b+c) = a&b + a&c for summable b,c"},
        {"def2.57.b", "1&a = a"},
        {"def2.57.c", "a&b = 0 implies b&a = 0"},
        {"def2.57.d", "a|b implies a|b' and a&(b&c) = (a&b)&c"},
        {"def2.57.e", "c|a and c|b imply c|(a&b) and c|(a+b)"},
        {"def2.57.f", "a & sup p_n = sup (a & p_n) on monotone sequences"},
        {"def2.61", "w(p) = 1 implies w(p&a) = w(a) for sharp p"},
        {"def2.62", "q&(p&q) = (q&p)^2 for sharp p,q"},
        {"def5.1.unital", "1 o asrt_p = p"},
        {"def3.14.dagger", "dagger is involutive and contravariant on pure maps"},
        {"sec2.5.q_aba", "Q_a b equals a.b.a blockwise"},
        {"sec2.5.triple", "triple product: collapse, bilinearity, (acb+bca)/2"},
        {"sec2.5.seq_le_ceil", "p&q <= ceil(p)"},
        {"lem2.27", "scalar action respects composition, addition, predicates"},
        {"lem2.59.a", "ceil(p) is the least sharp predicate above p"},
        {"lem2.59.c", "b&a = a implies b >= ceil(a)"},
        {"prop3.4.a", "floor(p) <= p <= ceil(p)"},
        {"prop3.4.b", "floor and ceil are idempotent"},
        {"prop3.4.c", "q <= p implies floor(q) <= floor(p) and ceil(q) <= ceil(p)"},
        {"prop3.4.d", "ceil(p o f) = ceil(ceil(p) o f)"},
        {"prop3.4.e", "ceil(p) o f = 0 iff p o f = 0"},
        {"prop3.4.f", "p sharp iff floor(p) = p"},
        {"prop3.7.a", "diamond and box are monotone"},
        {"prop3.7.b", "f^dia(p) <= q' iff f_dia(q) <= p'"},
        {"prop3.7.c", "f_dia(q) <= p iff q <= f^box(p)"},
        {"prop3.7.d", "f_dia is monotone"},
        {"prop3.7.e", "f_dia f^box f_dia = f_dia"},
        {"prop3.7.f", "identity transformers are the identity"},
        {"prop3.7.g", "(f o g)^dia = g^dia o f^dia and the box analogue"},
        {"prop3.7.h", "(f o g)_dia = f_dia o g_dia"},
        {"prop3.21", "summable sharp pair: p + q = p join q"},
        {"prop3.22", "sharp predicates form an orthomodular lattice"},
        {"lem3.2", "im(f o g) <= im(f), equal when g is an isomorphism"},
        {"lem3.13.a", "im f <= p iff asrt_p o f = f"},
        {"lem3.13.b", "1 o g <= p iff g o asrt_p = g"},
        {"lem3.20", "sharp p: p meet p' = 0"},
        {"diamond.adjoint_symmetry", "f^dia = g_dia iff g^dia = f_dia"},
        {"diamond.scale", "(f/2)^dia = f^dia"},
        {"asrt.self_adjoint", "asrt_p^dia = (asrt_p)_dia"},
        {"pure.closure", "compositions of pure maps re-factorise; filters compose"},
        {"prop5.4", "p sharp iff idempotent; im(asrt_p) = ceil(p)"},
        {"prop5.5", "every map has an image"},
        {"lem5.7", "asrt_p o asrt_p = asrt_{p^2}"},
        {"lem5.8", "xi o pi = id and pi o xi = asrt_p for sharp p"},
        {"prop5.9", "dagger of a comprehension is the paired filter"},
        {"cor5.10", "isomorphisms: dagger equals inverse"},
        {"prop5.11", "the sequential product is compressible"},
        {"lem5.12", "pure maps factor as compr o iso o filter o assert"},
        {"prop5.13", "asrt_{p&q}^2 = asrt_p o asrt_q^2 o asrt_p"},
        {"cor5.14", "(p&q)^2 = p&(q&p) for sharp p,q"},
        {"prop5.16", "exp(t(asrt_p - asrt_{p'})) preserves the cone"},
        {"prop5.17", "(id + asrt_p - asrt_{p'})/2 is Jordan multiplication by p"},
        {"prop6.2", "asrt_{a x b} = asrt_a x asrt_b"},
        {"cor6.3", "squares and sharpness are preserved by tensors"},
        {"prop6.4", "T_{a x 1} = T_a x id"},
        {"cor6.5", "a x 1 and 1 x b operator commute"},
        {"prop6.6", "a -> a x 1 is an injective Jordan homomorphism"},
        {"prop6.8", "Q_{a x b} = Q_a x Q_b"},
        {"lem6.12", "tensors of symmetries exchange tensors of projections"},
        {"tensor.pure", "tensors of pure maps are pure; dagger distributes"},
        {"tensor.coherence", "unitors, associator and braiding are total isomorphisms"},
        {"finpac.untying", "f perp g implies k1 o f perp k2 o g"},
        {"coproduct.laws", "partial projections retract coprojections; tupling"},
        {"compose.zero", "composition with the zero map is zero"},
        {"def2.11.matrix", "basis predicates separate the morphisms"},
        {"def2.13.matrix", "basis states separate the morphisms"},
        {"def2.11.set", "singleton predicates separate partial functions"},
        {"def2.13.set", "points separate partial functions"},
    };
    const auto it = catalog.find(id);
    return it == catalog.end() ? std::string{} : it->second;
}

}  // namespace efflab
