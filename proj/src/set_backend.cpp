#include "efflab/set_backend.hpp"

#include <algorithm>
#include <sstream>

namespace efflab {

SetMap SetMap::identity(int n) {
    SetMap f{n, n, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) f.graph[i] = i;
    return f;
}

SetMap SetMap::zero(int src, int tgt) { return SetMap{src, tgt, std::vector<int>(src, -1)}; }

SetMap compose_set(const SetMap& g, const SetMap& f) {
    if (f.tgt != g.src) throw Error("signature-mismatch", "set composition");
    SetMap h{f.src, g.tgt, std::vector<int>(f.src, -1)};
    for (int i = 0; i < f.src; ++i)
        if (f.graph[i] >= 0) h.graph[i] = g.graph[f.graph[i]];
    return h;
}

std::optional<SetMap> ovee_set(const SetMap& f, const SetMap& g) {
    if (f.src != g.src || f.tgt != g.tgt)
        throw Error("signature-mismatch", "set partial sum");
    SetMap h{f.src, f.tgt, std::vector<int>(f.src, -1)};
    for (int i = 0; i < f.src; ++i) {
        if (f.graph[i] >= 0 && g.graph[i] >= 0) return std::nullopt;
        h.graph[i] = std::max(f.graph[i], g.graph[i]);
    }
    return h;
}

bool is_total(const SetMap& f) {
    for (int v : f.graph)
        if (v < 0) return false;
    return true;
}

SetPred truth_of(const SetMap& f) {
    SetPred p(f.src);
    for (int i = 0; i < f.src; ++i) p[i] = f.graph[i] >= 0;
    return p;
}

SetPred heisenberg(const SetMap& f, const SetPred& q) {
    SetPred p(f.src, false);
    for (int i = 0; i < f.src; ++i)
        if (f.graph[i] >= 0 && q[f.graph[i]]) p[i] = true;
    return p;
}

SetPred image_of(const SetMap& f) {
    SetPred p(f.tgt, false);
    for (int i = 0; i < f.src; ++i)
        if (f.graph[i] >= 0) p[f.graph[i]] = true;
    return p;
}

SetComprehension set_comprehension(const SetPred& p) {
    SetComprehension c;
    c.predicate = p;
    std::vector<int> members;
    for (int i = 0; i < int(p.size()); ++i)
        if (p[i]) members.push_back(i);
    c.carrier = int(members.size());
    c.map = SetMap{c.carrier, int(p.size()), members};
    return c;
}

SetFilter set_filter(const SetPred& p) {
    SetFilter f;
    f.predicate = p;
    std::vector<int> to_carrier(p.size(), -1);
    int next = 0;
    for (int i = 0; i < int(p.size()); ++i)
        if (p[i]) to_carrier[i] = next++;
    f.carrier = next;
    f.map = SetMap{int(p.size()), next, to_carrier};
    return f;
}

SetMap set_assert(const SetPred& p) {
    SetMap f{int(p.size()), int(p.size()), std::vector<int>(p.size(), -1)};
    for (int i = 0; i < int(p.size()); ++i)
        if (p[i]) f.graph[i] = i;
    return f;
}

EffectTable set_pred_table(const SetObject& obj) {
    if (obj.size > 4)
        throw Error("budget-exceeded", "powerset tables supported for sets of size <= 4");
    return EffectTable::boolean_power(obj.size);
}

SetMap random_set_map(int src, int tgt, Rng& rng) {
    SetMap f{src, tgt, std::vector<int>(src)};
    for (int i = 0; i < src; ++i) {
        // One extra slot plays "undefined".
        const int v = rng.uniform_int(0, tgt);
        f.graph[i] = v == tgt ? -1 : v;
    }
    return f;
}

namespace {

SetPred random_pred(int n, Rng& rng) {
    SetPred p(n);
    for (int i = 0; i < n; ++i) p[i] = rng.uniform() < 0.5;
    return p;
}

std::string show(const SetMap& f) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < f.src; ++i) {
        if (i) os << ",";
        os << f.graph[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

LawReport check_set_separation(const SetObject& obj, bool by_predicates, int trials,
                               uint64_t seed) {
    const std::string law = by_predicates ? "def2.11.set" : "def2.13.set";
    std::ostringstream inst;
    inst << "set n=" << obj.size << " trials=" << trials;
    Rng rng(seed, law);
    for (int k = 0; k < trials; ++k) {
        const SetMap f = random_set_map(obj.size, obj.size, rng);
        const SetMap g = random_set_map(obj.size, obj.size, rng);
        if (f.graph == g.graph) continue;
        bool separated = false;
        if (by_predicates) {
            for (int e = 0; e < obj.size && !separated; ++e) {
                SetPred single(obj.size, false);
                single[e] = true;
                if (heisenberg(f, single) != heisenberg(g, single)) separated = true;
            }
        } else {
            for (int e = 0; e < obj.size && !separated; ++e)
                if (f.graph[e] != g.graph[e]) separated = true;
        }
        if (!separated)
            return law_fail(law, inst.str(), 1.0,
                            "maps " + show(f) + " vs " + show(g) + " not separated");
    }
    std::ostringstream cert;
    cert << "spanning set: " << obj.size << (by_predicates ? " singletons" : " points");
    LawReport rep = law_pass(law, inst.str(), 0.0);
    rep.counterexample = std::nullopt;
    rep.instance += " | " + cert.str();
    return rep;
}

std::vector<LawReport> run_set_laws(const SetObject& obj, int trials, uint64_t seed) {
    std::vector<LawReport> out;
    const int n = obj.size;
    std::ostringstream inst_os;
    inst_os << "set n=" << n << " trials=" << trials << " seed=" << seed;
    const std::string inst = inst_os.str();

    {
        Rng rng(seed, "set.pcm");
        bool ok = true;
        std::string ce;
        for (int k = 0; k < trials && ok; ++k) {
            const SetMap f = random_set_map(n, n, rng);
            const SetMap g = random_set_map(n, n, rng);
            const SetMap h = random_set_map(n, n, rng);
            const auto fg = ovee_set(f, g);
            const auto gf = ovee_set(g, f);
            if (fg.has_value() != gf.has_value() ||
                (fg && fg->graph != gf->graph)) {
                ok = false;
                ce = "commutativity at trial " + std::to_string(k);
                break;
            }
            // Associativity with Kleene definedness.
            const auto gh = ovee_set(g, h);
            const auto l = fg ? ovee_set(*fg, h) : std::nullopt;
            const auto r = gh ? ovee_set(f, *gh) : std::nullopt;
            if (l.has_value() != r.has_value() || (l && l->graph != r->graph)) {
                ok = false;
                ce = "associativity at trial " + std::to_string(k);
                break;
            }
            const auto fz = ovee_set(f, SetMap::zero(n, n));
            if (!fz || fz->graph != f.graph) {
                ok = false;
                ce = "zero unit at trial " + std::to_string(k);
                break;
            }
            // Biadditive composition.
            if (fg) {
                const SetMap e = random_set_map(n, n, rng);
                const auto lhs = compose_set(e, *fg);
                const auto rhs = ovee_set(compose_set(e, f), compose_set(e, g));
                if (!rhs || lhs.graph != rhs->graph) {
                    ok = false;
                    ce = "post-composition additivity at trial " + std::to_string(k);
                    break;
                }
            }
        }
        out.push_back(ok ? law_pass("def2.2.pcm.set", inst, 0.0)
                         : law_fail("def2.2.pcm.set", inst, 1.0, ce));
    }

    {
        Rng rng(seed, "set.effectus");
        bool ok = true;
        std::string ce;
        for (int k = 0; k < trials && ok; ++k) {
            const SetMap f = random_set_map(n, n, rng);
            const SetPred t = truth_of(f);
            if (std::none_of(t.begin(), t.end(), [](bool b) { return b; }) &&
                f.graph != SetMap::zero(n, n).graph) {
                ok = false;
                ce = "zero truth with nonzero map";
            }
            const SetMap g = random_set_map(n, n, rng);
            const SetPred tg = truth_of(g);
            bool truths_disjoint = true;
            for (int i = 0; i < n; ++i)
                if (t[i] && tg[i]) truths_disjoint = false;
            if (truths_disjoint && !ovee_set(f, g)) {
                ok = false;
                ce = "summable truths but unsummable maps";
            }
        }
        out.push_back(ok ? law_pass("def2.8.set", inst, 0.0)
                         : law_fail("def2.8.set", inst, 1.0, ce));
    }

    {
        Rng rng(seed, "set.image");
        bool ok = true;
        std::string ce;
        for (int k = 0; k < trials && ok; ++k) {
            const SetMap f = random_set_map(n, n, rng);
            const SetPred im = image_of(f);
            if (heisenberg(f, im) != truth_of(f)) {
                ok = false;
                ce = "image not certain on " + show(f);
            }
            // Minimality: any q with q o f = 1 o f contains the image.
            const SetPred q = random_pred(n, rng);
            if (heisenberg(f, q) == truth_of(f))
                for (int i = 0; i < n; ++i)
                    if (im[i] && !q[i]) {
                        ok = false;
                        ce = "image not minimal on " + show(f);
                    }
        }
        out.push_back(ok ? law_pass("def3.1.set", inst, 0.0)
                         : law_fail("def3.1.set", inst, 1.0, ce));
    }

    {
        Rng rng(seed, "set.compr");
        bool ok = true;
        std::string ce;
        for (int k = 0; k < trials && ok; ++k) {
            const SetPred p = random_pred(n, rng);
            const SetComprehension c = set_comprehension(p);
            const SetFilter fl = set_filter(p);
            if (heisenberg(c.map, p) != truth_of(c.map)) {
                ok = false;
                ce = "comprehension not certain";
            }
            if (truth_of(fl.map) != p) {
                ok = false;
                ce = "filter truth differs from predicate";
            }
            const SetMap roundtrip = compose_set(fl.map, c.map);
            if (roundtrip.graph != SetMap::identity(c.carrier).graph) {
                ok = false;
                ce = "filter after comprehension not identity";
            }
            const SetMap asrt = compose_set(c.map, fl.map);
            if (asrt.graph != set_assert(p).graph) {
                ok = false;
                ce = "comprehension after filter differs from assert";
            }
        }
        out.push_back(ok ? law_pass("lem5.8.set", inst, 0.0)
                         : law_fail("lem5.8.set", inst, 1.0, ce));
    }

    {
        // Scalars are the booleans and every predicate is sharp.
        const bool scalars_ok = n >= 0;
        Rng rng(seed, "set.sharp");
        bool ok = scalars_ok;
        std::string ce;
        for (int k = 0; k < trials && ok; ++k) {
            const SetPred p = random_pred(n, rng);
            const SetMap a = set_assert(p);
            if (compose_set(a, a).graph != a.graph) {
                ok = false;
                ce = "assert not idempotent";
            }
            if (image_of(set_comprehension(p).map) != p) {
                ok = false;
                ce = "predicate not an image";
            }
        }
        out.push_back(ok ? law_pass("prop5.4.set", inst, 0.0)
                         : law_fail("prop5.4.set", inst, 1.0, ce));
    }

    out.push_back(check_set_separation(obj, true, trials, seed));
    out.push_back(check_set_separation(obj, false, trials, seed));
    return out;
}

}  // namespace efflab
