#include "efflab/effect_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace efflab {

void EffectTable::validate_shape() const {
    const int n = size();
    if (n == 0) throw Error("malformed-table", "empty element list");
    auto in_range = [n](int x) { return x >= 0 && x < n; };
    if (!in_range(zero) || !in_range(one))
        throw Error("malformed-table", "zero/one out of range");
    if (int(ovee.size()) != n || int(orth.size()) != n)
        throw Error("malformed-table", "table sizes do not match element count");
    for (const auto& row : ovee) {
        if (int(row.size()) != n) throw Error("malformed-table", "ragged ovee table");
        for (int v : row)
            if (v < -1 || v >= n) throw Error("malformed-table", "dangling id in ovee");
    }
    for (int v : orth)
        if (!in_range(v)) throw Error("malformed-table", "non-total orthosupplement");
    if (product) {
        if (int(product->size()) != n) throw Error("malformed-table", "ragged product");
        for (const auto& row : *product) {
            if (int(row.size()) != n) throw Error("malformed-table", "ragged product");
            for (int v : row)
                if (!in_range(v)) throw Error("malformed-table", "product not total");
        }
    }
}

bool EffectTable::leq(int x, int y) const {
    for (int z = 0; z < size(); ++z)
        if (ovee[x][z] == y) return true;
    return false;
}

std::vector<int> EffectTable::lower_cone(int x) const {
    std::vector<int> r;
    for (int z = 0; z < size(); ++z)
        if (leq(z, x)) r.push_back(z);
    return r;
}

std::optional<int> EffectTable::meet(int x, int y) const {
    std::vector<int> lb;
    for (int z = 0; z < size(); ++z)
        if (leq(z, x) && leq(z, y)) lb.push_back(z);
    for (int m : lb) {
        bool top = true;
        for (int z : lb)
            if (!leq(z, m)) top = false;
        if (top) return m;
    }
    return std::nullopt;
}

std::optional<int> EffectTable::join(int x, int y) const {
    std::vector<int> ub;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z) && leq(y, z)) ub.push_back(z);
    for (int m : ub) {
        bool bot = true;
        for (int z : ub)
            if (!leq(m, z)) bot = false;
        if (bot) return m;
    }
    return std::nullopt;
}

std::vector<int> EffectTable::atoms() const {
    std::vector<int> r;
    for (int x = 0; x < size(); ++x) {
        if (x == zero) continue;
        bool atom = true;
        for (int z = 0; z < size(); ++z)
            if (z != zero && z != x && leq(z, x)) atom = false;
        if (atom) r.push_back(x);
    }
    return r;
}

EffectTable EffectTable::boolean_power(int k) {
    const int n = 1 << k;
    EffectTable t;
    t.names.resize(n);
    for (int s = 0; s < n; ++s) {
        std::string nm;
        for (int b = 0; b < k; ++b)
            if (s & (1 << b)) nm += char('a' + b);
        t.names[s] = nm.empty() ? "0" : nm;
    }
    if (k > 0) t.names[n - 1] = "1";
    t.zero = 0;
    t.one = n - 1;
    t.ovee.assign(n, std::vector<int>(n, -1));
    t.orth.resize(n);
    for (int s = 0; s < n; ++s) {
        t.orth[s] = (n - 1) & ~s;
        for (int u = 0; u < n; ++u)
            if ((s & u) == 0) t.ovee[s][u] = s | u;
    }
    auto prod = std::vector<std::vector<int>>(n, std::vector<int>(n));
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) prod[s][u] = s & u;
    t.product = prod;
    return t;
}

EffectTable EffectTable::chain(int len) {
    // Elements 0..len-1 viewed as multiples i/(len-1); sum defined when
    // i + j <= len - 1.
    EffectTable t;
    const int n = len;
    t.names.resize(n);
    for (int i = 0; i < n; ++i) t.names[i] = i == 0 ? "0" : (i == n - 1 ? "1" : std::string(1, char('a' + i - 1)));
    t.zero = 0;
    t.one = n - 1;
    t.ovee.assign(n, std::vector<int>(n, -1));
    t.orth.resize(n);
    for (int i = 0; i < n; ++i) {
        t.orth[i] = n - 1 - i;
        for (int j = 0; j < n; ++j)
            if (i + j <= n - 1) t.ovee[i][j] = i + j;
    }
    return t;
}

namespace {

std::string witness(const EffectTable& t, std::initializer_list<int> xs) {
    std::string s;
    for (int x : xs) {
        if (!s.empty()) s += ",";
        s += t.names[x];
    }
    return s;
}

LawReport table_fail(const std::string& law, const EffectTable& t, const std::string& axiom,
                     std::initializer_list<int> xs) {
    return law_fail(law, "table n=" + std::to_string(t.size()), 1.0,
                    "axiom=" + axiom + " witness=(" + witness(t, xs) + ")");
}

}  // namespace

LawReport check_effect_algebra(const EffectTable& t) {
    t.validate_shape();
    const int n = t.size();
    const std::string law = "def2.6";

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.ovee[x][y] != t.ovee[y][x])
                return table_fail(law, t, "commutativity", {x, y});

    for (int x = 0; x < n; ++x)
        if (t.ovee[t.zero][x] != x) return table_fail(law, t, "zero-unit", {x});

    // Kleene associativity: both sides defined together and equal.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int xy = t.ovee[x][y];
                const int yz = t.ovee[y][z];
                const int l = xy >= 0 ? t.ovee[xy][z] : -1;
                const int r = yz >= 0 ? t.ovee[x][yz] : -1;
                if (l != r) return table_fail(law, t, "associativity", {x, y, z});
            }

    for (int x = 0; x < n; ++x) {
        if (t.ovee[x][t.orth[x]] != t.one)
            return table_fail(law, t, "orthosupplement-unique", {x});
        for (int y = 0; y < n; ++y)
            if (t.ovee[x][y] == t.one && y != t.orth[x])
                return table_fail(law, t, "orthosupplement-unique", {x});
    }

    for (int x = 0; x < n; ++x)
        if (t.ovee[x][t.one] >= 0 && x != t.zero)
            return table_fail(law, t, "one-summability", {x});

    return law_pass(law, "table n=" + std::to_string(n), 0.0);
}

LawReport check_orthoalgebra(const EffectTable& t) {
    const LawReport ea = check_effect_algebra(t);
    if (!ea.pass) return ea;
    const std::string law = "def2.35";
    for (int x = 0; x < t.size(); ++x)
        if (t.summable(x, x) && x != t.zero)
            return table_fail(law, t, "self-summable", {x});
    return law_pass(law, "table n=" + std::to_string(t.size()), 0.0);
}

LawReport check_effect_monoid(const EffectTable& t) {
    const LawReport ea = check_effect_algebra(t);
    if (!ea.pass) return ea;
    if (!t.product) throw Error("missing-product-table", "effect monoid check needs a product");
    const int n = t.size();
    const std::string law = "def2.15";

    for (int a = 0; a < n; ++a)
        if (t.prod(a, t.one) != a || t.prod(t.one, a) != a)
            return table_fail(law, t, "unit", {a});

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!t.summable(b, c)) continue;
                const int bc = t.sum(b, c);
                // Left action.
                if (!t.summable(t.prod(a, b), t.prod(a, c)))
                    return table_fail(law, t, "distributivity-summability", {a, b, c});
                if (t.sum(t.prod(a, b), t.prod(a, c)) != t.prod(a, bc))
                    return table_fail(law, t, "distributivity", {a, b, c});
                // Right action.
                if (!t.summable(t.prod(b, a), t.prod(c, a)))
                    return table_fail(law, t, "distributivity-summability", {a, b, c});
                if (t.sum(t.prod(b, a), t.prod(c, a)) != t.prod(bc, a))
                    return table_fail(law, t, "distributivity", {a, b, c});
            }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t.prod(a, t.prod(b, c)) != t.prod(t.prod(a, b), c))
                    return table_fail(law, t, "associativity", {a, b, c});

    return law_pass(law, "table n=" + std::to_string(n), 0.0);
}

LawReport check_sea_table(const EffectTable& t) {
    const LawReport ea = check_effect_algebra(t);
    if (!ea.pass) return ea;
    if (!t.product) throw Error("missing-product-table", "sea check needs a product");
    const int n = t.size();
    const std::string law = "def2.57";
    const auto& p = *t.product;

    // a) additivity in the second argument.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!t.summable(b, c)) continue;
                if (!t.summable(p[a][b], p[a][c]) ||
                    t.sum(p[a][b], p[a][c]) != p[a][t.sum(b, c)])
                    return table_fail(law + ".a", t, "additivity", {a, b, c});
            }
    // b) unit.
    for (int a = 0; a < n; ++a)
        if (p[t.one][a] != a) return table_fail(law + ".b", t, "unit", {a});
    // c) zero symmetry.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p[a][b] == t.zero && p[b][a] != t.zero)
                return table_fail(law + ".c", t, "zero-symmetry", {a, b});
    // d) commuting pairs: a | b^perp and associativity over the pair.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (p[a][b] != p[b][a]) continue;
            const int bp = t.orth[b];
            if (p[a][bp] != p[bp][a])
                return table_fail(law + ".d", t, "commute-orthosupplement", {a, b});
            for (int c = 0; c < n; ++c)
                if (p[a][p[b][c]] != p[p[a][b]][c])
                    return table_fail(law + ".d", t, "commute-associativity", {a, b, c});
        }
    // e) commutants are closed under product and defined sums.
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a) {
            if (p[c][a] != p[a][c]) continue;
            for (int b = 0; b < n; ++b) {
                if (p[c][b] != p[b][c]) continue;
                const int ab = p[a][b];
                if (p[c][ab] != p[ab][c])
                    return table_fail(law + ".e", t, "commutant-product", {c, a, b});
                if (t.summable(a, b)) {
                    const int s = t.sum(a, b);
                    if (p[c][s] != p[s][c])
                        return table_fail(law + ".e", t, "commutant-sum", {c, a, b});
                }
            }
        }
    // f) vacuous for finite tables: directed subsets have maxima.
    return law_pass(law, "table n=" + std::to_string(n) + " (axiom f vacuous: finite)", 0.0);
}

bool boolean_verdict(const EffectTable& t) {
    const int n = t.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto m = t.meet(x, y);
            const auto j = t.join(x, y);
            if (!m || !j) return false;
        }
    for (int x = 0; x < n; ++x) {
        if (t.meet(x, t.orth[x]) != t.zero) return false;
        if (t.join(x, t.orth[x]) != t.one) return false;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int jyz = *t.join(y, z);
                const int lhs = *t.meet(x, jyz);
                const int rhs = *t.join(*t.meet(x, y), *t.meet(x, z));
                if (lhs != rhs) return false;
            }
    // Partial sum must be the disjoint join.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const bool disjoint = *t.meet(x, y) == t.zero;
            if (t.summable(x, y) != disjoint) return false;
            if (disjoint && t.sum(x, y) != *t.join(x, y)) return false;
        }
    return true;
}

IdempotentsResult idempotents(const EffectTable& t) {
    if (!t.product) throw Error("missing-product-table", "idempotents need a product");
    IdempotentsResult r;
    for (int x = 0; x < t.size(); ++x)
        if (t.prod(x, x) == x) r.elements.push_back(x);
    std::set<int> got(r.elements.begin(), r.elements.end());
    r.irreducible = got == std::set<int>{t.zero, t.one};
    return r;
}

namespace {

// Restriction of t to a sub-carrier keeping all structure; `proj` maps
// original ids into the carrier via x |-> p.x.
EffectTable restrict_to(const EffectTable& t, int p) {
    std::vector<int> carrier;
    std::vector<int> to_sub(t.size(), -1);
    for (int a = 0; a < t.size(); ++a) {
        const int pa = t.prod(p, a);
        if (to_sub[pa] < 0) {
            to_sub[pa] = int(carrier.size());
            carrier.push_back(pa);
        }
    }
    EffectTable s;
    const int m = int(carrier.size());
    s.names.resize(m);
    for (int i = 0; i < m; ++i) s.names[i] = t.names[carrier[i]];
    s.zero = to_sub[t.prod(p, t.zero)];
    s.one = to_sub[t.prod(p, t.one)];
    s.ovee.assign(m, std::vector<int>(m, -1));
    s.orth.resize(m);
    auto prod = std::vector<std::vector<int>>(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        s.orth[i] = to_sub[t.prod(p, t.orth[carrier[i]])];
        for (int j = 0; j < m; ++j) {
            const int v = t.ovee[carrier[i]][carrier[j]];
            if (v >= 0) {
                if (to_sub[v] < 0) throw Error("not-closed", "corner not closed under sum");
                s.ovee[i][j] = to_sub[v];
            }
            const int pr = t.prod(carrier[i], carrier[j]);
            if (to_sub[pr] < 0) throw Error("not-closed", "corner not closed under product");
            prod[i][j] = to_sub[pr];
        }
    }
    s.product = prod;
    return s;
}

}  // namespace

CornerResult corner(const EffectTable& t, int p) {
    if (!t.product) throw Error("missing-product-table", "corner needs a product");
    t.validate_shape();
    if (t.prod(p, p) != p) throw Error("not-idempotent", "corner base must be idempotent");

    CornerResult r;
    r.corner = restrict_to(t, p);
    r.cocorner = restrict_to(t, t.orth[p]);

    // Pairing a |-> (p.a, p'.a) into the direct sum; verify isomorphism.
    const EffectTable ds = direct_sum(r.corner, r.cocorner);
    std::vector<int> to_c(t.size()), to_cc(t.size());
    {
        std::map<std::string, int> cpos, ccpos;
        for (int i = 0; i < r.corner.size(); ++i) cpos[r.corner.names[i]] = i;
        for (int i = 0; i < r.cocorner.size(); ++i) ccpos[r.cocorner.names[i]] = i;
        for (int a = 0; a < t.size(); ++a) {
            to_c[a] = cpos.at(t.names[t.prod(p, a)]);
            to_cc[a] = ccpos.at(t.names[t.prod(t.orth[p], a)]);
            r.pairing.emplace_back(to_c[a], to_cc[a]);
        }
    }
    auto pair_id = [&](int a) { return to_c[a] * r.cocorner.size() + to_cc[a]; };

    bool ok = t.size() == ds.size();
    std::set<int> hit;
    for (int a = 0; ok && a < t.size(); ++a) hit.insert(pair_id(a));
    ok = ok && int(hit.size()) == t.size();
    for (int a = 0; ok && a < t.size(); ++a) {
        if (pair_id(t.orth[a]) != ds.orth[pair_id(a)]) ok = false;
        for (int b = 0; ok && b < t.size(); ++b) {
            const int s = t.ovee[a][b];
            const int sd = ds.ovee[pair_id(a)][pair_id(b)];
            if ((s >= 0) != (sd >= 0)) ok = false;
            else if (s >= 0 && pair_id(s) != sd) ok = false;
            if (ok && pair_id(t.prod(a, b)) != ds.prod(pair_id(a), pair_id(b))) ok = false;
        }
    }
    r.verified = ok;
    return r;
}

EffectTable direct_sum(const EffectTable& a, const EffectTable& b) {
    a.validate_shape();
    b.validate_shape();
    const int na = a.size(), nb = b.size();
    EffectTable t;
    t.names.resize(na * nb);
    auto id = [nb](int i, int j) { return i * nb + j; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) t.names[id(i, j)] = a.names[i] + "|" + b.names[j];
    t.zero = id(a.zero, b.zero);
    t.one = id(a.one, b.one);
    const int n = na * nb;
    t.ovee.assign(n, std::vector<int>(n, -1));
    t.orth.resize(n);
    const bool with_product = a.product.has_value() && b.product.has_value();
    std::vector<std::vector<int>> prod;
    if (with_product) prod.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            t.orth[id(i, j)] = id(a.orth[i], b.orth[j]);
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    if (a.summable(i, k) && b.summable(j, l))
                        t.ovee[id(i, j)][id(k, l)] = id(a.sum(i, k), b.sum(j, l));
                    if (with_product)
                        prod[id(i, j)][id(k, l)] = id(a.prod(i, k), b.prod(j, l));
                }
        }
    if (with_product) t.product = prod;
    return t;
}

namespace {

std::string key_under_perm(const EffectTable& t, const std::vector<int>& perm,
                           bool with_product) {
    // perm maps old id -> new id; serialize the relabeled table.
    const int n = t.size();
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string key;
    key.reserve(size_t(n) * n * 3 + n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int v = t.ovee[inv[x]][inv[y]];
            key += char('A' + (v < 0 ? n : perm[v]));
        }
    key += '#';
    for (int x = 0; x < n; ++x) key += char('A' + perm[t.orth[inv[x]]]);
    if (with_product && t.product) {
        key += '#';
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) key += char('A' + perm[t.prod(inv[x], inv[y])]);
    }
    return key;
}

std::string canonical_key(const EffectTable& t, bool with_product) {
    t.validate_shape();
    const int n = t.size();
    std::vector<int> middles;
    for (int i = 0; i < n; ++i)
        if (i != t.zero && i != t.one) middles.push_back(i);

    // Base permutation puts zero at 0, one at n-1 (or both at 0 for n=1).
    std::string best;
    std::vector<int> mids = middles;
    std::sort(mids.begin(), mids.end());
    do {
        std::vector<int> perm(n, -1);
        perm[t.zero] = 0;
        if (t.one != t.zero) perm[t.one] = n - 1;
        int next = 1;
        for (int m : mids) perm[m] = next++;
        const std::string key = key_under_perm(t, perm, with_product);
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(mids.begin(), mids.end()));
    return std::to_string(n) + ":" + best;
}

}  // namespace

std::string canonical_key_ea(const EffectTable& t) { return canonical_key(t, false); }
std::string canonical_key_monoid(const EffectTable& t) { return canonical_key(t, true); }

bool isomorphic_monoids(const EffectTable& a, const EffectTable& b) {
    return canonical_key_monoid(a) == canonical_key_monoid(b);
}

}  // namespace efflab
