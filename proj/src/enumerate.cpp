#include "efflab/enumerate.hpp"

#include <algorithm>
#include <set>

namespace efflab {

namespace {

// -2 marks an unassigned entry during backtracking, -1 an undefined sum.
constexpr int kUnassigned = -2;

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        if (i == 0) names[i] = "0";
        else if (i == n - 1 && n > 1) names[i] = "1";
        else names[i] = std::string(1, char('a' + i - 1));
    }
    return names;
}

// All involutions on the middle elements {1..n-2}.
void involutions_rec(std::vector<int>& sigma, std::vector<bool>& used, int n,
                     std::vector<std::vector<int>>& out) {
    int x = -1;
    for (int i = 1; i < n - 1; ++i)
        if (!used[i]) {
            x = i;
            break;
        }
    if (x < 0) {
        out.push_back(sigma);
        return;
    }
    used[x] = true;
    sigma[x] = x;  // fixed point: x is its own orthosupplement
    involutions_rec(sigma, used, n, out);
    for (int y = x + 1; y < n - 1; ++y) {
        if (used[y]) continue;
        used[y] = true;
        sigma[x] = y;
        sigma[y] = x;
        involutions_rec(sigma, used, n, out);
        used[y] = false;
    }
    used[x] = false;
    sigma[x] = kUnassigned;
}

// Kleene-associativity consistency on a partially assigned table. Only
// triples whose definedness on both sides is already determined can veto.
bool assoc_consistent(const std::vector<std::vector<int>>& t, int n) {
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z) {
                // Evaluate (x+y)+z and x+(y+z); kUnassigned propagates as unknown.
                auto side = [&](int a, int b, int c) {
                    const int ab = t[a][b];
                    if (ab == kUnassigned) return kUnassigned;
                    if (ab == -1) return -1;
                    return t[ab][c];
                };
                const int l = side(x, y, z);
                const int r = side(z, y, x);  // commutativity is built in
                if (l == kUnassigned || r == kUnassigned) continue;
                if (l != r) return false;
            }
    return true;
}

struct EaSearch {
    int n;
    std::vector<std::vector<int>> t;
    std::vector<std::pair<int, int>> slots;
    std::set<std::string> seen;
    std::vector<EffectTable>* out;
    const std::vector<int>* sigma;

    void set(int x, int y, int v) {
        t[x][y] = v;
        t[y][x] = v;
    }

    bool row_has_value(int row, int v) const {
        for (int y = 0; y < n; ++y)
            if (t[row][y] == v) return true;
        return false;
    }

    void emit() {
        EffectTable tab;
        tab.names = default_names(n);
        tab.zero = 0;
        tab.one = n - 1;
        tab.ovee = t;
        tab.orth.resize(n);
        tab.orth[0] = n - 1;
        tab.orth[n - 1] = 0;
        for (int i = 1; i < n - 1; ++i) tab.orth[i] = (*sigma)[i];
        if (!check_effect_algebra(tab).pass) return;  // final authority
        const std::string key = canonical_key_ea(tab);
        if (seen.insert(key).second) out->push_back(std::move(tab));
    }

    void rec(size_t slot) {
        if (slot == slots.size()) {
            emit();
            return;
        }
        const auto [x, y] = slots[slot];
        // Undefined is always a candidate.
        set(x, y, -1);
        if (assoc_consistent(t, n)) rec(slot + 1);
        // Defined values: cancellation forbids reuse within a row; 0 and 1
        // are excluded (x+y=0 forces x=y=0; x+y=1 only for the sigma pair).
        for (int v = 1; v < n - 1; ++v) {
            if (row_has_value(x, v) || row_has_value(y, v)) continue;
            set(x, y, v);
            if (assoc_consistent(t, n)) rec(slot + 1);
        }
        set(x, y, kUnassigned);
    }
};

EffectTable trivial_table() {
    EffectTable t;
    t.names = {"0"};
    t.zero = t.one = 0;
    t.ovee = {{0}};
    t.orth = {0};
    return t;
}

}  // namespace

std::vector<EffectTable> enumerate_effect_algebras(int size) {
    if (size < 1 || size > kEnumerationMaxSize)
        throw Error("budget-exceeded", "effect algebra enumeration supports sizes 1..6");
    if (size == 1) return {trivial_table()};

    const int n = size;
    std::vector<EffectTable> found;
    std::set<std::string> seen;

    std::vector<std::vector<int>> sigmas;
    {
        std::vector<int> sigma(n, kUnassigned);
        std::vector<bool> used(n, false);
        involutions_rec(sigma, used, n, sigmas);
    }

    for (const auto& sigma : sigmas) {
        EaSearch s;
        s.n = n;
        s.t.assign(n, std::vector<int>(n, kUnassigned));
        s.out = &found;
        s.sigma = &sigma;
        s.seen = std::move(seen);
        // Forced entries: unit row, orthosupplement pairs, the top row.
        for (int x = 0; x < n; ++x) s.set(0, x, x);
        for (int x = 1; x < n - 1; ++x) {
            if (sigma[x] >= x) s.set(x, sigma[x], n - 1);
        }
        for (int x = 1; x < n; ++x)
            if (s.t[x][n - 1] == kUnassigned) s.set(x, n - 1, -1);
        // Free slots: middle pairs not fixed above.
        for (int x = 1; x < n - 1; ++x)
            for (int y = x; y < n - 1; ++y)
                if (s.t[x][y] == kUnassigned) s.slots.emplace_back(x, y);
        s.rec(0);
        seen = std::move(s.seen);
    }
    return found;
}

namespace {

// Backtracking over total product tables on a fixed effect algebra.
// `second_arg_additive_only` selects the SEA regime (additivity in the
// second argument, a&b <= a) versus the effect monoid regime (bi-additive,
// a.b <= a and a.b <= b).
struct ProductSearch {
    const EffectTable* ea;
    int n;
    bool sea_mode;
    std::vector<std::vector<int>> p;
    std::vector<std::pair<int, int>> slots;
    std::vector<std::vector<int>> candidates;  // per slot
    std::vector<std::vector<std::vector<int>>>* out;

    bool partial_consistent() const {
        const EffectTable& t = *ea;
        // Additivity in the second argument (both regimes).
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (p[a][b] == kUnassigned) continue;
                for (int c = 0; c < n; ++c) {
                    if (!t.summable(b, c) || p[a][c] == kUnassigned) continue;
                    const int bc = t.sum(b, c);
                    if (p[a][bc] == kUnassigned) continue;
                    if (!t.summable(p[a][b], p[a][c])) return false;
                    if (t.sum(p[a][b], p[a][c]) != p[a][bc]) return false;
                }
            }
        if (!sea_mode) {
            // First-argument additivity.
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (p[b][a] == kUnassigned) continue;
                    for (int c = 0; c < n; ++c) {
                        if (!t.summable(b, c) || p[c][a] == kUnassigned) continue;
                        const int bc = t.sum(b, c);
                        if (p[bc][a] == kUnassigned) continue;
                        if (!t.summable(p[b][a], p[c][a])) return false;
                        if (t.sum(p[b][a], p[c][a]) != p[bc][a]) return false;
                    }
                }
            // Associativity where determined.
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (p[a][b] == kUnassigned) continue;
                    for (int c = 0; c < n; ++c) {
                        if (p[b][c] == kUnassigned) continue;
                        const int l = p[p[a][b]][c];
                        const int r = p[a][p[b][c]];
                        if (l == kUnassigned || r == kUnassigned) continue;
                        if (l != r) return false;
                    }
                }
        } else {
            // Zero symmetry.
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (p[a][b] == kUnassigned || p[b][a] == kUnassigned) continue;
                    if ((p[a][b] == ea->zero) != (p[b][a] == ea->zero)) return false;
                }
        }
        return true;
    }

    void rec(size_t slot) {
        if (slot == slots.size()) {
            out->push_back(p);
            return;
        }
        const auto [x, y] = slots[slot];
        for (int v : candidates[slot]) {
            p[x][y] = v;
            if (partial_consistent()) rec(slot + 1);
        }
        p[x][y] = kUnassigned;
    }
};

std::vector<std::vector<std::vector<int>>> product_tables(const EffectTable& ea,
                                                          bool sea_mode) {
    const int n = ea.size();
    std::vector<std::vector<std::vector<int>>> raw;
    ProductSearch s;
    s.ea = &ea;
    s.n = n;
    s.sea_mode = sea_mode;
    s.p.assign(n, std::vector<int>(n, kUnassigned));
    s.out = &raw;
    // Forced rows/columns: unit (both regimes), annihilation by zero.
    for (int x = 0; x < n; ++x) {
        s.p[ea.one][x] = x;
        s.p[x][ea.one] = x;
        s.p[ea.zero][x] = ea.zero;
        s.p[x][ea.zero] = ea.zero;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.p[x][y] == kUnassigned) {
                s.slots.emplace_back(x, y);
                std::vector<int> cand;
                for (int v : ea.lower_cone(x)) {
                    if (!sea_mode && !ea.leq(v, y)) continue;
                    cand.push_back(v);
                }
                s.candidates.push_back(std::move(cand));
            }
    s.rec(0);

    // Final authority: the full axiom checker.
    std::vector<std::vector<std::vector<int>>> ok;
    for (auto& p : raw) {
        EffectTable t = ea;
        t.product = p;
        const LawReport rep = sea_mode ? check_sea_table(t) : check_effect_monoid(t);
        if (rep.pass) ok.push_back(std::move(p));
    }
    return ok;
}

EnumerationResult enumerate_with_products(int max_size, bool sea_mode) {
    EnumerationResult res;
    for (int size = 1; size <= max_size; ++size) {
        res.count_by_size[size] = 0;
        res.ea_classes_by_size[size] = 0;
        std::set<std::string> monoid_seen;
        std::set<std::string> ea_seen;
        for (const EffectTable& ea : enumerate_effect_algebras(size)) {
            bool ea_has_product = false;
            for (auto& p : product_tables(ea, sea_mode)) {
                EffectTable t = ea;
                t.product = std::move(p);
                const std::string key = canonical_key_monoid(t);
                if (!monoid_seen.insert(key).second) continue;
                ea_has_product = true;
                EnumeratedStructure st;
                st.boolean = boolean_verdict(t);
                st.table = std::move(t);
                res.structures.push_back(std::move(st));
                res.count_by_size[size]++;
            }
            if (ea_has_product && ea_seen.insert(canonical_key_ea(ea)).second)
                res.ea_classes_by_size[size]++;
        }
    }
    return res;
}

}  // namespace

EnumerationResult enumerate_effect_monoids(int max_size) {
    if (max_size < 1 || max_size > kEnumerationMaxSize)
        throw Error("budget-exceeded", "enumeration budget is max_size <= 6");
    return enumerate_with_products(max_size, false);
}

EnumerationResult enumerate_sea_tables(int max_size) {
    if (max_size < 1 || max_size > 5)
        throw Error("budget-exceeded", "sea enumeration budget is max_size <= 5");
    return enumerate_with_products(max_size, true);
}

}  // namespace efflab
