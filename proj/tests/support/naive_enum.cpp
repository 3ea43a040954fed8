#include "support/naive_enum.hpp"

#include <algorithm>

namespace efflab::testing {

namespace {

std::vector<std::string> names_for(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
    return names;
}

// All symmetric partial tables with forced unit row: entries for pairs
// 1 <= x <= y <= n-1 range over {-1, 0, .., n-1}. Commutativity and the
// unit row are definitional, everything else is left to the checker.
void scan_ea(int n, const std::function<void(const EffectTable&)>& sink) {
    std::vector<std::pair<int, int>> slots;
    for (int x = 1; x < n; ++x)
        for (int y = x; y < n; ++y) slots.emplace_back(x, y);

    std::vector<int> choice(slots.size(), -1);
    const int base = n + 1;  // -1..n-1
    long long total = 1;
    for (size_t i = 0; i < slots.size(); ++i) total *= base;

    EffectTable t;
    t.names = names_for(n);
    t.zero = 0;
    t.one = n - 1;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        t.ovee.assign(n, std::vector<int>(n, -1));
        for (int x = 0; x < n; ++x) {
            t.ovee[0][x] = x;
            t.ovee[x][0] = x;
        }
        bool consistent = true;
        for (size_t i = 0; i < slots.size(); ++i) {
            choice[i] = int(c % base) - 1;
            c /= base;
            const auto [x, y] = slots[i];
            if (x == 0 || y == 0) continue;
            t.ovee[x][y] = choice[i];
            t.ovee[y][x] = choice[i];
        }
        if (!consistent) continue;
        // Orthosupplement is determined by the table when it exists.
        t.orth.assign(n, -1);
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            int found = -1;
            for (int y = 0; y < n; ++y)
                if (t.ovee[x][y] == n - 1) {
                    if (found >= 0) ok = false;
                    found = y;
                }
            if (found < 0) ok = false;
            t.orth[x] = found;
        }
        if (!ok) continue;
        if (check_effect_algebra(t).pass) sink(t);
    }
}

}  // namespace

std::vector<EffectTable> naive_effect_algebras(int n) {
    if (n == 1) {
        EffectTable t;
        t.names = {"e0"};
        t.zero = t.one = 0;
        t.ovee = {{0}};
        t.orth = {0};
        return {t};
    }
    std::vector<EffectTable> out;
    std::set<std::string> seen;
    scan_ea(n, [&](const EffectTable& t) {
        if (seen.insert(canonical_key_ea(t)).second) out.push_back(t);
    });
    return out;
}

std::vector<EffectTable> naive_effect_monoids(int n) {
    std::vector<EffectTable> out;
    std::set<std::string> seen;
    for (EffectTable ea : naive_effect_algebras(n)) {
        // Product scan: unit row/column forced (definitional), everything
        // else free over all elements.
        std::vector<std::pair<int, int>> slots;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != ea.one && y != ea.one) slots.emplace_back(x, y);
        long long total = 1;
        for (size_t i = 0; i < slots.size(); ++i) total *= n;
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            std::vector<std::vector<int>> prod(n, std::vector<int>(n));
            for (int x = 0; x < n; ++x) {
                prod[ea.one][x] = x;
                prod[x][ea.one] = x;
            }
            for (const auto& [x, y] : slots) {
                prod[x][y] = int(c % n);
                c /= n;
            }
            ea.product = prod;
            if (check_effect_monoid(ea).pass &&
                seen.insert(canonical_key_monoid(ea)).second)
                out.push_back(ea);
        }
        ea.product.reset();
    }
    return out;
}

}  // namespace efflab::testing
