#ifndef EFFLAB_EFFECT_TABLE_HPP
#define EFFLAB_EFFECT_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "efflab/common.hpp"

namespace efflab {

// A finite partial-commutative-monoid / effect-algebra style structure as an
// explicit table. Entry -1 in `ovee` means the partial sum is undefined.
// `product` is present iff the structure claims to be an effect monoid or a
// sequential effect algebra; it is total.
struct EffectTable {
    std::vector<std::string> names;
    int zero = 0;
    int one = 0;
    std::vector<std::vector<int>> ovee;
    std::vector<int> orth;
    std::optional<std::vector<std::vector<int>>> product;

    int size() const { return int(names.size()); }
    int sum(int x, int y) const { return ovee[x][y]; }
    bool summable(int x, int y) const { return ovee[x][y] >= 0; }
    int prod(int x, int y) const { return (*product)[x][y]; }

    // Throws Error("malformed-table") on out-of-range ids or ragged tables.
    void validate_shape() const;

    // Derived order: x <= y iff some z has x (+) z = y.
    bool leq(int x, int y) const;
    std::vector<int> lower_cone(int x) const;
    // Greatest lower bound in the derived order, when it exists.
    std::optional<int> meet(int x, int y) const;
    std::optional<int> join(int x, int y) const;
    std::vector<int> atoms() const;

    static EffectTable boolean_power(int k);  // powerset of a k-element set
    static EffectTable chain(int len);        // 0 < a < ... < 1 with i+j capped
};

// Axiom checkers. Reports carry the violated axiom and witnesses.
LawReport check_effect_algebra(const EffectTable& t);
LawReport check_orthoalgebra(const EffectTable& t);
// Throws Error("missing-product-table") when no product is present.
LawReport check_effect_monoid(const EffectTable& t);
LawReport check_sea_table(const EffectTable& t);

// True iff the derived order is a complemented distributive lattice whose
// partial sum is disjoint join; the standard finite Boolean-algebra test.
bool boolean_verdict(const EffectTable& t);

struct IdempotentsResult {
    std::vector<int> elements;
    bool irreducible = false;  // idempotents == {zero, one}
};
IdempotentsResult idempotents(const EffectTable& t);

struct CornerResult {
    EffectTable corner;      // p.M
    EffectTable cocorner;    // (1-p).M
    // pairing[a] = (index in corner, index in cocorner) witnessing
    // a |-> (p.a, p'.a); verified says the pairing is an isomorphism
    // onto direct_sum(corner, cocorner).
    std::vector<std::pair<int, int>> pairing;
    bool verified = false;
};
// Requires p idempotent (throws Error("not-idempotent") otherwise).
CornerResult corner(const EffectTable& t, int p);

EffectTable direct_sum(const EffectTable& a, const EffectTable& b);

// Canonical keys under relabelings fixing zero and one. Two tables are
// isomorphic (as effect algebras / monoids) iff their keys agree.
std::string canonical_key_ea(const EffectTable& t);
std::string canonical_key_monoid(const EffectTable& t);
bool isomorphic_monoids(const EffectTable& a, const EffectTable& b);

}  // namespace efflab

#endif  // EFFLAB_EFFECT_TABLE_HPP
