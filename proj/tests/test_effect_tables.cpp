#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "efflab/effect_table.hpp"
#include "efflab/enumerate.hpp"
#include "efflab/json_io.hpp"
#include "support/naive_enum.hpp"

using namespace efflab;

TEST_CASE("powerset of a 2-element set is an effect algebra and monoid") {
    const EffectTable t = EffectTable::boolean_power(2);
    CHECK(check_effect_algebra(t).pass);
    CHECK(check_orthoalgebra(t).pass);
    CHECK(check_effect_monoid(t).pass);
    CHECK(check_sea_table(t).pass);
    CHECK(boolean_verdict(t));
}

TEST_CASE("3-chain passes the effect algebra axioms") {
    const EffectTable t = EffectTable::chain(3);
    CHECK(check_effect_algebra(t).pass);
    // a is self-summable, so not an orthoalgebra.
    const auto oa = check_orthoalgebra(t);
    CHECK_FALSE(oa.pass);
    CHECK(oa.counterexample->find("self-summable") != std::string::npos);
    CHECK(oa.counterexample->find("a") != std::string::npos);
    CHECK_FALSE(boolean_verdict(t));
}

TEST_CASE("3-chain with corrupted orthosupplement fails with witness a") {
    EffectTable t = EffectTable::chain(3);
    t.orth[1] = 2;  // claim a' = 1
    const auto rep = check_effect_algebra(t);
    CHECK_FALSE(rep.pass);
    CHECK(rep.counterexample->find("orthosupplement-unique") != std::string::npos);
    CHECK(rep.counterexample->find("a") != std::string::npos);
}

TEST_CASE("3-chain admits no effect monoid product") {
    EffectTable t = EffectTable::chain(3);
    // Try every total product table; none passes. The scan doubles as the
    // exhaustive oracle for the a.a case from the axioms.
    int found = 0;
    const int n = t.size();
    for (int code = 0; code < n * n * n * n * n * n * n * n * n; ++code) {
        int c = code;
        std::vector<std::vector<int>> prod(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                prod[x][y] = c % n;
                c /= n;
            }
        t.product = prod;
        if (check_effect_monoid(t).pass) ++found;
    }
    CHECK(found == 0);
}

TEST_CASE("boolean meet product on the square and mutant rejection") {
    EffectTable t = EffectTable::boolean_power(2);
    CHECK(check_effect_monoid(t).pass);
    // Mutant: break one product entry; distributivity or unit must flag it.
    (*t.product)[1][2] = 3;  // a.b = 1 instead of 0
    CHECK_FALSE(check_effect_monoid(t).pass);
}

TEST_CASE("sea axiom c mutant is flagged with a witness pair") {
    EffectTable t = EffectTable::boolean_power(2);
    // b&a = b, b&b = 0 keeps additivity in the second argument intact
    // (b&(a+b) = b&1 = b = b + 0) but breaks zero symmetry against a&b = 0.
    (*t.product)[2][1] = 2;
    (*t.product)[2][2] = 0;
    const auto rep = check_sea_table(t);
    CHECK_FALSE(rep.pass);
    CHECK(rep.law == "def2.57.c");
    CHECK(rep.counterexample->find("zero-symmetry") != std::string::npos);
}

TEST_CASE("idempotents and irreducibility flags") {
    const EffectTable b1 = EffectTable::boolean_power(1);
    const auto r1 = idempotents(b1);
    CHECK(r1.elements.size() == 2);
    CHECK(r1.irreducible);

    const EffectTable b2 = EffectTable::boolean_power(2);
    const auto r2 = idempotents(b2);
    CHECK(r2.elements.size() == 4);
    CHECK_FALSE(r2.irreducible);

    const EffectTable ds = direct_sum(b1, b1);
    CHECK(idempotents(ds).elements.size() == 4);
}

TEST_CASE("corner at an atom of the boolean square is the 2-element boolean") {
    const EffectTable t = EffectTable::boolean_power(2);
    const CornerResult r = corner(t, 1);
    CHECK(r.corner.size() == 2);
    CHECK(r.cocorner.size() == 2);
    CHECK(r.verified);
    CHECK(check_effect_monoid(r.corner).pass);
    CHECK(isomorphic_monoids(r.corner, EffectTable::boolean_power(1)));
}

TEST_CASE("corner at one is the whole table, corner at zero is trivial") {
    const EffectTable t = EffectTable::boolean_power(2);
    const CornerResult at_one = corner(t, t.one);
    CHECK(at_one.corner.size() == t.size());
    CHECK(isomorphic_monoids(at_one.corner, t));
    const CornerResult at_zero = corner(t, t.zero);
    CHECK(at_zero.corner.size() == 1);
    CHECK(at_zero.verified);
}

TEST_CASE("corner requires an idempotent") {
    EffectTable t = EffectTable::chain(3);
    auto prod = std::vector<std::vector<int>>(3, std::vector<int>(3, 0));
    for (int i = 0; i < 3; ++i) {
        prod[2][i] = i;
        prod[i][2] = i;
    }
    prod[1][1] = 0;  // a.a = 0: a is not idempotent
    t.product = prod;
    CHECK_THROWS_AS((void)corner(t, 1), Error);
}

TEST_CASE("direct sums multiply sizes and stay effect algebras") {
    const EffectTable c3 = EffectTable::chain(3);
    const EffectTable b1 = EffectTable::boolean_power(1);
    const EffectTable ds = direct_sum(c3, b1);
    CHECK(ds.size() == 6);
    CHECK(check_effect_algebra(ds).pass);

    // {0} is absorbing up to isomorphism.
    EffectTable trivial;
    trivial.names = {"z"};
    trivial.zero = trivial.one = 0;
    trivial.ovee = {{0}};
    trivial.orth = {0};
    const EffectTable same = direct_sum(trivial, c3);
    CHECK(same.size() == 3);
    CHECK(canonical_key_ea(same) == canonical_key_ea(c3));
}

TEST_CASE("effect algebra invariants: double complement and exchange") {
    for (const auto& t : {EffectTable::boolean_power(2), EffectTable::chain(3),
                          EffectTable::chain(4)}) {
        REQUIRE(check_effect_algebra(t).pass);
        for (int x = 0; x < t.size(); ++x) CHECK(t.orth[t.orth[x]] == x);
        for (int x = 0; x < t.size(); ++x)
            for (int y = 0; y < t.size(); ++y)
                CHECK(t.summable(x, y) == t.leq(x, t.orth[y]));
        // Antitone orthosupplement.
        for (int x = 0; x < t.size(); ++x)
            for (int y = 0; y < t.size(); ++y)
                if (t.leq(x, y)) CHECK(t.leq(t.orth[y], t.orth[x]));
    }
}

TEST_CASE("enumeration matches the naive oracle for sizes 1..4") {
    for (int n = 1; n <= 4; ++n) {
        const auto naive = testing::naive_effect_algebras(n);
        const auto smart = enumerate_effect_algebras(n);
        std::set<std::string> a, b;
        for (const auto& t : naive) a.insert(canonical_key_ea(t));
        for (const auto& t : smart) b.insert(canonical_key_ea(t));
        CHECK(a == b);

        const auto naive_m = testing::naive_effect_monoids(n);
        const auto smart_m = enumerate_effect_monoids(n);
        std::set<std::string> am, bm;
        for (const auto& t : naive_m) am.insert(canonical_key_monoid(t));
        for (const auto& s : smart_m.structures)
            if (s.table.size() == n) bm.insert(canonical_key_monoid(s.table));
        CHECK(am == bm);
    }
}

TEST_CASE("effect monoid census: sizes 1,2 and 4 only, all boolean") {
    const auto res = enumerate_effect_monoids(5);
    CHECK(res.count_by_size.at(1) == 1);
    CHECK(res.count_by_size.at(2) == 1);
    CHECK(res.count_by_size.at(3) == 0);
    CHECK(res.count_by_size.at(4) == 1);
    CHECK(res.count_by_size.at(5) == 0);
    for (const auto& s : res.structures) {
        CHECK(s.boolean);
        CHECK(check_effect_monoid(s.table).pass);
        // Both isomorphism counts agree at these sizes.
    }
    CHECK(res.ea_classes_by_size.at(4) == 1);
    CHECK_THROWS_AS((void)enumerate_effect_monoids(7), Error);
}

TEST_CASE("sea census at size <= 5: orthoalgebra tables have meet products") {
    const auto res = enumerate_sea_tables(5);
    int ortho_count = 0;
    for (const auto& s : res.structures) {
        REQUIRE(check_sea_table(s.table).pass);
        if (!check_orthoalgebra(s.table).pass) continue;
        ++ortho_count;
        CHECK(boolean_verdict(s.table));
        for (int x = 0; x < s.table.size(); ++x)
            for (int y = 0; y < s.table.size(); ++y)
                CHECK(s.table.prod(x, y) == *s.table.meet(x, y));
    }
    CHECK(ortho_count >= 3);  // at least the boolean algebras of sizes 1,2,4
}

TEST_CASE("corner round-trips across the whole census") {
    // Every enumerated monoid rebuilds from its two corners at every
    // idempotent.
    const auto res = enumerate_effect_monoids(6);
    for (const auto& s : res.structures) {
        const auto idem = idempotents(s.table);
        for (int p : idem.elements) {
            const CornerResult c = corner(s.table, p);
            CHECK(c.verified);
            const EffectTable rebuilt = direct_sum(c.corner, c.cocorner);
            CHECK(isomorphic_monoids(rebuilt, s.table));
        }
    }
}

TEST_CASE("effect table json round trip") {
    const EffectTable t = EffectTable::boolean_power(2);
    const auto j = to_json(t);
    const EffectTable back = effect_table_from_json(j);
    CHECK(canonical_key_monoid(back) == canonical_key_monoid(t));

    CHECK_THROWS_AS((void)parse_json_text("{ not json"), ParseError);
}
