#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efflab/diamond.hpp"
#include "efflab/laws.hpp"

using namespace efflab;

namespace {

const BlockSignature kQubit{{2}};
const BlockSignature kQutrit{{3}};

CMat m2(cplx a, cplx b, cplx c, cplx d) {
    CMat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

CMat diag(std::vector<double> v) {
    CMat m(int(v.size()), int(v.size()));
    for (size_t i = 0; i < v.size(); ++i) m(int(i), int(i)) = v[i];
    return m;
}

SelfAdjoint sa2(const CMat& m) { return SelfAdjoint::make(kQubit, {m}); }
SelfAdjoint sa3(const CMat& m) { return SelfAdjoint::make(kQutrit, {m}); }

const CMat kPauliX = m2(0, 1, 1, 0);

}  // namespace

TEST_CASE("jordan product: commuting diagonals, off-diagonal case, unit law") {
    CHECK(distance(jordan_product(sa2(diag({1, 2})), sa2(diag({3, 4}))),
                   sa2(diag({3, 8}))) < 1e-14);
    // sigma_x * diag(1,0) = off-diagonal 1/2.
    CHECK(distance(jordan_product(sa2(kPauliX), sa2(diag({1, 0}))),
                   sa2(m2(0, 0.5, 0.5, 0))) < 1e-14);
    Rng rng(1);
    const SelfAdjoint a = random_self_adjoint(kQubit, rng);
    CHECK(distance(jordan_product(a, SelfAdjoint::identity(kQubit)), a) < 1e-14);
}

TEST_CASE("quadratic map against the conjugation oracle") {
    // sigma_x diag(1,0) sigma_x = diag(0,1).
    CHECK(distance(quadratic(sa2(kPauliX), sa2(diag({1, 0}))), sa2(diag({0, 1}))) < 1e-13);
    Rng rng(2);
    const SelfAdjoint b = random_self_adjoint(kQubit, rng);
    CHECK(distance(quadratic(SelfAdjoint::identity(kQubit), b), b) < 1e-13);
    CHECK(distance(quadratic(sa2(diag({2, 0})), sa2(diag({1, 1}))), sa2(diag({4, 0}))) <
          1e-13);
}

TEST_CASE("triple product: collapse, orthogonal diagonal case, bilinearity") {
    Rng rng(3);
    const SelfAdjoint a = random_self_adjoint(kQubit, rng);
    const SelfAdjoint c = random_self_adjoint(kQubit, rng);
    CHECK(distance(triple(a, a, c), quadratic(a, c)) < 1e-12);
    // (1/2)(acb + bca) for a=diag(1,0), b=diag(0,1), c=I is zero.
    CHECK(fro_norm(triple(sa2(diag({1, 0})), sa2(diag({0, 1})),
                          SelfAdjoint::identity(kQubit))) < 1e-14);
    const SelfAdjoint a2 = random_self_adjoint(kQubit, rng);
    const SelfAdjoint b = random_self_adjoint(kQubit, rng);
    CHECK(distance(triple(a + a2, b, c), triple(a, b, c) + triple(a2, b, c)) < 1e-12);
}

TEST_CASE("spectral: diagonal clustering and the sigma_x eigenbasis") {
    const auto comps = spectral(sa3(diag({1, 1, 0.5})));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].value == doctest::Approx(1.0));
    CHECK(distance(comps[0].projection, sa3(diag({1, 1, 0}))) < 1e-12);
    CHECK(distance(comps[1].projection, sa3(diag({0, 0, 1}))) < 1e-12);

    const auto sx = spectral(sa2(kPauliX));
    REQUIRE(sx.size() == 2);
    CHECK(sx[0].value == doctest::Approx(1.0));
    CHECK(sx[1].value == doctest::Approx(-1.0));
    CHECK(distance(sx[0].projection, sa2(m2(0.5, 0.5, 0.5, 0.5))) < 1e-12);
}

TEST_CASE("floor and ceiling of effects") {
    const MatrixEffect p = MatrixEffect::make(sa3(diag({1, 0.5, 0})));
    CHECK(distance(effect_floor(p).sa(), sa3(diag({1, 0, 0}))) < 1e-12);
    CHECK(distance(effect_ceil(p).sa(), sa3(diag({1, 1, 0}))) < 1e-12);

    Rng rng(4);
    const Projection r = random_projection(kQutrit, rng);
    CHECK(distance(effect_floor(r.p).sa(), r.sa()) < 1e-10);
    CHECK(distance(effect_ceil(r.p).sa(), r.sa()) < 1e-10);

    // 0.7 (I + sigma_x)/2: floor 0, ceiling the half projection.
    const MatrixEffect q =
        MatrixEffect::make(0.7 * sa2(m2(0.5, 0.5, 0.5, 0.5)));
    CHECK(fro_norm(effect_floor(q).sa()) < 1e-12);
    CHECK(distance(effect_ceil(q).sa(), sa2(m2(0.5, 0.5, 0.5, 0.5))) < 1e-12);
}

TEST_CASE("sequential product frozen examples") {
    const MatrixEffect p = MatrixEffect::make(sa2(diag({0.5, 1})));
    const MatrixEffect q = MatrixEffect::make(sa2(diag({1, 0})));
    CHECK(distance(seq_product(p, q).m, sa2(diag({0.5, 0}))) < 1e-12);

    const MatrixEffect proj = MatrixEffect::make(sa2(m2(0.5, 0.5, 0.5, 0.5)));
    CHECK(distance(seq_product(proj, q).m, sa2(m2(0.25, 0.25, 0.25, 0.25))) < 1e-12);

    Rng rng(5);
    const MatrixEffect r = random_effect(kQubit, rng);
    CHECK(distance(seq_product(MatrixEffect::one(kQubit), r).m, r.m) < 1e-12);
}

TEST_CASE("multiplication and derivation operators at the extremes") {
    const Projection p = Projection::make(MatrixEffect::make(sa2(diag({1, 0}))));
    CHECK(distance(mult_operator(p).apply(sa2(kPauliX)), 0.5 * sa2(kPauliX)) < 1e-12);

    const Projection one = Projection::make(MatrixEffect::one(kQubit));
    CHECK(distance(mult_operator(one), superop_identity(kQubit)) < 1e-12);
    CHECK(distance(derivation_operator(one), superop_identity(kQubit)) < 1e-12);
    const Projection zero = Projection::make(MatrixEffect::zero(kQubit));
    CHECK(distance(derivation_operator(zero), -1.0 * superop_identity(kQubit)) < 1e-12);
}

TEST_CASE("channel images: corners, column maps, full rank") {
    ChannelMap f{kQubit, kQubit, {{0, 0, diag({1, 0})}}};
    CHECK(distance(image_of(f).sa(), sa2(diag({1, 0}))) < 1e-10);

    // K = |0><+|.
    const double s = 1.0 / std::sqrt(2.0);
    ChannelMap g{kQubit, kQubit, {{0, 0, m2(s, s, 0, 0)}}};
    CHECK(distance(image_of(g).sa(), sa2(diag({1, 0}))) < 1e-10);

    Rng rng(6);
    const ChannelMap h = random_channel(kQubit, kQubit, rng, true);
    CHECK(is_total(h));
    CHECK(distance(image_of(h).sa(), SelfAdjoint::identity(kQubit)) < 1e-10);
}

TEST_CASE("partial sums of channels and the summability gate") {
    const double s = 1.0 / std::sqrt(2.0);
    ChannelMap half{kQubit, kQubit, {{0, 0, s * CMat::identity(2)}}};
    const auto sum = ovee_maps(half, half);
    REQUIRE(sum.has_value());
    CHECK(is_total(*sum));
    CHECK(choi_distance(*sum, ChannelMap::identity(kQubit)) < 1e-12);

    // Truths diag(0.7,0.2) and diag(0.5,0.5) exceed 1 in the first entry.
    ChannelMap f{kQubit, kQubit,
                 {{0, 0, diag({std::sqrt(0.7), std::sqrt(0.2)})}}};
    ChannelMap g{kQubit, kQubit,
                 {{0, 0, diag({std::sqrt(0.5), std::sqrt(0.5)})}}};
    CHECK_FALSE(ovee_maps(f, g).has_value());

    Rng rng(7);
    const ChannelMap z = ChannelMap::zero(kQubit, kQubit);
    CHECK(choi_distance(compose(random_channel(kQubit, kQubit, rng), z), z) < 1e-14);
}

TEST_CASE("coproducts concatenate blocks") {
    const CoproductObj c = coproduct(kQubit, kQutrit);
    CHECK(c.obj.dims == std::vector<int>{2, 3});
    CHECK(choi_distance(compose(c.proj_left(), c.inj_left()),
                        ChannelMap::identity(kQubit)) < 1e-14);
    CHECK(choi_distance(compose(c.proj_left(), c.inj_right()),
                        ChannelMap::zero(kQutrit, kQubit)) < 1e-14);

    const CoproductObj with_zero = coproduct(kQubit, BlockSignature{});
    CHECK(with_zero.obj == kQubit);
}

TEST_CASE("comprehension carriers and frozen actions") {
    // p = diag(1,1,0.5): carrier [2], inclusion of the top-left corner.
    const Comprehension c = comprehension(MatrixEffect::make(sa3(diag({1, 1, 0.5}))));
    CHECK(c.carrier.dims == std::vector<int>{2});
    const SelfAdjoint pred = sa3(diag({3, 5, 7}));
    const SelfAdjoint pulled = heisenberg(c.map, pred);
    CHECK(distance(pulled, SelfAdjoint::make(c.carrier, {diag({3, 5})})) < 1e-12);

    // Unsharp predicate with no certain part: zero carrier.
    const Comprehension empty =
        comprehension(MatrixEffect::make(0.3 * sa2(m2(0.5, 0.5, 0.5, 0.5))));
    CHECK(empty.carrier.is_zero_object());

    // Sharp p: compatible pair identities.
    Rng rng(8);
    const Projection p = random_projection(kQutrit, rng);
    const Comprehension cp = comprehension(p.p);
    const Filter fp = filter_of(p.p);
    CHECK(choi_distance(compose(fp.map, cp.map), PureMap::identity(cp.carrier)) < 1e-12);
    CHECK(choi_distance(compose(cp.map, fp.map), assert_map(p.p)) < 1e-12);
}

TEST_CASE("filter carriers and the identity filter") {
    const Filter f = filter_of(MatrixEffect::make(sa3(diag({1, 0.5, 0}))));
    CHECK(f.carrier.dims == std::vector<int>{2});
    CHECK(distance(truth_of(f.map).m, sa3(diag({1, 0.5, 0}))) < 1e-12);

    const Filter id = filter_of(MatrixEffect::one(kQubit));
    CHECK(choi_distance(id.map, PureMap::identity(kQubit)) < 1e-12);
}

TEST_CASE("assert maps: corners, scalar case, image") {
    const PureMap corner = assert_map(MatrixEffect::make(sa2(diag({1, 0}))));
    Rng rng(9);
    const SelfAdjoint q = random_self_adjoint(kQubit, rng);
    const SelfAdjoint out = heisenberg(corner, q);
    CHECK(std::abs(out.blocks[0](0, 0) - q.blocks[0](0, 0)) < 1e-13);
    CHECK(std::abs(out.blocks[0](0, 1)) < 1e-13);

    const PureMap half = assert_map(MatrixEffect::make(sa2(diag({0.5, 0.5}))));
    CHECK(distance(heisenberg(half, q), 0.5 * q) < 1e-13);

    const MatrixEffect p = random_effect(kQutrit, rng);
    CHECK(distance(image_of(assert_map(p)).sa(), effect_ceil(p).sa()) < 1e-10);
}

TEST_CASE("dagger frozen example and compatible pairs") {
    const PureMap f = PureMap::make(kQubit, kQubit, {{0, 0, m2(0, 1, 0, 0)}});
    const PureMap fd = dagger(f);
    CHECK(fro_norm(fd.terms[0].k - m2(0, 0, 1, 0)) < 1e-15);

    Rng rng(10);
    const MatrixEffect p = random_effect(kQubit, rng);
    CHECK(choi_distance(dagger(assert_map(p)), assert_map(p)) < 1e-13);

    const Projection sharp = random_projection(kQutrit, rng);
    CHECK(choi_distance(dagger(comprehension(sharp.p).map), filter_of(sharp.p).map) <
          1e-9);
}

TEST_CASE("pure factorisation of asserts, invertibles and the zero map") {
    Rng rng(11);
    const Projection p = random_projection(kQubit, rng);
    const PureMap ap = assert_map(p.p);
    const PureFactorization fac = pure_factorize(ap);
    CHECK(choi_distance(fac.recomposed(), ap) < 1e-12);

    // Invertible conjugation: trivial comprehension, unitary middle factor.
    const CMat a = m2(1.2, 0.3, cplx(0, -0.4), 0.9);
    const PureMap inv = PureMap::make(kQubit, kQubit, {{0, 0, 0.5 * a}});
    const PureFactorization fi = pure_factorize(inv);
    CHECK(fi.compr.carrier == kQubit);
    CHECK(choi_distance(fi.recomposed(), inv) < 1e-10);
    CHECK(choi_distance(compose(dagger(fi.iso), fi.iso),
                        PureMap::identity(fi.iso.source)) < 1e-10);

    const PureMap z = PureMap::zero(kQubit, kQubit);
    const PureFactorization fz = pure_factorize(z);
    CHECK(fz.compr.carrier.is_zero_object());
    CHECK(fz.filt.carrier.is_zero_object());
    CHECK(choi_distance(fz.recomposed(), z) < 1e-14);
}

TEST_CASE("possibilistic transformers frozen examples") {
    const ChannelMap id = ChannelMap::identity(kQubit);
    Rng rng(12);
    const Projection p = random_projection(kQubit, rng);
    CHECK(distance(diamond(id, p).sa(), p.sa()) < 1e-12);
    CHECK(distance(box_of(id, p).sa(), p.sa()) < 1e-12);
    CHECK(distance(lower_diamond(id, p).sa(), p.sa()) < 1e-12);

    const PureMap f = assert_map(MatrixEffect::make(sa2(diag({0.5, 1}))));
    const Projection e0 = Projection::make(MatrixEffect::make(sa2(diag({1, 0}))));
    CHECK(distance(diamond(f.channel(), e0).sa(), sa2(diag({1, 0}))) < 1e-12);

    const ChannelMap g = random_channel(kQubit, kQubit, rng);
    CHECK(distance(diamond(scale_map(0.5, g), e0).sa(), diamond(g, e0).sa()) < 1e-10);
}

TEST_CASE("sharp meets and joins") {
    const Projection a = Projection::make(MatrixEffect::make(sa2(diag({1, 0}))));
    const Projection b = Projection::make(MatrixEffect::one(kQubit));
    CHECK(distance(sharp_meet(a, b).sa(), a.sa()) < 1e-12);
    CHECK(distance(sharp_join(a, b).sa(), b.sa()) < 1e-12);

    const Projection plus = Projection::make(MatrixEffect::make(sa2(m2(0.5, 0.5, 0.5, 0.5))));
    CHECK(fro_norm(sharp_meet(a, plus).sa()) < 1e-10);
    CHECK(distance(sharp_join(a, plus).sa(), SelfAdjoint::identity(kQubit)) < 1e-10);

    Rng rng(13);
    const Projection r = random_projection(kQutrit, rng);
    CHECK(distance(sharp_join(r, r.complement()).sa(), SelfAdjoint::identity(kQutrit)) <
          1e-10);
}

TEST_CASE("effect clamping accepts dust and rejects real violations") {
    CMat slightly = diag({1.0 + 5e-10, -5e-10});
    const MatrixEffect e = MatrixEffect::make(sa2(slightly));
    CHECK(max_eigenvalue(e.m) <= 1.0 + 1e-12);
    CHECK(min_eigenvalue(e.m) >= -1e-12);
    CHECK_THROWS_AS((void)MatrixEffect::make(sa2(diag({1.5, 0}))), Error);
}

TEST_CASE("error paths: mismatches, purity, budgets") {
    Rng rng(14);
    const SelfAdjoint a2 = random_self_adjoint(kQubit, rng);
    const SelfAdjoint a3 = random_self_adjoint(kQutrit, rng);
    CHECK_THROWS_AS((void)jordan_product(a2, a3), Error);

    const ChannelMap f = random_channel(kQubit, kQubit, rng);
    CHECK_THROWS_AS((void)heisenberg(f, a3), Error);
    CHECK_THROWS_AS((void)compose(f, random_channel(kQutrit, kQutrit, rng)), Error);
    CHECK_THROWS_AS((void)ovee_maps(f, random_channel(kQutrit, kQutrit, rng)), Error);

    // Duplicated block pairing is rejected as not pure.
    CHECK_THROWS_AS((void)PureMap::make(kQubit, kQubit,
                                        {{0, 0, CMat::identity(2)},
                                         {0, 0, CMat::identity(2)}}),
                    Error);
    // Non-idempotent input refused for sharp-only constructions.
    CHECK_THROWS_AS((void)Projection::make(MatrixEffect::make(sa2(diag({0.5, 0.5})))),
                    Error);
    CHECK_THROWS_AS((void)BlockSignature(std::vector<int>{2, 0}), Error);
    CHECK_THROWS_AS((void)scale_map(1.5, f), Error);
}

TEST_CASE("order derivation check rejects overly large exponents") {
    const Projection p = Projection::make(MatrixEffect::make(sa2(diag({1, 0}))));
    const SuperOp d = derivation_operator(p);
    CHECK_THROWS_AS((void)check_order_derivation(d, {100.0}, 1, 1), Error);
    // The one-sided positive semigroup q -> sx q sx - q is reported, not
    // asserted: record its verdict for both time directions.
    const SuperOp flip = superop_of(kQubit, kQubit, [&](const SelfAdjoint& q) {
        return conjugate(sa2(kPauliX), q) - q;
    });
    const LawReport verdict = check_order_derivation(flip, {1.0, -1.0}, 10, 2);
    CHECK(verdict.law == "prop5.16");  // verdict recorded either way
}
