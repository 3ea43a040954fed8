#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efflab/product_backend.hpp"
#include "efflab/set_backend.hpp"
#include "efflab/tensor.hpp"
#include "efflab/json_io.hpp"

using namespace efflab;

namespace {

void expect_all_pass(const std::vector<LawReport>& reports, double bound) {
    for (const auto& r : reports) {
        const std::string detail = r.law + " " + r.counterexample.value_or("");
        INFO(detail);
        CHECK(r.pass);
        CHECK(r.residual <= bound);
    }
}

}  // namespace

TEST_CASE("set backend laws are exact") {
    for (int n : {1, 3, 4}) {
        const auto reports = run_set_laws(SetObject{n}, 60, 13);
        expect_all_pass(reports, 0.0);
    }
}

TEST_CASE("set backend basics") {
    const SetMap f{3, 3, {1, -1, 2}};
    CHECK_FALSE(is_total(f));
    CHECK(truth_of(f) == SetPred{true, false, true});
    CHECK(image_of(f) == SetPred{false, true, true});

    const SetMap g{3, 3, {-1, 0, -1}};
    const auto sum = ovee_set(f, g);
    REQUIRE(sum.has_value());
    CHECK(is_total(*sum));
    CHECK_FALSE(ovee_set(f, f).has_value());

    const SetPred p{true, false, true};
    const auto c = set_comprehension(p);
    CHECK(c.carrier == 2);
    const auto fl = set_filter(p);
    CHECK(compose_set(fl.map, c.map).graph == SetMap::identity(2).graph);
    CHECK(compose_set(c.map, fl.map).graph == set_assert(p).graph);

    // Scalar monoid of the set backend is the booleans.
    CHECK(scalar_monoid_set().idempotents.size() == 2);
    CHECK(set_pred_table(SetObject{2}).size() == 4);
}

TEST_CASE("product backend scalar structure") {
    const auto idems = find_idempotent_scalars();
    CHECK(idems.size() == 4);
    CHECK(scalar_monoid_product().idempotents.size() == 4);
    CHECK(scalar_monoid_matrix().idempotents ==
          std::vector<std::string>{"0", "1"});
}

TEST_CASE("product backend splits at the boolean-side idempotent") {
    const SplitReport rep = split_by_scalar({true, 0.0}, 10, 41);
    CHECK(rep.pass);
    CHECK(rep.left_factor == "set");
    CHECK(rep.right_factor == "matrix");
    CHECK(rep.split_residual <= 1e-9);
    CHECK(rep.roundtrip_residual <= 1e-9);
    CHECK(rep.sampled_morphisms >= 40);

    // The complementary idempotent swaps the factors.
    const SplitReport swapped = split_by_scalar({false, 1.0}, 5, 43);
    CHECK(swapped.pass);
    CHECK(swapped.left_factor == "matrix");
    CHECK(swapped.right_factor == "set");

    CHECK_THROWS_AS((void)split_by_scalar({true, 1.0}, 1, 1), Error);
    CHECK_THROWS_AS((void)split_by_scalar({false, 0.0}, 1, 1), Error);
}

TEST_CASE("predicate spaces decompose as boolean plus convex") {
    const ProdObject obj{{2}, BlockSignature{{2}}};
    const auto rep = decompose_pred_space(obj, 100, 47);
    CHECK(rep.boolean_side_monoid);
    CHECK(rep.boolean_side_boolean);
    CHECK(rep.convex_action_residual <= 1e-12);
    CHECK(rep.pass);
}

TEST_CASE("finite tomography certificates") {
    const auto m = finite_tomography_matrix(BlockSignature{{2}}, 4);
    INFO(m.instance);
    CHECK(m.pass);  // 4 basis effects span the 4-dimensional hermitian space
    CHECK(finite_tomography_matrix(BlockSignature{{2, 3}}, 64).pass);
    CHECK(finite_tomography_set(SetObject{3}, 3).pass);
    CHECK_FALSE(finite_tomography_set(SetObject{5}, 3).pass);
    CHECK(finite_tomography_product(ProdObject{{1}, BlockSignature{{1}}}, 8).pass);
}

TEST_CASE("matrix backend separation certificates") {
    CHECK(check_matrix_separation(BlockSignature{{2}}, true, 10, 53).pass);
    CHECK(check_matrix_separation(BlockSignature{{2}}, false, 10, 53).pass);
    CHECK(check_matrix_separation(BlockSignature{{2, 2}}, true, 5, 59).pass);
}

TEST_CASE("set backend separation") {
    CHECK(check_set_separation(SetObject{1}, true, 5, 61).pass);
    CHECK(check_set_separation(SetObject{4}, true, 50, 61).pass);
    CHECK(check_set_separation(SetObject{4}, false, 50, 61).pass);
}

TEST_CASE("product law battery") {
    const ProdObject obj{{2}, BlockSignature{{2}}};
    expect_all_pass(run_product_laws(obj, 20, 67), 1e-9);
}

TEST_CASE("tensor object flattening and frozen kronecker examples") {
    const TensorObject t = tensor_object(BlockSignature{{2}}, BlockSignature{{2}});
    CHECK(t.flattened.dims == std::vector<int>{4});

    // diag(1,0) (x) diag(1,1) = diag(1,1,0,0)
    CMat a(2, 2), b(2, 2);
    a(0, 0) = 1;
    b(0, 0) = 1;
    b(1, 1) = 1;
    const SelfAdjoint ta = SelfAdjoint::make(BlockSignature{{2}}, {a});
    const SelfAdjoint tb = SelfAdjoint::make(BlockSignature{{2}}, {b});
    const SelfAdjoint prod = tensor_effects(t, ta, tb);
    for (int i = 0; i < 4; ++i)
        CHECK(prod.blocks[0](i, i).real() == doctest::Approx(i < 2 ? 1.0 : 0.0));

    CHECK_THROWS_AS((void)tensor_object(BlockSignature{{6}}, BlockSignature{{7}}), Error);
}

TEST_CASE("tensor law suite on [2]x[2]") {
    expect_all_pass(run_tensor_laws(BlockSignature{{2}}, BlockSignature{{2}}, 12, 71, 1e-8),
                    1e-8);
}

TEST_CASE("tensor law suite on [2]x[3]") {
    expect_all_pass(run_tensor_laws(BlockSignature{{2}}, BlockSignature{{3}}, 8, 73, 1e-8),
                    1e-8);
}

TEST_CASE("channel and self-adjoint json round trips") {
    Rng rng(79);
    const BlockSignature sig{{2, 3}};
    const ChannelMap f = random_channel(sig, BlockSignature{{2}}, rng);
    const ChannelMap back = channel_from_json(to_json(f));
    CHECK(choi_distance(f, back) < 1e-12);

    const SelfAdjoint a = random_self_adjoint(sig, rng);
    const SelfAdjoint a2 = self_adjoint_from_json(to_json(a));
    CHECK(distance(a, a2) < 1e-12);

    // Malformed channel: kraus block out of range.
    auto j = to_json(f);
    j["kraus"][0]["sb"] = 9;
    CHECK_THROWS_AS((void)channel_from_json(j), Error);

    // Pure maps share the wire shape with a purity flag; parsing
    // re-validates the single-conjugation structure.
    const PureMap pm = random_pure(sig, sig, rng);
    const auto pj = to_json(pm);
    CHECK(pj.at("pure").get<bool>());
    CHECK(choi_distance(pure_from_json(pj), pm) < 1e-12);
    auto broken = pj;
    broken["kraus"].push_back(broken["kraus"][0]);  // duplicate pairing
    CHECK_THROWS_AS((void)pure_from_json(broken), Error);
}
