#include <doctest.h>

#include "lrclab/distance.hpp"
#include "lrclab/presets.hpp"

using namespace lrclab;

TEST_SUITE("distance") {

TEST_CASE("degree bounds of the preset codes") {
    CHECK(degree_lower_bound(build_preset("f8-prop44")).value == 4);
    CHECK(degree_lower_bound(build_preset("f8-prop45")).value == 0);
    CHECK(degree_lower_bound(build_preset("gs-thm36-q8")).value == 704);
    CHECK(degree_lower_bound(build_preset("gs-thm34-q8")).value == 1216);
}

TEST_CASE("degree bound clamps below zero with a flag") {
    // depth-4 box (0,1,1,1,0): 32 - 3*16 < 0
    auto code = build_f4_prop41(4, 0);
    auto b = degree_lower_bound(code);
    CHECK(b.value == 0);
    CHECK(b.clamped);
}

TEST_CASE("degree bound needs declared pole degrees") {
    auto gs = TowerSpec::garcia_stichtenoth(8);
    auto places = enumerate_places(gs, 1);  // depth 1 degrees are not declared
    auto code = make_eval_code(places, MonomialBox{{1, 1}});
    CHECK_THROWS_AS(degree_lower_bound(code), UsageError);
    CHECK_FALSE(code.d_lower.has_value());
}

TEST_CASE("prop44 explicit codeword: 20 zeros, weight 4") {
    auto code = build_preset("f8-prop44");
    const auto& s0 = code.places.tower->split_base;
    FactoredCodeword f;
    f.factors.push_back({1, {s0[0]}});
    f.factors.push_back({0, {s0[1], s0[2], s0[3], s0[4]}});
    auto rep = weight_of_factored(code, f);
    CHECK(rep.zeros == 20);
    CHECK(rep.weight == 4);
}

TEST_CASE("prop45 explicit codeword: 44 zeros, weight 4") {
    auto code = build_preset("f8-prop45");
    const Field& f8 = code.field();
    uint32_t b = f8.generator(), b2 = f8.mul(b, b);
    FactoredCodeword f;
    f.factors.push_back({0, {b, b ^ 1u, b2 ^ b, b2 ^ 1u}});
    f.factors.push_back({1, {b2}});
    f.factors.push_back({2, {b}});
    auto rep = weight_of_factored(code, f);
    CHECK(rep.zeros == 44);
    CHECK(rep.weight == 4);
}

TEST_CASE("empty factor list is the constant 1 of full weight") {
    auto code = build_preset("f8-prop44");
    auto rep = weight_of_factored(code, {});
    CHECK(rep.zeros == 0);
    CHECK(rep.weight == code.n());
}

TEST_CASE("a factored codeword outside V is rejected") {
    auto code = build_preset("f8-prop44");  // box (4, 1)
    FactoredCodeword f;
    f.factors.push_back({0, {2, 3, 4, 5, 6}});  // five x_0 factors, bound is 4
    CHECK_THROWS_WITH_AS(weight_of_factored(code, f), doctest::Contains("leaves V"), UsageError);
    FactoredCodeword g;
    g.factors.push_back({3, {2}});
    CHECK_THROWS_AS(weight_of_factored(code, g), UsageError);
}

TEST_CASE("thm34 construction hits the degree bound exactly") {
    auto code = build_preset("gs-thm34-q8");
    std::vector<std::string> diag;
    auto h = construct_h(code, HVariant::Thm34, &diag);
    CHECK(h.h0.size() == 24);
    CHECK(h.h1.size() == 7);
    CHECK(h.h2.size() == 6);
    CHECK(h.zeros == 2368);   // 64 * 37
    CHECK(h.weight == 1216);  // 64 * 19
    CHECK(h.weight == degree_lower_bound(code).value);
    // erratum note about the q-1 factor count is emitted
    bool found = false;
    for (const auto& n : diag) found |= n.find("q-1") != std::string::npos;
    CHECK(found);
}

TEST_CASE("cor38 at l = 1: single x_0 value, weight 64*42") {
    auto code = build_preset("gs-cor38-q8-l1");
    auto h = construct_h(code, HVariant::Cor38);
    CHECK(h.h0.size() == 1);
    CHECK(h.zeros == 64 * 14);
    CHECK(h.weight == 2688);
    CHECK(h.weight == degree_lower_bound(code).value);
}

TEST_CASE("construct_h validates its inputs") {
    CHECK_THROWS_AS(construct_h(build_preset("f8-prop44"), HVariant::Thm34), UsageError);
    CHECK_THROWS_AS(construct_h(build_preset("gs-thm34-q8"), HVariant::Thm36), UsageError);
}

TEST_CASE("exhaustive search: remark 4.2(a) code has d = 2") {
    auto rep = exhaustive_min_distance(build_preset("f4-rem42a"));
    CHECK(*rep.d_lower == 2);
    CHECK(*rep.d_upper == 2);
    CHECK(rep.exact);
    CHECK(rep.lower_provenance == "exhaustive");
}

TEST_CASE("exhaustive search: constants-only box gives the repetition distance n") {
    auto code = build_f4_prop41(1, 0);  // box (0, 0): constants on 4 places
    CHECK(code.rank_k == 1);
    auto rep = exhaustive_min_distance(code);
    CHECK(*rep.d_lower == code.n());
}

TEST_CASE("exhaustive search refuses over budget with the required size") {
    auto code = build_preset("f8-prop44");  // 8^10 codewords
    try {
        exhaustive_min_distance(code, 1000);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.required_budget == (uint64_t{1} << 30));
    }
}

TEST_CASE("sampled floor: sentinel and domination") {
    auto code = build_preset("f4-rem42a");
    CHECK(sampled_weight_floor(code, 0, 1) == kNoSampledFloor);
    uint32_t floor = sampled_weight_floor(code, 2000, 42);
    CHECK(floor >= 2);  // cannot undercut the exhaustive minimum
    CHECK(floor == sampled_weight_floor(code, 2000, 42));  // deterministic

    auto p44 = build_preset("f8-prop44");
    CHECK(sampled_weight_floor(p44, 20000, 7) >= 4);
}

}  // TEST_SUITE
