#include <doctest.h>

#include <map>
#include <set>

#include "lrclab/tower.hpp"

using namespace lrclab;

TEST_SUITE("tower") {

TEST_CASE("split bases of the built-in towers") {
    auto gs = TowerSpec::garcia_stichtenoth(8);
    CHECK(split_base(*gs, 2).size() == 56);  // GF(64) \ GF(8)

    auto f4 = TowerSpec::f4_tower();
    auto base4 = split_base(*f4, 3);
    REQUIRE(base4.size() == 2);
    uint32_t alpha = f4->field->generator();
    CHECK(std::set<uint32_t>(base4.begin(), base4.end()) ==
          std::set<uint32_t>{alpha, alpha ^ 1u});

    auto f8 = TowerSpec::f8_tower();
    auto base8 = split_base(*f8, 3);
    CHECK(base8.size() == 6);
    CHECK(std::set<uint32_t>(base8.begin(), base8.end()) ==
          std::set<uint32_t>{2, 3, 4, 5, 6, 7});  // F_8 \ F_2
}

TEST_CASE("a non-splitting base element is reported with element and depth") {
    auto field = Field::make(3);
    RationalMap rho;
    rho.description = "x + 1 + 1/x";
    rho.eval = [](const Field& f, uint32_t a) -> std::optional<uint32_t> {
        if (a == 0) return std::nullopt;
        return a ^ 1u ^ f.inv(a);
    };
    // rho(1) = 1 and t^2 + t = 1 has no roots in GF(8)
    auto bad = TowerSpec::custom("bad", field, 2, rho, {1});
    CHECK_THROWS_WITH_AS(split_base(*bad, 1), doctest::Contains("0 lifts at depth 1"),
                         StructuralError);
    // and a pole inside the base
    auto pole = TowerSpec::custom("pole", field, 2, rho, {0});
    CHECK_THROWS_WITH_AS(split_base(*pole, 1), doctest::Contains("pole"), StructuralError);
}

TEST_CASE("place counts match the splitting degree") {
    CHECK(enumerate_places(TowerSpec::garcia_stichtenoth(8), 2).size() == 3584);
    CHECK(enumerate_places(TowerSpec::f8_tower(), 2).size() == 24);
    CHECK(enumerate_places(TowerSpec::f4_tower(), 2).size() == 8);
}

TEST_CASE("enumeration is lexicographic in the element order and stable") {
    auto tower = TowerSpec::f8_tower();
    auto places = enumerate_places(tower, 2);
    const Field& f = *tower->field;
    auto key = [&](const Place& p) {
        std::vector<uint32_t> k;
        for (uint32_t c : p.coords) k.push_back(f.order_key(c));
        return k;
    };
    for (size_t i = 0; i + 1 < places.size(); ++i) CHECK(key(places.places[i]) < key(places.places[i + 1]));
    for (size_t i = 0; i < places.size(); ++i) CHECK(places.places[i].index == i);

    auto again = enumerate_places(tower, 2);
    for (size_t i = 0; i < places.size(); ++i)
        CHECK(places.places[i].coords == again.places[i].coords);
}

TEST_CASE("every enumerated place satisfies the recursion at every level") {
    for (auto tower : {TowerSpec::f8_tower(), TowerSpec::f4_tower()}) {
        auto places = enumerate_places(tower, 3);
        const Field& f = *tower->field;
        for (const Place& p : places.places)
            for (size_t i = 0; i + 1 < p.coords.size(); ++i) {
                auto rhs = tower->rhs.eval(f, p.coords[i]);
                REQUIRE(rhs.has_value());
                uint32_t g = p.coords[i + 1];
                CHECK((f.pow(g, tower->q_loc) ^ g) == *rhs);
            }
    }
}

TEST_CASE("the place cap refuses with the exact expected count") {
    auto tower = TowerSpec::garcia_stichtenoth(8);
    try {
        enumerate_places(tower, 2, 100);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.required_budget == 3584);
    }
    CHECK_THROWS_AS(enumerate_places(tower, 0), UsageError);
}

TEST_CASE("color classes partition S_0 into q-1 classes of q") {
    auto gs = TowerSpec::garcia_stichtenoth(8);
    const Field& f = *gs->field;
    std::map<uint32_t, int> classes;
    for (uint32_t v : gs->split_base) ++classes[color_of(f, 8, v)];
    CHECK(classes.size() == 7);
    for (auto [b, n] : classes) CHECK(n == 8);

    // Frobenius invariance
    for (uint32_t v : gs->split_base) CHECK(color_of(f, 8, v) == color_of(f, 8, f.pow(v, 8)));

    CHECK_THROWS_AS(color_of(f, 8, 0), DomainError);  // Tr(0) = 0
}

TEST_CASE("all q lifts of a base point carry its color as their trace") {
    auto gs = TowerSpec::garcia_stichtenoth(8);
    auto places = enumerate_places(gs, 1);
    const Field& f = *gs->field;
    for (const Place& p : places.places)
        CHECK(trace_to(f, 8, p.coords[1]) == color_of(f, 8, p.coords[0]));
}

TEST_CASE("recovery fibers have size q_loc - 1 and partition by prefix") {
    auto gs = TowerSpec::garcia_stichtenoth(8);
    auto places = enumerate_places(gs, 2);
    for (uint32_t i : {0u, 1u, 1000u, 3583u}) {
        auto fib = recovery_fiber(places, i);
        CHECK(fib.size() == 7);
        for (uint32_t j : fib) {
            CHECK(j != i);
            CHECK(std::equal(places.places[i].coords.begin(), places.places[i].coords.end() - 1,
                             places.places[j].coords.begin()));
        }
    }
    auto groups = prefix_fibers(places, 2);
    CHECK(groups.size() == 3584 / 8);
    size_t total = 0;
    for (auto& g : groups) {
        CHECK(g.size() == 8);
        total += g.size();
    }
    CHECK(total == 3584);
    CHECK_THROWS_AS(recovery_fiber(places, 3584), UsageError);
}

TEST_CASE("F_4 fibers are pairs") {
    auto places = enumerate_places(TowerSpec::f4_tower(), 2);
    for (const Place& p : places.places) CHECK(recovery_fiber(places, p.index).size() == 1);
}

TEST_CASE("pair structure of lifts: q/2 Frobenius-conjugate color pairs") {
    auto gs = TowerSpec::garcia_stichtenoth(8);
    auto places = enumerate_places(gs, 2);
    const Field& f = *gs->field;
    // group depth-2 lifts over each depth-1 prefix by color of the last coord
    auto groups = prefix_fibers(places, 2);
    for (auto& g : groups) {
        std::map<uint32_t, std::vector<uint32_t>> by_color;
        for (uint32_t idx : g) {
            uint32_t last = places.places[idx].coords[2];
            by_color[color_of(f, 8, last)].push_back(last);
        }
        CHECK(by_color.size() == 4);  // q/2
        for (auto& [c, pair] : by_color) {
            REQUIRE(pair.size() == 2);
            CHECK(f.pow(pair[0], 8) == pair[1]);
        }
    }
}

TEST_CASE("fiber degrees: every coordinate value is hit 64 times at depth 2") {
    auto gs = TowerSpec::garcia_stichtenoth(8);
    auto places = enumerate_places(gs, 2);
    const Field& f = *gs->field;
    std::map<uint32_t, int> x0, x1, x2;
    for (const Place& p : places.places) {
        ++x0[p.coords[0]];
        ++x1[p.coords[1]];
        ++x2[p.coords[2]];
    }
    for (auto [v, n] : x0) CHECK(n == 64);
    for (auto [v, n] : x1) {
        CHECK(trace_to(f, 8, v) != 0);
        CHECK(n == 64);
    }
    for (auto [v, n] : x2) CHECK(n == 64);
    CHECK(*gs->pole_degree(0, 2) == 64);
    CHECK_FALSE(gs->pole_degree(0, 3).has_value());
}

TEST_CASE("split graph of the F_8 tower") {
    auto tower = TowerSpec::f8_tower();
    auto g = split_graph(tower);
    CHECK(g.vertices.size() == 6);
    CHECK(g.edges.size() == 12);
    for (size_t v = 0; v < 6; ++v) {
        CHECK(g.out[v].size() == 2);
        CHECK(g.in[v].size() == 2);
    }
    const Field& f = *tower->field;
    uint32_t b = f.generator(), b2 = f.mul(b, b);
    auto loops = g.self_loop_values();
    CHECK(std::set<uint32_t>(loops.begin(), loops.end()) ==
          std::set<uint32_t>{b, b2, static_cast<uint32_t>(b2 ^ b)});

    // edge (b+1 -> b^2+b) from the source's figure
    int from = g.vertex_index(b ^ 1u), to = g.vertex_index(b2 ^ b);
    REQUIRE(from >= 0);
    bool found = false;
    for (int w : g.out[from]) found |= w == to;
    CHECK(found);
}

TEST_CASE("path counts") {
    auto g = split_graph(TowerSpec::f8_tower());
    for (uint32_t target : g.vertices) {
        auto p0 = paths_of_length(g, 0, target);
        uint64_t total0 = 0;
        for (size_t v = 0; v < p0.size(); ++v) {
            total0 += p0[v];
            if (g.vertices[v] == target) CHECK(p0[v] == 1);
        }
        CHECK(total0 == 1);

        auto p1 = paths_of_length(g, 1, target);
        uint64_t total1 = 0;
        for (uint64_t c : p1) total1 += c;
        CHECK(total1 == 2);  // in-degree
    }
    CHECK(all_pairs_connected_within(g, 3));
}

}  // TEST_SUITE
