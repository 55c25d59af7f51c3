#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "buzz/schedule.hpp"

using namespace buzz;

namespace {

PointCloud cloud2d(std::vector<std::pair<double, double>> pts, int id0, int snapshot) {
    PointCloud c;
    c.ambient_dim = 2;
    int id = id0;
    for (auto [x, y] : pts) {
        c.points.push_back({{x, y}, id++, snapshot});
    }
    return c;
}

const std::vector<double>* times_of(const ZigzagSchedule& s, std::vector<int> verts) {
    Simplex q(std::move(verts));
    for (std::size_t i = 0; i < s.simplex_list.size(); ++i)
        if (s.simplex_list[i] == q) return &s.times_list[i];
    return nullptr;
}

std::vector<PointCloud> random_family(int n_snapshots, int pts_per, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<PointCloud> out;
    int id = 0;
    for (int s = 0; s < n_snapshots; ++s) {
        PointCloud c;
        c.ambient_dim = 2;
        for (int i = 0; i < pts_per; ++i) c.points.push_back({{u(gen), u(gen)}, id++, s});
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

TEST_CASE("grid helpers") {
    CHECK(grid_index(0.0) == 0);
    CHECK(grid_index(0.5) == 1);
    CHECK(grid_index(3.0) == 6);
    CHECK(grid_time(5) == 2.5);
    CHECK_THROWS_AS(grid_index(0.3), std::invalid_argument);
    CHECK_THROWS_AS(grid_index(-0.5), std::invalid_argument);
}

TEST_CASE("two snapshots, one new vertex coning nothing: exact times") {
    // X_0 = two points within r of each other, X_1 = one point near both.
    auto x0 = cloud2d({{0.0, 0.0}, {1.0, 0.0}}, 0, 0);
    auto x1 = cloud2d({{0.5, 0.5}}, 2, 1);
    ZigzagSchedule s = build_schedule_fixed({x0, x1}, 1.2, 2);

    CHECK(s.n_snapshots == 2);
    REQUIRE(s.simplex_list.size() == 7);
    CHECK(*times_of(s, {0}) == std::vector<double>{0, 1});
    CHECK(*times_of(s, {1}) == std::vector<double>{0, 1});
    CHECK(*times_of(s, {0, 1}) == std::vector<double>{0, 1});
    CHECK(*times_of(s, {0, 2}) == std::vector<double>{0.5, 1});
    CHECK(*times_of(s, {1, 2}) == std::vector<double>{0.5, 1});
    CHECK(*times_of(s, {0, 1, 2}) == std::vector<double>{0.5, 1});
    CHECK(*times_of(s, {2}) == std::vector<double>{0.5, 2});

    CHECK(validate_schedule(s).pass);
}

TEST_CASE("variable radii can make a simplex leave and re-enter") {
    // Middle snapshot has the small radius; the edge between its two points
    // exists only inside the two unions.
    auto x0 = cloud2d({{0.0, 0.0}}, 0, 0);
    auto x1 = cloud2d({{10.0, 0.0}, {10.8, 0.0}}, 1, 1);
    auto x2 = cloud2d({{20.0, 0.0}}, 3, 2);
    ZigzagSchedule s = build_schedule_variable({x0, x1, x2}, {1.0, 0.5, 1.0}, 1);

    const auto* t = times_of(s, {1, 2});
    REQUIRE(t != nullptr);
    CHECK(*t == std::vector<double>{0.5, 1, 1.5, 2});
    CHECK(validate_schedule(s).pass);
}

TEST_CASE("fixed and variable builders agree when all radii are equal") {
    for (std::uint64_t seed : {21u, 22u, 23u, 24u}) {
        auto fam = random_family(3, 5, seed);
        for (double r : {0.2, 0.45, 0.8}) {
            ZigzagSchedule a = build_schedule_fixed(fam, r, 2);
            ZigzagSchedule b = build_schedule_variable(fam, {r, r, r}, 2);
            REQUIRE(a.simplex_list.size() == b.simplex_list.size());
            CHECK(a.simplex_list == b.simplex_list);
            CHECK(a.times_list == b.times_list);
            CHECK(validate_schedule(a).pass);
        }
    }
}

TEST_CASE("single snapshot gives everything times [0, 1]") {
    auto x0 = cloud2d({{0.0, 0.0}, {0.1, 0.0}, {0.0, 0.1}}, 0, 0);
    ZigzagSchedule s = build_schedule_fixed({x0}, 0.5, 2);
    CHECK(s.n_snapshots == 1);
    for (const auto& t : s.times_list) CHECK(t == std::vector<double>{0, 1});
}

TEST_CASE("live sets reflect the times lists") {
    auto x0 = cloud2d({{0.0, 0.0}}, 0, 0);
    auto x1 = cloud2d({{10.0, 0.0}, {10.8, 0.0}}, 1, 1);
    auto x2 = cloud2d({{20.0, 0.0}}, 3, 2);
    ZigzagSchedule s = build_schedule_variable({x0, x1, x2}, {1.0, 0.5, 1.0}, 1);

    auto live = live_sets(s);
    REQUIRE(live.size() == 5);  // grid positions 0, 0.5, 1, 1.5, 2
    // find the re-entering edge and check exactly where it is live
    Simplex edge({1, 2});
    std::vector<bool> present(5, false);
    for (int g = 0; g < 5; ++g)
        for (int idx : live[g])
            if (s.simplex_list[idx] == edge) present[g] = true;
    CHECK(present == std::vector<bool>{false, true, false, true, false});
    // ascending indices
    for (const auto& set : live)
        for (std::size_t i = 1; i < set.size(); ++i) CHECK(set[i - 1] < set[i]);
}

TEST_CASE("validate_schedule catches structural violations") {
    auto x0 = cloud2d({{0.0, 0.0}, {0.5, 0.0}}, 0, 0);
    auto x1 = cloud2d({{0.25, 0.4}}, 2, 1);
    ZigzagSchedule good = build_schedule_fixed({x0, x1}, 1.0, 2);
    REQUIRE(validate_schedule(good).pass);

    SUBCASE("odd times length") {
        ZigzagSchedule s = good;
        s.times_list[0].push_back(1.5);
        CHECK(!validate_schedule(s).pass);
    }
    SUBCASE("times not strictly increasing") {
        ZigzagSchedule s = good;
        s.times_list[0] = {1, 1};
        CHECK(!validate_schedule(s).pass);
    }
    SUBCASE("off-grid time") {
        ZigzagSchedule s = good;
        s.times_list[0] = {0, 0.7};
        CHECK(!validate_schedule(s).pass);
    }
    SUBCASE("duplicate simplex") {
        ZigzagSchedule s = good;
        s.simplex_list.push_back(s.simplex_list[0]);
        s.times_list.push_back(s.times_list[0]);
        CHECK(!validate_schedule(s).pass);
    }
    SUBCASE("face closure violated at a position") {
        ZigzagSchedule s = good;
        // shrink a vertex's presence so an edge outlives its endpoint
        for (std::size_t i = 0; i < s.simplex_list.size(); ++i)
            if (s.simplex_list[i] == Simplex({0})) s.times_list[i] = {0, 0.5};
        auto rep = validate_schedule(s);
        CHECK(!rep.pass);
        CHECK(!rep.first_violation.empty());
    }
}

TEST_CASE("schedule json round trip") {
    auto x0 = cloud2d({{0.0, 0.0}}, 0, 0);
    auto x1 = cloud2d({{10.0, 0.0}, {10.8, 0.0}}, 1, 1);
    auto x2 = cloud2d({{20.0, 0.0}}, 3, 2);
    ZigzagSchedule s = build_schedule_variable({x0, x1, x2}, {1.0, 0.5, 1.0}, 3);

    std::string text = schedule_to_json(s);
    ZigzagSchedule back = schedule_from_json(text);
    CHECK(back.n_snapshots == s.n_snapshots);
    CHECK(back.radii == s.radii);
    CHECK(back.max_dim == 3);  // cap survives even above the largest simplex present
    CHECK(back.simplex_list == s.simplex_list);
    CHECK(back.times_list == s.times_list);
    CHECK(schedule_to_json(back) == text);

    CHECK_THROWS_AS(schedule_from_json("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(schedule_from_json("{\"n_snapshots\": 2}"), std::invalid_argument);
}

TEST_CASE("builder argument validation") {
    auto x0 = cloud2d({{0.0, 0.0}}, 0, 0);
    CHECK_THROWS_AS(build_schedule_fixed({}, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_schedule_fixed({x0}, -1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_schedule_variable({x0}, {1.0, 2.0}, 1), std::invalid_argument);
    // duplicate vertex ids across snapshots
    auto dup = cloud2d({{5.0, 0.0}}, 0, 1);
    CHECK_THROWS_AS(build_schedule_fixed({x0, dup}, 1.0, 1), std::invalid_argument);
}
