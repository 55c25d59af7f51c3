#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "buzz/geometry.hpp"

using namespace buzz;

namespace {

PointCloud random_cloud(int n, int dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PointCloud c;
    c.ambient_dim = dim;
    for (int i = 0; i < n; ++i) {
        Point p;
        p.id = i;
        for (int k = 0; k < dim; ++k) p.x.push_back(u(gen));
        c.points.push_back(std::move(p));
    }
    return c;
}

// Quadratic reference implementation of the furthest-point subsample: keeps
// the full selected set and rescans all points each round.
std::vector<int> greedy_oracle(const PointCloud& cloud, int k, int seed_index) {
    const int n = static_cast<int>(cloud.size());
    std::vector<int> picked{seed_index};
    std::vector<bool> in(n, false);
    in[seed_index] = true;
    while (static_cast<int>(picked.size()) < k) {
        int best = -1;
        double best_d = -1.0;
        for (int i = 0; i < n; ++i) {
            if (in[i]) continue;
            double d = std::numeric_limits<double>::infinity();
            for (int j : picked) d = std::min(d, euclidean(cloud.points[i], cloud.points[j]));
            if (d > best_d) {
                best_d = d;
                best = i;
            }
        }
        picked.push_back(best);
        in[best] = true;
    }
    return picked;
}

}  // namespace

TEST_CASE("euclidean distance") {
    Point a{{0.0, 0.0}, 0, -1};
    Point b{{3.0, 4.0}, 1, -1};
    CHECK(euclidean(a, b) == doctest::Approx(5.0));
    CHECK(euclidean(a, a) == 0.0);

    Point c{{1.0}, 2, -1};
    CHECK_THROWS_AS(euclidean(a, c), std::invalid_argument);
}

TEST_CASE("delay embedding layout") {
    std::vector<double> s{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    PointCloud c = delay_embed(s, 3, 2);
    // n - (dim-1)*tau = 10 - 4 points, point i = (s[i], s[i+2], s[i+4])
    REQUIRE(c.size() == 6);
    CHECK(c.ambient_dim == 3);
    for (int i = 0; i < 6; ++i) {
        CHECK(c.points[i].id == i);
        CHECK(c.points[i].x == std::vector<double>{double(i), double(i + 2), double(i + 4)});
    }

    SUBCASE("minimum length is exact") {
        std::vector<double> five{1, 2, 3, 4, 5};
        CHECK(delay_embed(five, 3, 2).size() == 1);
        std::vector<double> four{1, 2, 3, 4};
        CHECK_THROWS_AS(delay_embed(four, 3, 2), std::invalid_argument);
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS_AS(delay_embed(s, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(delay_embed(s, 2, 0), std::invalid_argument);
    }
    SUBCASE("dim 1 copies the series") {
        PointCloud one = delay_embed(s, 1, 7);
        REQUIRE(one.size() == s.size());
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(one.points[i].x[0] == s[i]);
    }
}

TEST_CASE("pairwise distances match brute force and are exactly symmetric") {
    PointCloud c = random_cloud(40, 3, 7);
    DistanceMatrix d = pairwise_distances(c);
    REQUIRE(d.n == 40);
    for (int i = 0; i < d.n; ++i) {
        CHECK(d.at(i, i) == 0.0);
        for (int j = 0; j < d.n; ++j) {
            CHECK(d.at(i, j) == d.at(j, i));  // bitwise, not approximate
            CHECK(d.at(i, j) == doctest::Approx(euclidean(c.points[i], c.points[j])));
        }
    }
    CHECK_THROWS_AS(pairwise_distances(PointCloud{}), std::invalid_argument);
}

TEST_CASE("greedy permutation agrees with the quadratic oracle") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        PointCloud c = random_cloud(60, 2, seed);
        for (int k : {1, 7, 30, 60}) {
            PointCloud sub = greedy_permutation(c, k, 3);
            std::vector<int> expect = greedy_oracle(c, k, 3);
            REQUIRE(sub.size() == static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) CHECK(sub.points[i].id == expect[i]);
        }
    }
}

TEST_CASE("greedy permutation prefix property and ties") {
    PointCloud c = random_cloud(50, 3, 11);
    PointCloud p10 = greedy_permutation(c, 10, 0);
    PointCloud p25 = greedy_permutation(c, 25, 0);
    for (int i = 0; i < 10; ++i) CHECK(p10.points[i].id == p25.points[i].id);

    // four corners of a square seeded at one corner: the first pick is the
    // opposite corner, then ties between the two remaining corners go to the
    // lower original index
    PointCloud sq;
    sq.ambient_dim = 2;
    sq.points = {{{0, 0}, 0, -1}, {{1, 0}, 1, -1}, {{0, 1}, 2, -1}, {{1, 1}, 3, -1}};
    PointCloud g = greedy_permutation(sq, 4, 0);
    CHECK(g.points[0].id == 0);
    CHECK(g.points[1].id == 3);
    CHECK(g.points[2].id == 1);
    CHECK(g.points[3].id == 2);

    SUBCASE("argument validation") {
        CHECK_THROWS_AS(greedy_permutation(sq, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(greedy_permutation(sq, 5, 0), std::invalid_argument);
        CHECK_THROWS_AS(greedy_permutation(sq, 2, 4), std::invalid_argument);
    }
}

TEST_CASE("disjoint union and relabel") {
    PointCloud a = random_cloud(5, 2, 1);
    PointCloud b = random_cloud(4, 2, 2);
    CHECK_THROWS_AS(disjoint_union(a, b), std::invalid_argument);  // ids overlap

    PointCloud b2 = relabel(b, 5, 1);
    PointCloud u = disjoint_union(relabel(a, 0, 0), b2);
    REQUIRE(u.size() == 9);
    std::set<int> ids;
    for (const auto& p : u.points) ids.insert(p.id);
    CHECK(ids.size() == 9);
    CHECK(*ids.begin() == 0);
    CHECK(*ids.rbegin() == 8);
    CHECK(u.points[0].snapshot == 0);
    CHECK(u.points[8].snapshot == 1);
    // coordinates survive untouched
    CHECK(u.points[2].x == a.points[2].x);
    CHECK(u.points[7].x == b.points[2].x);

    PointCloud c3 = random_cloud(3, 3, 3);
    CHECK_THROWS_AS(disjoint_union(relabel(a, 0, 0), relabel(c3, 100, 1)),
                    std::invalid_argument);  // ambient dims differ
}

TEST_CASE("sample_circle geometry") {
    PointCloud c = sample_circle(2.0, 8, 0.0, 1.0, -1.0);
    REQUIRE(c.size() == 8);
    CHECK(c.ambient_dim == 2);
    for (int i = 0; i < 8; ++i) {
        double th = 2.0 * M_PI * i / 8.0;
        CHECK(c.points[i].x[0] == doctest::Approx(1.0 + 2.0 * std::cos(th)));
        CHECK(c.points[i].x[1] == doctest::Approx(-1.0 + 2.0 * std::sin(th)));
        CHECK(c.points[i].id == i);
    }
    // phase rotates every point by the same angle
    PointCloud r = sample_circle(1.0, 4, M_PI / 2.0);
    CHECK(r.points[0].x[0] == doctest::Approx(0.0));
    CHECK(r.points[0].x[1] == doctest::Approx(1.0));

    CHECK_THROWS_AS(sample_circle(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_circle(-0.1, 5), std::invalid_argument);
}
