#include "doctest.h"
#include "gen.hpp"
#include "nlbell/exact_rank.hpp"
#include "oracle.hpp"

using namespace nlbell;

TEST_CASE("rank of small integer sets") {
    ExactRank r(3);
    CHECK(r.add_integer(std::vector<std::int64_t>{1, 2, 3}));
    CHECK_FALSE(r.add_integer(std::vector<std::int64_t>{2, 4, 6}));
    CHECK(r.add_integer(std::vector<std::int64_t>{0, 1, 0}));
    CHECK_FALSE(r.add_integer(std::vector<std::int64_t>{1, 3, 3}));
    CHECK(r.add_integer(std::vector<std::int64_t>{0, 0, 5}));
    CHECK(r.rank() == 3);
    CHECK_FALSE(r.add_integer(std::vector<std::int64_t>{7, -1, 2}));
    CHECK_FALSE(r.add_integer(std::vector<std::int64_t>{0, 0, 0}));
}

TEST_CASE("rational rows") {
    ExactRank r(2);
    const std::vector<Rational> a{Rational(1, 2), Rational(1, 3)};
    const std::vector<Rational> b{Rational(3, 2), 1};
    CHECK(r.add(a));
    CHECK_FALSE(r.add(b));
}

TEST_CASE("affine rank of the local vertices is the full dimension") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<BehaviorPoint> points;
        for (const auto& t : oracle::local_tables(n)) points.push_back(oracle::to_point(t));
        CHECK(affine_rank(points) == Scenario(n).dimension());
    }
    CHECK(affine_rank(std::vector<BehaviorPoint>{}) == -1);
}

TEST_CASE("property: rank agrees with textbook elimination") {
    gen::Rng rng(29);
    for (int k = 0; k < 200; ++k) {
        const int n = gen::uniform(rng, 2, 3);
        const int count = gen::uniform(rng, 1, 20);
        std::vector<BehaviorPoint> points;
        // few generating vertices so that degenerate sets are common
        const int parts = gen::uniform(rng, 1, 3);
        for (int c = 0; c < count; ++c) points.push_back(gen::local_mixture(rng, n, parts));
        CHECK(affine_rank(points) == oracle::affine_rank(points));

        std::vector<std::vector<Rational>> rows;
        ExactRank r(Scenario(n).dimension());
        for (const auto& p : points) {
            rows.push_back(p.coordinates());
            r.add(p.coordinates());
        }
        CHECK(r.rank() == oracle::rank(rows));
    }
}
