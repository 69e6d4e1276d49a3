#include "miniatures/enumeration.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace miniatures;

namespace {

std::map<std::int64_t, BigInt> by_ratio(const std::vector<MiniatureInstance>& instances) {
    std::map<std::int64_t, BigInt> out;
    for (const auto& inst : instances) ++out[std::get<HorizontalRatio>(inst.payload).i];
    return out;
}

Rational volume_sum(const std::vector<MiniatureInstance>& instances, const Polytope& host) {
    Rational acc(0);
    for (const auto& inst : instances) acc += inst.volume(host);
    return acc;
}

}  // namespace

TEST_CASE("square census") {
    SECTION("n=1 is the host alone") {
        auto census = square_census(1);
        REQUIRE(census.size() == 1);
        CHECK(census[0].key == ClassKey{SquareSpan{1, 0}});
        CHECK(census[0].multiplicity == 1);
        CHECK(census[0].per_volume == Rational(1));
    }

    SECTION("n=2, lexicographic keys") {
        auto census = square_census(2);
        REQUIRE(census.size() == 3);
        CHECK(census[0].key == ClassKey{SquareSpan{1, 0}});
        CHECK(census[0].multiplicity == 4);
        CHECK(census[0].per_volume == Rational(1, 4));
        CHECK(census[1].key == ClassKey{SquareSpan{1, 1}});
        CHECK(census[1].multiplicity == 1);
        CHECK(census[1].per_volume == Rational(1, 2));
        CHECK(census[2].key == ClassKey{SquareSpan{2, 0}});
        CHECK(census[2].multiplicity == 1);
        CHECK(census[2].per_volume == Rational(1));
    }

    SECTION("n=3 multiplicities total 20") {
        BigInt total = 0;
        for (const auto& rec : square_census(3)) total += rec.multiplicity;
        CHECK(total == 20);
    }

    CHECK_THROWS_AS(square_census(0), std::invalid_argument);
}

TEST_CASE("aggregate") {
    auto summary = aggregate(square_census(2));
    CHECK(summary.total_count == 6);
    CHECK(summary.volume_sum == Rational(5, 2));
    CHECK(summary.average == Rational(5, 12));

    CHECK(aggregate(square_census(3)).average == Rational(13, 45));

    auto single = aggregate({{SquareSpan{1, 0}, 1, Rational(1)}});
    CHECK(single.total_count == 1);
    CHECK(single.volume_sum == Rational(1));
    CHECK(single.average == Rational(1));

    CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
    CHECK_THROWS_AS(aggregate({{SquareSpan{1, 0}, 0, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("square bruteforce on the unit square") {
    Polytope unit = Polytope::unit_square();

    CHECK(square_bruteforce(unit, 1).size() == 1);

    SECTION("n=2 reproduces the census") {
        auto instances = square_bruteforce(unit, 2);
        CHECK(instances.size() == 6);
        auto grouped = group_by_class(instances, unit);
        CHECK(diff_censuses(square_census(2), grouped, 2).empty());
    }

    SECTION("oracle equivalence, n <= 8") {
        for (std::int64_t n = 1; n <= 8; ++n) {
            auto grouped = group_by_class(square_bruteforce(unit, n), unit);
            auto mismatches = diff_censuses(square_census(n), grouped, n);
            CAPTURE(n, mismatches);
            CHECK(mismatches.empty());
        }
    }

    SECTION("every span is the unique canonical representative of its rotation orbit") {
        auto canonical = [](std::int64_t i, std::int64_t j) { return i >= 1 && j >= 0; };
        for (const auto& inst : square_bruteforce(unit, 5)) {
            auto span = std::get<SquareSpan>(inst.payload);
            const std::int64_t i = span.i, j = span.j;
            int hits = canonical(i, j) + canonical(j, -i) + canonical(-i, -j) + canonical(-j, i);
            CHECK(hits == 1);
        }
    }

    SECTION("all oracle output realizes inside the host") {
        for (std::int64_t n = 1; n <= 3; ++n)
            for (const auto& inst : square_bruteforce(unit, n)) {
                auto verts = realize(inst, unit);
                for (const auto& v : verts) CHECK(contains_point(unit, v));
            }
    }
}

TEST_CASE("square bruteforce on the span-(2,1) square") {
    // True counts for the tilted host.  These are not the unit-square values
    // scaled: the 1/n grid meets a tilted square in more squares than the
    // similarity image of the unit-square enumeration (e.g. [1,2]x[-1,0]
    // already sits inside at n = 1).
    Polytope tilted = Polytope::square(LatticePoint{0, 0}, LatticePoint{2, 1});

    struct Expected {
        std::int64_t n;
        std::size_t count;
        Rational volsum;
    };
    const Expected table[] = {
        {1, 2, Rational(6)},
        {2, 42, Rational(79, 2)},
        {3, 205, Rational(165)},
        {4, 626, Rational(3803, 8)},
    };
    for (const auto& row : table) {
        auto instances = square_bruteforce(tilted, row.n);
        CAPTURE(row.n);
        CHECK(instances.size() == row.count);
        CHECK(volume_sum(instances, tilted) == row.volsum);
    }

    SECTION("the host itself is always found") {
        auto instances = square_bruteforce(tilted, 1);
        bool found_host = false;
        for (const auto& inst : instances)
            if (inst.payload == ClassKey{SquareSpan{2, 1}}) found_host = true;
        CHECK(found_host);
    }
}

TEST_CASE("square bruteforce translation invariance") {
    const LatticePoint shift{3, -1};
    for (const Polytope& host : {Polytope::unit_square(),
                                 Polytope::square(LatticePoint{0, 0}, LatticePoint{2, 1})}) {
        Polytope moved = translate(host, shift);
        for (std::int64_t n = 1; n <= 3; ++n) {
            auto base = group_by_class(square_bruteforce(host, n), host);
            auto shifted = group_by_class(square_bruteforce(moved, n), moved);
            CHECK(diff_censuses(base, shifted, n).empty());
        }
    }
}

TEST_CASE("square bruteforce dilation correspondence") {
    // classes of cP at resolution n match classes of P at resolution cn with
    // volumes scaled by c^2
    Polytope unit = Polytope::unit_square();
    for (int c : {2, 3}) {
        Polytope big = dilate(unit, c);
        for (std::int64_t n = 1; n <= 4; ++n) {
            auto coarse = group_by_class(square_bruteforce(big, n), big);
            auto fine = group_by_class(square_bruteforce(unit, c * n), unit);
            REQUIRE(coarse.size() == fine.size());
            for (std::size_t k = 0; k < coarse.size(); ++k) {
                CHECK(coarse[k].key == fine[k].key);
                CHECK(coarse[k].multiplicity == fine[k].multiplicity);
                CHECK(coarse[k].per_volume == Rational(c * c) * fine[k].per_volume);
            }
        }
    }
}

TEST_CASE("simplex horizontal census") {
    SECTION("d=1, n=3: interval translate counts 3,2,1") {
        auto census = simplex_horizontal_census(1, 3);
        REQUIRE(census.size() == 3);
        CHECK(census[0].multiplicity == 3);
        CHECK(census[1].multiplicity == 2);
        CHECK(census[2].multiplicity == 1);
    }

    SECTION("d=2, n=2: multiplicities S_2(2), S_2(1)") {
        auto census = simplex_horizontal_census(2, 2);
        REQUIRE(census.size() == 2);
        CHECK(census[0].key == ClassKey{HorizontalRatio{1}});
        CHECK(census[0].multiplicity == 3);
        CHECK(census[1].multiplicity == 1);
    }

    SECTION("d=2, n=3: average is 3/10 of the host volume") {
        const Rational host_vol(1, 2);
        auto summary = aggregate(simplex_horizontal_census(2, 3));
        CHECK(summary.average / host_vol == Rational(3, 10));
    }
}

TEST_CASE("simplex horizontal bruteforce") {
    SECTION("standard simplex matches the census, d <= 3, n <= 5") {
        for (int d = 1; d <= 3; ++d) {
            Polytope host = Polytope::standard_simplex(d);
            for (std::int64_t n = 1; n <= 5; ++n) {
                auto grouped = group_by_class(simplex_horizontal_bruteforce(host, n), host);
                auto mismatches = diff_censuses(simplex_horizontal_census(d, n), grouped, n);
                CAPTURE(d, n, mismatches);
                CHECK(mismatches.empty());
            }
        }
    }

    SECTION("standard 2-simplex totals 1, 4, 10, 20") {
        Polytope host = Polytope::standard_simplex(2);
        CHECK(simplex_horizontal_bruteforce(host, 1).size() == 1);
        CHECK(simplex_horizontal_bruteforce(host, 2).size() == 4);
        CHECK(simplex_horizontal_bruteforce(host, 3).size() == 10);
        CHECK(simplex_horizontal_bruteforce(host, 4).size() == 20);
    }

    SECTION("unimodular image (0,0),(2,1),(1,1) reproduces the census totals") {
        Polytope host = Polytope::simplex({{0, 0}, {2, 1}, {1, 1}});
        auto n2 = simplex_horizontal_bruteforce(host, 2);
        CHECK(n2.size() == 4);
        CHECK(by_ratio(n2) == std::map<std::int64_t, BigInt>{{1, 3}, {2, 1}});
        CHECK(simplex_horizontal_bruteforce(host, 3).size() == 10);
    }

    SECTION("all oracle output realizes inside its host") {
        for (const Polytope& host : {Polytope::standard_simplex(2),
                                     Polytope::simplex({{0, 0}, {2, 1}, {1, 2}})}) {
            for (const auto& inst : simplex_horizontal_bruteforce(host, 3)) {
                auto verts = realize(inst, host);
                for (const auto& v : verts) CHECK(contains_point(host, v));
            }
        }
    }

    SECTION("non-unimodular simplex (0,0),(2,1),(1,2) exceeds the census") {
        // edge matrix determinant 3: ratio-i/n translates are counted by the
        // Ehrhart polynomial of the host, not by S_d(n+1-i)
        Polytope host = Polytope::simplex({{0, 0}, {2, 1}, {1, 2}});
        auto n2 = simplex_horizontal_bruteforce(host, 2);
        CHECK(n2.size() == 5);
        CHECK(by_ratio(n2) == std::map<std::int64_t, BigInt>{{1, 4}, {2, 1}});
        auto n3 = simplex_horizontal_bruteforce(host, 3);
        CHECK(n3.size() == 15);
        CHECK(by_ratio(n3) == std::map<std::int64_t, BigInt>{{1, 10}, {2, 4}, {3, 1}});
    }

    CHECK_THROWS_AS(simplex_horizontal_bruteforce(Polytope::unit_square(), 2),
                    std::invalid_argument);
}

TEST_CASE("hypercube horizontal census and bruteforce") {
    SECTION("d=1, n=2: multiplicities 2, 1") {
        auto census = hypercube_horizontal_census(1, 2);
        REQUIRE(census.size() == 2);
        CHECK(census[0].multiplicity == 2);
        CHECK(census[1].multiplicity == 1);
    }

    CHECK(aggregate(hypercube_horizontal_census(2, 2)).average == Rational(2, 5));

    SECTION("unit cube bruteforce matches the census, d <= 3, n <= 4") {
        for (int d = 1; d <= 3; ++d) {
            Polytope host = Polytope::unit_cube(d);
            for (std::int64_t n = 1; n <= 4; ++n) {
                auto grouped = group_by_class(horizontal_bruteforce(host, n), host);
                CHECK(diff_censuses(hypercube_horizontal_census(d, n), grouped, n).empty());
            }
        }
    }
}

TEST_CASE("group_by_class rejects mixed resolutions") {
    Polytope unit = Polytope::unit_square();
    std::vector<MiniatureInstance> mixed{
        {1, GridPoint({Rational(0), Rational(0)}, 1), SquareSpan{1, 0}},
        {2, GridPoint({Rational(0), Rational(0)}, 2), SquareSpan{1, 0}},
    };
    CHECK_THROWS_AS(group_by_class(mixed, unit), std::invalid_argument);
}

TEST_CASE("diff_censuses reports mismatches") {
    auto a = square_census(2);
    auto b = a;
    b[0].multiplicity += 1;
    b.erase(b.begin() + 1);
    auto mismatches = diff_censuses(a, b, 2);
    REQUIRE(mismatches.size() == 2);
    CHECK(mismatches[0].find("(1,0)") != std::string::npos);
    CHECK(mismatches[1].find("(1,1)") != std::string::npos);
}

TEST_CASE("class key labels") {
    CHECK(class_key_label(SquareSpan{2, 0}, 3) == "(2,0)");
    CHECK(class_key_label(HorizontalRatio{2}, 4) == "1/2");
    CHECK(class_key_label(HorizontalRatio{4}, 4) == "1");
}
