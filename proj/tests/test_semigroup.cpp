#include "doctest.h"

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ulab/semigroup.hpp"

using namespace ulab;

namespace {

// independent membership oracle: breadth-first closure of the generators
std::vector<char> brute_members(const std::vector<std::int64_t>& gens,
                                std::int64_t bound) {
    std::vector<char> in(static_cast<std::size_t>(bound) + 1, 0);
    in[0] = 1;
    for (std::int64_t n = 1; n <= bound; ++n)
        for (std::int64_t g : gens)
            if (n >= g && in[static_cast<std::size_t>(n - g)]) { in[n] = 1; break; }
    return in;
}

} // namespace

TEST_CASE("construction computes frobenius, conductor, multiplicity") {
    auto H = Semigroup::make({3, 7});
    CHECK(H.frobenius() == 11);
    CHECK(H.conductor() == 12);
    CHECK(H.multiplicity() == 3);
    CHECK(H.frobenius() == 3 * 7 - 3 - 7);

    CHECK(Semigroup::make({4, 13}).conductor() == 36);
    CHECK(Semigroup::make({3, 13}).conductor() == 24);

    CHECK_THROWS_AS(Semigroup::make({}), PreconditionError);
    CHECK_THROWS_AS(Semigroup::make({4, 6}), PreconditionError);
    CHECK_THROWS_AS(Semigroup::make({0, 3}), PreconditionError);
}

TEST_CASE("generator minimalization") {
    auto H = Semigroup::make({6, 9, 8, 14, 15});
    CHECK(H.generators() == std::vector<std::int64_t>{6, 8, 9});
    CHECK(Semigroup::make({1, 5}).generators() == std::vector<std::int64_t>{1});
}

TEST_CASE("membership") {
    auto H = Semigroup::make({4, 13});
    CHECK_FALSE(H.contains(14));
    CHECK(H.contains(26));
    CHECK(H.contains(0));
    CHECK_FALSE(H.contains(-3));
    CHECK(H.contains(1000)); // beyond the table, above the conductor
}

TEST_CASE("apery sets") {
    CHECK(Semigroup::make({3, 7}).apery_set(3) ==
          std::vector<std::int64_t>{0, 7, 14});
    CHECK(Semigroup::make({2, 9}).apery_set(2) ==
          std::vector<std::int64_t>{0, 9});

    // for <a,b> the Apery set of a is {0, b, 2b, ..., (a-1)b}
    auto H = Semigroup::make({5, 8});
    auto ap = H.apery_set(5);
    std::multiset<std::int64_t> got(ap.begin(), ap.end());
    CHECK(got == std::multiset<std::int64_t>{0, 8, 16, 24, 32});
    CHECK_THROWS_AS(H.apery_set(7), PreconditionError);
}

TEST_CASE("symmetry") {
    CHECK(Semigroup::make({3, 7}).is_symmetric());
    CHECK_FALSE(Semigroup::make({3, 4, 5}).is_symmetric());
    CHECK(Semigroup::make({4, 5, 6}).is_symmetric());
}

TEST_CASE("pseudo-frobenius numbers and type") {
    auto H37 = Semigroup::make({3, 7});
    CHECK(H37.pseudo_frobenius() == std::vector<std::int64_t>{11});
    CHECK(H37.cm_type() == 1);

    auto H345 = Semigroup::make({3, 4, 5});
    CHECK(H345.pseudo_frobenius() == std::vector<std::int64_t>{1, 2});
    CHECK(H345.cm_type() == 2);

    auto H413 = Semigroup::make({4, 13});
    CHECK(H413.pseudo_frobenius() == std::vector<std::int64_t>{35});
    CHECK(H413.cm_type() == 1);
}

TEST_CASE("gaps") {
    CHECK(Semigroup::make({3, 7}).gaps() ==
          std::vector<std::int64_t>{1, 2, 4, 5, 8, 11});
    CHECK(Semigroup::make({2, 3}).gaps() == std::vector<std::int64_t>{1});
    CHECK(Semigroup::make({4, 13}).genus() == 18);
}

TEST_CASE("gluing") {
    auto g = make_gluing(3, 5, 9, 2);
    CHECK(g.sgp->generators() == std::vector<std::int64_t>{6, 9, 10});
    CHECK(g.l == 3);
    CHECK(g.m == 0);

    CHECK_THROWS_AS(make_gluing(3, 8, 3, 2), PreconditionError);  // a in {alpha, beta}
    CHECK_THROWS_AS(make_gluing(4, 6, 10, 3), PreconditionError); // gcd(alpha,beta) != 1
    CHECK_THROWS_AS(make_gluing(3, 5, 10, 5), PreconditionError); // gcd(a,b) != 1
    CHECK_THROWS_AS(make_gluing(3, 5, 7, 2), PreconditionError);  // a not in <3,5>

    // lexicographically smallest witness: 8 = 1*2 + 2*3
    auto g2 = make_gluing(2, 3, 8, 3);
    CHECK(g2.sgp->generators() == std::vector<std::int64_t>{6, 8, 9});
    CHECK(g2.l == 1);
    CHECK(g2.m == 2);
}

TEST_CASE("two-generated frobenius formula against the membership scan") {
    for (std::int64_t a = 2; a <= 30; ++a) {
        for (std::int64_t b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto H = Semigroup::make({a, b});
            CHECK(H.frobenius() == a * b - a - b);
            auto oracle = brute_members({a, b}, 2 * H.conductor());
            for (std::int64_t n = 0; n <= 2 * H.conductor(); ++n)
                REQUIRE(H.contains(n) == static_cast<bool>(oracle[n]));
        }
    }
}

TEST_CASE("symmetric iff genus equals half the conductor") {
    std::mt19937 rng(4242);
    int checked = 0;
    while (checked < 200) {
        std::vector<std::int64_t> gens;
        int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(2 + rng() % 29);
        std::int64_t g = 0;
        for (auto v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        auto H = Semigroup::make(gens);
        CHECK(H.is_symmetric() == (2 * H.genus() == H.conductor()));
        CHECK((H.cm_type() == 1) == H.is_symmetric());
        ++checked;
    }
}

TEST_CASE("minimal generators are pairwise non-redundant") {
    for (auto gens : std::vector<std::vector<std::int64_t>>{
             {3, 7}, {4, 13}, {3, 4, 5}, {8, 9, 15}, {6, 9, 10}, {8, 15, 25}}) {
        auto H = Semigroup::make(gens);
        const auto& mingens = H.generators();
        for (std::size_t drop = 0; drop < mingens.size(); ++drop) {
            std::vector<std::int64_t> rest;
            for (std::size_t i = 0; i < mingens.size(); ++i)
                if (i != drop) rest.push_back(mingens[i]);
            std::int64_t g = 0;
            for (auto v : rest) g = std::gcd(g, v);
            if (rest.empty() || g != 1) continue; // dropping it breaks gcd: clearly changed
            auto sub = Semigroup::make(rest);
            CHECK_FALSE(sub.contains(mingens[drop]));
        }
    }
}
