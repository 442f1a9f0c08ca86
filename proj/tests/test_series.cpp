#include "doctest.h"

#include <random>

#include "ulab/series.hpp"

using namespace ulab;

namespace {

TruncSeries<Fp> poly(std::uint32_t p, Exp N,
                     std::initializer_list<std::pair<Exp, std::int64_t>> ts) {
    std::vector<typename TruncSeries<Fp>::Term> terms;
    for (auto [e, v] : ts) terms.push_back({e, Fp(v, p)});
    return TruncSeries<Fp>::from_terms(std::move(terms), N);
}

TruncSeries<Rat> qpoly(Exp N,
                       std::initializer_list<std::pair<Exp, std::int64_t>> ts) {
    std::vector<typename TruncSeries<Rat>::Term> terms;
    for (auto [e, v] : ts) terms.push_back({e, Rat(v)});
    return TruncSeries<Rat>::from_terms(std::move(terms), N);
}

} // namespace

TEST_CASE("order") {
    // t^4 + t^13 at N=40
    auto s = poly(5, 40, {{4, 1}, {13, 1}});
    CHECK(s.order() == 4);
    CHECK_FALSE(TruncSeries<Fp>::zero(40).order().has_value());
    // t^21 + b t^26 with b != 0
    auto g = poly(5, 40, {{21, 1}, {26, 3}});
    CHECK(g.order() == 21);
}

TEST_CASE("multiplication") {
    // monomial product
    auto a = poly(5, 40, {{4, 1}});
    auto b = poly(5, 40, {{9, 1}});
    CHECK((a * b).order() == 13);

    // (t^12 + 2t^17) * t^9 = t^21 + 2t^26 over F5
    auto f = poly(5, 40, {{12, 1}, {17, 2}});
    auto g = poly(5, 40, {{9, 1}});
    CHECK(f * g == poly(5, 40, {{21, 1}, {26, 2}}));

    // (t^21 + t^26)^2 = t^42 + 2t^47 + t^52 over Q
    auto h = qpoly(60, {{21, 1}, {26, 1}});
    CHECK(h * h == qpoly(60, {{42, 1}, {47, 2}, {52, 1}}));
}

TEST_CASE("addition cancels to canonical form") {
    auto a = poly(3, 20, {{5, 1}, {7, 2}});
    auto b = poly(3, 20, {{5, 2}, {7, 1}});
    auto s = a + b;
    CHECK(s.is_zero());
    CHECK(s.precision() == 20);
    auto d = a - a;
    CHECK(d.is_zero());
}

TEST_CASE("precision contracts to the minimum") {
    auto a = poly(3, 20, {{2, 1}});
    auto b = poly(3, 11, {{3, 1}});
    CHECK((a + b).precision() == 11);
    CHECK((a * b).precision() == 11);
    auto t = a.truncated(7);
    CHECK(t.precision() == 7);
}

TEST_CASE("divide: exact quotients") {
    // g = f -> 1
    auto f = poly(5, 40, {{12, 1}, {17, 3}});
    auto one = divide(f, f);
    CHECK(one.order() == 0);
    CHECK(one == TruncSeries<Fp>::monomial(0, Fp(1, 5), 28));

    // monomial quotient t^6 / t^4 = t^2
    auto q = divide(poly(5, 40, {{6, 1}}), poly(5, 40, {{4, 1}}));
    CHECK(q == TruncSeries<Fp>::monomial(2, Fp(1, 5), 36));

    CHECK_THROWS_AS(divide(poly(5, 40, {{4, 1}}), poly(5, 40, {{6, 1}})),
                    PreconditionError);
    CHECK_THROWS_AS(divide(poly(5, 40, {{4, 1}}), TruncSeries<Fp>::zero(40)),
                    PreconditionError);
}

TEST_CASE("divide: quotient of the multiplicity-4 verification pair") {
    // g = t^21 + b t^26, f = t^12 + 2b t^17 + a t^26
    // quotient starts t^9 - b t^14 + 2b^2 t^19, next term at 22 or later
    auto run = [](auto mk, auto beta, auto alpha) {
        using K = decltype(beta);
        Exp N = 64;
        auto f = mk(N, std::vector<std::pair<Exp, K>>{
                           {12, beta.make(1)}, {17, beta + beta}, {26, alpha}});
        auto g = mk(N, std::vector<std::pair<Exp, K>>{
                           {21, beta.make(1)}, {26, beta}});
        auto xi = divide(g, f);
        REQUIRE(xi.order() == 9);
        CHECK(xi.coeff(9, beta).is_one());
        CHECK(xi.coeff(14, beta) == -beta);
        CHECK(xi.coeff(19, beta) == beta * beta + beta * beta);
        CHECK_FALSE(xi.has_term(20));
        CHECK_FALSE(xi.has_term(21));
    };
    auto mk_fp = [](Exp N, std::vector<std::pair<Exp, Fp>> ts) {
        return TruncSeries<Fp>::from_terms(std::move(ts), N);
    };
    auto mk_q = [](Exp N, std::vector<std::pair<Exp, Rat>> ts) {
        return TruncSeries<Rat>::from_terms(std::move(ts), N);
    };
    run(mk_fp, Fp(2, 5), Fp(3, 5));
    run(mk_fp, Fp(1, 2), Fp(1, 2));
    run(mk_q, Rat(2, 3), Rat(-7, 2));
}

namespace {

template <class K, class CoefGen>
void roundtrip_property(std::uint32_t seed, CoefGen coef, int rounds) {
    std::mt19937 rng(seed);
    for (int i = 0; i < rounds; ++i) {
        Exp N = 40 + static_cast<Exp>(rng() % 20);
        auto rand_series = [&](Exp min_ord, Exp max_ord) {
            std::vector<typename TruncSeries<K>::Term> ts;
            Exp lead = min_ord + static_cast<Exp>(rng() % (max_ord - min_ord + 1));
            ts.push_back({lead, coef(rng, true)});
            for (int j = 0; j < 6; ++j) {
                Exp e = lead + 1 + static_cast<Exp>(rng() % 20);
                if (e < N) ts.push_back({e, coef(rng, false)});
            }
            return TruncSeries<K>::from_terms(std::move(ts), N);
        };
        auto f = rand_series(0, 30);
        auto xi = rand_series(0, 20);
        auto prod = f * xi;
        auto back = divide(prod, f);
        CHECK(back == xi.truncated(back.precision()));

        // order is additive under multiplication
        if (prod.order())
            CHECK(*prod.order() == *f.order() + *xi.order());
    }
}

} // namespace

TEST_CASE("divide undoes multiplication at the contracted precision") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        roundtrip_property<Fp>(
            77 + p,
            [p](std::mt19937& rng, bool lead) {
                return Fp(lead ? 1 + rng() % (p - 1) : rng() % p, p);
            },
            60);
    }
    roundtrip_property<Rat>(
        991,
        [](std::mt19937& rng, bool lead) {
            std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
            if (lead && num == 0) num = 1;
            return Rat(num, 1 + static_cast<std::int64_t>(rng() % 7));
        },
        40);
}
