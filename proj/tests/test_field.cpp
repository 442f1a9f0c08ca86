#include "doctest.h"

#include <random>

#include "ulab/field.hpp"

using namespace ulab;

TEST_CASE("field spec construction and parsing") {
    CHECK(FieldSpec::prime(2).to_string() == "F2");
    CHECK(FieldSpec::prime(65521).p == 65521);
    CHECK(FieldSpec::rationals().to_string() == "Q");
    CHECK(FieldSpec::parse("F3") == FieldSpec::prime(3));
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK_THROWS_AS(FieldSpec::prime(4), PreconditionError);
    CHECK_THROWS_AS(FieldSpec::prime(1), PreconditionError);
    CHECK_THROWS_AS(FieldSpec::prime(65536), PreconditionError);
    CHECK_THROWS_AS(FieldSpec::parse("F0"), PreconditionError);
    CHECK_THROWS_AS(FieldSpec::parse("garbage"), PreconditionError);
}

TEST_CASE("prime field canonical representation") {
    Fp a(-1, 5);
    CHECK(a.value() == 4);
    CHECK(Fp(7, 5) == Fp(2, 5));
    CHECK((Fp(2, 5) * Fp(3, 5)).value() == 1);
    CHECK((Fp(2, 5) - Fp(4, 5)).value() == 3);
    CHECK(Fp(3, 7).inverse().value() == 5); // 3*5 = 15 = 1 mod 7
    CHECK_THROWS_AS(Fp(0, 5).inverse(), PreconditionError);
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), PreconditionError);
}

TEST_CASE("rationals are exact and canonical") {
    Rat half(1, 2);
    CHECK(half + half == Rat(1));
    CHECK(Rat(2, 4) == half);
    CHECK(Rat(-1, -2) == half);
    CHECK((Rat(2, 3) * Rat(3, 2)).is_one());
    CHECK(Rat(5).inverse() == Rat(1, 5));
    CHECK_THROWS_AS(Rat(0).inverse(), PreconditionError);
    CHECK(half.to_string() == "1/2");
}

TEST_CASE("field_elements enumerates prime fields in canonical order") {
    auto f2 = field_elements(FieldSpec::prime(2));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].value() == 0);
    CHECK(f2[1].value() == 1);
    auto f3 = field_elements(FieldSpec::prime(3));
    REQUIRE(f3.size() == 3);
    CHECK(f3[2].value() == 2);
    CHECK_THROWS_AS(field_elements(FieldSpec::rationals()), PreconditionError);
}

namespace {

template <class K, class Gen>
void check_axioms(Gen gen, int rounds) {
    std::mt19937 rng(12345);
    for (int i = 0; i < rounds; ++i) {
        K a = gen(rng), b = gen(rng), c = gen(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        CHECK((a - a).is_zero());
        CHECK(a * a.make(1) == a);
    }
}

} // namespace

TEST_CASE("field axioms on random triples") {
    for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
        check_axioms<Fp>(
            [p](std::mt19937& rng) {
                return Fp(static_cast<std::int64_t>(rng() % p), p);
            },
            1000);
    }
    check_axioms<Rat>(
        [](std::mt19937& rng) {
            std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
            std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 50);
            return Rat(num, den);
        },
        1000);
}
