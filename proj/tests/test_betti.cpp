#include "doctest.h"

#include "ulab/betti.hpp"

using namespace ulab;

namespace {

// independent scan for the least multiple of a landing in <x, y>
std::int64_t brute_least_multiple(std::int64_t a, std::int64_t x, std::int64_t y) {
    for (std::int64_t n = 1;; ++n) {
        std::int64_t v = n * a;
        for (std::int64_t u = 0; u * x <= v; ++u)
            if ((v - u * x) % y == 0) return n;
    }
}

void check_herzog(const std::vector<std::int64_t>& gens) {
    auto H = Semigroup::make(gens);
    auto he = herzog_exponents(H);
    std::int64_t a1 = gens[0], a2 = gens[1], a3 = gens[2];
    CHECK(he.alpha >= 1);
    CHECK(he.beta >= 1);
    CHECK(he.gamma >= 1);
    CHECK(he.alpha_p >= 1);
    CHECK(he.beta_p >= 1);
    CHECK(he.gamma_p >= 1);
    CHECK(he.alpha + he.alpha_p == brute_least_multiple(a1, a2, a3));
    CHECK(he.beta + he.beta_p == brute_least_multiple(a2, a1, a3));
    CHECK(he.gamma + he.gamma_p == brute_least_multiple(a3, a1, a2));
    // vanishing of the three minors under X -> t^a1, Y -> t^a2, Z -> t^a3
    CHECK(he.alpha * a1 + he.gamma_p * a3 == (he.beta + he.beta_p) * a2);
    CHECK((he.alpha + he.alpha_p) * a1 == he.beta_p * a2 + he.gamma * a3);
    CHECK(he.alpha_p * a1 + he.beta * a2 == (he.gamma + he.gamma_p) * a3);
}

// a column of a free module map from (block, monomial, coefficient) entries
std::vector<std::uint32_t> col(const ArtinianAlgebra& B, int rank,
                               std::initializer_list<std::tuple<int, int, int, std::uint32_t>>
                                   entries) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(rank * B.dim()), 0);
    for (auto [block, yi, zj, c] : entries) {
        int idx = B.index_of(yi, zj);
        if (idx < 0) continue;
        auto& slot = out[static_cast<std::size_t>(block * B.dim() + idx)];
        slot = static_cast<std::uint32_t>((slot + c) % B.p());
    }
    return out;
}

} // namespace

TEST_CASE("herzog exponents of <3,4,5>") {
    auto H = Semigroup::make({3, 4, 5});
    auto he = herzog_exponents(H);
    // relations X*Z = Y^2, X^3 = Y*Z, Y*X^2 = Z^2
    CHECK(he.alpha == 1);
    CHECK(he.beta == 1);
    CHECK(he.gamma == 1);
    CHECK(he.alpha_p == 2);
    CHECK(he.beta_p == 1);
    CHECK(he.gamma_p == 1);
    check_herzog({3, 4, 5});
}

TEST_CASE("herzog exponents of further non-symmetric semigroups") {
    check_herzog({5, 6, 7});
    check_herzog({7, 8, 9});
    check_herzog({5, 7, 9});
    CHECK_THROWS_AS(herzog_exponents(Semigroup::make({3, 7})), PreconditionError);
    CHECK_THROWS_AS(herzog_exponents(Semigroup::make({4, 5, 6})),
                    PreconditionError); // symmetric
    CHECK_THROWS_AS(herzog_exponents(Semigroup::make({6, 9, 10})),
                    PreconditionError); // symmetric (glued)
}

TEST_CASE("artinian reduction basis and multiplication") {
    ArtinianAlgebra B(1, 1, 1, 1, 2); // k[Y,Z]/(Y^2, YZ, Z^2)
    CHECK(B.dim() == 3);
    CHECK(B.index_of(0, 0) == 0);
    CHECK(B.index_of(1, 0) >= 0);
    CHECK(B.index_of(0, 1) >= 0);
    CHECK(B.index_of(1, 1) == -1);
    CHECK(B.index_of(2, 0) == -1);

    // y * y = 0, y * 1 = y
    auto one = B.element({{{0, 0}, 1}});
    std::vector<std::uint32_t> out(3, 0);
    B.add_shifted(one, 1, 0, 1, out);
    CHECK(out[static_cast<std::size_t>(B.index_of(1, 0))] == 1);
    auto y = B.element({{{1, 0}, 1}});
    std::fill(out.begin(), out.end(), 0);
    B.add_shifted(y, 1, 0, 1, out);
    CHECK(out == std::vector<std::uint32_t>{0, 0, 0});

    // the reduction of <3,4,5> has dimension 3 = multiplicity
    auto he = herzog_exponents(Semigroup::make({3, 4, 5}));
    CHECK(ArtinianAlgebra(he, 2).dim() == 3);
    auto he567 = herzog_exponents(Semigroup::make({5, 6, 7}));
    CHECK(ArtinianAlgebra(he567, 3).dim() == 5);
}

TEST_CASE("residue field resolution doubles at every step") {
    auto he = herzog_exponents(Semigroup::make({3, 4, 5}));
    for (std::uint32_t p : {2u, 3u}) {
        ArtinianAlgebra B(he, p);
        auto res = resolve_residue_field(B, 6);
        CHECK(res.betti.values ==
              std::vector<std::int64_t>{1, 2, 4, 8, 16, 32, 64});

        // minimality, exactness, and shape of every step
        REQUIRE(res.maps.size() == 6);
        CHECK(res.maps[0].target_rank == 1);
        CHECK(res.maps[0].source_rank() == 2);
        CHECK(res.maps[1].source_rank() == 4);
        CHECK(res.maps[2].source_rank() == 8);
        for (const auto& M : res.maps)
            CHECK(entries_in_radical(B, M));
        for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
            CHECK(composes_to_zero(B, res.maps[i], res.maps[i + 1]));
            CHECK(kernel_dimension(B, res.maps[i]) ==
                  module_span_dimension(B, res.maps[i + 1]));
        }
    }

    // the sequence only depends on the shape, not the exponents
    ArtinianAlgebra smallest(1, 1, 1, 1, 2);
    CHECK(resolve_residue_field(smallest, 6).betti.values ==
          std::vector<std::int64_t>{1, 2, 4, 8, 16, 32, 64});

    ArtinianAlgebra B = smallest;
    CHECK(resolve_residue_field(B, 0).betti.values ==
          std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(resolve_residue_field(B, 13), PreconditionError);
}

TEST_CASE("the displayed resolution segment is an exact minimal complex") {
    // Verify the classical resolution matrices M0..M3 built from the
    // Herzog exponents form a minimal exact segment, for <3,4,5>.
    auto he = herzog_exponents(Semigroup::make({3, 4, 5}));
    const int bb = static_cast<int>(he.beta + he.beta_p);
    const int bp = static_cast<int>(he.beta_p);
    const int g = static_cast<int>(he.gamma);
    const int gg = static_cast<int>(he.gamma + he.gamma_p);

    for (std::uint32_t p : {2u, 3u}) {
        ArtinianAlgebra B(he, p);
        const std::uint32_t neg = p - 1;

        FreeModuleMap M0;
        M0.target_rank = 1;
        M0.cols = {col(B, 1, {{0, 1, 0, 1}}), col(B, 1, {{0, 0, 1, 1}})};

        FreeModuleMap M1;
        M1.target_rank = 2;
        M1.cols = {col(B, 2, {{0, bb - 1, 0, 1}}),
                   col(B, 2, {{0, bp - 1, g, 1}}),
                   col(B, 2, {{1, 0, gg - 1, 1}}),
                   col(B, 2, {{0, 0, 1, 1}, {1, 1, 0, neg}})};

        FreeModuleMap M2;
        M2.target_rank = 4;
        M2.cols = {col(B, 4, {{0, 1, 0, 1}}),
                   col(B, 4, {{0, 0, 1, 1}, {3, bb - 1, 0, neg}}),
                   col(B, 4, {{1, 1, 0, 1}}),
                   col(B, 4, {{1, 0, 1, 1}, {3, bp - 1, g, neg}}),
                   col(B, 4, {{2, 1, 0, 1}, {3, 0, gg - 1, 1}}),
                   col(B, 4, {{2, 0, 1, 1}}),
                   col(B, 4, {{3, bb - 1, g - 1, 1}}),
                   col(B, 4, {{3, bp - 1, gg - 1, 1}})};

        // M3 = diag(M1, M1, M1, M0, M0)
        FreeModuleMap M3;
        M3.target_rank = 8;
        auto embed = [&](int block_off, const std::vector<std::uint32_t>& c) {
            std::vector<std::uint32_t> out(
                static_cast<std::size_t>(8 * B.dim()), 0);
            std::copy(c.begin(), c.end(),
                      out.begin() + block_off * B.dim());
            return out;
        };
        for (int rep = 0; rep < 3; ++rep)
            for (const auto& c : M1.cols)
                M3.cols.push_back(embed(2 * rep, c));
        for (int rep = 0; rep < 2; ++rep)
            for (const auto& c : M0.cols)
                M3.cols.push_back(embed(6 + rep, c));

        CHECK(M3.source_rank() == 16);
        CHECK(entries_in_radical(B, M0));
        CHECK(entries_in_radical(B, M1));
        CHECK(entries_in_radical(B, M2));
        CHECK(entries_in_radical(B, M3));
        CHECK(composes_to_zero(B, M0, M1));
        CHECK(composes_to_zero(B, M1, M2));
        CHECK(composes_to_zero(B, M2, M3));
        CHECK(kernel_dimension(B, M0) == module_span_dimension(B, M1));
        CHECK(kernel_dimension(B, M1) == module_span_dimension(B, M2));
        CHECK(kernel_dimension(B, M2) == module_span_dimension(B, M3));
    }
}

TEST_CASE("betti numbers over the semigroup ring") {
    auto H = Semigroup::make({3, 4, 5});
    auto seq = betti_over_A(H, 6);
    CHECK(seq.over == BettiSequence::Over::A);
    CHECK(seq.values == std::vector<std::int64_t>{1, 3, 6, 12, 24, 48, 96});

    CHECK(betti_over_A(Semigroup::make({5, 6, 7}), 4).values ==
          std::vector<std::int64_t>{1, 3, 6, 12, 24});
    CHECK(betti_over_A(H, 0).values == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(betti_over_A(Semigroup::make({3, 7}), 3), PreconditionError);
}

TEST_CASE("golod series identity") {
    auto s = rational_series_coeffs({1, 1}, {1, -2}, 10);
    CHECK(s == std::vector<std::int64_t>{1, 3, 6, 12, 24, 48, 96, 192, 384,
                                         768, 1536});
    CHECK(golod_series_check(10));
    CHECK(golod_series_check(0));

    auto H = Semigroup::make({3, 4, 5});
    CHECK(golod_series_check(6, &H));

    // negative control: a perturbed denominator breaks the identity
    auto bad = rational_series_coeffs({1, 3, 3, 1}, {1, 0, -3, -1}, 10);
    CHECK(bad != s);
}
