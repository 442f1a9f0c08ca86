#ifndef ULAB_BETTI_HPP
#define ULAB_BETTI_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ulab/field.hpp"
#include "ulab/semigroup.hpp"

namespace ulab {

// ---------------------------------------------------------------------------
// Herzog presentation of a three-generated non-symmetric semigroup ring:
// A = k[[X,Y,Z]] modulo the 2x2 minors of
//     [ X^alpha   Y^beta    Z^gamma  ]
//     [ Y^beta'   Z^gamma'  X^alpha' ]
// The exponents satisfy c1 = alpha + alpha', c2 = beta + beta',
// c3 = gamma + gamma' where c_i is the least multiple of a_i lying in the
// semigroup of the other two generators.
// ---------------------------------------------------------------------------
struct HerzogExponents {
    std::int64_t alpha = 0, beta = 0, gamma = 0;
    std::int64_t alpha_p = 0, beta_p = 0, gamma_p = 0;
};

// Throws PreconditionError for symmetric or non-three-generated input;
// InternalError if the both-positive decomposition fails to be unique
// (unreachable for genuine non-symmetric three-generated semigroups).
HerzogExponents herzog_exponents(const Semigroup& H);

// ---------------------------------------------------------------------------
// The artinian quotient B = k[Y,Z]/(Y^{b+b'}, Y^{b'}Z^g, Z^{g+g'}) with its
// monomial basis and multiplication action; elements are dense coefficient
// vectors over the standard monomials.
// ---------------------------------------------------------------------------
class ArtinianAlgebra {
public:
    ArtinianAlgebra(std::int64_t beta, std::int64_t beta_p,
                    std::int64_t gamma, std::int64_t gamma_p, std::uint32_t p);
    ArtinianAlgebra(const HerzogExponents& he, std::uint32_t p)
        : ArtinianAlgebra(he.beta, he.beta_p, he.gamma, he.gamma_p, p) {}

    std::uint32_t p() const { return p_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    // standard monomials (y-power, z-power) in (degree, y-power) order
    const std::vector<std::pair<int, int>>& basis() const { return basis_; }
    // index of y^i z^j, or -1 when the monomial vanishes in B
    int index_of(int i, int j) const;

    // out += c * y^di z^dj * vec  (vec, out of length dim())
    void add_shifted(const std::vector<std::uint32_t>& vec, int di, int dj,
                     std::uint32_t c, std::vector<std::uint32_t>& out) const;

    std::vector<std::uint32_t> element(
        std::initializer_list<std::pair<std::pair<int, int>, std::uint32_t>>
            terms) const;

private:
    std::int64_t bb_, bp_, gg_, gp_; // beta+beta', beta', gamma+gamma', gamma
    std::uint32_t p_;
    std::vector<std::pair<int, int>> basis_;
    std::vector<std::vector<int>> index_; // [i][j] -> basis index or -1
};

// A map of free B-modules, stored by columns over the monomial basis:
// each column is an element of B^{target_rank} as a dense k-vector of
// length target_rank * dim.
struct FreeModuleMap {
    int target_rank = 0;
    std::vector<std::vector<std::uint32_t>> cols;
    int source_rank() const { return static_cast<int>(cols.size()); }
};

struct BettiSequence {
    enum class Over { A, B };
    Over over = Over::B;
    std::vector<std::int64_t> values; // beta_0 .. beta_n
};

struct Resolution {
    BettiSequence betti;
    std::vector<FreeModuleMap> maps; // M_0, M_1, ..., M_{n-1}
};

// Minimal free resolution of B/(y,z) computed degree by degree: kernel of
// the current matrix by exact linear algebra, then minimal generators as
// kernel mod (y,z)*kernel.  n_max is capped at 12.
Resolution resolve_residue_field(const ArtinianAlgebra& B, int n_max);

// Betti numbers of the residue field over A = k[[H]] for three-generated
// non-symmetric H: the over-B sequence multiplied by (1 + t).  Computed
// over F2 and F3 and cross-checked for equality.
BettiSequence betti_over_A(const Semigroup& H, int n_max);

// coefficients of num(t)/den(t) as an integer power series (den[0] = 1)
std::vector<std::int64_t> rational_series_coeffs(
    const std::vector<std::int64_t>& num, const std::vector<std::int64_t>& den,
    int n_max);

// Expands (1+t)/(1-2t) and (1+t)^3/(1-3t^2-2t^3) to order n_max and
// compares coefficientwise; when H is supplied the computed over-A Betti
// numbers are matched against the same series.
bool golod_series_check(int n_max, const Semigroup* H = nullptr);

// helpers for the structural resolution checks

// kernel dimension of the k-linear map induced by a free-module map
int kernel_dimension(const ArtinianAlgebra& B, const FreeModuleMap& M);
// true iff applying M to each column of N gives zero (M after N composes to 0)
bool composes_to_zero(const ArtinianAlgebra& B, const FreeModuleMap& M,
                      const FreeModuleMap& N);
// true iff no entry of M has a unit component
bool entries_in_radical(const ArtinianAlgebra& B, const FreeModuleMap& M);
// dimension of the B-span of the columns of M inside B^{target_rank}
int module_span_dimension(const ArtinianAlgebra& B, const FreeModuleMap& M);

} // namespace ulab

#endif
