#ifndef ULAB_SEMIGROUP_HPP
#define ULAB_SEMIGROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ulab/errors.hpp"

namespace ulab {

// ---------------------------------------------------------------------------
// Numerical semigroup H = <a_1, ..., a_l>: an additively closed subset of
// the non-negative integers with finite complement (gcd of generators 1).
// Immutable after construction; freely shareable across threads.
// ---------------------------------------------------------------------------
class Semigroup {
public:
    // Minimalizes the generating set, builds the membership table on
    // [0, 2c], and computes frobenius/conductor/multiplicity.
    // Throws PreconditionError on empty input, gcd != 1, non-positive
    // entries, or when the caps (16 generators, values <= 10^6, table
    // size) are exceeded.
    static Semigroup make(std::vector<std::int64_t> gens);

    const std::vector<std::int64_t>& generators() const { return gens_; }
    std::int64_t frobenius() const { return frobenius_; }     // f(H)
    std::int64_t conductor() const { return conductor_; }     // c(H) = f(H)+1
    std::int64_t multiplicity() const { return mult_; }       // e(H)

    bool contains(std::int64_t n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return members_[static_cast<std::size_t>(n)] != 0;
    }

    // least member of each residue class mod m, indexed by residue
    std::vector<std::int64_t> apery_set(std::int64_t m) const;

    // z in H  <=>  f(H) - z not in H, for every integer z
    bool is_symmetric() const;

    // all z not in H with z + h in H for every nonzero h in H
    std::vector<std::int64_t> pseudo_frobenius() const;
    int cm_type() const { return static_cast<int>(pseudo_frobenius().size()); }

    std::vector<std::int64_t> gaps() const;
    std::int64_t genus() const { return static_cast<std::int64_t>(gaps().size()); }

    // members of H in [0, bound)
    std::vector<std::int64_t> members_below(std::int64_t bound) const;

    std::string to_string() const;

    bool operator==(const Semigroup& o) const { return gens_ == o.gens_; }

private:
    Semigroup() = default;
    std::vector<std::int64_t> gens_;
    std::vector<char> members_;   // indexed 0..2c
    std::int64_t frobenius_ = 0;
    std::int64_t conductor_ = 0;
    std::int64_t mult_ = 0;
};

using SemigroupPtr = std::shared_ptr<const Semigroup>;

inline SemigroupPtr make_semigroup(std::vector<std::int64_t> gens) {
    return std::make_shared<const Semigroup>(Semigroup::make(std::move(gens)));
}

// ---------------------------------------------------------------------------
// Gluing of H' = <alpha, beta> with N with respect to a in H', b > 1:
// the three-generated symmetric semigroup <b*alpha, b*beta, a>.
// ---------------------------------------------------------------------------
struct Gluing {
    SemigroupPtr sgp;            // <b*alpha, b*beta, a>, minimalized
    std::int64_t alpha, beta, a, b;
    std::int64_t l, m;           // witness a = l*alpha + m*beta, lex-smallest (l, m)
};

// Throws PreconditionError naming the violated clause.
Gluing make_gluing(std::int64_t alpha, std::int64_t beta,
                   std::int64_t a, std::int64_t b);

} // namespace ulab

#endif
