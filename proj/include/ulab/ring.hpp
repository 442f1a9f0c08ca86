#ifndef ULAB_RING_HPP
#define ULAB_RING_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ulab/field.hpp"
#include "ulab/semigroup.hpp"
#include "ulab/series.hpp"

namespace ulab {

// Default working precision for computations in k[[H]].  Everything the
// verification pipeline decides is decided by data below 2(a+c), and
// a < c outside the multiplicity-2 conductor case, so 4c+4 leaves slack.
inline Exp default_precision(const Semigroup& H) {
    return 4 * H.conductor() + 4;
}

// ---------------------------------------------------------------------------
// Elements and ideals of A = k[[H]]
// ---------------------------------------------------------------------------

template <class K>
struct RingElement {
    SemigroupPtr sgp;
    TruncSeries<K> series;

    RingElement(SemigroupPtr H, TruncSeries<K> s)
        : sgp(std::move(H)), series(std::move(s)) {
        for (const auto& [e, c] : series.terms()) {
            (void)c;
            if (!sgp->contains(e))
                throw PreconditionError(
                    "ring element: exponent " + std::to_string(e) +
                    " is not a member of " + sgp->to_string());
        }
    }
};

template <class K>
class RingIdeal {
public:
    // Filters zero generators; validates supports against H and truncates
    // everything to the common precision.
    static RingIdeal make(SemigroupPtr H, FieldSpec field, Exp precision,
                          std::vector<TruncSeries<K>> gens) {
        RingIdeal I;
        I.sgp_ = std::move(H);
        I.field_ = field;
        I.prec_ = precision;
        for (auto& g : gens) {
            auto t = g.truncated(precision);
            if (t.is_zero()) continue;
            for (const auto& [e, c] : t.terms()) {
                (void)c;
                if (!I.sgp_->contains(e))
                    throw PreconditionError(
                        "ideal generator: exponent " + std::to_string(e) +
                        " is not a member of " + I.sgp_->to_string());
            }
            I.gens_.push_back(std::move(t));
        }
        if (I.gens_.empty())
            throw PreconditionError("ideal: no nonzero generators");
        return I;
    }

    const SemigroupPtr& sgp() const { return sgp_; }
    const FieldSpec& field() const { return field_; }
    Exp precision() const { return prec_; }
    const std::vector<TruncSeries<K>>& generators() const { return gens_; }

private:
    RingIdeal() = default;
    SemigroupPtr sgp_;
    FieldSpec field_;
    Exp prec_ = 0;
    std::vector<TruncSeries<K>> gens_;
};

// ---------------------------------------------------------------------------
// Value basis: the reduced, leading-exponent-indexed k-basis of the
// truncated ideal.  Rows are monic; no row has a term at another row's
// leading exponent.  This is the ideal's canonical fingerprint: two
// ideals are equal iff their bases coincide.
// ---------------------------------------------------------------------------

template <class K>
class ValueBasis {
public:
    Exp precision = 0;
    Exp saturation = 0;   // least S >= c(H) with [S, precision) all pivots
    std::map<Exp, TruncSeries<K>> rows;

    bool is_pivot(Exp e) const {
        if (e >= saturation && e < precision) return true;
        return rows.count(e) != 0;
    }

    // Normal form: subtracts multiples of rows until no support exponent
    // is a pivot.  The result is zero iff the input lies in the span of
    // the rows below precision.
    TruncSeries<K> normal_form(TruncSeries<K> x) const {
        x = x.truncated(precision);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [e, c] : x.terms()) {
                auto it = rows.find(e);
                if (it == rows.end()) continue;
                x = x - it->second.scaled(c);
                changed = true;
                break;
            }
        }
        return x;
    }
};

// ---------------------------------------------------------------------------
// Basis construction: closure loop over monomial multiples
// ---------------------------------------------------------------------------

template <class K>
ValueBasis<K> value_basis(const RingIdeal<K>& I) {
    const Semigroup& H = *I.sgp();
    const Exp N = I.precision();
    const Exp c = H.conductor();
    if (N < 2 * c)
        throw PreconditionError("value_basis: precision below 2*c(H)");

    ValueBasis<K> B;
    B.precision = N;

    std::vector<TruncSeries<K>> work(I.generators().begin(), I.generators().end());
    while (!work.empty()) {
        TruncSeries<K> x = std::move(work.back());
        work.pop_back();
        x = B.normal_form(std::move(x));
        auto lead = x.order();
        if (!lead) continue;

        x = x.scaled(x.terms().front().second.inverse());
        for (auto& [l, row] : B.rows) {
            (void)l;
            if (row.has_term(*lead)) {
                K c0 = row.coeff(*lead, x.terms().front().second);
                row = row - x.scaled(c0);
            }
        }
        for (std::int64_t g : H.generators()) {
            auto shifted = x.shifted(g).truncated(N);
            if (!shifted.is_zero()) work.push_back(std::move(shifted));
        }
        B.rows.emplace(*lead, std::move(x));
    }

    if (B.rows.empty())
        throw PrecisionExhausted("value_basis: zero ideal never saturates");

    // trailing contiguous run of pivots
    Exp run_start = N;
    for (Exp e = N - 1; e >= 0; --e) {
        if (B.rows.count(e)) run_start = e;
        else break;
    }
    Exp S = std::max(run_start, c);
    if (S > N - c)
        throw PrecisionExhausted(
            "value_basis: closure does not saturate below precision - c(H); "
            "raise the working precision");
    B.saturation = S;
    return B;
}

// ---------------------------------------------------------------------------
// Ideal-level operations
// ---------------------------------------------------------------------------

template <class K>
RingElement<K> reduce(const RingElement<K>& x, const ValueBasis<K>& B) {
    return RingElement<K>(x.sgp, B.normal_form(x.series));
}

template <class K>
bool basis_contains(const ValueBasis<K>& B, const TruncSeries<K>& x) {
    return B.normal_form(x).is_zero();
}

template <class K>
bool ideal_contains(const RingIdeal<K>& I, const TruncSeries<K>& x) {
    return basis_contains(value_basis(I), x);
}

// true iff t^{c+i} lies in the ideal for all 0 <= i < e(H); since V is
// generated over A by 1, t, ..., t^{e-1}, this certifies c(H) V within I
template <class K>
bool conductor_contained(const ValueBasis<K>& B, const Semigroup& H, const K& one) {
    for (Exp i = 0; i < H.multiplicity(); ++i) {
        auto mono = TruncSeries<K>::monomial(H.conductor() + i, one, B.precision);
        if (!basis_contains(B, mono)) return false;
    }
    return true;
}

// number of members of H below bound that are not pivots
template <class K>
std::int64_t gap_count(const ValueBasis<K>& B, const Semigroup& H, Exp bound) {
    std::int64_t n = 0;
    for (std::int64_t m : H.members_below(bound))
        if (!B.rows.count(m)) ++n;
    return n;
}

// colength l_A(A/I) as the number of value-set gaps
template <class K>
std::int64_t colength(const ValueBasis<K>& B, const Semigroup& H) {
    return gap_count(B, H, B.saturation);
}

template <class K>
std::int64_t colength(const RingIdeal<K>& I) {
    return colength(value_basis(I), *I.sgp());
}

// value gaps H \ v(I), all below the saturation bound
template <class K>
std::vector<Exp> value_gaps(const ValueBasis<K>& B, const Semigroup& H) {
    std::vector<Exp> out;
    for (std::int64_t m : H.members_below(B.saturation))
        if (!B.rows.count(m)) out.push_back(m);
    return out;
}

template <class K>
RingIdeal<K> ideal_product(const RingIdeal<K>& I, const RingIdeal<K>& J) {
    if (I.sgp()->generators() != J.sgp()->generators() || !(I.field() == J.field()))
        throw PreconditionError("ideal_product: incompatible ideals");
    std::vector<TruncSeries<K>> gens;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators())
            gens.push_back(a * b);
    return RingIdeal<K>::make(I.sgp(), I.field(),
                              std::min(I.precision(), J.precision()),
                              std::move(gens));
}

template <class K>
RingIdeal<K> scale(const TruncSeries<K>& f, const RingIdeal<K>& I) {
    std::vector<TruncSeries<K>> gens;
    for (const auto& g : I.generators()) gens.push_back(f * g);
    return RingIdeal<K>::make(I.sgp(), I.field(), I.precision(), std::move(gens));
}

// the ideal m*I, generated by t^g x over minimal generators g of H
template <class K>
RingIdeal<K> maximal_ideal_times(const RingIdeal<K>& I) {
    std::vector<TruncSeries<K>> gens;
    for (std::int64_t g : I.sgp()->generators())
        for (const auto& x : I.generators())
            gens.push_back(x.shifted(g).truncated(I.precision()));
    return RingIdeal<K>::make(I.sgp(), I.field(), I.precision(), std::move(gens));
}

// mu_A(I) = #(v(I) \ v(mI)), by the length-by-valuation identity
template <class K>
std::int64_t min_generators(const RingIdeal<K>& I) {
    auto BI = value_basis(I);
    auto BM = value_basis(maximal_ideal_times(I));
    Exp bound = std::max(BI.saturation, BM.saturation);
    std::int64_t mu = 0;
    for (const auto& [e, r] : BI.rows) {
        (void)r;
        if (e >= bound) break;
        if (!BM.is_pivot(e)) ++mu;
    }
    return mu;
}

// Row-by-row comparison up to the larger saturation bound.  Above it both
// bases consist of bare monomials at every exponent, so this decides
// equality of the ideals.
template <class K>
bool basis_equal(const ValueBasis<K>& A, const ValueBasis<K>& B) {
    Exp bound = std::max(A.saturation, B.saturation);
    auto ia = A.rows.begin();
    auto ib = B.rows.begin();
    while (ia != A.rows.end() && ib != B.rows.end() &&
           ia->first < bound && ib->first < bound) {
        if (ia->first != ib->first) return false;
        if (ia->second.terms() != ib->second.terms()) return false;
        ++ia; ++ib;
    }
    bool a_done = ia == A.rows.end() || ia->first >= bound;
    bool b_done = ib == B.rows.end() || ib->first >= bound;
    return a_done && b_done;
}

template <class K>
bool ideal_equal(const RingIdeal<K>& I, const RingIdeal<K>& J) {
    return basis_equal(value_basis(I), value_basis(J));
}

} // namespace ulab

#endif
