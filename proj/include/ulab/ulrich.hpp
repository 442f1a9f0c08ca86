#ifndef ULAB_ULRICH_HPP
#define ULAB_ULRICH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ulab/ring.hpp"

namespace ulab {

// ---------------------------------------------------------------------------
// Candidate (a, b) pairs for two-generated Ulrich ideals
//
// a, b in H, 0 < a < b < a + c, a even, b - a not in H, 2b - a in H.
// Pairs with a >= c arise only in multiplicity 2, where the ideal is
// forced to be the conductor; these are flagged.
// ---------------------------------------------------------------------------
struct CandidatePair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool conductor_case = false;
};

std::vector<CandidatePair> candidate_pairs(const Semigroup& H);

// free coefficient positions of the enumeration ansatz
std::vector<std::int64_t> ansatz_f_support(const Semigroup& H, std::int64_t a);
std::vector<std::int64_t> ansatz_g_support(const Semigroup& H,
                                           std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct UlrichChecks {
    bool not_principal = false;      // I != (f), i.e. colength < a
    bool stable = false;             // I^2 = fI
    bool free_module = false;        // l(I/I^2) = mu * l(A/I)
    bool conductor_contained = false;
    bool order_even = false;         // a = 2 * colength (recorded when mu = 2)
    bool all() const {
        return not_principal && stable && free_module && conductor_contained;
    }
};

template <class K>
struct UlrichCertificate {
    SemigroupPtr sgp;
    FieldSpec field;
    std::int64_t a = 0;          // order of the reduction f
    std::int64_t b = 0;          // least valuation of I with b - a outside H
    std::int64_t colength = 0;   // l_A(A/I)
    std::int64_t mu = 0;         // minimal number of generators
    std::vector<Exp> value_gaps; // H \ v(I)
    std::vector<std::int64_t> blowup_gens; // minimal generators of H1 = v(f^{-1} I)
    std::vector<TruncSeries<K>> gens_nf;   // normal-form generators (echelon rows)
    UlrichChecks checks;
};

template <class K>
struct VerifyOutcome {
    bool ok = false;
    std::string reason;          // first failed condition when not ok
    UlrichChecks checks;
    std::optional<UlrichCertificate<K>> cert;
};

// Rebuild the certificate's ideal from its normal-form generators at the
// given precision (their supports are finite, so this is exact).
template <class K>
RingIdeal<K> certificate_ideal(const UlrichCertificate<K>& cert, Exp precision) {
    std::vector<TruncSeries<K>> gens;
    for (const auto& r : cert.gens_nf) {
        std::vector<typename TruncSeries<K>::Term> ts(r.terms().begin(),
                                                      r.terms().end());
        gens.push_back(TruncSeries<K>::from_terms(std::move(ts), precision));
    }
    return RingIdeal<K>::make(cert.sgp, cert.field, precision, std::move(gens));
}

// deterministic sort/dedup key: (a, b, normal-form coefficient vector)
template <class K>
std::string certificate_key(const UlrichCertificate<K>& cert) {
    auto pad = [](std::int64_t v) {
        std::string s = std::to_string(v);
        return std::string(12 - s.size(), '0') + s;
    };
    std::string key = pad(cert.a) + "|" + pad(cert.b);
    for (const auto& r : cert.gens_nf) {
        key += "|";
        for (const auto& [e, c] : r.terms())
            key += pad(e) + ":" + c.to_string() + ",";
    }
    return key;
}

namespace detail {

// value semigroup of the blow-up B = f^{-1} I, read off the pivots of I
inline std::vector<std::int64_t> blowup_generators_from_pivots(
    const std::vector<Exp>& pivots, std::int64_t a, Exp bound) {
    std::vector<char> member(static_cast<std::size_t>(bound - a) + 1, 0);
    for (Exp p : pivots) {
        Exp v = p - a;
        if (v >= 0 && v <= bound - a) member[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<std::int64_t> gens;
    for (Exp v = 1; v <= bound - a; ++v) {
        if (!member[static_cast<std::size_t>(v)]) continue;
        bool sum = false;
        for (Exp w = 1; w < v && !sum; ++w)
            if (member[static_cast<std::size_t>(w)] &&
                member[static_cast<std::size_t>(v - w)])
                sum = true;
        if (!sum) gens.push_back(v);
    }
    return gens;
}

} // namespace detail

// Blow-up value semigroup H1 = v(f^{-1} I): shift the value set of I by -a,
// minimalize, and cross-check that the shifted set is additively closed.
template <class K>
Semigroup blowup_value_semigroup(const ValueBasis<K>& B, std::int64_t a) {
    std::vector<Exp> pivots;
    for (const auto& [e, r] : B.rows) {
        (void)r;
        pivots.push_back(e);
    }
    auto gens = detail::blowup_generators_from_pivots(pivots, a, B.saturation + a);
    auto H1 = Semigroup::make(gens);
    // pivots - a and H1 must agree below the saturation bound
    std::set<Exp> shifted;
    for (Exp p : pivots) shifted.insert(p - a);
    for (Exp v = 0; v + a < B.saturation; ++v)
        if (H1.contains(v) != (shifted.count(v) != 0))
            throw InternalError("blow-up value set is not additively closed");
    return H1;
}

// ---------------------------------------------------------------------------
// The Ulrich test.  Verifies, in order:
//   (i)   I != (f)          (colength < a)
//   (ii)  I^2 = f I         (value-basis fingerprints)
//   (iii) I/I^2 free        (colength(I^2) - colength(I) = mu * colength)
// where f is the monic value-basis row at a = min v(I).  For mu = 2 the
// arithmetic shortcut "a = 2 colength" must agree with (iii); disagreement
// would falsify the length bookkeeping and raises InternalError.
// ---------------------------------------------------------------------------
template <class K>
VerifyOutcome<K> is_ulrich_with_basis(const RingIdeal<K>& I, const ValueBasis<K>& B) {
    const Semigroup& H = *I.sgp();
    VerifyOutcome<K> out;

    const std::int64_t a = B.rows.begin()->first;
    const std::int64_t len = colength(B, H);
    const TruncSeries<K>& f = B.rows.at(a);
    const K one = f.terms().front().second;

    out.checks.conductor_contained = conductor_contained(B, H, one);

    out.checks.not_principal = len < a;
    if (!out.checks.not_principal) {
        out.reason = "principal: colength(I) = " + std::to_string(len) +
                     " is not below a = " + std::to_string(a);
        return out;
    }

    auto B2 = value_basis(ideal_product(I, I));
    auto BfI = value_basis(scale(f, I));
    out.checks.stable = basis_equal(B2, BfI);
    if (!out.checks.stable) {
        out.reason = "not stable: I^2 != fI";
        return out;
    }

    const std::int64_t mu = min_generators(I);
    const std::int64_t len2 = colength(B2, H);
    out.checks.free_module = (len2 - len == mu * len);
    out.checks.order_even = (a == 2 * len);
    if (mu == 2 && out.checks.free_module != out.checks.order_even)
        throw InternalError(
            "length bookkeeping mismatch: the mu=2 freeness shortcut "
            "disagrees with the general length test");
    if (!out.checks.free_module) {
        out.reason = "I/I^2 is not free: l(I/I^2) = " + std::to_string(len2 - len) +
                     ", mu * l(A/I) = " + std::to_string(mu * len);
        return out;
    }

    if (!out.checks.conductor_contained) {
        out.reason = "conductor not contained";
        return out;
    }

    // b = least valuation of I whose difference from a escapes H
    std::int64_t b = -1;
    for (const auto& [e, r] : B.rows) {
        (void)r;
        if (e > a && !H.contains(e - a)) { b = e; break; }
    }
    if (b < 0)
        throw InternalError("no second normal-form order below precision");

    UlrichCertificate<K> cert;
    cert.sgp = I.sgp();
    cert.field = I.field();
    cert.checks = out.checks;
    cert.a = a;
    cert.b = b;
    cert.colength = len;
    cert.mu = mu;
    cert.value_gaps = value_gaps(B, H);
    cert.blowup_gens = blowup_value_semigroup(B, a).generators();

    if (mu == 2) {
        cert.gens_nf = {f, B.rows.at(b)};
        // the normal-form rows must generate I back
        auto J = RingIdeal<K>::make(I.sgp(), I.field(), I.precision(),
                                    {f, B.rows.at(b)});
        if (!basis_equal(value_basis(J), B))
            throw InternalError("normal-form rows do not regenerate the ideal");
        // order constraints every two-generated certificate satisfies
        if (H.contains(b - a) || !H.contains(2 * b - a) || a % 2 != 0 ||
            b >= a + H.conductor())
            throw InternalError("certificate violates the two-generated "
                                "order constraints");
    } else {
        // rows at the value-set exponents that exit v(mI)
        auto BM = value_basis(maximal_ideal_times(I));
        Exp bound = std::max(B.saturation, BM.saturation);
        for (const auto& [e, r] : B.rows) {
            if (e >= bound) break;
            if (!BM.is_pivot(e)) cert.gens_nf.push_back(r);
        }
        if (static_cast<std::int64_t>(cert.gens_nf.size()) != mu)
            throw InternalError("minimal generator extraction mismatch");
    }

    out.ok = true;
    out.cert = std::move(cert);
    return out;
}

template <class K>
VerifyOutcome<K> is_ulrich(const RingIdeal<K>& I) {
    return is_ulrich_with_basis(I, value_basis(I));
}

// Period-one resolution check: with q = g^2 / f, the square of
// [[-g, -q], [f, g]] must vanish identically at the working precision,
// and q must lie back inside the ideal.
template <class K>
bool resolution_periodicity(const RingIdeal<K>& I, const TruncSeries<K>& f,
                            const TruncSeries<K>& g) {
    auto q = divide(g * g, f);
    auto e11 = g * g - q * f;
    auto e12 = g * q - q * g;
    auto e21 = f * g - g * f;
    auto e22 = g * g - f * q;
    if (!(e11.is_zero() && e12.is_zero() && e21.is_zero() && e22.is_zero()))
        return false;
    return ideal_contains(I, q.truncated(I.precision()));
}

// ---------------------------------------------------------------------------
// Classified families as constructors
// ---------------------------------------------------------------------------

template <class K>
K unit_of(const FieldSpec& spec);

template <>
inline Fp unit_of<Fp>(const FieldSpec& spec) {
    if (!spec.is_prime_field())
        throw PreconditionError("field mismatch: expected a prime field");
    return Fp(1, spec.p);
}

template <>
inline Rat unit_of<Rat>(const FieldSpec& spec) {
    if (spec.is_prime_field())
        throw PreconditionError("field mismatch: expected the rationals");
    return Rat(1);
}

// multiplicity-2 family: (t^{2q}, t^{2l+1}) in k[[t^2, t^{2l+1}]], 1 <= q <= l
template <class K>
RingIdeal<K> family_mult2(const SemigroupPtr& H, std::int64_t q, FieldSpec field) {
    if (H->generators().size() != 2 || H->multiplicity() != 2)
        throw PreconditionError("family_mult2: semigroup is not <2, odd>");
    std::int64_t l = (H->generators()[1] - 1) / 2;
    if (q < 1 || q > l)
        throw PreconditionError("family_mult2: q must satisfy 1 <= q <= l");
    K one = unit_of<K>(field);
    Exp N = default_precision(*H);
    return RingIdeal<K>::make(H, field, N,
                              {TruncSeries<K>::monomial(2 * q, one, N),
                               TruncSeries<K>::monomial(2 * l + 1, one, N)});
}

// One family shape of the multiplicity-3 classification over <3, l>:
// either f = t^a + (tail over coeff_exponents), g = t^b with a = 6i
// (regular, leading tail coefficient required nonzero) or the boundary
// family with a = l (any tail coefficients).
struct Mult3Shape {
    bool regular = false;       // true: a = 6i family; false: a = l family
    std::int64_t index = 0;     // i for the regular family
    std::int64_t a = 0, b = 0;
    std::vector<Exp> coeff_exponents;
    std::string label;
};

// All family shapes for <3, l>; l = 4 yields the single small-case shape,
// l = 5 none, l >= 7 with gcd(3, l) = 1 the classified list.
std::vector<Mult3Shape> mult3_shapes(std::int64_t l);

template <class K>
RingIdeal<K> family_mult3(const SemigroupPtr& H, const Mult3Shape& shape,
                          const std::vector<K>& coeffs, FieldSpec field) {
    if (H->generators().size() != 2 || H->multiplicity() != 3)
        throw PreconditionError("family_mult3: semigroup is not <3, l>");
    if (coeffs.size() != shape.coeff_exponents.size())
        throw PreconditionError("family_mult3: expected " +
                                std::to_string(shape.coeff_exponents.size()) +
                                " coefficients");
    if (shape.regular && !coeffs.empty() && coeffs.front().is_zero())
        throw PreconditionError("family_mult3: alpha_0 must be nonzero");
    K one = unit_of<K>(field);
    Exp N = default_precision(*H);
    std::vector<typename TruncSeries<K>::Term> fts{{shape.a, one}};
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        fts.push_back({shape.coeff_exponents[j], coeffs[j]});
    return RingIdeal<K>::make(
        H, field, N,
        {TruncSeries<K>::from_terms(std::move(fts), N),
         TruncSeries<K>::monomial(shape.b, one, N)});
}

// The eight families of the <4,13> classification, indexed 1..8 in order
// of the blow-up case analysis.  coeffs are the displayed coefficients:
//   1: (alpha, beta), beta != 0          5: (a1, a2, a3)
//   2: (a2, a3, beta), beta != 0         6: (a1, a2, a3)
//   3: (alpha)                           7: (a1, a2, a3, beta), a1^3 = 2 beta
//   4: (a1, a2)                          8: (a1, a2, a3, b1, b2), char split
struct Family413Shape {
    int index = 0;
    std::int64_t a = 0, b = 0;
    std::vector<Exp> f_tail;
    std::vector<Exp> g_tail;
    std::string label;
};

std::vector<Family413Shape> family_4_13_shapes();

template <class K>
RingIdeal<K> family_4_13(const SemigroupPtr& H, int index,
                         const std::vector<K>& coeffs, FieldSpec field) {
    if (H->generators() != std::vector<std::int64_t>{4, 13})
        throw PreconditionError("family_4_13: semigroup is not <4, 13>");
    auto shapes = family_4_13_shapes();
    if (index < 1 || index > 8)
        throw PreconditionError("family_4_13: index must be 1..8");
    const auto& sh = shapes[static_cast<std::size_t>(index - 1)];
    if (coeffs.size() != sh.f_tail.size() + sh.g_tail.size())
        throw PreconditionError("family_4_13: expected " +
                                std::to_string(sh.f_tail.size() + sh.g_tail.size()) +
                                " coefficients");
    K one = unit_of<K>(field);
    const bool char2 = field.is_prime_field() && field.p == 2;
    K two = one + one;

    auto fc = [&](std::size_t i) { return coeffs[i]; };
    auto gc = [&](std::size_t i) { return coeffs[sh.f_tail.size() + i]; };

    // side conditions
    switch (index) {
    case 1:
        if (gc(0).is_zero())
            throw PreconditionError("family_4_13: beta must be nonzero");
        if (fc(0) != two * gc(0))
            throw PreconditionError("family_4_13: requires f_17 = 2 beta");
        break;
    case 2:
        if (gc(0).is_zero())
            throw PreconditionError("family_4_13: beta must be nonzero");
        if (fc(0) != two * gc(0))
            throw PreconditionError("family_4_13: requires f_17 = 2 beta");
        break;
    case 7: {
        K a1 = fc(0);
        if (a1 * a1 * a1 != two * gc(0))
            throw PreconditionError("family_4_13: requires alpha_1^3 = 2 beta");
        break;
    }
    case 8:
        if (char2) {
            if (!fc(0).is_zero())
                throw PreconditionError(
                    "family_4_13: requires alpha_1 = 0 in characteristic 2");
        } else {
            if (!fc(0).is_zero() || !fc(1).is_zero() || !gc(0).is_zero() ||
                !gc(1).is_zero())
                throw PreconditionError(
                    "family_4_13: requires alpha_1 = alpha_2 = beta_1 = beta_2 "
                    "= 0 away from characteristic 2");
        }
        break;
    default:
        break;
    }

    Exp N = default_precision(*H);
    std::vector<typename TruncSeries<K>::Term> fts{{sh.a, one}};
    for (std::size_t i = 0; i < sh.f_tail.size(); ++i)
        fts.push_back({sh.f_tail[i], fc(i)});
    std::vector<typename TruncSeries<K>::Term> gts{{sh.b, one}};
    for (std::size_t i = 0; i < sh.g_tail.size(); ++i)
        gts.push_back({sh.g_tail[i], gc(i)});
    return RingIdeal<K>::make(H, field, N,
                              {TruncSeries<K>::from_terms(std::move(fts), N),
                               TruncSeries<K>::from_terms(std::move(gts), N)});
}

// Gluing families: for H = <b alpha, b beta, a> glued with witness
// a = l alpha + m beta, the Ulrich ideal of case
//   1: (x, z^{b/2})  requires b even and a decomposition with l >= 2
//   2: (y, z^{b/2})  requires b even and a decomposition with m >= 2
//   3: (x, y^{alpha/2}) for alpha even, (y, x^{beta/2}) for beta even
// where x = t^{b alpha}, y = t^{b beta}, z = t^a.  In the beta-even
// branch the roles of x and y must be exchanged: with x in the ideal,
// y^{beta/2} is a multiple of x and the ideal degenerates to (x).
template <class K>
RingIdeal<K> family_gluing(const Gluing& g, int case_no, FieldSpec field) {
    K one = unit_of<K>(field);
    const SemigroupPtr& H = g.sgp;
    Exp N = default_precision(*H);
    auto mono = [&](Exp e) { return TruncSeries<K>::monomial(e, one, N); };

    // decompositions a = l alpha + m beta reachable from the recorded
    // witness by l -> l - beta, m -> m + alpha steps
    auto has_decomposition = [&](bool need_l_ge2) {
        for (std::int64_t l = g.a / g.alpha; l >= 0; --l) {
            std::int64_t rest = g.a - l * g.alpha;
            if (rest % g.beta) continue;
            std::int64_t m = rest / g.beta;
            if (need_l_ge2 ? l >= 2 : m >= 2) return true;
        }
        return false;
    };

    switch (case_no) {
    case 1:
        if (g.b % 2 != 0)
            throw PreconditionError("family_gluing case 1: b must be even");
        if (!has_decomposition(true))
            throw PreconditionError(
                "family_gluing case 1: no decomposition of a with l >= 2");
        return RingIdeal<K>::make(H, field, N,
                                  {mono(g.b * g.alpha), mono(g.a * (g.b / 2))});
    case 2:
        if (g.b % 2 != 0)
            throw PreconditionError("family_gluing case 2: b must be even");
        if (!has_decomposition(false))
            throw PreconditionError(
                "family_gluing case 2: no decomposition of a with m >= 2");
        return RingIdeal<K>::make(H, field, N,
                                  {mono(g.b * g.beta), mono(g.a * (g.b / 2))});
    case 3:
        if (g.alpha % 2 == 0)
            return RingIdeal<K>::make(
                H, field, N,
                {mono(g.b * g.alpha), mono(g.b * g.beta * (g.alpha / 2))});
        if (g.beta % 2 == 0)
            return RingIdeal<K>::make(
                H, field, N,
                {mono(g.b * g.beta), mono(g.b * g.alpha * (g.beta / 2))});
        throw PreconditionError(
            "family_gluing case 3: neither alpha nor beta is even");
    default:
        throw PreconditionError("family_gluing: case must be 1, 2 or 3");
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct EnumOptions {
    std::uint64_t budget = 10'000'000; // coefficient tuples / antichains
    int jobs = 1;
    std::optional<Exp> precision;      // override 4c+4
};

struct EnumStats {
    std::uint64_t tuples = 0;          // coefficient tuples examined
    std::uint64_t candidates = 0;      // passed the cheap screens
};

struct EnumResult {
    std::vector<UlrichCertificate<Fp>> certificates;
    std::vector<std::string> warnings;
    EnumStats stats;
};

// Exhaustive search over the normal-form ansatz for two-generated Ulrich
// ideals, merged with the monomial enumeration; prime fields only.
EnumResult enumerate_ulrich(const SemigroupPtr& H, FieldSpec field,
                            const EnumOptions& opts = {});

// Monomial Ulrich ideals (any number of generators); field-independent,
// certificates are produced over F2.
EnumResult enumerate_monomial_ulrich(const SemigroupPtr& H,
                                     const EnumOptions& opts = {});

// Every member of the classified family lists over a finite prime field,
// verified and deduplicated: the constructor-side oracle for comparing
// against enumeration.  Supported: <2, odd>, <3, l>, <4, 13>.
EnumResult all_family_instances(const SemigroupPtr& H, FieldSpec field);

// ---------------------------------------------------------------------------
// Classification of a certificate into the families above
// ---------------------------------------------------------------------------

struct FamilyTag {
    std::string family;                       // e.g. "mult3-regular-i2"
    std::vector<std::pair<std::string, std::string>> coefficients;
};

std::optional<FamilyTag> classify(const UlrichCertificate<Fp>& cert);

} // namespace ulab

#endif
