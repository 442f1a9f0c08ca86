#include "ulab/ulrich.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace ulab {

// ---------------------------------------------------------------------------
// Candidate pairs from the order constraints
// ---------------------------------------------------------------------------

std::vector<CandidatePair> candidate_pairs(const Semigroup& H) {
    std::vector<CandidatePair> out;
    const std::int64_t c = H.conductor();
    for (std::int64_t a : H.members_below(c)) {
        if (a == 0 || a % 2 != 0) continue;
        for (std::int64_t b = a + 1; b < a + c; ++b) {
            if (!H.contains(b)) continue;
            if (H.contains(b - a)) continue;
            if (!H.contains(2 * b - a)) continue;
            out.push_back({a, b, false});
        }
    }
    if (H.multiplicity() == 2)
        out.push_back({c, c + 1, true});
    return out;
}

std::vector<std::int64_t> ansatz_f_support(const Semigroup& H, std::int64_t a) {
    std::vector<std::int64_t> out;
    for (std::int64_t h = a + 1; h < H.conductor(); ++h)
        if (H.contains(h) && !H.contains(h - a)) out.push_back(h);
    return out;
}

std::vector<std::int64_t> ansatz_g_support(const Semigroup& H,
                                           std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> out;
    for (std::int64_t h = b + 1; h < H.conductor(); ++h)
        if (H.contains(h) && !H.contains(h - b) && !H.contains(h - a))
            out.push_back(h);
    return out;
}

// ---------------------------------------------------------------------------
// Family shapes
// ---------------------------------------------------------------------------

std::vector<Mult3Shape> mult3_shapes(std::int64_t l) {
    if (l == 4) {
        // the small case: the unique Ulrich ideal (t^4, t^6) of k[[t^3,t^4]]
        Mult3Shape s;
        s.regular = true;
        s.index = 1;
        s.a = 4;
        s.b = 6;
        s.label = "mult3-small";
        return {s};
    }
    if (l == 5) return {};
    if (l < 7 || l % 3 == 0)
        throw PreconditionError("mult3_shapes: l must be 4, 5, or >= 7 with gcd(3,l)=1");

    std::vector<Mult3Shape> shapes;
    const std::int64_t n = l / 3;          // l = 3n + r, r in {1, 2}
    const std::int64_t r = l % 3;
    const bool n_even = (n % 2 == 0);
    const std::int64_t q = n_even ? n / 2 : (n - 1) / 2;

    // boundary family (a = l) exists when (r = 1, n odd) or (r = 2, n even)
    if ((r == 1 && !n_even) || (r == 2 && n_even)) {
        Mult3Shape s;
        s.regular = false;
        s.a = l;
        // r = 1: b = l + 3q + 2, tail at l+2, l+5, ..., l+3q-1
        // r = 2: b = l + 3q + 1, tail at l+1, l+4, ..., l+3q-2
        const std::int64_t off = (r == 1) ? 2 : 1;
        s.b = l + 3 * q + off;
        for (std::int64_t j = 1; j <= q; ++j)
            s.coeff_exponents.push_back(l + 3 * j - (3 - off));
        s.label = "mult3-boundary";
        shapes.push_back(std::move(s));
    }

    for (std::int64_t i = 1; i <= q; ++i) {
        Mult3Shape s;
        s.regular = true;
        s.index = i;
        s.a = 6 * i;
        s.b = l + 3 * i;
        for (std::int64_t j = 0; j < i; ++j)
            s.coeff_exponents.push_back(l + 3 * j);
        s.label = "mult3-regular-i" + std::to_string(i);
        shapes.push_back(std::move(s));
    }
    return shapes;
}

std::vector<Family413Shape> family_4_13_shapes() {
    return {
        {1, 12, 21, {17, 26}, {26}, "413-f1"},
        {2, 16, 25, {17, 21, 26}, {26}, "413-f2"},
        {3, 4, 26, {13}, {}, "413-f3"},
        {4, 8, 26, {13, 17}, {}, "413-f4"},
        {5, 12, 26, {13, 17, 21}, {}, "413-f5"},
        {6, 16, 26, {17, 21, 25}, {}, "413-f6"},
        {7, 20, 26, {21, 25, 29}, {29}, "413-f7"},
        {8, 24, 26, {25, 29, 33}, {29, 33}, "413-f8"},
    };
}

// ---------------------------------------------------------------------------
// Enumeration over the normal-form ansatz
// ---------------------------------------------------------------------------

namespace {

void append_standard_warnings(const Semigroup& H, EnumResult& res) {
    const auto& g = H.generators();
    const bool classified =
        (g.size() == 2 && g[0] == 2) ||
        (g.size() == 2 && g[0] == 3) ||
        (g == std::vector<std::int64_t>{4, 13});
    if (!classified) {
        res.warnings.push_back(
            "normal-form ansatz completeness is established for the "
            "classified small-multiplicity cases; results for " +
            H.to_string() + " are exhaustive relative to the ansatz");
    }
    if (g.size() > 3)
        res.warnings.push_back(
            "more than three minimal generators: only the search budget "
            "bounds this enumeration");
    res.warnings.push_back(
        "finite-field evidence only; emptiness over infinite fields is not "
        "established");
}

// upper bound for l_A(A/I) over every ideal with normal-form orders (a, b):
// v(I) covers a+H, b+H, and every member from c-(b-a) upward
std::int64_t colength_upper_bound(const Semigroup& H, std::int64_t a,
                                  std::int64_t b) {
    const std::int64_t cutoff = H.conductor() - (b - a);
    std::int64_t count = 0;
    for (std::int64_t m : H.members_below(std::max<std::int64_t>(cutoff, 0))) {
        if (m >= a && H.contains(m - a)) continue;
        if (m >= b && H.contains(m - b)) continue;
        ++count;
    }
    return count;
}

struct PairJob {
    CandidatePair pair;
    std::vector<std::int64_t> fsup, gsup;
    std::uint64_t tuples = 0;
};

std::vector<UlrichCertificate<Fp>> run_pair(const SemigroupPtr& H,
                                            const FieldSpec& field, Exp N,
                                            const PairJob& job,
                                            EnumStats& stats) {
    std::vector<UlrichCertificate<Fp>> found;
    const Semigroup& sg = *H;
    const auto elems = field_elements(field);
    const std::size_t nf = job.fsup.size(), ng = job.gsup.size();
    const Fp one(1, field.p);

    std::vector<std::size_t> odo(nf + ng, 0);
    while (true) {
        ++stats.tuples;
        std::vector<typename TruncSeries<Fp>::Term> fts{{job.pair.a, one}};
        for (std::size_t i = 0; i < nf; ++i)
            fts.push_back({job.fsup[i], elems[odo[i]]});
        std::vector<typename TruncSeries<Fp>::Term> gts{{job.pair.b, one}};
        for (std::size_t i = 0; i < ng; ++i)
            gts.push_back({job.gsup[i], elems[odo[nf + i]]});

        std::vector<TruncSeries<Fp>> gens{
            TruncSeries<Fp>::from_terms(std::move(fts), N),
            TruncSeries<Fp>::from_terms(std::move(gts), N)};
        for (Exp i = 0; i < sg.multiplicity(); ++i)
            gens.push_back(TruncSeries<Fp>::monomial(sg.conductor() + i, one, N));
        auto I = RingIdeal<Fp>::make(H, field, N, std::move(gens));

        auto B = value_basis(I);
        // Necessary conditions first: a = 2 colength and the conductor
        // inside the ideal; both are cheap given the basis.
        if (colength(B, sg) * 2 == job.pair.a &&
            conductor_contained(B, sg, one) && min_generators(I) == 2) {
            ++stats.candidates;
            auto outcome = is_ulrich_with_basis(I, B);
            if (outcome.ok) found.push_back(std::move(*outcome.cert));
        }

        // advance the odometer
        std::size_t pos = 0;
        while (pos < odo.size()) {
            if (++odo[pos] < elems.size()) break;
            odo[pos] = 0;
            ++pos;
        }
        if (pos == odo.size()) break;
        if (odo.empty()) break;
    }
    return found;
}

void sort_dedup(std::vector<UlrichCertificate<Fp>>& certs) {
    std::sort(certs.begin(), certs.end(),
              [](const UlrichCertificate<Fp>& x, const UlrichCertificate<Fp>& y) {
                  return certificate_key(x) < certificate_key(y);
              });
    certs.erase(std::unique(certs.begin(), certs.end(),
                            [](const UlrichCertificate<Fp>& x,
                               const UlrichCertificate<Fp>& y) {
                                return certificate_key(x) == certificate_key(y);
                            }),
                certs.end());
}

// soundness gate: every certificate re-verifies at doubled precision
void reverify(std::vector<UlrichCertificate<Fp>>& certs, Exp N) {
    for (const auto& cert : certs) {
        auto I = certificate_ideal(cert, 2 * N);
        auto outcome = is_ulrich(I);
        if (!outcome.ok)
            throw InternalError("certificate failed re-verification at doubled "
                                "precision: " + outcome.reason);
        if (outcome.cert->colength != cert.colength ||
            outcome.cert->a != cert.a || outcome.cert->b != cert.b)
            throw InternalError("certificate invariants drifted under doubled "
                                "precision");
    }
}

// ---------------------------------------------------------------------------
// Monomial enumeration (combinatorial core)
// ---------------------------------------------------------------------------

struct MonomialCandidate {
    std::vector<std::int64_t> min_gens; // minimal generator exponents
    std::int64_t a = 0, colen = 0, mu = 0;
};

class MonomialSearch {
public:
    MonomialSearch(const Semigroup& H, std::uint64_t budget)
        : H_(H), budget_(budget), c_(H.conductor()), e_(H.multiplicity()) {
        pool_ = H.members_below(c_ + e_);
        pool_.erase(pool_.begin()); // drop 0
    }

    std::vector<MonomialCandidate> run() {
        std::vector<std::int64_t> chosen;
        recurse(0, chosen);
        return survivors_;
    }

    std::uint64_t visited() const { return visited_; }

private:
    bool in_closure(std::int64_t n, const std::vector<std::int64_t>& chosen) const {
        if (!H_.contains(n)) return false;
        if (n >= c_) return true;
        for (std::int64_t x : chosen)
            if (n >= x && H_.contains(n - x)) return true;
        return false;
    }

    void examine(const std::vector<std::int64_t>& chosen) {
        const std::int64_t a = std::min(chosen.front(), c_);
        if (a % 2 != 0) return;

        std::int64_t colen = 0;
        for (std::int64_t m : H_.members_below(c_))
            if (!in_closure(m, chosen)) ++colen;
        if (2 * colen != a) return;

        // minimal generators of the exponent set
        std::vector<std::int64_t> mingens;
        for (std::int64_t m : H_.members_below(c_ + e_)) {
            if (!in_closure(m, chosen)) continue;
            bool reachable = false;
            for (std::int64_t g : H_.generators())
                if (m - g >= 0 && in_closure(m - g, chosen)) { reachable = true; break; }
            if (!reachable) mingens.push_back(m);
        }
        const std::int64_t mu = static_cast<std::int64_t>(mingens.size());
        if (mu < 2) return;

        // stability: every pairwise sum lands in a + closure
        for (std::size_t i = 0; i < mingens.size(); ++i)
            for (std::size_t j = i; j < mingens.size(); ++j)
                if (!in_closure(mingens[i] + mingens[j] - a, chosen)) return;

        // freeness: l(I/I^2) = a must equal mu * colength
        if (a != mu * colen) return;

        survivors_.push_back({std::move(mingens), a, colen, mu});
    }

    void recurse(std::size_t start, std::vector<std::int64_t>& chosen) {
        for (std::size_t i = start; i < pool_.size(); ++i) {
            std::int64_t m = pool_[i];
            bool comparable = false;
            for (std::int64_t x : chosen)
                if (H_.contains(m - x)) { comparable = true; break; }
            if (comparable) continue;
            chosen.push_back(m);
            if (++visited_ > budget_)
                throw BudgetExceeded("monomial enumeration exceeded the antichain budget");
            examine(chosen);
            recurse(i + 1, chosen);
            chosen.pop_back();
        }
    }

    const Semigroup& H_;
    std::uint64_t budget_;
    std::int64_t c_, e_;
    std::vector<std::int64_t> pool_;
    std::vector<MonomialCandidate> survivors_;
    std::uint64_t visited_ = 0;
};

std::vector<UlrichCertificate<Fp>> certify_monomial_candidates(
    const SemigroupPtr& H, FieldSpec field,
    const std::vector<MonomialCandidate>& cands, Exp N) {
    std::vector<UlrichCertificate<Fp>> certs;
    const Fp one(1, field.p);
    for (const auto& cand : cands) {
        std::vector<TruncSeries<Fp>> gens;
        for (std::int64_t m : cand.min_gens)
            gens.push_back(TruncSeries<Fp>::monomial(m, one, N));
        auto I = RingIdeal<Fp>::make(H, field, N, std::move(gens));
        auto outcome = is_ulrich(I);
        if (!outcome.ok)
            throw InternalError(
                "combinatorial monomial screen disagrees with is_ulrich: " +
                outcome.reason);
        if (outcome.cert->mu != cand.mu || outcome.cert->colength != cand.colen)
            throw InternalError("monomial certificate invariants disagree with "
                                "the combinatorial screen");
        certs.push_back(std::move(*outcome.cert));
    }
    return certs;
}

} // namespace

EnumResult enumerate_monomial_ulrich(const SemigroupPtr& H,
                                     const EnumOptions& opts) {
    EnumResult res;
    MonomialSearch search(*H, opts.budget);
    auto cands = search.run();
    res.stats.tuples = search.visited();
    res.stats.candidates = cands.size();

    Exp N = opts.precision.value_or(default_precision(*H));
    auto certs = certify_monomial_candidates(H, FieldSpec::prime(2), cands, N);
    sort_dedup(certs);
    reverify(certs, N);
    res.certificates = std::move(certs);
    append_standard_warnings(*H, res);
    res.warnings.push_back("monomial ideals are field-independent; "
                           "certificates issued over F2");
    return res;
}

EnumResult enumerate_ulrich(const SemigroupPtr& H, FieldSpec field,
                            const EnumOptions& opts) {
    if (!field.is_prime_field())
        throw PreconditionError(
            "enumerate_ulrich: coefficient enumeration needs a finite field");
    EnumResult res;
    const Semigroup& sg = *H;
    const Exp N = opts.precision.value_or(default_precision(sg));

    // assemble jobs, pruning pairs whose value sets cannot reach a/2 gaps
    std::vector<PairJob> jobs;
    std::uint64_t total = 0;
    for (const auto& pair : candidate_pairs(sg)) {
        if (!pair.conductor_case &&
            colength_upper_bound(sg, pair.a, pair.b) * 2 < pair.a)
            continue;
        PairJob job;
        job.pair = pair;
        job.fsup = ansatz_f_support(sg, pair.a);
        job.gsup = ansatz_g_support(sg, pair.a, pair.b);
        job.tuples = 1;
        for (std::size_t i = 0; i < job.fsup.size() + job.gsup.size(); ++i) {
            job.tuples *= field.p;
            if (job.tuples > opts.budget) break;
        }
        total += job.tuples;
        jobs.push_back(std::move(job));
    }
    if (total > opts.budget)
        throw BudgetExceeded("enumerate_ulrich: " + std::to_string(total) +
                             " coefficient tuples exceed the budget of " +
                             std::to_string(opts.budget));

    std::vector<UlrichCertificate<Fp>> certs;
    const int jobs_n = std::max(1, opts.jobs);
    if (jobs_n == 1 || jobs.size() <= 1) {
        for (const auto& job : jobs) {
            auto part = run_pair(H, field, N, job, res.stats);
            certs.insert(certs.end(), part.begin(), part.end());
        }
    } else {
        // workers share only the immutable semigroup/field data; results
        // are merged and canonically sorted, so scheduling cannot leak
        // into the output
        std::atomic<std::size_t> next{0};
        std::vector<std::vector<UlrichCertificate<Fp>>> parts(jobs.size());
        std::vector<EnumStats> stats(jobs.size());
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                parts[i] = run_pair(H, field, N, jobs[i], stats[i]);
            }
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs_n; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            certs.insert(certs.end(), parts[i].begin(), parts[i].end());
            res.stats.tuples += stats[i].tuples;
            res.stats.candidates += stats[i].candidates;
        }
    }

    // monomial ideals with mu != 2 are outside the two-generated ansatz
    MonomialSearch msearch(sg, opts.budget);
    for (const auto& cand : msearch.run()) {
        if (cand.mu == 2) continue;
        auto extra = certify_monomial_candidates(H, field, {cand}, N);
        certs.insert(certs.end(), extra.begin(), extra.end());
    }

    sort_dedup(certs);
    reverify(certs, N);
    res.certificates = std::move(certs);
    append_standard_warnings(sg, res);
    return res;
}

// ---------------------------------------------------------------------------
// Family instantiation oracle
// ---------------------------------------------------------------------------

namespace {

// all coefficient vectors of the given length over the field
void for_each_tuple(const std::vector<Fp>& elems, std::size_t len,
                    const std::function<void(const std::vector<Fp>&)>& fn) {
    std::vector<Fp> tuple(len, elems.empty() ? Fp() : elems[0]);
    std::vector<std::size_t> odo(len, 0);
    while (true) {
        for (std::size_t i = 0; i < len; ++i) tuple[i] = elems[odo[i]];
        fn(tuple);
        std::size_t pos = 0;
        while (pos < len) {
            if (++odo[pos] < elems.size()) break;
            odo[pos] = 0;
            ++pos;
        }
        if (pos == len) break;
        if (len == 0) break;
    }
}

void verify_and_collect(const RingIdeal<Fp>& I,
                        std::vector<UlrichCertificate<Fp>>& certs,
                        const char* label) {
    auto outcome = is_ulrich(I);
    if (!outcome.ok)
        throw InternalError(std::string("family instance failed verification (") +
                            label + "): " + outcome.reason);
    certs.push_back(std::move(*outcome.cert));
}

} // namespace

EnumResult all_family_instances(const SemigroupPtr& H, FieldSpec field) {
    if (!field.is_prime_field())
        throw PreconditionError("all_family_instances: finite prime field required");
    EnumResult res;
    const auto& g = H->generators();
    auto elems = field_elements(field);
    std::vector<UlrichCertificate<Fp>> certs;

    if (g.size() == 2 && g[0] == 2) {
        std::int64_t l = (g[1] - 1) / 2;
        for (std::int64_t q = 1; q <= l; ++q)
            verify_and_collect(family_mult2<Fp>(H, q, field), certs, "mult2");
    } else if (g.size() == 2 && g[0] == 3) {
        for (const auto& shape : mult3_shapes(g[1])) {
            for_each_tuple(elems, shape.coeff_exponents.size(),
                           [&](const std::vector<Fp>& tuple) {
                               if (shape.regular && !tuple.empty() &&
                                   tuple.front().is_zero())
                                   return;
                               verify_and_collect(
                                   family_mult3<Fp>(H, shape, tuple, field),
                                   certs, shape.label.c_str());
                           });
        }
    } else if (g == std::vector<std::int64_t>{4, 13}) {
        const bool char2 = field.p == 2;
        for (const auto& shape : family_4_13_shapes()) {
            std::size_t len = shape.f_tail.size() + shape.g_tail.size();
            for_each_tuple(elems, len, [&](const std::vector<Fp>& tuple) {
                // skip tuples violating the family side conditions
                const Fp two(2, field.p);
                switch (shape.index) {
                case 1:
                case 2:
                    if (tuple.back().is_zero()) return;            // beta != 0
                    if (tuple[0] != two * tuple.back()) return;    // f_17 = 2 beta
                    break;
                case 7: {
                    const Fp& a1 = tuple[0];
                    if (a1 * a1 * a1 != two * tuple[3]) return;    // a1^3 = 2 beta
                    break;
                }
                case 8:
                    if (char2) {
                        if (!tuple[0].is_zero()) return;
                    } else {
                        if (!tuple[0].is_zero() || !tuple[1].is_zero() ||
                            !tuple[3].is_zero() || !tuple[4].is_zero())
                            return;
                    }
                    break;
                default:
                    break;
                }
                verify_and_collect(family_4_13<Fp>(H, shape.index, tuple, field),
                                   certs, shape.label.c_str());
            });
        }
    } else {
        throw PreconditionError(
            "all_family_instances: no classified family list for " +
            H->to_string());
    }

    sort_dedup(certs);
    reverify(certs, default_precision(*H));
    res.certificates = std::move(certs);
    return res;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

Fp row_coeff(const TruncSeries<Fp>& row, Exp e, std::uint32_t p) {
    return row.coeff(e, Fp(0, p));
}

std::optional<FamilyTag> classify_mult2(const UlrichCertificate<Fp>& cert) {
    const auto& g = cert.sgp->generators();
    std::int64_t l = (g[1] - 1) / 2;
    std::int64_t q = cert.a / 2;
    if (q < 1 || q > l) return std::nullopt;
    auto family = family_mult2<Fp>(cert.sgp, q, cert.field);
    if (!ideal_equal(family, certificate_ideal(cert, family.precision())))
        return std::nullopt;
    FamilyTag tag;
    tag.family = "mult2-q" + std::to_string(q);
    return tag;
}

std::optional<FamilyTag> classify_mult3(const UlrichCertificate<Fp>& cert) {
    const auto& g = cert.sgp->generators();
    if (cert.gens_nf.size() != 2) return std::nullopt;
    for (const auto& shape : mult3_shapes(g[1])) {
        if (shape.a != cert.a || shape.b != cert.b) continue;
        std::vector<Fp> coeffs;
        for (Exp e : shape.coeff_exponents)
            coeffs.push_back(row_coeff(cert.gens_nf[0], e, cert.field.p));
        try {
            auto family = family_mult3<Fp>(cert.sgp, shape, coeffs, cert.field);
            if (!ideal_equal(family, certificate_ideal(cert, family.precision())))
                continue;
        } catch (const PreconditionError&) {
            continue;
        }
        FamilyTag tag;
        tag.family = shape.label;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            std::string name = shape.regular ? "alpha_" + std::to_string(j)
                                             : "alpha_" + std::to_string(j + 1);
            tag.coefficients.push_back({name, coeffs[j].to_string()});
        }
        return tag;
    }
    return std::nullopt;
}

std::optional<FamilyTag> classify_4_13(const UlrichCertificate<Fp>& cert) {
    if (cert.gens_nf.size() != 2) return std::nullopt;
    for (const auto& shape : family_4_13_shapes()) {
        if (shape.a != cert.a || shape.b != cert.b) continue;
        std::vector<Fp> coeffs;
        for (Exp e : shape.f_tail)
            coeffs.push_back(row_coeff(cert.gens_nf[0], e, cert.field.p));
        for (Exp e : shape.g_tail)
            coeffs.push_back(row_coeff(cert.gens_nf[1], e, cert.field.p));
        try {
            auto family = family_4_13<Fp>(cert.sgp, shape.index, coeffs, cert.field);
            if (!ideal_equal(family, certificate_ideal(cert, family.precision())))
                continue;
        } catch (const PreconditionError&) {
            continue;
        }
        FamilyTag tag;
        tag.family = shape.label;
        std::size_t k = 0;
        for (Exp e : shape.f_tail)
            tag.coefficients.push_back(
                {"f_" + std::to_string(e), coeffs[k++].to_string()});
        for (Exp e : shape.g_tail)
            tag.coefficients.push_back(
                {"g_" + std::to_string(e), coeffs[k++].to_string()});
        return tag;
    }
    return std::nullopt;
}

} // namespace

std::optional<FamilyTag> classify(const UlrichCertificate<Fp>& cert) {
    const auto& g = cert.sgp->generators();
    if (g.size() == 2 && g[0] == 2) return classify_mult2(cert);
    if (g.size() == 2 && g[0] == 3) {
        if (g[1] == 4 || g[1] >= 7) return classify_mult3(cert);
        return std::nullopt;
    }
    if (g == std::vector<std::int64_t>{4, 13}) return classify_4_13(cert);
    return std::nullopt;
}

} // namespace ulab
