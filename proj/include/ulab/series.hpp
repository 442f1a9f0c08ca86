#ifndef ULAB_SERIES_HPP
#define ULAB_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulab/errors.hpp"
#include "ulab/field.hpp"

namespace ulab {

using Exp = std::int64_t;

// ---------------------------------------------------------------------------
// Truncated univariate power series over an exact coefficient field K.
//
// A value represents an element of k[[t]] known exactly below `precision()`;
// exponents >= precision are unknown, not zero.  Terms are kept sorted by
// exponent with all coefficients nonzero, so structural equality is series
// equality at the common precision.  Values are immutable in spirit: every
// operation returns a fresh series, which makes them freely shareable
// across threads.
// ---------------------------------------------------------------------------
template <class K>
class TruncSeries {
public:
    using Term = std::pair<Exp, K>;

    TruncSeries() = default;
    explicit TruncSeries(Exp precision) : prec_(precision) {}

    static TruncSeries zero(Exp precision) { return TruncSeries(precision); }

    static TruncSeries monomial(Exp e, K c, Exp precision) {
        TruncSeries s(precision);
        if (e < 0) throw PreconditionError("TruncSeries: negative exponent");
        if (e < precision && !c.is_zero()) s.terms_.push_back({e, std::move(c)});
        return s;
    }

    // terms need not be sorted; duplicates are combined
    static TruncSeries from_terms(std::vector<Term> terms, Exp precision) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        TruncSeries s(precision);
        for (auto& [e, c] : terms) {
            if (e < 0) throw PreconditionError("TruncSeries: negative exponent");
            if (e >= precision || c.is_zero()) continue;
            if (!s.terms_.empty() && s.terms_.back().first == e) {
                s.terms_.back().second += c;
                if (s.terms_.back().second.is_zero()) s.terms_.pop_back();
            } else {
                s.terms_.push_back({e, std::move(c)});
            }
        }
        return s;
    }

    Exp precision() const { return prec_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Smallest exponent with nonzero coefficient; nullopt when the series
    // vanishes below precision ("above precision").
    std::optional<Exp> order() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.front().first;
    }

    // coefficient at exponent e (must satisfy e < precision); zero if absent
    K coeff(Exp e, const K& zero_like) const {
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), e,
            [](const Term& t, Exp x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return zero_like.make(0);
    }

    bool has_term(Exp e) const {
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), e,
            [](const Term& t, Exp x) { return t.first < x; });
        return it != terms_.end() && it->first == e;
    }

    TruncSeries truncated(Exp new_precision) const {
        TruncSeries s(std::min(prec_, new_precision));
        for (const auto& t : terms_) {
            if (t.first >= s.prec_) break;
            s.terms_.push_back(t);
        }
        return s;
    }

    TruncSeries operator-() const {
        TruncSeries s(prec_);
        s.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.terms_.push_back({e, -c});
        return s;
    }

    // Result precision is the minimum of the operands'.
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.prec_, b.prec_));
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                if (ia->first >= s.prec_) break;
                s.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                if (ib->first >= s.prec_) break;
                s.terms_.push_back(*ib++);
            } else {
                if (ia->first >= s.prec_) break;
                K c = ia->second + ib->second;
                if (!c.is_zero()) s.terms_.push_back({ia->first, std::move(c)});
                ++ia; ++ib;
            }
        }
        while (ia != a.terms_.end() && ia->first < s.prec_) s.terms_.push_back(*ia++);
        while (ib != b.terms_.end() && ib->first < s.prec_) s.terms_.push_back(*ib++);
        return s;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        return a + (-b);
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.prec_, b.prec_));
        if (a.terms_.empty() || b.terms_.empty()) return s;
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ea, ca] : a.terms_) {
            if (ea + b.terms_.front().first >= s.prec_) break;
            for (const auto& [eb, cb] : b.terms_) {
                Exp e = ea + eb;
                if (e >= s.prec_) break;
                acc.push_back({e, ca * cb});
            }
        }
        return from_terms(std::move(acc), s.prec_);
    }

    TruncSeries scaled(const K& c) const {
        TruncSeries s(prec_);
        if (c.is_zero()) return s;
        s.terms_.reserve(terms_.size());
        for (const auto& [e, coef] : terms_) {
            K v = coef * c;
            if (!v.is_zero()) s.terms_.push_back({e, std::move(v)});
        }
        return s;
    }

    // multiply by t^h (h >= 0); precision grows with the shift so the
    // known window is preserved
    TruncSeries shifted(Exp h) const {
        TruncSeries s(prec_ + h);
        s.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.terms_.push_back({e + h, c});
        return s;
    }

    // structural equality: same precision, same terms
    bool operator==(const TruncSeries& o) const {
        return prec_ == o.prec_ && terms_ == o.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            if (!c.is_one() || e == 0) out += c.to_string();
            if (e > 0) {
                if (!c.is_one()) out += "*";
                out += "t^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    Exp prec_ = 0;
    std::vector<Term> terms_;
};

// The unique series q with f*q = g in k[[t]], computed to precision
// N - ord(f) where N = min(precision of f, precision of g).
// Requires f != 0 and ord(g) >= ord(f).
template <class K>
TruncSeries<K> divide(const TruncSeries<K>& g, const TruncSeries<K>& f) {
    auto of = f.order();
    if (!of) throw PreconditionError("divide: zero divisor");
    Exp N = std::min(f.precision(), g.precision());
    Exp out_prec = N - *of;
    auto og = g.order();
    if (og && *og < *of) throw PreconditionError("divide: not divisible (order drop)");

    TruncSeries<K> quotient(out_prec);
    TruncSeries<K> rem = g.truncated(N);
    const K lead = f.terms().front().second;
    std::vector<typename TruncSeries<K>::Term> qterms;
    while (true) {
        auto orr = rem.order();
        if (!orr || *orr - *of >= out_prec) break;
        Exp d = *orr - *of;
        K c = rem.terms().front().second * lead.inverse();
        qterms.push_back({d, c});
        rem = rem - f.shifted(d).truncated(N).scaled(c);
    }
    return TruncSeries<K>::from_terms(std::move(qterms), out_prec);
}

} // namespace ulab

#endif
