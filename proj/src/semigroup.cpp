#include "ulab/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace ulab {

namespace {

constexpr std::int64_t kMaxGeneratorValue = 1'000'000;
constexpr std::size_t kMaxGenerators = 16;
constexpr std::size_t kMaxTable = 20'000'000;

// membership table on [0, limit) by the coin-problem dynamic program
std::vector<char> membership_table(const std::vector<std::int64_t>& gens,
                                   std::size_t limit) {
    std::vector<char> member(limit, 0);
    member[0] = 1;
    for (std::size_t n = 1; n < limit; ++n) {
        for (std::int64_t g : gens) {
            if (static_cast<std::size_t>(g) <= n && member[n - g]) {
                member[n] = 1;
                break;
            }
        }
    }
    return member;
}

} // namespace

Semigroup Semigroup::make(std::vector<std::int64_t> gens) {
    if (gens.empty()) throw PreconditionError("semigroup: empty generator list");
    for (std::int64_t g : gens) {
        if (g <= 0) throw PreconditionError("semigroup: generators must be positive");
        if (g > kMaxGeneratorValue)
            throw PreconditionError("semigroup: generator exceeds the 10^6 cap");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.size() > kMaxGenerators)
        throw PreconditionError("semigroup: more than 16 generators");

    std::int64_t g = 0;
    for (std::int64_t v : gens) g = std::gcd(g, v);
    if (g != 1) throw PreconditionError("semigroup: gcd of generators is not 1");

    const std::int64_t e = gens.front();

    Semigroup H;
    if (e == 1) {
        H.gens_ = {1};
        H.frobenius_ = -1;
        H.conductor_ = 0;
        H.mult_ = 1;
        H.members_ = {1};
        return H;
    }

    // Grow the table until a run of e consecutive members appears; from
    // there on every integer is a member.
    std::size_t limit = 4 * static_cast<std::size_t>(gens.back()) + 2 * e;
    std::vector<char> member;
    std::int64_t run_start = -1;
    while (true) {
        if (limit > kMaxTable)
            throw PreconditionError("semigroup: conductor exceeds the table cap");
        member = membership_table(gens, limit);
        std::int64_t run = 0;
        run_start = -1;
        for (std::size_t n = 0; n < limit; ++n) {
            run = member[n] ? run + 1 : 0;
            if (run == e) { run_start = static_cast<std::int64_t>(n) - e + 1; break; }
        }
        if (run_start >= 0) break;
        limit *= 2;
    }

    // largest non-member below the run
    std::int64_t frob = -1;
    for (std::int64_t n = run_start - 1; n >= 0; --n) {
        if (!member[static_cast<std::size_t>(n)]) { frob = n; break; }
    }
    H.frobenius_ = frob;
    H.conductor_ = frob + 1;
    H.mult_ = e;

    const std::size_t table = static_cast<std::size_t>(2 * H.conductor_ + 1);
    if (table > kMaxTable)
        throw PreconditionError("semigroup: conductor exceeds the table cap");
    if (member.size() < table) member = membership_table(gens, table);
    member.resize(table);
    for (std::size_t n = static_cast<std::size_t>(H.conductor_); n < table; ++n)
        member[n] = 1;
    H.members_ = std::move(member);

    // minimal generating set: members of H \ {0} not a sum of two such
    H.gens_.clear();
    for (std::int64_t v : gens) {
        bool redundant = false;
        for (std::int64_t w = e; w <= v - e; ++w) {
            if (H.members_[static_cast<std::size_t>(w)] &&
                H.members_[static_cast<std::size_t>(v - w)]) {
                redundant = true;
                break;
            }
        }
        if (!redundant) H.gens_.push_back(v);
    }
    return H;
}

std::vector<std::int64_t> Semigroup::apery_set(std::int64_t m) const {
    if (m <= 0 || !contains(m))
        throw PreconditionError("apery_set: argument is not a nonzero member");
    std::vector<std::int64_t> ap(static_cast<std::size_t>(m), -1);
    std::int64_t found = 0;
    for (std::int64_t n = 0; found < m; ++n) {
        if (!contains(n)) continue;
        auto& slot = ap[static_cast<std::size_t>(n % m)];
        if (slot < 0) { slot = n; ++found; }
    }
    return ap;
}

bool Semigroup::is_symmetric() const {
    for (std::int64_t z = 0; z <= frobenius_; ++z)
        if (contains(z) == contains(frobenius_ - z)) return false;
    return true;
}

std::vector<std::int64_t> Semigroup::pseudo_frobenius() const {
    std::vector<std::int64_t> pf;
    for (std::int64_t z : gaps()) {
        bool ok = true;
        for (std::int64_t g : gens_) {
            if (!contains(z + g)) { ok = false; break; }
        }
        if (ok) pf.push_back(z);
    }
    return pf;
}

std::vector<std::int64_t> Semigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n < conductor_; ++n)
        if (!contains(n)) out.push_back(n);
    return out;
}

std::vector<std::int64_t> Semigroup::members_below(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n < bound; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

std::string Semigroup::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(gens_[i]);
    }
    return s + ">";
}

Gluing make_gluing(std::int64_t alpha, std::int64_t beta,
                   std::int64_t a, std::int64_t b) {
    if (alpha <= 0 || beta <= 0)
        throw PreconditionError("gluing: alpha, beta must be positive");
    if (std::gcd(alpha, beta) != 1)
        throw PreconditionError("gluing: gcd(alpha, beta) != 1");
    if (alpha == 1 || beta == 1)
        throw PreconditionError("gluing: <alpha, beta> must be minimally two-generated");
    if (a <= 0) throw PreconditionError("gluing: a must be positive");
    if (a == alpha || a == beta)
        throw PreconditionError("gluing: a must avoid {alpha, beta}");
    if (b <= 1) throw PreconditionError("gluing: b must exceed 1");
    if (std::gcd(a, b) != 1) throw PreconditionError("gluing: gcd(a, b) != 1");

    // lexicographically smallest witness a = l*alpha + m*beta
    std::int64_t wl = -1, wm = -1;
    for (std::int64_t l = 0; l * alpha <= a; ++l) {
        std::int64_t rest = a - l * alpha;
        if (rest % beta == 0) { wl = l; wm = rest / beta; break; }
    }
    if (wl < 0) throw PreconditionError("gluing: a is not a member of <alpha, beta>");

    Gluing g;
    g.alpha = alpha; g.beta = beta; g.a = a; g.b = b; g.l = wl; g.m = wm;
    g.sgp = make_semigroup({b * alpha, b * beta, a});
    return g;
}

} // namespace ulab
