#include "ulab/betti.hpp"

#include <algorithm>

namespace ulab {

// ---------------------------------------------------------------------------
// Herzog exponents
// ---------------------------------------------------------------------------

namespace {

// decompositions of value as u*x + v*y with u, v >= lower
std::vector<std::pair<std::int64_t, std::int64_t>> decompose(
    std::int64_t value, std::int64_t x, std::int64_t y, std::int64_t lower) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t u = lower; u * x <= value - lower * y; ++u) {
        std::int64_t rest = value - u * x;
        if (rest % y == 0 && rest / y >= lower) out.push_back({u, rest / y});
    }
    return out;
}

// least n > 0 with n*a in <x, y>, together with its both-positive
// decomposition (unique in the non-symmetric case)
std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>> least_multiple(
    std::int64_t a, std::int64_t x, std::int64_t y) {
    for (std::int64_t n = 1;; ++n) {
        if (decompose(n * a, x, y, 0).empty()) continue;
        auto pos = decompose(n * a, x, y, 1);
        if (pos.size() != 1)
            throw InternalError(
                "herzog_exponents: the minimal relation of " + std::to_string(a) +
                " does not have a unique all-positive decomposition");
        return {n, pos.front()};
    }
}

} // namespace

HerzogExponents herzog_exponents(const Semigroup& H) {
    if (H.generators().size() != 3)
        throw PreconditionError("herzog_exponents: semigroup is not "
                                "minimally three-generated");
    if (H.is_symmetric())
        throw PreconditionError("herzog_exponents: symmetric semigroup "
                                "(complete intersection, no Herzog matrix)");
    const std::int64_t a1 = H.generators()[0];
    const std::int64_t a2 = H.generators()[1];
    const std::int64_t a3 = H.generators()[2];

    auto [c1, d1] = least_multiple(a1, a2, a3); // c1*a1 = beta'*a2 + gamma*a3
    auto [c2, d2] = least_multiple(a2, a1, a3); // c2*a2 = alpha*a1 + gamma'*a3
    auto [c3, d3] = least_multiple(a3, a1, a2); // c3*a3 = alpha'*a1 + beta*a2

    HerzogExponents he;
    he.beta_p = d1.first;
    he.gamma = d1.second;
    he.alpha = d2.first;
    he.gamma_p = d2.second;
    he.alpha_p = d3.first;
    he.beta = d3.second;

    if (he.alpha + he.alpha_p != c1 || he.beta + he.beta_p != c2 ||
        he.gamma + he.gamma_p != c3)
        throw InternalError("herzog_exponents: minor identities fail");
    // the three minors vanish under X -> t^a1, Y -> t^a2, Z -> t^a3
    if (he.alpha * a1 + he.gamma_p * a3 != (he.beta + he.beta_p) * a2 ||
        (he.alpha + he.alpha_p) * a1 != he.beta_p * a2 + he.gamma * a3 ||
        he.beta * a2 + he.alpha_p * a1 != (he.gamma + he.gamma_p) * a3)
        throw InternalError("herzog_exponents: exponent identities fail");
    return he;
}

// ---------------------------------------------------------------------------
// The artinian algebra B
// ---------------------------------------------------------------------------

ArtinianAlgebra::ArtinianAlgebra(std::int64_t beta, std::int64_t beta_p,
                                 std::int64_t gamma, std::int64_t gamma_p,
                                 std::uint32_t p)
    : bb_(beta + beta_p), bp_(beta_p), gg_(gamma + gamma_p), gp_(gamma), p_(p) {
    if (beta < 1 || beta_p < 1 || gamma < 1 || gamma_p < 1)
        throw PreconditionError("ArtinianAlgebra: exponents must be positive");
    if (!is_prime_u32(p))
        throw PreconditionError("ArtinianAlgebra: modulus must be prime");
    index_.assign(static_cast<std::size_t>(bb_),
                  std::vector<int>(static_cast<std::size_t>(gg_), -1));
    // standard monomials ordered by total degree, then y-power
    std::vector<std::pair<int, int>> monos;
    for (int i = 0; i < bb_; ++i)
        for (int j = 0; j < gg_; ++j) {
            if (i >= bp_ && j >= gp_) continue; // killed by Y^{b'} Z^{g}
            monos.push_back({i, j});
        }
    std::sort(monos.begin(), monos.end(), [](auto a, auto b) {
        if (a.first + a.second != b.first + b.second)
            return a.first + a.second < b.first + b.second;
        return a.first < b.first;
    });
    basis_ = std::move(monos);
    for (std::size_t k = 0; k < basis_.size(); ++k)
        index_[static_cast<std::size_t>(basis_[k].first)]
              [static_cast<std::size_t>(basis_[k].second)] =
                  static_cast<int>(k);
}

int ArtinianAlgebra::index_of(int i, int j) const {
    if (i < 0 || j < 0 || i >= bb_ || j >= gg_) return -1;
    return index_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void ArtinianAlgebra::add_shifted(const std::vector<std::uint32_t>& vec, int di,
                                  int dj, std::uint32_t c,
                                  std::vector<std::uint32_t>& out) const {
    if (c == 0) return;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (vec[k] == 0) continue;
        int idx = index_of(basis_[k].first + di, basis_[k].second + dj);
        if (idx < 0) continue;
        out[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(
            (out[static_cast<std::size_t>(idx)] +
             static_cast<std::uint64_t>(vec[k]) * c) % p_);
    }
}

std::vector<std::uint32_t> ArtinianAlgebra::element(
    std::initializer_list<std::pair<std::pair<int, int>, std::uint32_t>> terms)
    const {
    std::vector<std::uint32_t> out(basis_.size(), 0);
    for (const auto& [mono, c] : terms) {
        int idx = index_of(mono.first, mono.second);
        if (idx < 0) continue; // the monomial is zero in B
        out[static_cast<std::size_t>(idx)] =
            static_cast<std::uint32_t>((out[static_cast<std::size_t>(idx)] + c) % p_);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense linear algebra mod p
// ---------------------------------------------------------------------------

namespace {

struct RowSpan {
    std::uint32_t p;
    std::size_t width;
    std::vector<std::vector<std::uint32_t>> rows; // reduced; rows[i] has pivot pivots[i]
    std::vector<std::size_t> pivots;

    static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }

    // reduce v against the span; returns true (and absorbs v) when v was
    // independent
    bool insert(std::vector<std::uint32_t> v) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::uint32_t c = v[pivots[i]];
            if (c == 0) continue;
            const auto& r = rows[i];
            std::uint64_t mc = p - c;
            for (std::size_t k = pivots[i]; k < width; ++k)
                v[k] = static_cast<std::uint32_t>((v[k] + mc * r[k]) % p);
        }
        std::size_t lead = width;
        for (std::size_t k = 0; k < width; ++k)
            if (v[k] != 0) { lead = k; break; }
        if (lead == width) return false;
        std::uint64_t inv = inv_mod(v[lead], p);
        for (std::size_t k = lead; k < width; ++k)
            v[k] = static_cast<std::uint32_t>(v[k] * inv % p);
        // keep rows ordered by pivot
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < lead) ++pos;
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

    bool contains(std::vector<std::uint32_t> v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::uint32_t c = v[pivots[i]];
            if (c == 0) continue;
            const auto& r = rows[i];
            std::uint64_t mc = p - c;
            for (std::size_t k = pivots[i]; k < width; ++k)
                v[k] = static_cast<std::uint32_t>((v[k] + mc * r[k]) % p);
        }
        for (std::uint32_t x : v)
            if (x != 0) return false;
        return true;
    }
};

// kernel basis of the matrix whose columns are given (column-major),
// via RREF of the transpose bookkeeping: returns vectors in the column
// coordinate space, in deterministic order of free columns
std::vector<std::vector<std::uint32_t>> kernel_basis(
    std::vector<std::vector<std::uint32_t>> cols, std::size_t height,
    std::uint32_t p) {
    const std::size_t n = cols.size();
    // Gaussian elimination on columns, tracking the combination matrix
    std::vector<std::vector<std::uint32_t>> combo(n,
                                                  std::vector<std::uint32_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) combo[j][j] = 1;

    std::vector<bool> used(n, false);
    for (std::size_t r = 0; r < height; ++r) {
        std::size_t pivot = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j] && cols[j][r] != 0) { pivot = j; break; }
        if (pivot == n) continue;
        used[pivot] = true;
        std::uint64_t inv = RowSpan::inv_mod(cols[pivot][r], p);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == pivot || cols[j][r] == 0) continue;
            std::uint64_t factor = cols[j][r] * inv % p;
            std::uint64_t mf = p - factor;
            for (std::size_t k = 0; k < height; ++k)
                cols[j][k] = static_cast<std::uint32_t>(
                    (cols[j][k] + mf * cols[pivot][k]) % p);
            for (std::size_t k = 0; k < n; ++k)
                combo[j][k] = static_cast<std::uint32_t>(
                    (combo[j][k] + mf * combo[pivot][k]) % p);
        }
    }
    std::vector<std::vector<std::uint32_t>> kernel;
    for (std::size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        bool zero = true;
        for (std::size_t k = 0; k < height; ++k)
            if (cols[j][k] != 0) { zero = false; break; }
        if (zero) kernel.push_back(combo[j]);
    }
    return kernel;
}

// the k-matrix columns of a free-module map: column (j, m) is
// basis-monomial m applied to map column j
std::vector<std::vector<std::uint32_t>> linearize(const ArtinianAlgebra& B,
                                                  const FreeModuleMap& M) {
    const std::size_t dim = static_cast<std::size_t>(B.dim());
    const std::size_t height = static_cast<std::size_t>(M.target_rank) * dim;
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(M.cols.size() * dim);
    for (const auto& col : M.cols) {
        for (std::size_t m = 0; m < dim; ++m) {
            auto [di, dj] = B.basis()[m];
            std::vector<std::uint32_t> v(height, 0);
            for (int block = 0; block < M.target_rank; ++block) {
                std::vector<std::uint32_t> comp(
                    col.begin() + block * static_cast<std::ptrdiff_t>(dim),
                    col.begin() + (block + 1) * static_cast<std::ptrdiff_t>(dim));
                std::vector<std::uint32_t> shifted(dim, 0);
                B.add_shifted(comp, di, dj, 1, shifted);
                for (std::size_t k = 0; k < dim; ++k)
                    v[static_cast<std::size_t>(block) * dim + k] = shifted[k];
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

// y*vec and z*vec blockwise on a free-module element
std::vector<std::uint32_t> shift_blocks(const ArtinianAlgebra& B,
                                        const std::vector<std::uint32_t>& vec,
                                        int rank, int di, int dj) {
    const std::size_t dim = static_cast<std::size_t>(B.dim());
    std::vector<std::uint32_t> out(vec.size(), 0);
    for (int block = 0; block < rank; ++block) {
        std::vector<std::uint32_t> comp(
            vec.begin() + block * static_cast<std::ptrdiff_t>(dim),
            vec.begin() + (block + 1) * static_cast<std::ptrdiff_t>(dim));
        std::vector<std::uint32_t> shifted(dim, 0);
        B.add_shifted(comp, di, dj, 1, shifted);
        for (std::size_t k = 0; k < dim; ++k)
            out[static_cast<std::size_t>(block) * dim + k] = shifted[k];
    }
    return out;
}

} // namespace

Resolution resolve_residue_field(const ArtinianAlgebra& B, int n_max) {
    if (n_max < 0) throw PreconditionError("resolve_residue_field: n_max < 0");
    if (n_max > 12)
        throw PreconditionError("resolve_residue_field: n_max exceeds the "
                                "resolution budget of 12");
    Resolution res;
    res.betti.over = BettiSequence::Over::B;
    res.betti.values.push_back(1);
    if (n_max == 0) return res;

    const std::size_t dim = static_cast<std::size_t>(B.dim());

    // M0 = (y z) : B^2 -> B
    FreeModuleMap M0;
    M0.target_rank = 1;
    M0.cols.push_back(B.element({{{1, 0}, 1}}));
    M0.cols.push_back(B.element({{{0, 1}, 1}}));
    res.maps.push_back(M0);
    res.betti.values.push_back(2);

    while (static_cast<int>(res.betti.values.size()) <= n_max) {
        const FreeModuleMap& M = res.maps.back();
        auto kernel = kernel_basis(linearize(B, M),
                                   static_cast<std::size_t>(M.target_rank) * dim,
                                   B.p());

        // minimal generators: kernel vectors surviving modulo (y, z) * kernel
        RowSpan radical{B.p(),
                        static_cast<std::size_t>(M.source_rank()) * dim,
                        {},
                        {}};
        for (const auto& v : kernel) {
            radical.insert(shift_blocks(B, v, M.source_rank(), 1, 0));
            radical.insert(shift_blocks(B, v, M.source_rank(), 0, 1));
        }
        FreeModuleMap next;
        next.target_rank = M.source_rank();
        for (const auto& v : kernel)
            if (radical.insert(v)) next.cols.push_back(v);

        // minimality: no unit entries in the new matrix
        if (!entries_in_radical(B, next))
            throw InternalError("resolution step produced a unit entry");

        res.betti.values.push_back(static_cast<std::int64_t>(next.cols.size()));
        res.maps.push_back(std::move(next));
    }
    return res;
}

BettiSequence betti_over_A(const Semigroup& H, int n_max) {
    auto he = herzog_exponents(H);
    BettiSequence overB;
    for (std::uint32_t p : {2u, 3u}) {
        ArtinianAlgebra B(he, p);
        if (B.dim() != H.generators()[0])
            throw InternalError("artinian reduction has the wrong dimension");
        auto r = resolve_residue_field(B, n_max);
        if (p == 2) {
            overB = r.betti;
        } else if (overB.values != r.betti.values) {
            throw InternalError("Betti numbers differ between F2 and F3");
        }
    }
    BettiSequence out;
    out.over = BettiSequence::Over::A;
    for (int n = 0; n <= n_max; ++n) {
        std::int64_t v = overB.values[static_cast<std::size_t>(n)];
        if (n > 0) v += overB.values[static_cast<std::size_t>(n - 1)];
        out.values.push_back(v);
    }
    return out;
}

std::vector<std::int64_t> rational_series_coeffs(
    const std::vector<std::int64_t>& num, const std::vector<std::int64_t>& den,
    int n_max) {
    if (den.empty() || den[0] != 1)
        throw PreconditionError("rational_series_coeffs: denominator must "
                                "have constant term 1");
    std::vector<std::int64_t> s(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 0; n <= n_max; ++n) {
        std::int64_t v =
            (n < static_cast<int>(num.size())) ? num[static_cast<std::size_t>(n)] : 0;
        for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k)
            v -= den[static_cast<std::size_t>(k)] *
                 s[static_cast<std::size_t>(n - k)];
        s[static_cast<std::size_t>(n)] = v;
    }
    return s;
}

bool golod_series_check(int n_max, const Semigroup* H) {
    auto lhs = rational_series_coeffs({1, 1}, {1, -2}, n_max);
    auto rhs = rational_series_coeffs({1, 3, 3, 1}, {1, 0, -3, -2}, n_max);
    if (lhs != rhs) return false;
    if (H) {
        auto seq = betti_over_A(*H, std::min(n_max, 12));
        for (std::size_t n = 0; n < seq.values.size(); ++n)
            if (seq.values[n] != lhs[n]) return false;
    }
    return true;
}

int kernel_dimension(const ArtinianAlgebra& B, const FreeModuleMap& M) {
    auto kernel = kernel_basis(
        linearize(B, M),
        static_cast<std::size_t>(M.target_rank) * static_cast<std::size_t>(B.dim()),
        B.p());
    return static_cast<int>(kernel.size());
}

bool composes_to_zero(const ArtinianAlgebra& B, const FreeModuleMap& M,
                      const FreeModuleMap& N) {
    if (M.source_rank() != N.target_rank) return false;
    const std::size_t dim = static_cast<std::size_t>(B.dim());
    for (const auto& col : N.cols) {
        // apply M to the B-vector col
        std::vector<std::uint32_t> out(
            static_cast<std::size_t>(M.target_rank) * dim, 0);
        for (int j = 0; j < N.target_rank; ++j) {
            // component j of col multiplies column j of M
            for (std::size_t k = 0; k < dim; ++k) {
                std::uint32_t c =
                    col[static_cast<std::size_t>(j) * dim + k];
                if (c == 0) continue;
                auto [di, dj] = B.basis()[k];
                for (int block = 0; block < M.target_rank; ++block) {
                    std::vector<std::uint32_t> comp(
                        M.cols[static_cast<std::size_t>(j)].begin() +
                            block * static_cast<std::ptrdiff_t>(dim),
                        M.cols[static_cast<std::size_t>(j)].begin() +
                            (block + 1) * static_cast<std::ptrdiff_t>(dim));
                    std::vector<std::uint32_t> target(
                        out.begin() + block * static_cast<std::ptrdiff_t>(dim),
                        out.begin() + (block + 1) * static_cast<std::ptrdiff_t>(dim));
                    B.add_shifted(comp, di, dj, c, target);
                    std::copy(target.begin(), target.end(),
                              out.begin() + block * static_cast<std::ptrdiff_t>(dim));
                }
            }
        }
        for (std::uint32_t x : out)
            if (x != 0) return false;
    }
    return true;
}

bool entries_in_radical(const ArtinianAlgebra& B, const FreeModuleMap& M) {
    const std::size_t dim = static_cast<std::size_t>(B.dim());
    int unit_idx = B.index_of(0, 0);
    for (const auto& col : M.cols)
        for (int block = 0; block < M.target_rank; ++block)
            if (col[static_cast<std::size_t>(block) * dim +
                    static_cast<std::size_t>(unit_idx)] != 0)
                return false;
    return true;
}

int module_span_dimension(const ArtinianAlgebra& B, const FreeModuleMap& M) {
    const std::size_t dim = static_cast<std::size_t>(B.dim());
    RowSpan span{B.p(), static_cast<std::size_t>(M.target_rank) * dim, {}, {}};
    int count = 0;
    for (const auto& col : M.cols)
        for (std::size_t m = 0; m < dim; ++m) {
            auto [di, dj] = B.basis()[m];
            if (span.insert(shift_blocks(B, col, M.target_rank, di, dj)))
                ++count;
        }
    return count;
}

} // namespace ulab
