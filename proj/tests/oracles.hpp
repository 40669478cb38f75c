// Independent reference computations used to check the library. Nothing
// here calls into the code under test beyond reading faces of a complex.
#ifndef ACTDIM_TESTS_ORACLES_HPP
#define ACTDIM_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "actdim/scomplex.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Dense = std::vector<std::vector<long long>>;

/// Number of cliques of each size (index 0 = single vertices) by trying every
/// vertex subset.
inline std::vector<std::size_t> clique_counts(const std::vector<std::vector<int>>& adjacency)
{
    const std::size_t n = adjacency.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (int j : adjacency[i])
            adj[i][static_cast<std::size_t>(j)] = true;
    std::vector<std::size_t> counts;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i))
                vs.push_back(i);
        bool clique = true;
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!adj[vs[a]][vs[b]]) {
                    clique = false;
                    break;
                }
        if (!clique)
            continue;
        if (counts.size() < vs.size())
            counts.resize(vs.size(), 0);
        ++counts[vs.size() - 1];
    }
    return counts;
}

/// Number of strictly increasing chains of nonempty faces of each length:
/// the f-vector of the barycentric subdivision.
inline std::vector<std::size_t> chain_counts(const actdim::SimplicialComplex& k)
{
    std::vector<actdim::Simplex> all;
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.faces(d))
            all.push_back(s);
    std::vector<std::size_t> counts;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t top, std::size_t len) {
        if (counts.size() < len)
            counts.resize(len, 0);
        ++counts[len - 1];
        for (std::size_t j = 0; j < all.size(); ++j)
            if (all[j].size() > all[top].size() &&
                std::includes(all[j].begin(), all[j].end(), all[top].begin(), all[top].end()))
                walk(j, len + 1);
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        walk(i, 1);
    return counts;
}

/// Dense signed boundary matrix from k-faces to (k-1)-faces.
inline Dense boundary(const actdim::SimplicialComplex& k, int deg)
{
    const auto& rows = k.faces(deg - 1);
    const auto& cols = k.faces(deg);
    std::map<actdim::Simplex, std::size_t> pos;
    for (std::size_t i = 0; i < rows.size(); ++i)
        pos[rows[i]] = i;
    Dense m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < cols[c].size(); ++i) {
            actdim::Simplex f = cols[c];
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            m[pos.at(f)][c] = (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

inline std::size_t rank_mod_p(Dense m, long long p)
{
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (auto& row : m)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    auto inv = [p](long long a) {
        long long res = 1, e = p - 2;
        while (e) {
            if (e & 1)
                res = res * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return res;
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        const long long iv = inv(m[r][c]);
        for (auto& x : m[r])
            x = x * iv % p;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c]) {
                const long long f = m[i][c];
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
            }
        ++r;
    }
    return r;
}

inline std::size_t rank_rational(const Dense& in)
{
    const std::size_t rows = in.size(), cols = rows ? in[0].size() : 0;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = in[i][j];
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m[i][c] != 0) {
                const Rational f = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j)
                    m[i][j] -= f * m[r][j];
            }
        ++r;
    }
    return r;
}

/// Per-degree homology seen through ranks: free rank from Q, and for each
/// prime p the number of torsion summands of order divisible by p.
struct RankHomology
{
    std::vector<std::size_t> free_rank;
    std::map<long long, std::vector<std::size_t>> torsion_by_prime;
};

inline RankHomology rank_homology(const actdim::SimplicialComplex& k, const std::vector<long long>& primes)
{
    const int top = k.dim();
    RankHomology h;
    std::vector<std::size_t> rq(static_cast<std::size_t>(top) + 2, 0);
    std::map<long long, std::vector<std::size_t>> rp;
    for (long long p : primes)
        rp[p].assign(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) {
        Dense b = boundary(k, d);
        rq[static_cast<std::size_t>(d)] = rank_rational(b);
        for (long long p : primes)
            rp[p][static_cast<std::size_t>(d)] = rank_mod_p(b, p);
    }
    for (int d = 0; d <= top; ++d) {
        const auto u = static_cast<std::size_t>(d);
        h.free_rank.push_back(k.count(d) - rq[u] - rq[u + 1]);
        for (long long p : primes)
            h.torsion_by_prime[p].push_back(rq[u + 1] - rp[p][u + 1]);
    }
    return h;
}

/// Solve for the affine dependence of points on the moment curve (n+2 points
/// in R^n) and decide whether conv(sigma) meets conv(tau) by the signs of the
/// Radon partition. Parameters t are vertex ranks + 1.
inline bool moment_curve_hulls_meet(const std::vector<int>& sigma_ranks, const std::vector<int>& tau_ranks)
{
    std::vector<int> ts = sigma_ranks;
    ts.insert(ts.end(), tau_ranks.begin(), tau_ranks.end());
    const std::size_t pts = ts.size();
    const std::size_t n = pts - 2;
    // Rows: 1, t, t^2, ..., t^n; columns: points. Kernel is one-dimensional.
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(pts));
    for (std::size_t j = 0; j < pts; ++j) {
        Rational pw = 1;
        for (std::size_t i = 0; i <= n; ++i) {
            m[i][j] = pw;
            pw *= (ts[j] + 1);
        }
    }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pts && r <= n; ++c) {
        std::size_t piv = r;
        while (piv <= n && m[piv][c] == 0)
            ++piv;
        if (piv > n)
            continue;
        std::swap(m[r], m[piv]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != r && m[i][c] != 0) {
                const Rational f = m[i][c];
                for (std::size_t j = 0; j < pts; ++j)
                    m[i][j] -= f * m[r][j];
            }
        pivcol.push_back(c);
        ++r;
    }
    // Points in general position: exactly one free column.
    std::vector<bool> is_piv(pts, false);
    for (auto c : pivcol)
        is_piv[c] = true;
    std::size_t free_col = pts;
    for (std::size_t c = 0; c < pts; ++c)
        if (!is_piv[c])
            free_col = c;
    std::vector<Rational> coef(pts, 0);
    coef[free_col] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i)
        coef[pivcol[i]] = -m[i][free_col];
    auto sign = [](const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    const int s0 = sign(coef[0]);
    if (s0 == 0)
        return false;
    for (std::size_t j = 0; j < sigma_ranks.size(); ++j)
        if (sign(coef[j]) != s0)
            return false;
    for (std::size_t j = sigma_ranks.size(); j < pts; ++j)
        if (sign(coef[j]) != -s0)
            return false;
    return true;
}

/// Rows of `aug` are hyperplanes (normal..., offset). The hyperplanes in
/// `mask` share a point iff the normals and the augmented rows have equal rank.
inline bool consistent(const Dense& aug, std::uint32_t mask, std::size_t& rank_out)
{
    Dense a, na;
    for (std::size_t i = 0; i < aug.size(); ++i)
        if (mask >> i & 1) {
            a.push_back(aug[i]);
            na.push_back(Dense::value_type(aug[i].begin(), aug[i].end() - 1));
        }
    rank_out = rank_rational(na);
    return rank_rational(a) == rank_out;
}

/// Flats by brute force: every consistent subset of hyperplanes, keyed by the
/// set of hyperplanes containing its intersection. Value = codimension.
inline std::map<std::vector<std::size_t>, std::size_t> flats_by_subsets(const Dense& aug)
{
    std::map<std::vector<std::size_t>, std::size_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << aug.size()); ++mask) {
        std::size_t r = 0;
        if (!consistent(aug, mask, r))
            continue;
        Dense sub;
        for (std::size_t i = 0; i < aug.size(); ++i)
            if (mask >> i & 1)
                sub.push_back(aug[i]);
        const std::size_t base = rank_rational(sub);
        std::vector<std::size_t> key;
        for (std::size_t h = 0; h < aug.size(); ++h) {
            Dense more = sub;
            more.push_back(aug[h]);
            if (rank_rational(more) == base)
                key.push_back(h);
        }
        out[key] = r;
    }
    return out;
}

/// Whitney's formula: p(t) = sum over consistent subsets S of
/// (-1)^|S| (-t)^rank(S). Coefficients, constant term first.
inline std::vector<long long> whitney_poincare(const Dense& aug)
{
    std::vector<long long> p;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << aug.size()); ++mask) {
        std::size_t r = 0;
        if (!consistent(aug, mask, r))
            continue;
        if (p.size() <= r)
            p.resize(r + 1, 0);
        const int size = __builtin_popcount(mask);
        p[r] += ((size + static_cast<int>(r)) % 2 == 0) ? 1 : -1;
    }
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
    return p;
}

/// Finest splitting of a vector configuration: S separates iff
/// rank(S) + rank(complement) = rank(all); i and j share a block iff every
/// separator containing i contains j.
inline std::vector<std::vector<std::size_t>> separator_blocks(const Dense& vectors)
{
    const std::size_t m = vectors.size();
    const std::size_t total = rank_rational(vectors);
    std::vector<std::uint32_t> separators;
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << m); ++mask) {
        Dense a, b;
        for (std::size_t i = 0; i < m; ++i)
            (mask >> i & 1 ? a : b).push_back(vectors[i]);
        if (rank_rational(a) + rank_rational(b) == total)
            separators.push_back(mask);
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> placed(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (placed[i])
            continue;
        std::vector<std::size_t> block;
        for (std::size_t j = i; j < m; ++j) {
            bool together = true;
            for (auto s : separators)
                if ((s >> i & 1) != (s >> j & 1))
                    together = false;
            if (together) {
                block.push_back(j);
                placed[j] = true;
            }
        }
        blocks.push_back(block);
    }
    return blocks;
}

/// Diagonal of the Smith normal form by the textbook pivoting procedure:
/// bring the smallest nonzero entry to the corner, clear its row and column
/// by division with remainder, and fold in any entry it does not divide.
/// Returns the nonzero invariant factors, in divisibility order.
inline std::vector<boost::multiprecision::cpp_int> smith_diagonal(const Dense& in)
{
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a;
    for (const auto& r : in)
        a.emplace_back(r.begin(), r.end());
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<cpp_int> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj])))
                        pi = i, pj = j;
            if (pi == rows)
                return diag;
            std::swap(a[t], a[pi]);
            for (auto& r : a)
                std::swap(r[t], r[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const cpp_int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const cpp_int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean)
                continue;
            // Pivot must divide the rest; otherwise add the offending row.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

/// Integral homology from Smith normal forms of the boundary matrices: free
/// rank and the invariant factors > 1, per degree.
struct SmithHomology
{
    std::vector<std::size_t> free_rank;
    std::vector<std::vector<boost::multiprecision::cpp_int>> torsion;
};

inline SmithHomology smith_homology(const actdim::SimplicialComplex& k)
{
    const int top = k.dim();
    std::vector<std::vector<boost::multiprecision::cpp_int>> diag(static_cast<std::size_t>(top) + 2);
    for (int d = 1; d <= top; ++d)
        diag[static_cast<std::size_t>(d)] = smith_diagonal(boundary(k, d));
    SmithHomology h;
    for (int d = 0; d <= top; ++d) {
        const auto u = static_cast<std::size_t>(d);
        h.free_rank.push_back(k.count(d) - diag[u].size() - diag[u + 1].size());
        std::vector<boost::multiprecision::cpp_int> t;
        for (const auto& x : diag[u + 1])
            if (x > 1)
                t.push_back(x);
        h.torsion.push_back(t);
    }
    return h;
}

}  // namespace oracle

#endif
