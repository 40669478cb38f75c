#include "actdim/chains.hpp"

#include <algorithm>
#include <map>

namespace actdim {

gf2::Matrix SparseIntMatrix::mod2() const
{
    gf2::Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (auto [r, v] : columns[c])
            if (v % 2 != 0)
                m.data[r].flip(c);
    return m;
}

BoundaryMatrices boundary_matrices(const SimplicialComplex& k)
{
    BoundaryMatrices out;
    out.boundary.resize(static_cast<std::size_t>(std::max(k.dim(), 0)) + 1);
    for (int d = 1; d <= k.dim(); ++d) {
        SparseIntMatrix& m = out.boundary[static_cast<std::size_t>(d)];
        m.rows = k.count(d - 1);
        for (const auto& s : k.faces(d)) {
            std::vector<std::pair<std::size_t, int>> col;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f;
                f.reserve(s.size() - 1);
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i)
                        f.push_back(s[j]);
                col.emplace_back(k.index_of(f), i % 2 == 0 ? 1 : -1);
            }
            std::sort(col.begin(), col.end());
            m.columns.push_back(std::move(col));
        }
    }
    // d_{k-1} d_k = 0 over the integers.
    for (int d = 2; d <= k.dim(); ++d) {
        const auto& hi = out.boundary[static_cast<std::size_t>(d)];
        const auto& lo = out.boundary[static_cast<std::size_t>(d - 1)];
        for (const auto& col : hi.columns) {
            std::map<std::size_t, long long> acc;
            for (auto [r, v] : col)
                for (auto [r2, v2] : lo.columns[r])
                    acc[r2] += static_cast<long long>(v) * v2;
            for (const auto& [r2, v] : acc)
                check_internal(v == 0, "boundary of a boundary is nonzero");
        }
    }
    return out;
}

std::vector<BigInt> smith_invariants(const std::vector<std::vector<BigInt>>& dense)
{
    auto a = dense;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;

    auto find_min = [&](std::size_t t, std::size_t& pr, std::size_t& pc) {
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0)
                    continue;
                BigInt v = abs(a[i][j]);
                if (!found || v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                    found = true;
                    if (best == 1)
                        return true;
                }
            }
        }
        return found;
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_min(t, pr, pc))
            break;
        std::swap(a[t], a[pr]);
        if (pc != t)
            for (auto& row : a)
                std::swap(row[t], row[pc]);

        for (;;) {
            bool dirty = false;
            // Clear column t.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    if (a[t][j] != 0)
                        a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    dirty = true;
            }
            // Clear row t.
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    if (a[i][t] != 0)
                        a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    dirty = true;
            }
            if (dirty) {
                // A smaller remainder exists in row or column t; pivot on it.
                std::size_t br = t, bc = t;
                BigInt best = abs(a[t][t]);
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < best) {
                        best = abs(a[i][t]);
                        br = i;
                        bc = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < best) {
                        best = abs(a[t][j]);
                        br = t;
                        bc = j;
                    }
                std::swap(a[t], a[br]);
                if (bc != t)
                    for (auto& row : a)
                        std::swap(row[t], row[bc]);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            if (abs(a[t][t]) == 1)
                break;
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj)
                            a[t][jj] += a[i][jj];
                        fixed = true;
                        break;
                    }
                }
            }
            if (!fixed)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

std::vector<BigInt> smith_invariants(const SparseIntMatrix& m)
{
    std::vector<std::vector<BigInt>> dense(m.rows, std::vector<BigInt>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (auto [r, v] : m.columns[c])
            dense[r][c] = v;
    return smith_invariants(dense);
}

std::vector<std::size_t> betti_z2(const SimplicialComplex& k)
{
    const int top = k.dim();
    if (top < 0)
        return {};
    auto bm = boundary_matrices(k);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d)
        ranks[static_cast<std::size_t>(d)] = gf2::rank(bm[d].mod2());
    std::vector<std::size_t> b;
    for (int d = 0; d <= top; ++d)
        b.push_back(k.count(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1]);
    return b;
}

std::vector<std::size_t> reduced_betti_z2(const SimplicialComplex& k)
{
    auto b = betti_z2(k);
    if (!b.empty())
        b[0] -= 1;
    return b;
}

std::size_t HomologySummary::reduced_free_rank(int k) const
{
    if (k < 0 || k > top())
        return 0;
    std::size_t r = degrees[static_cast<std::size_t>(k)].free_rank;
    return k == 0 ? r - 1 : r;
}

bool HomologySummary::torsion_free(int k) const
{
    if (k < 0 || k > top())
        return true;
    return degrees[static_cast<std::size_t>(k)].torsion.empty();
}

bool HomologySummary::reduced_vanishes(int k) const
{
    return reduced_free_rank(k) == 0 && torsion_free(k);
}

HomologySummary integral_homology(const SimplicialComplex& k)
{
    HomologySummary h;
    const int top = k.dim();
    if (top < 0)
        return h;
    auto bm = boundary_matrices(k);
    const auto nd = static_cast<std::size_t>(top);
    std::vector<std::size_t> ranks(nd + 2, 0);
    std::vector<std::vector<BigInt>> torsion(nd + 1);
    for (int d = 1; d <= top; ++d) {
        auto inv = smith_invariants(bm[d]);
        ranks[static_cast<std::size_t>(d)] = inv.size();
        for (const auto& x : inv)
            if (x > 1)
                torsion[static_cast<std::size_t>(d) - 1].push_back(x);
    }
    auto b2 = betti_z2(k);
    h.degrees.resize(nd + 1);
    for (std::size_t d = 0; d <= nd; ++d) {
        auto& dh = h.degrees[d];
        dh.free_rank = k.count(static_cast<int>(d)) - ranks[d] - ranks[d + 1];
        dh.torsion = torsion[d];
        dh.betti_z2 = b2[d];
    }
    // Universal coefficients: b_k(Z/2) = rank H_k + #even torsion in H_k and H_{k-1}.
    for (std::size_t d = 0; d <= nd; ++d) {
        std::size_t expect = h.degrees[d].free_rank;
        for (const auto& t : h.degrees[d].torsion)
            if (t % 2 == 0)
                ++expect;
        if (d > 0)
            for (const auto& t : h.degrees[d - 1].torsion)
                if (t % 2 == 0)
                    ++expect;
        check_internal(expect == h.degrees[d].betti_z2,
                       "universal coefficient check failed in degree " + std::to_string(d));
    }
    return h;
}

std::string to_string(EdceStatus s)
{
    switch (s) {
    case EdceStatus::Edce:
        return "EDCE";
    case EdceStatus::NotEdce:
        return "NotEDCE";
    case EdceStatus::CriteriaMetDim2Caveat:
        return "CriteriaMetDim2Caveat";
    }
    return "?";
}

EdceVerdict edce_verdict(int dim, const HomologySummary& h)
{
    EdceVerdict v;
    if (dim < 0) {
        v.status = EdceStatus::NotEdce;
        v.witness = "empty complex";
        return v;
    }
    const bool top_zero = h.reduced_vanishes(dim);
    const bool below_free = h.torsion_free(dim - 1);
    if (!top_zero) {
        v.status = EdceStatus::NotEdce;
        v.witness = "H_" + std::to_string(dim) + " != 0";
        return v;
    }
    if (!below_free) {
        v.status = EdceStatus::NotEdce;
        v.witness = "H_" + std::to_string(dim - 1) + " has torsion";
        return v;
    }
    v.status = dim == 2 ? EdceStatus::CriteriaMetDim2Caveat : EdceStatus::Edce;
    return v;
}

EdceVerdict edce_verdict(const SimplicialComplex& k)
{
    return edce_verdict(k.dim(), integral_homology(k));
}

std::optional<std::vector<Simplex>> find_z2_cycle(const SimplicialComplex& k, int degree)
{
    require(degree >= 0, "find_z2_cycle: negative degree");
    if (degree > k.dim())
        return std::nullopt;
    const std::size_t n = k.count(degree);
    gf2::Matrix dk;
    if (degree == 0) {
        // Augmentation map, for reduced homology.
        dk = gf2::Matrix(1, n);
        for (std::size_t i = 0; i < n; ++i)
            dk.data[0].set(i);
    } else {
        auto bm = boundary_matrices(k);
        dk = bm[degree].mod2();
    }
    auto kernel = gf2::kernel_basis(dk);

    gf2::EchelonBasis image(n);
    if (degree + 1 <= k.dim()) {
        auto bm = boundary_matrices(k);
        auto up = bm[degree + 1].mod2().transpose();
        for (auto& row : up.data)
            image.insert(row);
    }
    for (const auto& z : kernel) {
        if (image.contains(z))
            continue;
        std::vector<Simplex> support;
        for (auto i : z.support())
            support.push_back(k.faces(degree)[i]);
        return support;
    }
    return std::nullopt;
}

std::vector<Simplex> z2_boundary(const std::vector<Simplex>& chain)
{
    std::map<Simplex, bool> parity;
    for (const auto& s : chain) {
        if (s.size() < 2)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i)
                    f.push_back(s[j]);
            parity[f] = !parity[f];
        }
    }
    std::vector<Simplex> out;
    for (const auto& [f, odd] : parity)
        if (odd)
            out.push_back(f);
    return out;
}

}  // namespace actdim
