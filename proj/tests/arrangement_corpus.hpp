// Hyperplane arrangements shared by the arrangement tests and the acceptance run.
#ifndef ACTDIM_TESTS_ARRANGEMENT_CORPUS_HPP
#define ACTDIM_TESTS_ARRANGEMENT_CORPUS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "actdim/arrangement.hpp"
#include "oracles.hpp"

namespace arrcorpus {

using actdim::Arrangement;
using actdim::Hyperplane;
using Dense = oracle::Dense;

/// Rows are (normal..., offset).
inline Arrangement arr(int n, const Dense& rows)
{
    std::vector<Hyperplane> hs;
    for (const auto& r : rows) {
        Hyperplane h;
        for (int i = 0; i < n; ++i)
            h.normal.emplace_back(r[static_cast<std::size_t>(i)]);
        h.offset = r.back();
        hs.push_back(std::move(h));
    }
    return Arrangement(n, std::move(hs));
}

inline Dense boolean_rows(int n)
{
    Dense rows;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> r(static_cast<std::size_t>(n) + 1, 0);
        r[static_cast<std::size_t>(i)] = 1;
        rows.push_back(r);
    }
    return rows;
}

inline const Dense generic3 = {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
inline const Dense concurrent3 = {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}};
inline const Dense fig5 = {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, 1}};
inline const Dense braid3 = {{1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, -1, 0}};
inline const Dense parallel = {{1, 0, 0}, {1, 0, 1}};
inline const Dense boolean_like = {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}};

struct Member
{
    int n;
    Dense rows;
};

/// Random rows with small coefficients (so that special position is common),
/// skipping zero normals and repeated hyperplanes.
inline Dense random_rows(std::mt19937& rng, int n, int count, bool central)
{
    std::uniform_int_distribution<int> coef(-1, 1);
    Dense rows;
    int guard = 0;
    while (static_cast<int>(rows.size()) < count && ++guard < 1000) {
        std::vector<long long> r;
        for (int i = 0; i < n; ++i)
            r.push_back(coef(rng));
        r.push_back(central ? 0 : coef(rng));
        if (std::all_of(r.begin(), r.end() - 1, [](long long x) { return x == 0; }))
            continue;
        bool dup = false;
        for (const auto& s : rows)
            if (oracle::rank_rational({s, r}) < 2)
                dup = true;
        if (!dup)
            rows.push_back(r);
    }
    return rows;
}

/// Named examples plus random arrangements in C^2 and C^3 with at most six
/// hyperplanes.
inline std::vector<Member> corpus()
{
    std::vector<Member> c = {{2, boolean_rows(2)}, {3, boolean_rows(3)}, {2, generic3}, {2, concurrent3},
                             {2, fig5},            {3, braid3},          {2, parallel}, {2, boolean_like}};
    std::mt19937 rng(2024);
    for (int t = 0; t < 16; ++t) {
        const int n = 2 + t % 2;
        c.push_back({n, random_rows(rng, n, 3 + t % 4, false)});
    }
    for (int t = 0; t < 6; ++t)
        c.push_back({3, random_rows(rng, 3, 3 + t % 4, true)});
    return c;
}

}  // namespace arrcorpus

#endif
