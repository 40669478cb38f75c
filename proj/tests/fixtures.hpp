// Small named complexes shared by the test suites.
#ifndef ACTDIM_TESTS_FIXTURES_HPP
#define ACTDIM_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "actdim/scomplex.hpp"

namespace fixtures {

using actdim::Simplex;
using actdim::SimplicialComplex;

inline std::vector<std::string> numbered(int n, const std::string& prefix = "v")
{
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i)
        ids.push_back(prefix + std::to_string(i));
    return ids;
}

inline SimplicialComplex cycle_graph(int n)
{
    std::vector<Simplex> f;
    for (int i = 0; i < n; ++i)
        f.push_back({i, (i + 1) % n});
    return SimplicialComplex::from_index_facets(numbered(n), f);
}

inline SimplicialComplex pentagon() { return cycle_graph(5); }

inline SimplicialComplex path_graph(int n)
{
    std::vector<Simplex> f;
    for (int i = 0; i + 1 < n; ++i)
        f.push_back({i, i + 1});
    return SimplicialComplex::from_index_facets(numbered(n), f);
}

inline SimplicialComplex simplex(int d)
{
    Simplex s;
    for (int i = 0; i <= d; ++i)
        s.push_back(i);
    return SimplicialComplex::from_index_facets(numbered(d + 1), {s});
}

inline SimplicialComplex simplex_boundary(int d)
{
    std::vector<Simplex> f;
    for (int omit = 0; omit <= d; ++omit) {
        Simplex s;
        for (int i = 0; i <= d; ++i)
            if (i != omit)
                s.push_back(i);
        f.push_back(s);
    }
    return SimplicialComplex::from_index_facets(numbered(d + 1), f);
}

inline SimplicialComplex complete_graph(int n)
{
    std::vector<Simplex> f;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            f.push_back({i, j});
    return SimplicialComplex::from_index_facets(numbered(n), f);
}

inline SimplicialComplex k33()
{
    std::vector<Simplex> f;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            f.push_back({i, j});
    return SimplicialComplex::from_index_facets(numbered(6), f);
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2()
{
    std::vector<Simplex> f = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                              {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
    return SimplicialComplex::from_index_facets(numbered(6), f);
}

/// Moebius' 7-vertex torus.
inline SimplicialComplex torus7()
{
    std::vector<Simplex> f;
    for (int i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_index_facets(numbered(7), f);
}

/// Boundary of the octahedron; antipodal pairs are (0,1), (2,3), (4,5).
inline SimplicialComplex octahedron()
{
    std::vector<Simplex> f;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5})
                f.push_back({a, b, c});
    return SimplicialComplex::from_index_facets(numbered(6), f);
}

/// Suspension of the pentagon: a flag 2-sphere on 7 vertices.
inline SimplicialComplex suspended_pentagon()
{
    std::vector<Simplex> f;
    for (int i = 0; i < 5; ++i) {
        f.push_back({i, (i + 1) % 5, 5});
        f.push_back({i, (i + 1) % 5, 6});
    }
    return SimplicialComplex::from_index_facets(numbered(7), f);
}

/// Random complex: `facets` random subsets of size 1..max_size on n vertices.
inline SimplicialComplex random_complex(std::mt19937& rng, int n, int facets, int max_size)
{
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::vector<Simplex> f;
    for (int i = 0; i < facets; ++i) {
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            verts[static_cast<std::size_t>(v)] = v;
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(std::min(n, size_dist(rng))));
        f.push_back(verts);
    }
    return SimplicialComplex::from_index_facets(numbered(n), f);
}

/// Random flag complex: clique complex of a G(n, p) graph.
inline SimplicialComplex random_flag(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution edge(p);
    std::vector<std::vector<actdim::Vertex>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
    return actdim::clique_complex(numbered(n), adj);
}

}  // namespace fixtures

#endif
