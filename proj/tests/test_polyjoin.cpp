#include <random>

#include <catch_amalgamated.hpp>

#include "actdim/chains.hpp"
#include "actdim/polyjoin.hpp"
#include "fixtures.hpp"

using namespace actdim;

namespace {

using FVec = std::vector<std::size_t>;

std::vector<SimplicialComplex> point_factors(const SimplicialComplex& l)
{
    std::vector<SimplicialComplex> f;
    for (const auto& id : l.labels())
        f.push_back(SimplicialComplex::from_facets({id + "'"}, {}));
    return f;
}

std::vector<SimplicialComplex> s0_factors(const SimplicialComplex& l)
{
    std::vector<SimplicialComplex> f;
    for (const auto& id : l.labels())
        f.push_back(SimplicialComplex::from_facets({id + "+", id + "-"}, {}));
    return f;
}

bool is_sphere_z2(const SimplicialComplex& k, int dim)
{
    auto b = betti_z2(k);
    if (k.dim() != dim)
        return false;
    for (int i = 0; i <= dim; ++i) {
        const std::size_t expect = (dim == 0) ? (i == 0 ? 2 : 0) : (i == 0 || i == dim ? 1 : 0);
        if (b[static_cast<std::size_t>(i)] != expect)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("polyhedral join")
{
    auto pent = fixtures::pentagon();
    auto same = polyhedral_join(pent, point_factors(pent));
    CHECK(same.f_vector() == pent.f_vector());
    CHECK(same.facets() == pent.facets());

    CHECK(polyhedral_join(pent, s0_factors(pent)).f_vector() == FVec{10, 20});

    // Over a single simplex the polyhedral join is the plain join.
    auto tri = fixtures::simplex(2);
    auto f = s0_factors(tri);
    CHECK(polyhedral_join(tri, f) == join(join(f[0], f[1]), f[2]));

    auto bad = point_factors(pent);
    bad[1] = SimplicialComplex();
    CHECK_THROWS_AS(polyhedral_join(pent, bad), InputError);
}

TEST_CASE("octahedralization")
{
    auto pent = fixtures::pentagon();
    auto o1 = octahedralization(pent, 1);
    CHECK(o1.complex.num_vertices() == 10);
    CHECK(o1.complex.dim() == 1);
    CHECK(o1.delta == 1);

    auto o2 = octahedralization(pent, 2);
    CHECK(o2.complex.num_vertices() == 15);
    CHECK(o2.complex.dim() == 3);
    CHECK(o2.delta == 3);

    for (int d = 0; d <= 2; ++d)
        for (int m = 1; m <= 3; ++m) {
            auto o = octahedralization(fixtures::simplex(d), m);
            const int dim = m * (d + 1) - 1;
            CHECK(o.complex.dim() == dim);
            CHECK(o.complex.euler_characteristic() == 1 + (dim % 2 == 0 ? 1 : -1));
            CHECK(is_sphere_z2(o.complex, dim));
        }

    CHECK_THROWS_AS(octahedralization(pent, 0), InputError);
}

TEST_CASE("projection maps simplices onto simplices; fibres over simplices are spheres")
{
    std::mt19937 rng(61);
    for (int trial = 0; trial < 6; ++trial) {
        auto l = fixtures::random_flag(rng, 6, 0.5);
        for (int m = 1; m <= 2; ++m) {
            auto o = octahedralization(l, m);
            for (int d = 0; d <= o.complex.dim(); ++d)
                for (const auto& s : o.complex.faces(d))
                    CHECK(l.contains(o.project(s)));
            for (int d = 0; d <= l.dim(); ++d)
                for (const auto& sigma : l.faces(d)) {
                    std::vector<Vertex> w;
                    for (Vertex v = 0; v < static_cast<Vertex>(o.vertices.size()); ++v)
                        if (std::binary_search(sigma.begin(), sigma.end(), o.project(v)))
                            w.push_back(v);
                    CHECK(is_sphere_z2(full_subcomplex(o.complex, w), m * (d + 1) - 1));
                }
        }
    }
}

TEST_CASE("O_1 of a flag complex is flag")
{
    std::mt19937 rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        auto l = fixtures::random_flag(rng, 7, 0.45);
        CHECK(is_flag(octahedralization(l, 1).complex));
    }
}

TEST_CASE("doubled complex")
{
    auto pent = fixtures::pentagon();
    auto cycle = pent.faces(1);
    const Simplex delta = {0, 1};

    auto d1 = doubled_complex(pent, 1, cycle, delta);
    CHECK(d1.complex.num_vertices() == 7);
    CHECK(d1.d == 1);
    CHECK(d1.delta == 1);

    auto d2 = doubled_complex(pent, 2, cycle, delta);
    CHECK(d2.complex.num_vertices() == 9);
    CHECK(d2.delta == 3);

    // Round trip: it is a full subcomplex of O_mL.
    for (const auto* d : {&d1, &d2}) {
        auto o = octahedralization(pent, d->m);
        CHECK(full_subcomplex(o.complex, d->complex.labels()) == d->complex);
        CHECK(octa_from_parts(pent, d->m, d->complex).complex == d->complex);
    }

    CHECK_THROWS_AS(doubled_complex(pent, 1, cycle, {0, 2}), InputError);
    auto broken = cycle;
    broken.pop_back();
    CHECK_THROWS_AS(doubled_complex(pent, 1, broken, delta), InputError);
    CHECK_THROWS_AS(doubled_complex(fixtures::simplex_boundary(2), 1, fixtures::simplex_boundary(2).faces(1), {0, 1}),
                    InputError);
}

TEST_CASE("octa_from_parts rejects foreign complexes")
{
    auto pent = fixtures::pentagon();
    auto o = octahedralization(pent, 1);
    CHECK(octa_from_parts(pent, 1, o.complex).complex == o.complex);
    CHECK_THROWS_AS(octa_from_parts(pent, 2, o.complex), InputError);
    CHECK_THROWS_AS(octa_from_parts(pent, 1, pent), InputError);
}
