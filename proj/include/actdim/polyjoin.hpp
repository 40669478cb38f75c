/**
 * Polyhedral joins over a simplicial complex L, the octahedralization O_mL
 * (a copy of the sphere S^{m-1} = boundary of an m-simplex over every vertex
 * of L) and the doubled complex used to build the Omega cycle.
 */
#ifndef ACTDIM_POLYJOIN_HPP
#define ACTDIM_POLYJOIN_HPP

#include <vector>

#include "actdim/scomplex.hpp"

namespace actdim {

/// A vertex of O_mL: a base vertex of L and a sphere label in 0..m.
struct LabeledVertex
{
    Vertex base = 0;
    int label = 0;

    friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
    friend auto operator<=>(const LabeledVertex&, const LabeledVertex&) = default;
};

/**
 * O_mL, or a full subcomplex of it. Vertex i of `complex` is
 * `vertices[i]`; its identifier is "<base id>:<label>". Vertices are ordered
 * by base vertex first, then by label.
 *
 * `d` is the dimension of the base data the complex was built from (dim L
 * for a full octahedralization, the cycle dimension for a doubled complex)
 * and `delta` = m(d+1) - 1.
 */
struct OctaComplex
{
    SimplicialComplex base;
    SimplicialComplex complex;
    std::vector<LabeledVertex> vertices;
    int m = 1;
    int d = 0;
    int delta = 0;

    Vertex project(Vertex v) const { return vertices.at(static_cast<std::size_t>(v)).base; }
    /// Projection of a simplex: the sorted set of base vertices it covers.
    Simplex project(const Simplex& s) const;
    /// Vertex of `complex` over (base, label), if present.
    std::optional<Vertex> find(Vertex base, int label) const;
};

/// Identifier used for the labeled vertex (base, label).
std::string labeled_id(const SimplicialComplex& base, Vertex v, int label);

/**
 * Union over the simplices sigma of L of the joins of factors[v], v in sigma.
 * factors[v] belongs to vertex v of L; identifiers across factors must be
 * disjoint. Output vertices are listed factor by factor in base order.
 */
SimplicialComplex polyhedral_join(const SimplicialComplex& l, const std::vector<SimplicialComplex>& factors);

/// O_mL with every sphere triangulated as the boundary of an m-simplex.
OctaComplex octahedralization(const SimplicialComplex& l, int m);

/**
 * D_m^C(Delta): the full subcomplex of O_mL on Vert(C) x {0} together with
 * Vert(Delta) x {0..m}. C is the support of a GF(2) k-cycle of L (all
 * simplices of one dimension k), Delta one of its simplices; L must be flag.
 * The result carries d = k and delta = m(k+1) - 1.
 */
OctaComplex doubled_complex(const SimplicialComplex& l, int m, const std::vector<Simplex>& cycle,
                            const Simplex& delta);

/// Rebuild an OctaComplex from a stored complex with its base and m,
/// checking that the complex really is O_m(base) or a full subcomplex of it.
OctaComplex octa_from_parts(const SimplicialComplex& base, int m, const SimplicialComplex& complex);

}  // namespace actdim

#endif
