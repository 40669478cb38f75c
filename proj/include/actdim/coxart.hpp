/**
 * Coxeter systems, finite-type recognition, the nerve and its subdivision
 * L_odot, and action-dimension reports for Artin groups and graph products.
 *
 * Coxeter matrices use 0 for an infinite label, as in the input files.
 */
#ifndef ACTDIM_COXART_HPP
#define ACTDIM_COXART_HPP

#include <optional>
#include <string>
#include <vector>

#include "actdim/bounds.hpp"
#include "actdim/chains.hpp"
#include "actdim/scomplex.hpp"

namespace actdim {

/// Generator indices, sorted.
using GeneratorSet = std::vector<int>;

class CoxeterSystem
{
public:
    CoxeterSystem() = default;
    /// Throws InputError unless the matrix is square, symmetric, has 1 on the
    /// diagonal and labels >= 2 (or 0) elsewhere, and generators are distinct.
    CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> matrix);

    std::size_t size() const { return generators_.size(); }
    const std::vector<std::string>& generators() const { return generators_; }
    /// 0 encodes infinity.
    int m(int s, int t) const { return matrix_.at(static_cast<std::size_t>(s)).at(static_cast<std::size_t>(t)); }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }

    /// Right-angled system on a graph: 2 on edges, infinity otherwise.
    static CoxeterSystem right_angled(const SimplicialComplex& graph);

private:
    std::vector<std::string> generators_;
    std::vector<std::vector<int>> matrix_;
};

/// Connected components of the Coxeter diagram on T (edges where m != 2).
std::vector<GeneratorSet> diagram_components(const CoxeterSystem& w, const GeneratorSet& t);

/**
 * Finite type of a connected diagram ("A3", "B4", "D5", "E6", "F4", "H3",
 * "I2(5)", ...), or none when the parabolic subgroup is infinite.
 */
std::optional<std::string> finite_type(const CoxeterSystem& w, const GeneratorSet& component);

bool is_spherical(const CoxeterSystem& w, const GeneratorSet& t);

/// Components of a spherical T; throws InputError for non-spherical T.
std::vector<GeneratorSet> irreducible_components(const CoxeterSystem& w, const GeneratorSet& t);

/// Simplicial complex on the generators whose simplices are the spherical subsets.
SimplicialComplex nerve(const CoxeterSystem& w);

/// Vertex i of `complex` is the irreducible spherical subset `subsets[i]`.
struct SubdividedNerve
{
    std::vector<GeneratorSet> subsets;
    SimplicialComplex complex;
};

/**
 * Vertices: irreducible spherical subsets, ordered by size then
 * lexicographically. A vertex set spans a simplex iff its union is spherical
 * and every two members are nested or orthogonal (disjoint with all labels 2
 * between them). This simplex rule is provisional.
 */
SubdividedNerve l_odot(const CoxeterSystem& w);

/// Label of a generator set as "{s,t}".
std::string generator_label(const CoxeterSystem& w, const GeneratorSet& t);

struct ArtinReport
{
    int d = -1;
    bool spherical = false;
    /// The K(pi,1) hypothesis is in force: assumed by the caller or implied
    /// by a flag nerve.
    bool kpi1 = false;
    bool kpi1_from_flag = false;
    EdceVerdict edce;
    bool top_homology_nonzero = false;
    /// Irreducible factors, when spherical.
    std::vector<GeneratorSet> factors;
    std::size_t lodot_vertices = 0;
    BoundReport bounds;
};

ArtinReport artin_actdim_report(const CoxeterSystem& w, bool assume_kpi1);

struct VertexManifold
{
    int dim = 1;
    bool closed = true;
};

enum class EdceHint { Yes, No, Auto };

struct GraphProductReport
{
    int d = -1;
    /// All vertex manifolds closed of one dimension.
    std::optional<int> uniform_closed_dim;
    bool edce = false;
    bool top_homology_nonzero = false;
    BoundReport bounds;
};

/// Throws InputError when L is not flag, the data does not match the
/// vertices, a dimension is out of range, or an EDCE "yes" hint contradicts
/// H_d(L; Z/2) != 0.
GraphProductReport graph_product_actdim_report(const SimplicialComplex& l, const std::vector<VertexManifold>& data,
                                               EdceHint hint);

}  // namespace actdim

#endif
