/**
 * Finite abstract simplicial complexes and the basic constructions on them.
 *
 * Vertices are opaque string identifiers. Internally a vertex is its index
 * in the vertex list, and that index order is the canonical total order used
 * everywhere else (face enumeration, boundary orientation, configuration
 * cells). A simplex is a strictly increasing vector of vertex indices.
 */
#ifndef ACTDIM_SCOMPLEX_HPP
#define ACTDIM_SCOMPLEX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "actdim/errors.hpp"

namespace actdim {

using Vertex = int;
using Simplex = std::vector<Vertex>;

struct SimplexHash
{
    std::size_t operator()(const Simplex& s) const noexcept;
};

/** True if the sorted simplex `small` is a subset of the sorted simplex `big`. */
bool is_face_of(const Simplex& small, const Simplex& big);

/** Sorted intersection / union of two sorted simplices. */
Simplex simplex_intersection(const Simplex& a, const Simplex& b);
Simplex simplex_union(const Simplex& a, const Simplex& b);

/**
 * Immutable finite simplicial complex.
 *
 * Every listed vertex is a 0-simplex, so a vertex list with an empty facet
 * list is a discrete set of points. All nonempty faces are materialized at
 * construction and grouped by dimension, each group sorted lexicographically.
 */
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Build from string identifiers; throws InputError on unknown or
    /// duplicate vertices.
    static SimplicialComplex from_facets(std::vector<std::string> vertex_ids,
                                         const std::vector<std::vector<std::string>>& facets);

    /// Build from index-based simplices over the given labels. Simplices need
    /// not be sorted or maximal.
    static SimplicialComplex from_index_facets(std::vector<std::string> vertex_ids,
                                               const std::vector<Simplex>& facets);

    std::size_t num_vertices() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<Vertex> find_vertex(const std::string& id) const;
    Vertex vertex(const std::string& id) const;

    /// -1 for the void complex.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    bool empty() const { return labels_.empty(); }

    const std::vector<Simplex>& facets() const { return facets_; }
    /// All k-simplices in canonical order; empty vector when k is out of range.
    const std::vector<Simplex>& faces(int k) const;
    std::size_t count(int k) const { return faces(k).size(); }
    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

    bool contains(const Simplex& s) const;
    /// Position of a simplex inside faces(dim); throws InputError if absent.
    std::size_t index_of(const Simplex& s) const;
    std::optional<std::size_t> find_index(const Simplex& s) const;

    /// Translate a simplex given by identifiers into sorted index form.
    Simplex simplex_from_ids(const std::vector<std::string>& ids) const;
    std::vector<std::string> ids_of(const Simplex& s) const;

    /// Edges as adjacency lists (sorted).
    std::vector<std::vector<Vertex>> adjacency() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.labels_ == b.labels_ && a.faces_ == b.faces_;
    }

private:
    void build(const std::vector<Simplex>& generators);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> label_index_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> face_index_;
};

/**
 * Finite poset given by an explicit strict order relation. Used for the
 * face poset of a complex and for order complexes of intersection posets.
 */
struct Poset
{
    std::vector<std::string> labels;
    /// less[i][j] is true iff element i < element j.
    std::vector<std::vector<bool>> less;

    std::size_t size() const { return labels.size(); }
    /// Throws InputError if `less` is not a strict partial order.
    void validate() const;
};

/// Face poset of K. When `with_empty` is set, element 0 is the empty simplex
/// (labelled "{}"), the unique minimum.
struct SimplexPoset
{
    Poset poset;
    std::vector<Simplex> simplices;
    bool with_empty = false;
};

SimplexPoset simplex_poset(const SimplicialComplex& k, bool with_empty);

struct FlagResult
{
    bool is_flag = false;
    SimplicialComplex completion;
};

/// Clique complex of the 1-skeleton, together with whether K already equals it.
FlagResult flag_check_and_complete(const SimplicialComplex& k);
SimplicialComplex clique_complex(std::vector<std::string> labels,
                                 const std::vector<std::vector<Vertex>>& adjacency);
bool is_flag(const SimplicialComplex& k);

/// Every clique of the graph (nonempty), each sorted, in lexicographic order.
std::vector<Simplex> enumerate_cliques(const std::vector<std::vector<Vertex>>& adjacency);

/// Induced subcomplex on W. The result keeps the relative order of W in K.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& w);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<std::string>& w);

/// Link and closed star of a simplex. The link keeps only vertices of the link.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);

/// Cone with a new apex appended as the last vertex.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);

/// Join; vertex identifiers must be disjoint. Vertices of k1 come first.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Chains of the poset as simplices on its elements.
SimplicialComplex order_complex(const Poset& p);

/// Order complex of the face poset (without the empty simplex).
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Label of a simplex as "{a,b,c}".
std::string simplex_label(const SimplicialComplex& k, const Simplex& s);

}  // namespace actdim

#endif
