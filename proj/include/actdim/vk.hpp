/**
 * The simplicial 2-point configuration space of a complex, the van Kampen
 * cocycle realized through the moment curve, the Omega cycle of a doubled
 * complex, and GF(2) coboundary solving.
 */
#ifndef ACTDIM_VK_HPP
#define ACTDIM_VK_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "actdim/gf2.hpp"
#include "actdim/polyjoin.hpp"
#include "actdim/scomplex.hpp"

namespace actdim {

/// Unordered pair of disjoint nonempty simplices, stored with first < second
/// lexicographically.
struct ConfigCell
{
    Simplex first;
    Simplex second;

    int dim() const { return static_cast<int>(first.size() + second.size()) - 2; }
    static ConfigCell make(Simplex a, Simplex b);

    friend bool operator==(const ConfigCell&, const ConfigCell&) = default;
    friend auto operator<=>(const ConfigCell&, const ConfigCell&) = default;
};

/**
 * Cells of C(K) grouped by dimension (each group sorted) with the mod-2
 * boundary. Keeps a copy of K so that cells can be printed and transported.
 */
class ConfigComplex
{
public:
    explicit ConfigComplex(SimplicialComplex k);

    const SimplicialComplex& base() const { return k_; }
    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    /// Cells of dimension n; empty outside 0..dim().
    const std::vector<ConfigCell>& cells(int n) const;
    std::size_t count(int n) const { return cells(n).size(); }
    std::optional<std::size_t> find(const ConfigCell& c) const;

    /// Indices of the (n-1)-cells in the boundary of cell i of dimension n.
    std::vector<std::size_t> boundary_of(int n, std::size_t i) const;
    /// Boundary map C_n -> C_{n-1} over GF(2) (rows = (n-1)-cells).
    gf2::Matrix boundary_matrix(int n) const;

    std::string cell_label(const ConfigCell& c) const;

private:
    SimplicialComplex k_;
    std::vector<std::vector<ConfigCell>> cells_;
    std::vector<std::map<ConfigCell, std::size_t>> index_;
};

/// Total order on the vertices of a complex, as a rank per vertex.
struct VertexOrdering
{
    std::vector<int> rank;

    static VertexOrdering identity(std::size_t n);
    /// `sequence` lists every vertex exactly once, smallest first.
    static VertexOrdering from_sequence(const std::vector<Vertex>& sequence, std::size_t n);
    std::vector<Vertex> sequence() const;
};

/// A GF(2) chain or cochain of one degree, as sorted cell indices into a
/// ConfigComplex. The two are distinct types so they cannot be mixed up.
struct Gf2Chain
{
    int degree = 0;
    std::vector<std::size_t> support;
};

struct Gf2Cochain
{
    int degree = 0;
    std::vector<std::size_t> support;
};

gf2::BitVec to_bits(const std::vector<std::size_t>& support, std::size_t n);
std::vector<std::size_t> from_bits(const gf2::BitVec& v);

/**
 * True iff the merged vertex sequence strictly alternates between sigma and
 * tau. Throws InputError when the simplices share a vertex.
 */
bool meshed(const Simplex& sigma, const Simplex& tau, const VertexOrdering& order);

/// The moment-curve van Kampen cocycle of degree n.
Gf2Cochain vk_cocycle(const ConfigComplex& cc, int n, const VertexOrdering& order);

/// Vanishes on the boundary of every (n+1)-cell.
bool is_cocycle(const ConfigComplex& cc, const Gf2Cochain& c);
bool is_cycle(const ConfigComplex& cc, const Gf2Chain& z);
/// Support of the boundary of a chain (degree - 1).
Gf2Chain chain_boundary(const ConfigComplex& cc, const Gf2Chain& z);

/// <c, z> over GF(2); throws InputError on a degree mismatch.
bool evaluate(const Gf2Cochain& c, const Gf2Chain& z);

/// x with delta x = c, or nullopt when c is not a coboundary. Throws
/// InputError if c is not a cocycle.
std::optional<Gf2Cochain> coboundary_certificate(const ConfigComplex& cc, const Gf2Cochain& c);

/**
 * Omega_m: all (d+delta)-cells {sigma, tau} of C(D) whose projections cover
 * Vert Delta. Delta is a simplex of the base complex. Throws InternalError,
 * naming a cell of the boundary, if the chain is not a cycle.
 */
Gf2Chain omega_chain(const OctaComplex& doubled, const ConfigComplex& cc, const Simplex& delta);

/// Push a chain along the label-preserving inclusion of one base complex into
/// another (e.g. C(D) into C(O_mL)).
Gf2Chain transport(const Gf2Chain& z, const ConfigComplex& from, const ConfigComplex& to);

/**
 * The ordering used for the nontrivial pairing: base vertices of Delta
 * first, then the other base vertices, in base order; labels ascending
 * within one base vertex.
 */
VertexOrdering canonical_octa_ordering(const OctaComplex& o, const Simplex& delta);

struct NontrivialByPairing
{
    Gf2Chain cycle;
};
struct NontrivialBySolver
{
    /// A cycle on which the cocycle evaluates to 1.
    Gf2Chain witness;
};
struct Trivial
{
    Gf2Cochain certificate;
};
using VkVerdict = std::variant<NontrivialByPairing, NontrivialBySolver, Trivial>;

/**
 * Decide whether vk^n is nonzero. A supplied cycle that pairs to 1 settles
 * it immediately; otherwise the coboundary equation is solved.
 */
VkVerdict vk_nontrivial(const ConfigComplex& cc, int n, const VertexOrdering& order,
                        const std::optional<Gf2Chain>& cycle = std::nullopt);

/// For all sigma, tau in C whose union contains Vert Delta: sigma cap tau is
/// contained in Delta.
bool star_condition(const SimplicialComplex& l, const std::vector<Simplex>& cycle, const Simplex& delta);

}  // namespace actdim

#endif
