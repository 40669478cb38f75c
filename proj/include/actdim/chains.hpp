/**
 * Chain-complex linear algebra for simplicial complexes: signed boundary
 * matrices, GF(2) Betti numbers, integral homology by Smith normal form,
 * the homological EDCE criterion and GF(2) cycle extraction.
 */
#ifndef ACTDIM_CHAINS_HPP
#define ACTDIM_CHAINS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "actdim/gf2.hpp"
#include "actdim/scomplex.hpp"

namespace actdim {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix stored by columns: (row, coefficient) pairs.
struct SparseIntMatrix
{
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;

    std::size_t cols() const { return columns.size(); }
    gf2::Matrix mod2() const;
};

/**
 * boundary[k] maps k-simplices to (k-1)-simplices for k >= 1 (index 0 is an
 * empty placeholder). Signs follow the canonical vertex order: dropping the
 * i-th vertex contributes (-1)^i.
 */
struct BoundaryMatrices
{
    std::vector<SparseIntMatrix> boundary;

    const SparseIntMatrix& operator[](int k) const { return boundary.at(static_cast<std::size_t>(k)); }
    int top() const { return static_cast<int>(boundary.size()) - 1; }
};

/// Throws InternalError if some composite boundary is nonzero.
BoundaryMatrices boundary_matrices(const SimplicialComplex& k);

/// Invariant factors (all nonzero diagonal entries) of the Smith normal form,
/// in divisibility order. Exact big-integer arithmetic.
std::vector<BigInt> smith_invariants(const std::vector<std::vector<BigInt>>& dense);
std::vector<BigInt> smith_invariants(const SparseIntMatrix& m);

/// Unreduced GF(2) Betti numbers, one per degree 0..dim.
std::vector<std::size_t> betti_z2(const SimplicialComplex& k);
/// Reduced variant (b0 decreased by one for a nonempty complex).
std::vector<std::size_t> reduced_betti_z2(const SimplicialComplex& k);

struct DegreeHomology
{
    std::size_t betti_z2 = 0;
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  ///< invariant factors > 1
};

/// Unreduced homology per degree 0..dim. The universal-coefficient relation
/// between the GF(2) and integral data is checked on construction.
struct HomologySummary
{
    std::vector<DegreeHomology> degrees;

    int top() const { return static_cast<int>(degrees.size()) - 1; }
    /// Reduced free rank; degree outside range counts as zero.
    std::size_t reduced_free_rank(int k) const;
    bool torsion_free(int k) const;
    /// True iff reduced H_k(K; Z) = 0.
    bool reduced_vanishes(int k) const;
};

HomologySummary integral_homology(const SimplicialComplex& k);

enum class EdceStatus { Edce, NotEdce, CriteriaMetDim2Caveat };

struct EdceVerdict
{
    EdceStatus status = EdceStatus::NotEdce;
    /// Empty when both homological conditions hold.
    std::string witness;
};

std::string to_string(EdceStatus s);

/**
 * Homological EDCE test on reduced integral homology: top homology vanishes
 * and the next one down is torsion-free. In dimension 2 a positive answer is
 * never given, because the criterion only yields an acyclic thickening there.
 */
EdceVerdict edce_verdict(const SimplicialComplex& k);
EdceVerdict edce_verdict(int dim, const HomologySummary& h);

/**
 * Support of a GF(2) k-cycle that is not a boundary (reduced homology for
 * k = 0), taken as the first kernel-basis vector outside the boundary space.
 */
std::optional<std::vector<Simplex>> find_z2_cycle(const SimplicialComplex& k, int degree);

/// Mod-2 boundary of a set of k-simplices, as the set of (k-1)-faces hit an
/// odd number of times.
std::vector<Simplex> z2_boundary(const std::vector<Simplex>& chain);

}  // namespace actdim

#endif
