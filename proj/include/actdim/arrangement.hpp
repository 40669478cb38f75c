/**
 * Affine hyperplane arrangements with rational coefficients, read as
 * complexified real arrangements, and the combinatorics of their
 * intersection posets.
 *
 * A flat is identified by the set A_X of hyperplanes containing it; two
 * hyperplane subsets give the same flat exactly when their closures agree,
 * so the closure set doubles as the flat's key. Order is reverse inclusion
 * of subspaces: F < E iff F contains E iff A_F is a proper subset of A_E.
 */
#ifndef ACTDIM_ARRANGEMENT_HPP
#define ACTDIM_ARRANGEMENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "actdim/bounds.hpp"
#include "actdim/scomplex.hpp"

namespace actdim {

using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;

/// Accepts "p", "-p" and "p/q" with q != 0; anything else is an InputError.
Rational parse_rational(const std::string& s);
/// "p" for integers, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& q);

/// Rank over Q of a list of equal-length vectors.
int rational_rank(const std::vector<QVector>& vectors);

/**
 * Connected components of the linear matroid on `vectors`, each a sorted
 * list of indices, ordered by smallest member. Zero vectors are singleton
 * components.
 */
std::vector<std::vector<std::size_t>> matroid_components(const std::vector<QVector>& vectors);

/// The hyperplane a.x = b.
struct Hyperplane
{
    QVector normal;
    Rational offset;
};

class Arrangement
{
public:
    Arrangement() = default;
    /// Throws InputError for zero normals, wrong lengths, or two equations
    /// with the same solution set.
    Arrangement(int n, std::vector<Hyperplane> hyperplanes);

    int dim() const { return n_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_.at(i); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    /// Product arrangement in C^(n1+n2); hyperplanes of `a` come first.
    static Arrangement product(const Arrangement& a, const Arrangement& b);

private:
    int n_ = 0;
    std::vector<Hyperplane> hyperplanes_;
};

/// Sorted hyperplane indices.
using HyperplaneSet = std::vector<std::size_t>;

struct Flat
{
    QVector basepoint;
    /// Basis of the direction space.
    std::vector<QVector> basis;
    int codim = 0;
    /// Every hyperplane containing the flat.
    HyperplaneSet hyperplanes;

    /// "[0,2,5]", the indices of A_X; "[]" for the ambient space.
    std::string label() const;
};

class FlatPoset
{
public:
    explicit FlatPoset(Arrangement a);

    const Arrangement& arrangement() const { return arrangement_; }
    std::size_t size() const { return flats_.size(); }
    const Flat& operator[](std::size_t i) const { return flats_.at(i); }
    const std::vector<Flat>& flats() const { return flats_; }
    /// Always 0.
    std::size_t ambient() const { return 0; }

    /// Flat i < flat j (flat i strictly contains flat j).
    bool less(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> find(const HyperplaneSet& a) const;
    /// Flat equal to the subspace intersection, or none when it is empty.
    std::optional<std::size_t> intersection(std::size_t i, std::size_t j) const;

    int rank() const;
    /// Flats other than the ambient space, with the induced order.
    Poset proper_part() const;

private:
    Arrangement arrangement_;
    std::vector<Flat> flats_;
    std::map<HyperplaneSet, std::size_t> index_;
    std::vector<std::vector<std::optional<std::size_t>>> meet_;
};

/// Flats sorted by codimension, then by A_X; the ambient space comes first.
FlatPoset intersection_poset(const Arrangement& a);

struct ArrangementProperties
{
    int rank = 0;
    bool essential = false;
    bool central = false;
};

ArrangementProperties properties(const FlatPoset& q);

/// Finest product decomposition of a central arrangement.
std::vector<HyperplaneSet> irreducible_decomposition(const Arrangement& a);

/// Whether the central arrangement formed by the given hyperplanes (which
/// must share a point) is irreducible. The empty set is not.
bool is_irreducible_localization(const Arrangement& a, const HyperplaneSet& hs);

/// Indices of the proper flats with irreducible localization.
std::vector<std::size_t> set_of_irreducibles(const FlatPoset& q);

/// A flat X at which the building-set condition fails, if any.
std::optional<std::size_t> building_set_violation(const FlatPoset& q, const std::vector<std::size_t>& building);

/// Vertex i of `complex` is flat `building[i]`, labelled by Flat::label().
struct NestedComplex
{
    std::vector<std::size_t> building;
    SimplicialComplex complex;
    bool flag_completed = false;
};

/// Throws InputError naming the witness flat when `building` is not a
/// building set.
NestedComplex nested_complex(const FlatPoset& q, std::vector<std::size_t> building);
NestedComplex irreducible_complex(const FlatPoset& q);
NestedComplex flag_completion(const NestedComplex& nc);

struct MobiusData
{
    /// Indexed like the flats.
    std::vector<long long> mu;
    /// Coefficients of p_A(t), constant term first.
    std::vector<long long> poincare;
    long long beta = 0;
};

MobiusData mobius_poincare_beta(const FlatPoset& q);

/// Deconing along hyperplane `h` of a central arrangement; the identity
/// p_A = (1+t) p_dA is checked before returning.
Arrangement decone(const Arrangement& a, std::size_t h);

/// Irreducible proper flats of codimension 1, ..., n, each strictly inside
/// the previous one; none when A is not essential or no such chain exists.
std::optional<std::vector<std::size_t>> complete_chain(const FlatPoset& q);

struct H1Images
{
    /// One 0/1 vector per flat, indexed by hyperplanes.
    std::vector<std::vector<int>> vectors;
    bool independent = false;
};

/// Throws InputError when a flat is not irreducible.
H1Images h1_images(const FlatPoset& q, const std::vector<std::size_t>& flats);

/**
 * Splitting A = A_1 x ... x A_k x A' with A_i irreducible central and A'
 * without central factors, read off the matroid of the cone.
 */
struct CentralFactorization
{
    std::vector<HyperplaneSet> central;
    HyperplaneSet rest;
};

CentralFactorization central_factors(const Arrangement& a);

struct ArrangementReport
{
    ArrangementProperties props;
    CentralFactorization factors;
    /// Central with a single factor.
    bool irreducible = false;
    std::optional<std::vector<std::size_t>> chain;
    int fiq_dim = -1;
    /// A facet of FIQ of dimension >= n when the asphericity flag is set:
    /// the flag cannot hold.
    std::optional<std::vector<std::size_t>> contradiction;
    BoundReport bounds;
};

ArrangementReport arrangement_actdim_report(const Arrangement& a, bool aspherical);

}  // namespace actdim

#endif
