/**
 * Dense linear algebra over GF(2).
 *
 * Everything here is deterministic: pivots are always chosen as the lowest
 * available index, so kernels and echelon bases come out in a canonical
 * order that downstream code (cycle extraction, certificates) relies on.
 */
#ifndef ACTDIM_GF2_HPP
#define ACTDIM_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace actdim::gf2 {

class BitVec
{
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v = true)
    {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    BitVec& operator^=(const BitVec& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }
    bool any() const;
    std::size_t popcount() const;
    /// Lowest set index, or size() when zero.
    std::size_t first() const;
    bool dot(const BitVec& o) const;
    std::vector<std::size_t> support() const;

    friend bool operator==(const BitVec& a, const BitVec& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Matrix stored as rows.
struct Matrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BitVec> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r, BitVec(c)) {}
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<std::size_t>>& columns);

    Matrix transpose() const;
    BitVec apply(const BitVec& x) const;
};

std::size_t rank(Matrix m);

/// Basis of {x : A x = 0}, one vector per free column, in increasing order
/// of the free column index; each vector has its free column as lowest
/// non-pivot entry. Deterministic.
std::vector<BitVec> kernel_basis(const Matrix& a);

/// Some x with A x = b, or nullopt. Free variables are set to zero.
std::optional<BitVec> solve(const Matrix& a, const BitVec& b);

/**
 * Incrementally built row-echelon basis of a subspace; supports reduction
 * and membership tests.
 */
class EchelonBasis
{
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
    /// Returns true if v was independent of the current span.
    bool insert(BitVec v);
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return !reduce(v).any(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t dim_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace actdim::gf2

#endif
