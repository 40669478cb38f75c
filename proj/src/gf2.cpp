#include "actdim/gf2.hpp"

#include <bit>

#include "actdim/errors.hpp"

namespace actdim::gf2 {

bool BitVec::any() const
{
    for (auto w : words_)
        if (w)
            return true;
    return false;
}

std::size_t BitVec::popcount() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVec::first() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return n_;
}

bool BitVec::dot(const BitVec& o) const
{
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVec::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t x = words_[w];
        while (x) {
            out.push_back((w << 6) + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<std::size_t>>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r : columns[c])
            m.data[r].flip(c);
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c : data[r].support())
            t.data[c].set(r);
    return t;
}

BitVec Matrix::apply(const BitVec& x) const
{
    check_internal(x.size() == cols, "gf2: dimension mismatch in apply");
    BitVec y(rows);
    for (std::size_t r = 0; r < rows; ++r)
        if (data[r].dot(x))
            y.set(r);
    return y;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && !m.data[p].get(col))
            ++p;
        if (p == m.rows)
            continue;
        std::swap(m.data[row], m.data[p]);
        for (std::size_t r = 0; r < m.rows; ++r)
            if (r != row && m.data[r].get(col))
                m.data[r] ^= m.data[row];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m)
{
    // Forward elimination is enough for the rank.
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && !m.data[p].get(col))
            ++p;
        if (p == m.rows)
            continue;
        std::swap(m.data[row], m.data[p]);
        for (std::size_t r = row + 1; r < m.rows; ++r)
            if (m.data[r].get(col))
                m.data[r] ^= m.data[row];
        ++row;
    }
    return row;
}

std::vector<BitVec> kernel_basis(const Matrix& a)
{
    Matrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<BitVec> basis;
    for (std::size_t free = 0; free < a.cols; ++free) {
        if (is_pivot[free])
            continue;
        BitVec x(a.cols);
        x.set(free);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (m.data[r].get(free))
                x.set(pivots[r]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<BitVec> solve(const Matrix& a, const BitVec& b)
{
    check_internal(b.size() == a.rows, "gf2: dimension mismatch in solve");
    Matrix aug(a.rows, a.cols + 1);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c : a.data[r].support())
            aug.data[r].set(c);
        if (b.get(r))
            aug.data[r].set(a.cols);
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols)
        return std::nullopt;
    BitVec x(a.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (aug.data[r].get(a.cols))
            x.set(pivots[r]);
    return x;
}

BitVec EchelonBasis::reduce(BitVec v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool EchelonBasis::insert(BitVec v)
{
    check_internal(v.size() == dim_, "gf2: dimension mismatch in echelon insert");
    v = reduce(std::move(v));
    if (!v.any())
        return false;
    const std::size_t p = v.first();
    // Keep rows fully reduced against the new pivot so reduce() stays one pass.
    for (auto& r : rows_)
        if (r.get(p))
            r ^= v;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace actdim::gf2
