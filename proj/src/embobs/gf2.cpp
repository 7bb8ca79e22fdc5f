#include "gf2.hpp"

#include <bit>
#include <stdexcept>

namespace embobs::gf2 {

void BitVector::xor_with(const BitVector& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("BitVector::xor_with: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] ^= o.w_[i];
}

bool BitVector::any() const
{
    for (auto w : w_)
        if (w)
            return true;
    return false;
}

std::size_t BitVector::popcount() const
{
    std::size_t c = 0;
    for (auto w : w_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::first_set() const
{
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
}

bool BitVector::dot(const BitVector& o) const
{
    if (o.n_ != n_)
        throw std::invalid_argument("BitVector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const
{
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitVector BitVector::from_string(const std::string& s)
{
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVector::from_string: expected '0'/'1'");
    }
    return v;
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitVector BitMatrix::apply(const BitVector& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("BitMatrix::apply: shape mismatch");
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        y.set(r, row_[r].dot(x));
    return y;
}

BitMatrix BitMatrix::multiply(const BitMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("BitMatrix::multiply: shape mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const BitVector& a = row_[r];
        for (std::size_t k = 0; k < cols_; ++k)
            if (a.get(k))
                out.row_[r].xor_with(o.row_[k]);
    }
    return out;
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                out.set(c, r, true);
    return out;
}

namespace {

struct Echelon {
    std::vector<BitVector> rows;          // reduced rows (RREF)
    std::vector<std::size_t> pivot_col;   // pivot column of rows[i]
};

// Reduced row echelon form; pivots chosen left to right, first available row.
Echelon rref(const BitMatrix& m)
{
    Echelon e;
    e.rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        e.rows.push_back(m.row(r));

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < e.rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < e.rows.size() && !e.rows[sel].get(col))
            ++sel;
        if (sel == e.rows.size())
            continue;
        std::swap(e.rows[pivot_row], e.rows[sel]);
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            if (r != pivot_row && e.rows[r].get(col))
                e.rows[r].xor_with(e.rows[pivot_row]);
        e.pivot_col.push_back(col);
        ++pivot_row;
    }
    e.rows.resize(e.pivot_col.size());
    return e;
}

} // namespace

std::size_t rank(const BitMatrix& m)
{
    return rref(m).pivot_col.size();
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("gf2::solve: rhs length must equal row count");

    // Eliminate on the augmented matrix [M | b].
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        aug.row(r) = BitVector(m.cols() + 1);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                aug.set(r, c, true);
        if (b.get(r))
            aug.set(r, m.cols(), true);
    }

    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && !aug.get(sel, col))
            ++sel;
        if (sel == m.rows())
            continue;
        std::swap(aug.row(pivot_row), aug.row(sel));
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != pivot_row && aug.get(r, col))
                aug.row(r).xor_with(aug.row(pivot_row));
        pivot_col.push_back(col);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < m.rows(); ++r)
        if (aug.get(r, m.cols()))
            return std::nullopt;

    // Free variables set to zero.
    BitVector x(m.cols());
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x.set(pivot_col[i], aug.get(i, m.cols()));
    return x;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m)
{
    Echelon e = rref(m);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_col)
        is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        BitVector v(m.cols());
        v.set(free_col, true);
        for (std::size_t i = 0; i < e.pivot_col.size(); ++i)
            if (e.rows[i].get(free_col))
                v.set(e.pivot_col[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace embobs::gf2
