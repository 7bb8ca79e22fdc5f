#ifndef EMBOBS_GF2_HPP
#define EMBOBS_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace embobs::gf2 {

// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v)
    {
        if (v)
            w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void xor_with(const BitVector& o);

    bool any() const;
    std::size_t popcount() const;

    // Index of the lowest set bit, or size() if none.
    std::size_t first_set() const;

    // Parity of the bitwise AND with another vector of the same length.
    bool dot(const BitVector& o) const;

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    std::string to_string() const;
    static BitVector from_string(const std::string& s);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-major bit-packed matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVector(cols))
    {
    }

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }

    BitVector& row(std::size_t r) { return row_[r]; }
    const BitVector& row(std::size_t r) const { return row_[r]; }

    // Matrix-vector product M x; x must have cols() entries.
    BitVector apply(const BitVector& x) const;

    BitMatrix multiply(const BitMatrix& o) const;
    BitMatrix transposed() const;

    bool operator==(const BitMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> row_;
};

// Rank by Gaussian elimination with deterministic left-to-right column pivoting.
std::size_t rank(const BitMatrix& m);

// Some x with M x = b, or nullopt when the system is inconsistent.
// Throws std::invalid_argument on a shape mismatch.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// Basis of the null space {x : M x = 0}; deterministic order (by free column).
std::vector<BitVector> kernel_basis(const BitMatrix& m);

} // namespace embobs::gf2

#endif
