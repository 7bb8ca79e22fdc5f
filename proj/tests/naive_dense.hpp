// Test-only dense GF(2) linear algebra and a dense recomputation of the
// Euler-power index, kept independent of the bit-packed implementation.
#ifndef EMBOBS_TESTS_NAIVE_DENSE_HPP
#define EMBOBS_TESTS_NAIVE_DENSE_HPP

#include "embobs/deleted.hpp"

#include <cstdint>
#include <vector>

namespace naive {

using Mat = std::vector<std::vector<std::uint8_t>>;
using Vec = std::vector<std::uint8_t>;

inline bool solvable(Mat a, Vec b)
{
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && !a[sel][col])
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[sel], a[pivot_row]);
        std::swap(b[sel], b[pivot_row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || !a[r][col])
                continue;
            for (std::size_t c2 = 0; c2 < cols; ++c2)
                a[r][c2] ^= a[pivot_row][c2];
            b[r] ^= b[pivot_row];
        }
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows; ++r)
        if (b[r])
            return false;
    return true;
}

inline std::size_t rank(Mat a)
{
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && !a[sel][col])
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[sel], a[pivot_row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || !a[r][col])
                continue;
            for (std::size_t c2 = 0; c2 < cols; ++c2)
                a[r][c2] ^= a[pivot_row][c2];
        }
        ++pivot_row;
    }
    return pivot_row;
}

// Re-runs the connecting zig-zag with dense vectors and naive elimination.
inline int z2_index_dense(const embobs::deleted::QuotientComplex& y)
{
    using embobs::deleted::QuotientComplex;
    const auto& x = y.pair_complex();

    if (y.orbit_count(0) == 0)
        return -1;

    auto coboundary_test = [&](int degree, const Vec& c) {
        // c is a coboundary iff delta^T u = c is solvable over the orbit
        // (degree-1)-cochains.
        if (degree == 0) {
            for (auto v : c)
                if (v)
                    return false;
            return true;
        }
        std::size_t rows = y.orbit_count(degree), cols = y.orbit_count(degree - 1);
        Mat delta(rows, Vec(cols, 0));
        for (std::size_t o = 0; o < y.orbit_count(degree); ++o) {
            std::size_t rep = y.rep_x_index(degree, o);
            for (auto f : x.faces(degree, rep))
                delta[o][y.orbit_of(degree - 1, f)] ^= 1;
        }
        return solvable(std::move(delta), c);
    };

    Vec c(y.orbit_count(0), 1);
    int index = -1;
    for (int m = 0;; ++m) {
        if (coboundary_test(m, c))
            break;
        index = m;
        if (m == y.max_degree())
            break;
        // lift to canonical representatives, coboundary upstairs, project
        Vec u(x.cell_count(m), 0);
        for (std::size_t i = 0; i < u.size(); ++i)
            if (y.is_canonical(m, i))
                u[i] = c[y.orbit_of(m, i)];
        Vec du(x.cell_count(m + 1), 0);
        for (std::size_t e = 0; e < du.size(); ++e)
            for (auto f : x.faces(m + 1, e))
                du[e] ^= u[f];
        Vec next(y.orbit_count(m + 1), 0);
        for (std::size_t o = 0; o < next.size(); ++o)
            next[o] = du[y.rep_x_index(m + 1, o)];
        c = std::move(next);
    }
    return index;
}

} // namespace naive

#endif
