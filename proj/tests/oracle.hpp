#pragma once

// Dense GMP matrices, used as an independent check on the sparse kernels.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "hcc/linalg.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>; // [row][col]

inline Dense dense(const hcc::LinMap& f)
{
    Dense d(f.rows(), std::vector<mpq_class>(f.cols(), 0));
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (const auto& [i, c] : f.column(j))
            d[i][j] = c.to_mpq();
    return d;
}

inline Dense multiply(const Dense& a, const Dense& b)
{
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Dense r(n, std::vector<mpq_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    r[i][j] += a[i][l] * b[l][j];
    return r;
}

/// Rank by plain Gaussian elimination.
inline std::size_t rank(Dense a)
{
    std::size_t r = 0, rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a[i][c] != 0) {
                mpq_class f = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] -= f * a[r][j];
            }
        ++r;
    }
    return r;
}

inline std::size_t rank_of_rows(const std::vector<hcc::SparseVec>& rows, std::size_t n)
{
    Dense d;
    for (const auto& v : rows) {
        std::vector<mpq_class> r(n, 0);
        for (const auto& [i, c] : v)
            r[i] = c.to_mpq();
        d.push_back(r);
    }
    return rank(d);
}

/// Random sparse matrix with small rational entries.
inline hcc::LinMap random_map(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.4)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    std::vector<hcc::SparseVec> c(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<hcc::SparseVec::Entry> e;
        for (std::size_t i = 0; i < rows; ++i)
            if (u(rng) < density)
                e.emplace_back(i, hcc::Scalar::fraction(num(rng), den(rng)));
        c[j] = hcc::SparseVec::from_entries(std::move(e));
    }
    return hcc::LinMap::from_columns(hcc::Space::numbered(cols, "e"), hcc::Space::numbered(rows, "f"), c);
}

} // namespace oracle
