#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the Smith normal form engine.

#include "dh/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using dh::Integer;
using dh::IntMatrix;
using dh::IntVector;

// Fraction-free Gaussian elimination.
inline Integer determinant(IntMatrix a)
{
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Rank over the rationals.
inline std::size_t rational_rank(IntMatrix a)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(rank, p);
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0)
                continue;
            Integer f = a(i, c), g = a(rank, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) = a(i, j) * g - a(rank, j) * f;
        }
        ++rank;
    }
    return rank;
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n)
        return;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k)
{
    std::vector<std::vector<std::size_t>> rs, cs;
    combinations(a.rows(), k, rs);
    combinations(a.cols(), k, cs);
    Integer g = 0;
    for (const auto& r : rs)
        for (const auto& c : cs)
            g = gcd(g, determinant(a.select_rows(r).select_cols(c)));
    return g;
}

// Nonzero invariant factors via determinantal divisors.
inline IntVector invariant_factors(const IntMatrix& a)
{
    IntVector out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        Integer d = determinantal_divisor(a, k);
        if (d == 0)
            break;
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = dist(rng);
    return m;
}

}  // namespace oracle
