#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dh {

/// Exhaustively checks the simplicial identities on an indexed simplicial
/// object truncated at max_dim. Simplices are indices 0..count(n)-1;
/// face(n, i, x) maps dimension n to n-1 and degeneracy(n, i, x) maps n to n+1.
/// Returns a description of every violation (empty when all hold).
template <class Count, class Face, class Degeneracy>
std::vector<std::string> simplicial_identity_violations(std::size_t max_dim, Count count, Face face,
                                                        Degeneracy degeneracy)
{
    std::vector<std::string> bad;
    auto report = [&](const char* what, std::size_t n, std::size_t i, std::size_t j, std::size_t x) {
        if (bad.size() < 20)
            bad.push_back(std::string(what) + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " x=" + std::to_string(x));
        else if (bad.size() == 20)
            bad.push_back("...");
    };

    for (std::size_t n = 0; n <= max_dim; ++n) {
        const std::size_t total = count(n);
        for (std::size_t x = 0; x < total; ++x) {
            // d_i d_j = d_{j-1} d_i for i < j
            if (n >= 2)
                for (std::size_t j = 1; j <= n; ++j)
                    for (std::size_t i = 0; i < j; ++i)
                        if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x)))
                            report("d_i d_j", n, i, j, x);
            if (n + 1 > max_dim)
                continue;
            // s_i s_j = s_{j+1} s_i for i <= j
            if (n + 2 <= max_dim)
                for (std::size_t j = 0; j <= n; ++j)
                    for (std::size_t i = 0; i <= j; ++i)
                        if (degeneracy(n + 1, i, degeneracy(n, j, x)) !=
                            degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
                            report("s_i s_j", n, i, j, x);
            // mixed identities on s_j x (dimension n+1)
            for (std::size_t j = 0; j <= n; ++j) {
                const std::size_t sx = degeneracy(n, j, x);
                for (std::size_t i = 0; i <= n + 1; ++i) {
                    const std::size_t lhs = face(n + 1, i, sx);
                    if (i == j || i == j + 1) {
                        if (lhs != x)
                            report("d_j s_j", n, i, j, x);
                    } else if (i < j) {
                        if (n == 0 || lhs != degeneracy(n - 1, j - 1, face(n, i, x)))
                            report("d_i s_j (i<j)", n, i, j, x);
                    } else {
                        if (n == 0 || lhs != degeneracy(n - 1, j, face(n, i - 1, x)))
                            report("d_i s_j (i>j+1)", n, i, j, x);
                    }
                }
            }
        }
    }
    return bad;
}

}  // namespace dh
