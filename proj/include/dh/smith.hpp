#pragma once

#include "dh/int_matrix.hpp"

#include <optional>

namespace dh {

/// Which unimodular transforms smith_normal_form should accumulate.
enum SmithTransforms : unsigned {
    kNoTransforms = 0,
    kLeft = 1u << 0,          // U
    kLeftInverse = 1u << 1,   // U^-1
    kRight = 1u << 2,         // V
    kRightInverse = 1u << 3,  // V^-1
    kAllTransforms = kLeft | kLeftInverse | kRight | kRightInverse,
};

/// S = U * M * V with S diagonal, nonnegative, and d_1 | d_2 | ... on the
/// diagonal. Transforms not requested are left empty.
struct SmithForm {
    IntMatrix diagonal;
    /// Diagonal entries d_0..d_{rank-1}, all positive.
    IntVector factors;
    std::size_t rank = 0;
    IntMatrix left;
    IntMatrix left_inverse;
    IntMatrix right;
    IntMatrix right_inverse;
};

SmithForm smith_normal_form(const IntMatrix& m, unsigned transforms = kAllTransforms);

/// Nonzero invariant factors of m (ascending, divisibility chain). Unit
/// pivots are eliminated sparsely; whatever remains is reduced densely.
IntVector invariant_factors(const SparseMatrix& m);
IntVector invariant_factors(const IntMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Basis of the lattice {x : m x = 0}, as the columns of the result.
IntMatrix kernel_basis(const IntMatrix& m);

/// Some integer X with a X = b, or nullopt when none exists.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

}  // namespace dh
