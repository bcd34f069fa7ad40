#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dh {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);
    static IntMatrix column_vector(const IntVector& v);
    static IntMatrix diagonal(const IntVector& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    void set_column(std::size_t c, const IntVector& v);

    IntMatrix transpose() const;
    IntMatrix submatrix(std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) const;
    IntMatrix select_rows(const std::vector<std::size_t>& which) const;
    IntMatrix select_cols(const std::vector<std::size_t>& which) const;

    bool is_zero() const;
    IntVector apply(const IntVector& v) const;

    /// [A | B]; rows must agree.
    static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
    /// [A ; B]; cols must agree.
    static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

    // Elementary operations, used by the reduction routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Integer& k) const;

    bool operator==(const IntMatrix& rhs) const;

    std::vector<std::vector<long>> to_rows() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Column-sparse matrix with machine-word entries; used for large boundary
/// matrices whose entries stay small.
class SparseMatrix {
public:
    using Entry = std::pair<std::uint32_t, long>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    /// Accumulates value into (r, c); entries are merged when the column is finalized.
    void add(std::size_t r, std::size_t c, long value);
    void finalize();

    const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
    std::size_t nonzeros() const;

    IntMatrix to_dense() const;
    static SparseMatrix from_dense(const IntMatrix& m);

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

}  // namespace dh
