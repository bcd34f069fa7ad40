#include "dh/int_matrix.hpp"

#include "dh/error.hpp"

#include <algorithm>
#include <sstream>

namespace dh {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            fail(ErrorKind::InvalidArgument, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::column_vector(const IntVector& v)
{
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries)
{
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_column(std::size_t c, const IntVector& v)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) const
{
    IntMatrix s(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            s(r, c) = (*this)(row0 + r, col0 + c);
    return s;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& which) const
{
    IntMatrix s(which.size(), cols_);
    for (std::size_t r = 0; r < which.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            s(r, c) = (*this)(which[r], c);
    return s;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& which) const
{
    IntMatrix s(rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < which.size(); ++c)
            s(r, c) = (*this)(r, which[c]);
    return s;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector IntMatrix::apply(const IntVector& v) const
{
    if (v.size() != cols_)
        fail(ErrorKind::InvalidArgument, "matrix/vector size mismatch");
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Integer& a = (*this)(r, c);
            if (sgn(a) != 0 && sgn(v[c]) != 0)
                acc += a * v[c];
        }
        out[r] = acc;
    }
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_)
        fail(ErrorKind::InvalidArgument, "hconcat: row counts differ");
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c)
            m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.cols_)
        fail(ErrorKind::InvalidArgument, "vconcat: column counts differ");
    IntMatrix m(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return m;
}

IntMatrix IntMatrix::block_diagonal(const std::vector<IntMatrix>& blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows_;
        cols += b.cols_;
    }
    IntMatrix m(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c)
                m(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows_;
        c0 += b.cols_;
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (sgn(k) == 0)
        return;
    Integer* d = &data_[dst * cols_];
    const Integer* s = &data_[src * cols_];
    for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(s[c]) != 0)
            mpz_addmul(d[c].get_mpz_t(), k.get_mpz_t(), s[c].get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (sgn(k) == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const Integer& s = data_[r * cols_ + src];
        if (sgn(s) != 0)
            mpz_addmul(data_[r * cols_ + dst].get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        mpz_neg((*this)(r, c).get_mpz_t(), (*this)(r, c).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        mpz_neg((*this)(r, c).get_mpz_t(), (*this)(r, c).get_mpz_t());
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        fail(ErrorKind::InvalidArgument, "matrix product: inner dimensions differ");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Integer& b = rhs(k, c);
                if (sgn(b) != 0)
                    mpz_addmul(out(r, c).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(ErrorKind::InvalidArgument, "matrix sum: shapes differ");
    IntMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(ErrorKind::InvalidArgument, "matrix difference: shapes differ");
    IntMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix out(*this);
    for (auto& x : out.data_)
        x = -x;
    return out;
}

IntMatrix IntMatrix::scaled(const Integer& k) const
{
    IntMatrix out(*this);
    for (auto& x : out.data_)
        x *= k;
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<std::vector<long>> IntMatrix::to_rows() const
{
    std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).fits_slong_p())
                fail(ErrorKind::BoundExceeded, "matrix entry does not fit a machine word");
            out[r][c] = (*this)(r, c).get_si();
        }
    return out;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

void SparseMatrix::add(std::size_t r, std::size_t c, long value)
{
    if (value != 0)
        columns_[c].emplace_back(static_cast<std::uint32_t>(r), value);
}

void SparseMatrix::finalize()
{
    for (auto& col : columns_) {
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::vector<Entry> merged;
        for (const auto& e : col) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second += e.second;
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
        col = std::move(merged);
    }
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& col : columns_)
        n += col.size();
    return n;
}

IntMatrix SparseMatrix::to_dense() const
{
    IntMatrix m(rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c])
            m(r, c) += v;
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m)
{
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (sgn(m(r, c)) != 0) {
                if (!m(r, c).fits_slong_p())
                    fail(ErrorKind::BoundExceeded, "sparse entry does not fit a machine word");
                s.add(r, c, m(r, c).get_si());
            }
    s.finalize();
    return s;
}

}  // namespace dh
