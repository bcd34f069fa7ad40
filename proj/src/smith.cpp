#include "dh/smith.hpp"

#include "dh/error.hpp"

#include <algorithm>
#include <numeric>

namespace dh {

namespace {

// Applies elementary operations to the working matrix and mirrors them into
// whichever transforms are being tracked.
struct Reducer {
    IntMatrix& a;
    IntMatrix* u = nullptr;
    IntMatrix* ui = nullptr;
    IntMatrix* v = nullptr;
    IntMatrix* vi = nullptr;

    void row_add(std::size_t dst, std::size_t src, const Integer& k)
    {
        a.add_row_multiple(dst, src, k);
        if (u)
            u->add_row_multiple(dst, src, k);
        if (ui)
            ui->add_col_multiple(src, dst, -k);
    }

    void col_add(std::size_t dst, std::size_t src, const Integer& k)
    {
        a.add_col_multiple(dst, src, k);
        if (v)
            v->add_col_multiple(dst, src, k);
        if (vi)
            vi->add_row_multiple(src, dst, -k);
    }

    void swap_rows(std::size_t x, std::size_t y)
    {
        if (x == y)
            return;
        a.swap_rows(x, y);
        if (u)
            u->swap_rows(x, y);
        if (ui)
            ui->swap_cols(x, y);
    }

    void swap_cols(std::size_t x, std::size_t y)
    {
        if (x == y)
            return;
        a.swap_cols(x, y);
        if (v)
            v->swap_cols(x, y);
        if (vi)
            vi->swap_rows(x, y);
    }

    void negate_row(std::size_t r)
    {
        a.negate_row(r);
        if (u)
            u->negate_row(r);
        if (ui)
            ui->negate_col(r);
    }
};

int cmpabs(const Integer& a, const Integer& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

int cmpabs(const Integer& a, unsigned long b)
{
    return mpz_cmpabs_ui(a.get_mpz_t(), b);
}

bool smaller_abs(const Integer& x, const Integer& best)
{
    return sgn(best) == 0 || cmpabs(x, best) < 0;
}

void reduce_dense(Reducer& red)
{
    IntMatrix& a = red.a;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t diag = std::min(rows, cols);
    Integer q, r;

    for (std::size_t t = 0; t < diag; ++t) {
        // Smallest nonzero entry of the trailing block.
        std::size_t pi = rows, pj = cols;
        Integer best = 0;
        for (std::size_t i = t; i < rows && !(sgn(best) != 0 && cmpabs(best, 1) == 0); ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Integer& x = a(i, j);
                if (sgn(x) != 0 && smaller_abs(x, best)) {
                    best = x;
                    pi = i;
                    pj = j;
                    if (cmpabs(best, 1) == 0)
                        break;
                }
            }
        if (pi == rows)
            break;
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a(i, t)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                red.row_add(i, t, -q);
                if (sgn(a(i, t)) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a(t, j)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                red.col_add(j, t, -q);
                if (sgn(a(t, j)) != 0)
                    clean = false;
            }
            if (!clean) {
                std::size_t bi = t, bj = t;
                Integer b = a(t, t);
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), b) < 0) {
                        b = a(i, t);
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), b) < 0) {
                        b = a(t, j);
                        bi = t;
                        bj = j;
                    }
                red.swap_rows(t, bi);
                red.swap_cols(t, bj);
                continue;
            }
            if (cmpabs(a(t, t), 1) == 0)
                break;
            // Divisibility: fold a non-divisible row into the pivot row.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (sgn(a(i, j)) == 0)
                        continue;
                    mpz_tdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), a(t, t).get_mpz_t());
                    if (sgn(r) != 0) {
                        bad = i;
                        break;
                    }
                }
            if (bad == rows)
                break;
            red.row_add(t, bad, 1);
        }
    }

    for (std::size_t t = 0; t < diag; ++t)
        if (sgn(a(t, t)) < 0)
            red.negate_row(t);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, unsigned transforms)
{
    SmithForm out;
    out.diagonal = m;
    if (transforms & kLeft)
        out.left = IntMatrix::identity(m.rows());
    if (transforms & kLeftInverse)
        out.left_inverse = IntMatrix::identity(m.rows());
    if (transforms & kRight)
        out.right = IntMatrix::identity(m.cols());
    if (transforms & kRightInverse)
        out.right_inverse = IntMatrix::identity(m.cols());

    Reducer red{out.diagonal,
                (transforms & kLeft) ? &out.left : nullptr,
                (transforms & kLeftInverse) ? &out.left_inverse : nullptr,
                (transforms & kRight) ? &out.right : nullptr,
                (transforms & kRightInverse) ? &out.right_inverse : nullptr};
    reduce_dense(red);

    const std::size_t diag = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < diag && sgn(out.diagonal(t, t)) != 0; ++t)
        out.factors.push_back(out.diagonal(t, t));
    out.rank = out.factors.size();
    return out;
}

IntVector invariant_factors(const IntMatrix& m)
{
    return invariant_factors(SparseMatrix::from_dense(m));
}

IntVector invariant_factors(const SparseMatrix& m)
{
    using Entry = std::pair<std::uint32_t, Integer>;
    using Row = std::vector<Entry>;

    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    std::vector<Row> rows(nrows);
    for (std::size_t c = 0; c < ncols; ++c)
        for (const auto& [r, v] : m.column(c))
            rows[r].emplace_back(static_cast<std::uint32_t>(c), Integer(v));
    for (auto& row : rows)
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });

    // Column -> rows touching it; may hold stale row ids, checked on use.
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (const auto& e : rows[r])
            col_rows[e.first].push_back(static_cast<std::uint32_t>(r));

    std::vector<char> row_alive(nrows, 1), col_alive(ncols, 1);
    std::size_t units = 0;

    auto find_entry = [](const Row& row, std::uint32_t c) -> const Integer* {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::uint32_t key) { return e.first < key; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    };

    std::vector<std::size_t> order(nrows);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });

    Row merged;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t r : order) {
            if (!row_alive[r])
                continue;
            // Unit entry in a live column with the fewest co-occupants.
            std::uint32_t pc = 0;
            std::size_t best = SIZE_MAX;
            for (const auto& [c, v] : rows[r]) {
                if (!col_alive[c] || cmpabs(v, 1) != 0)
                    continue;
                if (col_rows[c].size() < best) {
                    best = col_rows[c].size();
                    pc = c;
                }
            }
            if (best == SIZE_MAX)
                continue;

            const Integer pivot = *find_entry(rows[r], pc);
            const std::vector<std::uint32_t> touching = col_rows[pc];
            for (std::uint32_t r2 : touching) {
                if (r2 == r || !row_alive[r2])
                    continue;
                const Integer* a = find_entry(rows[r2], pc);
                if (!a)
                    continue;
                const Integer k = -(*a) * pivot;  // pivot is +-1, so a/pivot == a*pivot
                merged.clear();
                auto i = rows[r2].begin();
                auto j = rows[r].begin();
                while (i != rows[r2].end() || j != rows[r].end()) {
                    if (j == rows[r].end() || (i != rows[r2].end() && i->first < j->first)) {
                        merged.push_back(std::move(*i));
                        ++i;
                    } else if (i == rows[r2].end() || j->first < i->first) {
                        merged.emplace_back(j->first, k * j->second);
                        col_rows[j->first].push_back(r2);
                        ++j;
                    } else {
                        Integer s = i->second + k * j->second;
                        if (sgn(s) != 0)
                            merged.emplace_back(i->first, std::move(s));
                        ++i;
                        ++j;
                    }
                }
                rows[r2].swap(merged);
            }
            row_alive[r] = 0;
            col_alive[pc] = 0;
            col_rows[pc].clear();
            ++units;
            progress = true;
        }
    }

    // Dense remainder.
    std::vector<std::size_t> live_rows;
    std::vector<std::uint32_t> col_index(ncols, UINT32_MAX);
    std::uint32_t live_cols = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!row_alive[r])
            continue;
        bool any = false;
        for (const auto& [c, v] : rows[r])
            if (col_alive[c] && sgn(v) != 0) {
                any = true;
                if (col_index[c] == UINT32_MAX)
                    col_index[c] = live_cols++;
            }
        if (any)
            live_rows.push_back(r);
    }

    IntVector result(units, Integer(1));
    if (!live_rows.empty()) {
        IntMatrix rest(live_rows.size(), live_cols);
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows[live_rows[i]])
                if (col_alive[c])
                    rest(i, col_index[c]) = v;
        SmithForm snf = smith_normal_form(rest, kNoTransforms);
        result.insert(result.end(), snf.factors.begin(), snf.factors.end());
    }
    return result;
}

std::size_t rank(const SparseMatrix& m)
{
    return invariant_factors(m).size();
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    SmithForm snf = smith_normal_form(m, kRight);
    return snf.right.submatrix(0, m.cols(), snf.rank, m.cols() - snf.rank);
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        fail(ErrorKind::InvalidArgument, "solve: row counts differ");
    SmithForm snf = smith_normal_form(a, kLeft | kRight);
    IntMatrix ub = snf.left * b;
    IntMatrix y(a.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Integer& rhs = ub(i, c);
            if (i < snf.rank) {
                if (!mpz_divisible_p(rhs.get_mpz_t(), snf.factors[i].get_mpz_t()))
                    return std::nullopt;
                mpz_divexact(y(i, c).get_mpz_t(), rhs.get_mpz_t(), snf.factors[i].get_mpz_t());
            } else if (sgn(rhs) != 0) {
                return std::nullopt;
            }
        }
    }
    return snf.right * y;
}

}  // namespace dh
