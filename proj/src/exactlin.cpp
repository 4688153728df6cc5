#include "semihom/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semihom {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match shape");
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    RatMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("ragged matrix literal");
        std::size_t c = 0;
        for (const auto& x : row)
            m(r, c++) = x;
        ++r;
    }
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RatMatrix RatMatrix::column(std::size_t c) const {
    RatMatrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
        out(r, 0) = (*this)(r, c);
    return out;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
    RatMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(r, j) = (*this)(r, cols[j]);
    return out;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> rows) const {
    RatMatrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            out(i, c) = (*this)(rows[i], c);
    return out;
}

RatMatrix RatMatrix::hstack(const RatMatrix& right) const {
    if (rows_ != right.rows_)
        throw std::invalid_argument("hstack: row counts differ");
    RatMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c)
            out(r, cols_ + c) = right(r, c);
    }
    return out;
}

RatMatrix RatMatrix::vstack(const RatMatrix& below) const {
    if (cols_ != below.cols_)
        throw std::invalid_argument("vstack: column counts differ");
    RatMatrix out(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<long>(data_.size()));
    return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] += o.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] -= o.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
    for (auto& x : data_)
        if (!x.is_zero())
            x *= s;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: inner dimensions differ");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j).add_mul(x, b(k, j));
        }
    return out;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                os << ", ";
            os << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

namespace {

const Rational* find_entry(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != row.end() && it->first == col)
        return &it->second;
    return nullptr;
}

// y - a * x, merged.
SparseRow axpy_sub(const SparseRow& y, const Rational& a, const SparseRow& x) {
    SparseRow out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, -(a * x[j].second));
            ++j;
        } else {
            Rational v = y[i].second;
            v.sub_mul(a, x[j].second);
            if (!v.is_zero())
                out.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void scale(SparseRow& row, const Rational& s) {
    for (auto& e : row)
        e.second *= s;
}

std::vector<SparseRow> to_sparse_rows(const RatMatrix& m) {
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
                rows[r].emplace_back(c, m(r, c));
    return rows;
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
    auto rows = to_sparse_rows(m);
    RrefResult res;
    std::size_t cur = 0;
    for (std::size_t c = 0; c < m.cols() && cur < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t r = cur; r < rows.size(); ++r)
            if (find_entry(rows[r], c)) {
                piv = r;
                break;
            }
        if (piv == rows.size())
            continue;
        std::swap(rows[cur], rows[piv]);
        Rational inv = Rational(1) / *find_entry(rows[cur], c);
        scale(rows[cur], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == cur)
                continue;
            if (const Rational* e = find_entry(rows[r], c)) {
                Rational factor = *e;
                rows[r] = axpy_sub(rows[r], factor, rows[cur]);
            }
        }
        res.pivots.push_back(c);
        ++cur;
    }
    res.rank = res.pivots.size();
    res.reduced = RatMatrix(m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            res.reduced(r, c) = v;
    return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix kernel_basis(const RatMatrix& m) {
    auto [reduced, pivots, rk] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    RatMatrix basis(m.cols(), m.cols() - rk);
    std::size_t k = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        basis(f, k) = 1;
        for (std::size_t r = 0; r < rk; ++r)
            basis(pivots[r], k) = -reduced(r, f);
        ++k;
    }
    return basis;
}

RatMatrix image_basis(const RatMatrix& m) {
    auto res = rref(m);
    return m.select_columns(res.pivots);
}

RatMatrix quotient_map(std::size_t ambient_dim, const RatMatrix& sub) {
    return quotient(ambient_dim, sub).projection;
}

Quotient quotient(std::size_t ambient_dim, const RatMatrix& sub) {
    if (sub.rows() != ambient_dim)
        throw std::invalid_argument("quotient_map: subspace generators have " + std::to_string(sub.rows()) +
                                    " rows, ambient dimension is " + std::to_string(ambient_dim));
    auto [reduced, pivots, rk] = rref(sub.transpose());
    std::vector<std::size_t> row_of_pivot(ambient_dim, ambient_dim);
    for (std::size_t r = 0; r < rk; ++r)
        row_of_pivot[pivots[r]] = r;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (row_of_pivot[j] == ambient_dim)
            free.push_back(j);
    RatMatrix q(free.size(), ambient_dim);
    for (std::size_t i = 0; i < free.size(); ++i) {
        q(i, free[i]) = 1;
        for (std::size_t r = 0; r < rk; ++r)
            q(i, pivots[r]) = -reduced(r, free[i]);
    }
    return {std::move(q), std::move(free)};
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row counts differ");
    auto [reduced, pivots, rk] = rref(a.hstack(b));
    RatMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < rk; ++r) {
        if (pivots[r] >= a.cols())
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = reduced(r, a.cols() + j);
    }
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols())
        return std::nullopt;
    if (rank(m) != m.rows())
        return std::nullopt;
    return solve(m, RatMatrix::identity(m.rows()));
}

bool SparseEchelon::insert(SparseRow v) {
    SparseRow r = reduce(std::move(v));
    if (r.empty())
        return false;
    Rational inv = Rational(1) / r.front().second;
    scale(r, inv);
    std::size_t p = r.front().first;
    for (auto& row : rows_)
        if (const Rational* e = find_entry(row, p)) {
            Rational factor = *e;
            row = axpy_sub(row, factor, r);
        }
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
}

SparseRow SparseEchelon::reduce(SparseRow v) const {
    // Rows are fully reduced, so one pass over v's pivot entries suffices.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [c, x] : v)
        if (pivot_row_[c] != npos)
            hits.emplace_back(c, x);
    for (const auto& [c, x] : hits)
        v = axpy_sub(v, x, rows_[pivot_row_[c]]);
    return v;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < dim_; ++c)
        if (pivot_row_[c] == npos)
            out.push_back(c);
    return out;
}

SparseRow sparse_from_column(const RatMatrix& m, std::size_t col) {
    SparseRow out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, col).is_zero())
            out.emplace_back(r, m(r, col));
    return out;
}

}  // namespace semihom
