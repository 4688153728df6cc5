#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semihom/rational.hpp"

namespace semihom {

/// Dense matrix over the rationals, row-major.
///
/// Zero-row and zero-column shapes are legal and stand for maps to or from
/// the zero space.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /// Row-wise literal, e.g. RatMatrix::from_rows({{1, 2}, {3, 4}}).
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return data_; }

    bool is_zero() const;
    RatMatrix transpose() const;
    RatMatrix column(std::size_t c) const;
    RatMatrix select_columns(std::span<const std::size_t> cols) const;
    RatMatrix select_rows(std::span<const std::size_t> rows) const;
    RatMatrix hstack(const RatMatrix& right) const;
    RatMatrix vstack(const RatMatrix& below) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

/// Direct sum of two matrices (block diagonal).
RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form.  The pivot in each column is the first
/// nonzero entry at or below the current row.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Columns form a basis of ker(m), one per free column of rref(m).
RatMatrix kernel_basis(const RatMatrix& m);

/// Columns of m at the pivot columns of rref(m).
RatMatrix image_basis(const RatMatrix& m);

/// Projection k^ambient -> k^(ambient - rank(sub)) whose kernel is the column
/// space of `sub`; the complement is spanned by the non-pivot coordinates of
/// rref(sub^T).  Throws std::invalid_argument when sub.rows() != ambient.
RatMatrix quotient_map(std::size_t ambient_dim, const RatMatrix& sub);

/// quotient_map together with the complement coordinates it keeps: the unit
/// vectors at `complement` map to the standard basis of the quotient.
struct Quotient {
    RatMatrix projection;
    std::vector<std::size_t> complement;
};
Quotient quotient(std::size_t ambient_dim, const RatMatrix& sub);

/// Some x with a x = b, or nullopt when a column of b is outside image(a).
/// Free variables are set to zero.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Sparse row for the incremental eliminator: (column, value) sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental echelon basis of a subspace of k^dim, kept fully reduced.
///
/// Used where the relation spaces are large and very sparse (coend
/// quotients); rows are stored sparsely and only touched on overlap.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t dim) : dim_(dim), pivot_row_(dim, npos) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds a vector to the spanned subspace.  Returns true when it increased the rank.
    bool insert(SparseRow v);

    /// Reduces v modulo the subspace; the result has zeros at every pivot column.
    SparseRow reduce(SparseRow v) const;

    bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }

    /// Coordinates that are not pivots, ascending; they index a basis of the quotient.
    std::vector<std::size_t> free_columns() const;

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t dim_;
    std::vector<SparseRow> rows_;          // pivot first; rows reduced against each other
    std::vector<std::size_t> pivot_row_;   // column -> index in rows_
};

/// Dense column -> sparse row conversion helpers.
SparseRow sparse_from_column(const RatMatrix& m, std::size_t col);

}  // namespace semihom
