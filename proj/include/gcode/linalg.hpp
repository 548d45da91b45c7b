#pragma once

// Dense linear algebra over GF(q). Subspaces are always held in reduced
// row-echelon form, which makes equality a plain entry-wise comparison.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "gcode/field.hpp"

namespace gcode {

using Vec = std::vector<Elem>;

class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

    void append_row(std::span<const Elem> values);
    Matrix transpose() const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    /// M x for a column vector x.
    Vec apply(std::span<const Elem> x) const;
    /// Stacks the rows of `below` under this matrix.
    Matrix stacked(const Matrix& below) const;

    bool operator==(const Matrix& other) const noexcept;

    const std::vector<Elem>& data() const noexcept { return data_; }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;  ///< same shape as the input, zero rows last
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

class Subspace {
public:
    static Subspace zero(FieldPtr field, std::size_t ambient);
    static Subspace full(FieldPtr field, std::size_t ambient);
    /// Row space of an arbitrary generator matrix.
    static Subspace row_space(const Matrix& generators);
    static Subspace span_of(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);

    const FieldPtr& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Residue of v after eliminating every pivot column; zero iff v is in the space.
    Vec reduce(std::span<const Elem> v) const;
    bool contains(std::span<const Elem> v) const;
    bool contains(const Subspace& other) const;

    /// Linear combination sum coeffs[i] * basis row i.
    Vec combine(std::span<const Elem> coeffs) const;

    bool operator==(const Subspace& other) const noexcept {
        return ambient_dim() == other.ambient_dim() && basis_ == other.basis_;
    }

private:
    explicit Subspace(RrefResult reduced);

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {x : M x = 0}
Subspace nullspace(const Matrix& m);
/// Orthogonal complement under the standard dot product.
Subspace orthogonal(const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_equals(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Subspace& b);

/// Incremental echelon basis; cheap independence tests with early exit.
class EchelonBuilder {
public:
    EchelonBuilder(FieldPtr field, std::size_t ambient);

    /// Returns true if v was independent of the rows added so far.
    bool add(std::span<const Elem> v);
    std::size_t rank() const noexcept { return rows_.size(); }
    Subspace finish() const;

private:
    FieldPtr field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;  // pivot entry 1, sorted by pivot
    std::vector<std::size_t> pivots_;
    Vec scratch_;
};

/// "rows cols q" header, then rows of integer encodings.
void write_matrix(std::ostream& out, const Matrix& m);
/// Reads the text form; the field defaults to the built-in GF(q).
Matrix read_matrix(std::istream& in, FieldPtr field = nullptr);

}  // namespace gcode
