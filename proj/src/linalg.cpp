#include "gcode/linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "gcode/error.hpp"

namespace gcode {

namespace {

// dst -= factor * src
void sub_scaled(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem factor) {
    if (factor == 0) return;
    const Elem* mrow = f.mul_row(factor);
    for (std::size_t j = 0; j < dst.size(); ++j) {
        if (src[j]) dst[j] = f.sub(dst[j], mrow[src[j]]);
    }
}

void scale(const Field& f, std::span<Elem> v, Elem factor) {
    const Elem* mrow = f.mul_row(factor);
    for (auto& x : v) x = mrow[x];
}

void require_same(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !same_field(a.field(), b.field())) {
        throw Error(ErrorKind::AmbientMismatch,
                    std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()));
    }
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(std::move(field), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (values.size() != cols_) {
        throw Error(ErrorKind::AmbientMismatch, "row length " + std::to_string(values.size()) +
                                                    " != " + std::to_string(cols_));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::AmbientMismatch, "matrix shapes differ");
    }
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = field_->add(data_[i], other.data_[i]);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error(ErrorKind::AmbientMismatch, "inner dimensions differ");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(r, k);
            if (!a) continue;
            const Elem* mrow = field_->mul_row(a);
            for (std::size_t c = 0; c < other.cols_; ++c) {
                out(r, c) = field_->add(out(r, c), mrow[other(k, c)]);
            }
        }
    }
    return out;
}

Vec Matrix::apply(std::span<const Elem> x) const {
    if (x.size() != cols_) throw Error(ErrorKind::AmbientMismatch, "vector length");
    Vec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Elem acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc = field_->add(acc, field_->mul((*this)(r, c), x[c]));
        }
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (cols_ != below.cols_) throw Error(ErrorKind::AmbientMismatch, "column counts differ");
    Matrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
}

bool Matrix::operator==(const Matrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_ &&
           same_field(field_, other.field_);
}

RrefResult rref(Matrix m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < m.rows() && m(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != rank) {
            auto a = m.row(pivot_row);
            auto b = m.row(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        scale(f, m.row(rank), f.inv(m(rank, col)));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != rank && m(r, col) != 0) sub_scaled(f, m.row(r), m.row(rank), m(r, col));
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(m), rank, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    EchelonBuilder builder(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) builder.add(m.row(r));
    return builder.rank();
}

Subspace::Subspace(RrefResult reduced)
    : basis_(reduced.reduced.field(), 0, reduced.reduced.cols()),
      pivots_(std::move(reduced.pivots)) {
    for (std::size_t r = 0; r < reduced.rank; ++r) basis_.append_row(reduced.reduced.row(r));
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient) {
    return Subspace(rref(Matrix(std::move(field), 0, ambient)));
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
    return Subspace(rref(Matrix::identity(std::move(field), ambient)));
}

Subspace Subspace::row_space(const Matrix& generators) { return Subspace(rref(generators)); }

Subspace Subspace::span_of(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors) {
    EchelonBuilder builder(std::move(field), ambient);
    for (const auto& v : vectors) builder.add(v);
    return builder.finish();
}

Vec Subspace::reduce(std::span<const Elem> v) const {
    if (v.size() != ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "vector length");
    Vec out(v.begin(), v.end());
    const Field& f = *field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Elem c = out[pivots_[i]];
        if (c) sub_scaled(f, out, basis_.row(i), c);
    }
    return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
    for (Elem x : reduce(v)) {
        if (x) return false;
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    require_same(*this, other);
    for (std::size_t r = 0; r < other.dim(); ++r) {
        if (!contains(other.basis().row(r))) return false;
    }
    return true;
}

Vec Subspace::combine(std::span<const Elem> coeffs) const {
    const Field& f = *field();
    Vec out(ambient_dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (coeffs[i]) sub_scaled(f, out, basis_.row(i), f.neg(coeffs[i]));
    }
    return out;
}

Subspace nullspace(const Matrix& m) {
    const Field& f = *m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix gens(m.field(), 0, m.cols());
    Vec x(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(x.begin(), x.end(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = f.neg(r.reduced(i, free));
        gens.append_row(x);
    }
    return Subspace::row_space(gens);
}

Subspace orthogonal(const Subspace& s) { return nullspace(s.basis()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same(a, b);
    return Subspace::row_space(a.basis().stacked(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require_same(a, b);
    // A ∩ B = (A^⊥ + B^⊥)^⊥
    return orthogonal(subspace_sum(orthogonal(a), orthogonal(b)));
}

bool subspace_equals(const Subspace& a, const Subspace& b) {
    require_same(a, b);
    return a == b;
}

bool subspace_contains(const Subspace& a, const Subspace& b) { return a.contains(b); }

EchelonBuilder::EchelonBuilder(FieldPtr field, std::size_t ambient)
    : field_(std::move(field)), ambient_(ambient), scratch_(ambient) {}

bool EchelonBuilder::add(std::span<const Elem> v) {
    if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length");
    if (rows_.size() == ambient_) return false;
    const Field& f = *field_;
    std::copy(v.begin(), v.end(), scratch_.begin());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem c = scratch_[pivots_[i]];
        if (c) sub_scaled(f, scratch_, rows_[i], c);
    }
    std::size_t lead = 0;
    while (lead < ambient_ && scratch_[lead] == 0) ++lead;
    if (lead == ambient_) return false;
    scale(f, scratch_, f.inv(scratch_[lead]));
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, scratch_);
    return true;
}

Subspace EchelonBuilder::finish() const {
    Matrix m = Matrix::from_rows(field_, ambient_, rows_);
    return Subspace::row_space(m);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.field()->q() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << static_cast<unsigned>(m(r, c));
        }
        out << '\n';
    }
}

Matrix read_matrix(std::istream& in, FieldPtr field) {
    std::size_t rows = 0, cols = 0;
    unsigned q = 0;
    if (!(in >> rows >> cols >> q)) throw Error(ErrorKind::IoError, "missing 'rows cols q' header");
    if (!field) field = Field::parse("GF(" + std::to_string(q) + ")");
    if (field->q() != q) {
        throw Error(ErrorKind::FieldMismatch,
                    "matrix over GF(" + std::to_string(q) + ") read as " + field->spec());
    }
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            unsigned v = 0;
            if (!(in >> v)) throw Error(ErrorKind::IoError, "truncated matrix body");
            if (v >= q) throw Error(ErrorKind::IoError, "entry out of range");
            m(r, c) = static_cast<Elem>(v);
        }
    }
    return m;
}

}  // namespace gcode
