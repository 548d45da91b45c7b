#pragma once

// Arithmetic in GF(p^m) for q = p^m <= 256.
//
// Elements are stored in the polynomial basis over GF(p). The integer
// encoding of an element with coefficients (c_0, ..., c_{m-1}) (constant
// first) is sum c_i p^i, so GF(4) with modulus x^2+x+1 enumerates as
// 0, 1, x, x+1. Every downstream enumeration inherits this order.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gcode {

using Elem = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr unsigned kDefaultCap = 256;

    /// Builds GF(p^m). Without an explicit modulus the built-in table is
    /// used (q <= 16); larger fields fall back to the first irreducible
    /// monic polynomial in encoding order.
    static FieldPtr create(unsigned p, unsigned m,
                           std::optional<std::vector<unsigned>> modulus = std::nullopt,
                           unsigned cap = kDefaultCap);

    /// Parses "GF(q)", "GF(p^m)" with an optional "[c0,c1,...,cm]" modulus.
    static FieldPtr parse(std::string_view spec);

    unsigned p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    unsigned q() const noexcept { return q_; }
    bool is_prime() const noexcept { return m_ == 1; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const noexcept { return sub_[idx(a, b)]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    /// Throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, unsigned long long e) const noexcept;

    /// Row of the multiplication table for a fixed left factor.
    const Elem* mul_row(Elem a) const noexcept { return mul_.data() + idx(a, 0); }
    const Elem* add_row(Elem a) const noexcept { return add_.data() + idx(a, 0); }

    std::vector<unsigned> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<unsigned>& c) const;
    /// The polynomial-basis generator x (equals 1 in prime fields).
    Elem primitive_x() const noexcept { return m_ == 1 ? Elem{1} : static_cast<Elem>(p_); }

    /// "GF(q)[c0,...,cm]"; prime fields print as "GF(p)"
    std::string spec() const;
    /// Human-readable polynomial form, e.g. "x+1".
    std::string format(Elem a) const;

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

    std::size_t idx(Elem a, Elem b) const noexcept {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    unsigned p_;
    unsigned m_;
    unsigned q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> add_, sub_, mul_;
    std::vector<Elem> neg_, inv_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

bool is_prime(unsigned n) noexcept;

/// Irreducibility over GF(p) by trial division with every monic polynomial of
/// degree <= deg/2. Coefficients constant-first.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

/// Value-semantics wrapper used at API boundaries; hot loops work on Elem.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
    static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<unsigned> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& b) const;
    FieldElement operator-(const FieldElement& b) const;
    FieldElement operator*(const FieldElement& b) const;
    FieldElement operator/(const FieldElement& b) const;
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(unsigned long long e) const { return {field_, field_->pow(value_, e)}; }

    bool operator==(const FieldElement& b) const noexcept {
        return value_ == b.value_ && same_field(field_, b.field_);
    }

private:
    void check_same(const FieldElement& b) const;

    FieldPtr field_;
    Elem value_;
};

enum class ArithKind { Add, Sub, Mul, Div };

FieldElement fe_arith(const FieldElement& a, const FieldElement& b, ArithKind kind);

/// All q elements, zero first, in encoding order.
std::vector<FieldElement> enumerate(const FieldPtr& field);

}  // namespace gcode
