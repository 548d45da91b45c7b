#pragma once

// The group algebra KG. Coordinates are indexed by group element index, so
// a vector of length |G| is both an algebra element and a codeword.

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "gcode/field.hpp"
#include "gcode/group.hpp"
#include "gcode/linalg.hpp"

namespace gcode {

enum class Side { Right, Left };

const char* to_string(Side side) noexcept;

class GroupAlgebra;
using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

class GroupAlgebra {
public:
    static AlgebraPtr create(GroupPtr group, FieldPtr field);

    const Group& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    const FieldPtr& field() const noexcept { return field_; }
    const Field& f() const noexcept { return *field_; }
    std::size_t dim() const noexcept { return group_->order(); }

    /// KG is local exactly when G is a p-group for p = char K.
    bool is_local() const noexcept { return local_; }

    /// translate(g, side)[h] is the index of h*g (Right) or g*h (Left).
    const std::vector<std::uint32_t>& translate(std::size_t g, Side side) const noexcept {
        return side == Side::Right ? right_[g] : left_[g];
    }

    /// p-subgroups generated by at most two p-elements (p = char K), largest
    /// first; computed on first use.
    const std::vector<std::vector<std::size_t>>& p_subgroups() const;

    std::string describe() const;

private:
    GroupAlgebra(GroupPtr group, FieldPtr field);

    GroupPtr group_;
    FieldPtr field_;
    bool local_;
    std::vector<std::vector<std::uint32_t>> right_;
    std::vector<std::vector<std::uint32_t>> left_;
    mutable std::once_flag p_subgroups_once_;
    mutable std::vector<std::vector<std::size_t>> p_subgroups_;
};

class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr alg, Vec coeffs);

    static AlgebraElement zero(const AlgebraPtr& alg);
    static AlgebraElement one(const AlgebraPtr& alg);
    /// The group element g_i as a basis vector.
    static AlgebraElement basis(const AlgebraPtr& alg, std::size_t g);
    /// The sum of all group elements.
    static AlgebraElement sigma(const AlgebraPtr& alg);
    /// Sum of the listed group elements.
    static AlgebraElement subset_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& elems);

    const AlgebraPtr& alg() const noexcept { return alg_; }
    const Vec& coeffs() const noexcept { return coeffs_; }
    Elem coeff(std::size_t g) const noexcept { return coeffs_[g]; }
    std::size_t weight() const noexcept;
    bool is_zero() const noexcept { return weight() == 0; }

    AlgebraElement operator+(const AlgebraElement& b) const;
    AlgebraElement operator-(const AlgebraElement& b) const;
    AlgebraElement operator*(const AlgebraElement& b) const;
    AlgebraElement scaled(Elem c) const;
    /// v * g for a group element index (Right) or g * v (Left).
    AlgebraElement translated(std::size_t g, Side side) const;

    bool operator==(const AlgebraElement& b) const noexcept {
        return alg_ == b.alg_ && coeffs_ == b.coeffs_;
    }

private:
    void check_same(const AlgebraElement& b) const;

    AlgebraPtr alg_;
    Vec coeffs_;
};

/// Convolution: (ab)_g = sum_h a_h b_{h^-1 g}.
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
/// Coefficient at g moves to g^-1.
AlgebraElement hat(const AlgebraElement& a);
Vec hat(const Group& g, std::span<const Elem> coeffs);

/// Matrix of a -> v a (Left) or a -> a v (Right) in the group-element basis.
Matrix reg_matrix(const AlgebraElement& v, Side side);

/// A subspace of KG together with its verified one-sided closure flags.
class IdealSubspace {
public:
    /// Computes the closure flags by translating every basis row by every
    /// group generator.
    static IdealSubspace from_subspace(AlgebraPtr alg, Subspace space);
    static IdealSubspace zero(const AlgebraPtr& alg);
    static IdealSubspace full(const AlgebraPtr& alg);

    const AlgebraPtr& alg() const noexcept { return alg_; }
    const Subspace& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    bool is_right() const noexcept { return right_; }
    bool is_left() const noexcept { return left_; }
    bool is_two_sided() const noexcept { return right_ && left_; }
    bool is_ideal(Side side) const noexcept { return side == Side::Right ? right_ : left_; }
    /// "right", "left", "two-sided" or "none".
    std::string side_name() const;

    AlgebraElement basis_element(std::size_t i) const;
    bool contains(const AlgebraElement& v) const { return space_.contains(v.coeffs()); }

    bool operator==(const IdealSubspace& other) const noexcept {
        return alg_ == other.alg_ && space_ == other.space_;
    }

private:
    IdealSubspace(AlgebraPtr alg, Subspace space, bool right, bool left);

    AlgebraPtr alg_;
    Subspace space_;
    bool right_;
    bool left_;
};

/// v KG (Right) or KG v (Left).
IdealSubspace principal_ideal(const AlgebraElement& v, Side side);
/// dim v KG (Right) or dim KG v (Left); stops counting once `stop_at` is reached.
std::size_t principal_dim(const AlgebraElement& v, Side side, std::size_t stop_at = 0);

/// Right: ann_r(v) = {a : v a = 0}. Left: ann_l(v) = {a : a v = 0}.
IdealSubspace annihilator(const AlgebraElement& v, Side side);
IdealSubspace annihilator(const IdealSubspace& s, Side side);

/// {a : sum a_g = 0}
IdealSubspace augmentation_ideal(const AlgebraPtr& alg);
/// J^r for a p-group in characteristic p, where J is the augmentation ideal.
IdealSubspace radical_power(const AlgebraPtr& alg, unsigned r);

IdealSubspace ideal_sum(const IdealSubspace& a, const IdealSubspace& b);
IdealSubspace ideal_intersect(const IdealSubspace& a, const IdealSubspace& b);
/// span{x y : x in a, y in b}
IdealSubspace ideal_product(const IdealSubspace& a, const IdealSubspace& b);
/// hat applied to every vector of the subspace.
IdealSubspace hat(const IdealSubspace& s);
/// Sum of the principal ideals generated by the given elements.
IdealSubspace generated_ideal(const AlgebraPtr& alg, const std::vector<AlgebraElement>& gens,
                              Side side);

/// Parses "1 + 2*a^3*b + a^6*c" style expressions. Words use the group's
/// generator names (juxtaposition is accepted too); a leading integer is a
/// scalar in field-encoding order.
AlgebraElement parse_element(const AlgebraPtr& alg, std::string_view text);
/// Inverse of parse_element using the group's element labels.
std::string format_element(const AlgebraElement& a);

}  // namespace gcode
