#pragma once

// Finite groups as fully tabulated objects. Element 0 is the identity; the
// remaining indices follow breadth-first order over the generators (shortlex
// on words), and that order fixes the coordinates of every group code.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gcode {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A word over generator indices with nonzero exponents.
using Word = std::vector<std::pair<std::size_t, long>>;

class Group {
public:
    static constexpr std::size_t kDefaultOrderCap = 200;
    static constexpr std::size_t kAssociativityCheckLimit = 200;

    /// Validates and wraps a multiplication table. `generators` are element
    /// indices; `labels` name every element.
    static GroupPtr from_table(std::string id, std::size_t order, std::vector<std::uint32_t> mult,
                               std::vector<std::string> labels,
                               std::vector<std::size_t> generators,
                               std::vector<std::string> gen_names);

    /// Closure of a regular right action: action[point][gen] is the image of
    /// `point` under generator `gen`; point 0 is the identity coset.
    static GroupPtr from_regular_action(std::string id, std::vector<std::string> gen_names,
                                        const std::vector<std::vector<std::uint32_t>>& action);

    /// Closure of permutation generators (images of 0..deg-1), composed left to
    /// right: the product gh applies g first.
    static GroupPtr from_permutations(std::string id, std::vector<std::string> gen_names,
                                      const std::vector<std::vector<std::uint32_t>>& perms,
                                      std::size_t order_cap = kDefaultOrderCap);

    const std::string& id() const noexcept { return id_; }
    std::size_t order() const noexcept { return n_; }
    std::size_t mul(std::size_t a, std::size_t b) const noexcept { return mult_[a * n_ + b]; }
    std::size_t inv(std::size_t a) const noexcept { return inv_[a]; }
    std::size_t elem_order(std::size_t a) const noexcept { return elem_order_[a]; }
    const std::string& label(std::size_t a) const noexcept { return labels_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }
    const std::vector<std::string>& gen_names() const noexcept { return gen_names_; }
    const std::vector<std::uint32_t>& table() const noexcept { return mult_; }

    std::size_t power(std::size_t a, long e) const noexcept;
    std::size_t evaluate(const Word& w) const;
    std::optional<std::size_t> find_label(std::string_view label) const;

private:
    Group() = default;
    void validate() const;

    std::string id_;
    std::size_t n_ = 0;
    std::vector<std::uint32_t> mult_;
    std::vector<std::size_t> inv_;
    std::vector<std::size_t> elem_order_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> generators_;
    std::vector<std::string> gen_names_;
};

GroupPtr cyclic(std::size_t n);
/// Dihedral group of order `order` (even, >= 6).
GroupPtr dihedral(std::size_t order);
/// Symmetric group on n <= 5 points, generated by adjacent transpositions.
GroupPtr symmetric(std::size_t n);
GroupPtr alternating4();
GroupPtr quaternion8();
GroupPtr elem_abelian(unsigned p, unsigned m);
/// Index (i, j) -> i * |H| + j.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                        std::size_t order_cap = Group::kDefaultOrderCap);

/// Resolves names such as "c6", "cyclic(6)", "klein4", "d24", "s4",
/// "ea(2,3)", "product(c6,c6)", "g64" and "g48".
GroupPtr preset_group(std::string_view name);
/// Names accepted by preset_group without arguments.
std::vector<std::string> preset_names();

/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);
bool is_p_group(const Group& g, unsigned p);

struct PNilpotencyReport {
    bool p_nilpotent;
    bool cyclic_sylow;
};

/// p-nilpotent iff the p'-elements are closed under multiplication; the
/// Sylow p-subgroup is cyclic iff some element has order |G|_p.
PNilpotencyReport is_p_nilpotent_cyclic_sylow(const Group& g, unsigned p);

/// Sorted element list of the subgroup generated by `gens`.
std::vector<std::size_t> subgroup_closure(const Group& g, const std::vector<std::size_t>& gens);
std::vector<std::size_t> normal_closure(const Group& g, const std::vector<std::size_t>& gens);
/// Distinct cyclic subgroups, each as a sorted element list.
std::vector<std::vector<std::size_t>> cyclic_subgroups(const Group& g);
/// Distinct p-subgroups generated by at most two p-elements, largest first.
std::vector<std::vector<std::size_t>> small_p_subgroups(const Group& g, unsigned p);

/// "order n", the table rows, then "labels ..." and "generators ...".
void write_group(std::ostream& out, const Group& g);

}  // namespace gcode
