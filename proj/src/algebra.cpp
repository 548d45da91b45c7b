#include "gcode/algebra.hpp"

#include <cctype>

#include "gcode/error.hpp"
#include "gcode/presentation.hpp"

namespace gcode {

const char* to_string(Side side) noexcept { return side == Side::Right ? "right" : "left"; }

GroupAlgebra::GroupAlgebra(GroupPtr group, FieldPtr field)
    : group_(std::move(group)), field_(std::move(field)) {
    local_ = is_p_group(*group_, field_->p());
    const std::size_t n = group_->order();
    right_.assign(n, std::vector<std::uint32_t>(n));
    left_.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            right_[g][h] = static_cast<std::uint32_t>(group_->mul(h, g));
            left_[g][h] = static_cast<std::uint32_t>(group_->mul(g, h));
        }
    }
}

AlgebraPtr GroupAlgebra::create(GroupPtr group, FieldPtr field) {
    return AlgebraPtr(new GroupAlgebra(std::move(group), std::move(field)));
}

const std::vector<std::vector<std::size_t>>& GroupAlgebra::p_subgroups() const {
    std::call_once(p_subgroups_once_,
                   [this] { p_subgroups_ = small_p_subgroups(*group_, field_->p()); });
    return p_subgroups_;
}

std::string GroupAlgebra::describe() const {
    return "GF(" + std::to_string(field_->q()) + ")[" + group_->id() + "]";
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, Vec coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != alg_->dim()) {
        throw Error(ErrorKind::ContextMismatch, "coefficient vector has length " +
                                                    std::to_string(coeffs_.size()) + ", expected " +
                                                    std::to_string(alg_->dim()));
    }
    for (Elem c : coeffs_) {
        if (c >= alg_->f().q()) throw Error(ErrorKind::FieldMismatch, "coefficient out of range");
    }
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& alg) {
    return {alg, Vec(alg->dim(), 0)};
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& alg) { return basis(alg, 0); }

AlgebraElement AlgebraElement::basis(const AlgebraPtr& alg, std::size_t g) {
    Vec v(alg->dim(), 0);
    v.at(g) = 1;
    return {alg, std::move(v)};
}

AlgebraElement AlgebraElement::sigma(const AlgebraPtr& alg) { return {alg, Vec(alg->dim(), 1)}; }

AlgebraElement AlgebraElement::subset_sum(const AlgebraPtr& alg,
                                          const std::vector<std::size_t>& elems) {
    Vec v(alg->dim(), 0);
    for (auto g : elems) v.at(g) = alg->f().add(v[g], 1);
    return {alg, std::move(v)};
}

std::size_t AlgebraElement::weight() const noexcept {
    std::size_t w = 0;
    for (Elem c : coeffs_) w += c != 0;
    return w;
}

void AlgebraElement::check_same(const AlgebraElement& b) const {
    if (alg_ != b.alg_ &&
        !(alg_->group_ptr() == b.alg_->group_ptr() && same_field(alg_->field(), b.alg_->field()))) {
        throw Error(ErrorKind::ContextMismatch,
                    "elements of " + alg_->describe() + " and " + b.alg_->describe());
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& b) const {
    check_same(b);
    Vec out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alg_->f().add(coeffs_[i], b.coeffs_[i]);
    return {alg_, std::move(out)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& b) const {
    check_same(b);
    Vec out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alg_->f().sub(coeffs_[i], b.coeffs_[i]);
    return {alg_, std::move(out)};
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& b) const { return alg_mul(*this, b); }

AlgebraElement AlgebraElement::scaled(Elem c) const {
    const Elem* mrow = alg_->f().mul_row(c);
    Vec out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mrow[coeffs_[i]];
    return {alg_, std::move(out)};
}

AlgebraElement AlgebraElement::translated(std::size_t g, Side side) const {
    const auto& t = alg_->translate(g, side);
    Vec out(coeffs_.size(), 0);
    for (std::size_t h = 0; h < out.size(); ++h) out[t[h]] = coeffs_[h];
    return {alg_, std::move(out)};
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.alg() != b.alg() && !(a.alg()->group_ptr() == b.alg()->group_ptr() &&
                                same_field(a.alg()->field(), b.alg()->field()))) {
        throw Error(ErrorKind::ContextMismatch,
                    "product of " + a.alg()->describe() + " and " + b.alg()->describe());
    }
    const GroupAlgebra& alg = *a.alg();
    const Field& f = alg.f();
    const std::size_t n = alg.dim();
    Vec out(n, 0);
    for (std::size_t h = 0; h < n; ++h) {
        const Elem ah = a.coeff(h);
        if (!ah) continue;
        const Elem* mrow = f.mul_row(ah);
        const auto& left = alg.translate(h, Side::Left);
        for (std::size_t k = 0; k < n; ++k) {
            const Elem bk = b.coeff(k);
            if (bk) out[left[k]] = f.add(out[left[k]], mrow[bk]);
        }
    }
    return {a.alg(), std::move(out)};
}

Vec hat(const Group& g, std::span<const Elem> coeffs) {
    Vec out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[g.inv(i)] = coeffs[i];
    return out;
}

AlgebraElement hat(const AlgebraElement& a) { return {a.alg(), hat(a.alg()->group(), a.coeffs())}; }

Matrix reg_matrix(const AlgebraElement& v, Side side) {
    const GroupAlgebra& alg = *v.alg();
    const std::size_t n = alg.dim();
    Matrix m(alg.field(), n, n);
    // Left: column j holds v * g_j; Right: column j holds g_j * v.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t h = 0; h < n; ++h) {
            const Elem c = v.coeff(h);
            if (!c) continue;
            const std::size_t row =
                side == Side::Left ? alg.group().mul(h, j) : alg.group().mul(j, h);
            m(row, j) = alg.f().add(m(row, j), c);
        }
    }
    return m;
}

IdealSubspace::IdealSubspace(AlgebraPtr alg, Subspace space, bool right, bool left)
    : alg_(std::move(alg)), space_(std::move(space)), right_(right), left_(left) {}

IdealSubspace IdealSubspace::from_subspace(AlgebraPtr alg, Subspace space) {
    if (space.ambient_dim() != alg->dim() || !same_field(space.field(), alg->field())) {
        throw Error(ErrorKind::AmbientMismatch, "subspace does not live in " + alg->describe());
    }
    const Group& g = alg->group();
    auto closed = [&](Side side) {
        Vec t(alg->dim());
        for (std::size_t r = 0; r < space.dim(); ++r) {
            auto row = space.basis().row(r);
            for (auto gen : g.generators()) {
                const auto& perm = alg->translate(gen, side);
                for (std::size_t h = 0; h < t.size(); ++h) t[perm[h]] = row[h];
                if (!space.contains(t)) return false;
            }
        }
        return true;
    };
    const bool right = closed(Side::Right);
    const bool left = closed(Side::Left);
    return IdealSubspace(std::move(alg), std::move(space), right, left);
}

IdealSubspace IdealSubspace::zero(const AlgebraPtr& alg) {
    return IdealSubspace(alg, Subspace::zero(alg->field(), alg->dim()), true, true);
}

IdealSubspace IdealSubspace::full(const AlgebraPtr& alg) {
    return IdealSubspace(alg, Subspace::full(alg->field(), alg->dim()), true, true);
}

std::string IdealSubspace::side_name() const {
    if (right_ && left_) return "two-sided";
    if (right_) return "right";
    if (left_) return "left";
    return "none";
}

AlgebraElement IdealSubspace::basis_element(std::size_t i) const {
    return {alg_, space_.basis().row_vec(i)};
}

std::size_t principal_dim(const AlgebraElement& v, Side side, std::size_t stop_at) {
    const GroupAlgebra& alg = *v.alg();
    const std::size_t n = alg.dim();
    if (stop_at == 0 || stop_at > n) stop_at = n;
    EchelonBuilder builder(alg.field(), n);
    Vec t(n);
    for (std::size_t g = 0; g < n && builder.rank() < stop_at; ++g) {
        const auto& perm = alg.translate(g, side);
        for (std::size_t h = 0; h < n; ++h) t[perm[h]] = v.coeff(h);
        builder.add(t);
    }
    return builder.rank();
}

IdealSubspace principal_ideal(const AlgebraElement& v, Side side) {
    return generated_ideal(v.alg(), {v}, side);
}

IdealSubspace generated_ideal(const AlgebraPtr& alg, const std::vector<AlgebraElement>& gens,
                              Side side) {
    const std::size_t n = alg->dim();
    EchelonBuilder builder(alg->field(), n);
    Vec t(n);
    for (const auto& v : gens) {
        for (std::size_t g = 0; g < n && builder.rank() < n; ++g) {
            const auto& perm = alg->translate(g, side);
            for (std::size_t h = 0; h < n; ++h) t[perm[h]] = v.coeff(h);
            builder.add(t);
        }
    }
    return IdealSubspace::from_subspace(alg, builder.finish());
}

IdealSubspace annihilator(const AlgebraElement& v, Side side) {
    // ann_r(v) is the kernel of a -> v a, i.e. of L_v.
    const Side mult_side = side == Side::Right ? Side::Left : Side::Right;
    return IdealSubspace::from_subspace(v.alg(), nullspace(reg_matrix(v, mult_side)));
}

IdealSubspace annihilator(const IdealSubspace& s, Side side) {
    const AlgebraPtr& alg = s.alg();
    const std::size_t n = alg->dim();
    const Side mult_side = side == Side::Right ? Side::Left : Side::Right;
    EchelonBuilder builder(alg->field(), n);
    for (std::size_t r = 0; r < s.dim() && builder.rank() < n; ++r) {
        const Matrix m = reg_matrix(s.basis_element(r), mult_side);
        for (std::size_t i = 0; i < n && builder.rank() < n; ++i) builder.add(m.row(i));
    }
    return IdealSubspace::from_subspace(alg, nullspace(builder.finish().basis()));
}

IdealSubspace augmentation_ideal(const AlgebraPtr& alg) {
    const std::size_t n = alg->dim();
    const Elem minus_one = alg->f().neg(1);
    Matrix gens(alg->field(), 0, n);
    Vec v(n);
    for (std::size_t g = 1; g < n; ++g) {
        std::fill(v.begin(), v.end(), 0);
        v[0] = minus_one;
        v[g] = 1;
        gens.append_row(v);
    }
    return IdealSubspace::from_subspace(alg, Subspace::row_space(gens));
}

IdealSubspace radical_power(const AlgebraPtr& alg, unsigned r) {
    const std::size_t n = alg->dim();
    std::size_t base = 0;
    for (unsigned p = 2; p <= n; ++p) {
        if (is_prime(p) && p_part(n, p) == n) {
            base = p;
            break;
        }
    }
    if (n > 1 && base == 0) {
        throw Error(ErrorKind::NotAPGroup, "|G| = " + std::to_string(n) + " is not a prime power");
    }
    if (n > 1 && base != alg->f().p()) {
        throw Error(ErrorKind::CharMismatch, "|G| = " + std::to_string(n) +
                                                 " but char K = " +
                                                 std::to_string(alg->f().p()));
    }
    if (r == 0) return IdealSubspace::full(alg);
    const IdealSubspace j = augmentation_ideal(alg);
    IdealSubspace power = j;
    for (unsigned i = 1; i < r && power.dim() > 0; ++i) power = ideal_product(power, j);
    return power;
}

IdealSubspace ideal_sum(const IdealSubspace& a, const IdealSubspace& b) {
    return IdealSubspace::from_subspace(a.alg(), subspace_sum(a.space(), b.space()));
}

IdealSubspace ideal_intersect(const IdealSubspace& a, const IdealSubspace& b) {
    return IdealSubspace::from_subspace(a.alg(), subspace_intersect(a.space(), b.space()));
}

IdealSubspace ideal_product(const IdealSubspace& a, const IdealSubspace& b) {
    const AlgebraPtr& alg = a.alg();
    const Field& f = alg->f();
    const std::size_t n = alg->dim();
    EchelonBuilder builder(alg->field(), n);
    std::vector<Vec> translates(n, Vec(n));
    Vec prod(n);
    for (std::size_t i = 0; i < a.dim() && builder.rank() < n; ++i) {
        auto x = a.space().basis().row(i);
        // x * y = sum_h y_h (x h)
        for (std::size_t h = 0; h < n; ++h) {
            const auto& perm = alg->translate(h, Side::Right);
            for (std::size_t k = 0; k < n; ++k) translates[h][perm[k]] = x[k];
        }
        for (std::size_t j = 0; j < b.dim() && builder.rank() < n; ++j) {
            auto y = b.space().basis().row(j);
            std::fill(prod.begin(), prod.end(), 0);
            for (std::size_t h = 0; h < n; ++h) {
                if (!y[h]) continue;
                const Elem* mrow = f.mul_row(y[h]);
                for (std::size_t k = 0; k < n; ++k) {
                    if (translates[h][k]) prod[k] = f.add(prod[k], mrow[translates[h][k]]);
                }
            }
            builder.add(prod);
        }
    }
    return IdealSubspace::from_subspace(alg, builder.finish());
}

IdealSubspace hat(const IdealSubspace& s) {
    const Group& g = s.alg()->group();
    Matrix rows(s.alg()->field(), 0, s.alg()->dim());
    for (std::size_t r = 0; r < s.dim(); ++r) rows.append_row(hat(g, s.space().basis().row(r)));
    return IdealSubspace::from_subspace(s.alg(), Subspace::row_space(rows));
}

AlgebraElement parse_element(const AlgebraPtr& alg, std::string_view text) {
    const Field& f = alg->f();
    const Group& g = alg->group();
    Vec coeffs(alg->dim(), 0);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    while (true) {
        skip();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || (text[pos] == '+' && !first))) {
            negative = text[pos] == '-';
            ++pos;
            skip();
        } else if (!first) {
            if (pos >= text.size()) break;
            throw ParseError(pos, "'+' or '-'");
        }
        if (pos >= text.size()) throw ParseError(pos, "term");
        Elem scalar = 1;
        Word word;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            unsigned value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + static_cast<unsigned>(text[pos] - '0');
                if (value >= f.q()) throw ParseError(pos, "scalar below " + std::to_string(f.q()));
                ++pos;
            }
            scalar = static_cast<Elem>(value);
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                word = parse_word(text, pos, g.gen_names());
            } else if (pos < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                word = parse_word(text, pos, g.gen_names());
            }
        } else {
            word = parse_word(text, pos, g.gen_names());
        }
        const std::size_t elem = g.evaluate(word);
        coeffs[elem] = negative ? f.sub(coeffs[elem], scalar) : f.add(coeffs[elem], scalar);
        first = false;
    }
    return {alg, std::move(coeffs)};
}

std::string format_element(const AlgebraElement& a) {
    const Group& g = a.alg()->group();
    std::string out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Elem c = a.coeff(i);
        if (!c) continue;
        if (!out.empty()) out += " + ";
        if (c != 1) {
            out += std::to_string(c);
            if (g.label(i) != "1") out += '*' + g.label(i);
        } else {
            out += g.label(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace gcode
