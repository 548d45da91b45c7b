#include "gcode/checkability.hpp"

#include <bit>

#include "gcode/code.hpp"
#include "gcode/error.hpp"
#include "gcode/random.hpp"

namespace gcode {

const char* to_string(PrincipalStatus s) noexcept {
    switch (s) {
        case PrincipalStatus::Principal: return "principal";
        case PrincipalStatus::NotPrincipal: return "not-principal";
        case PrincipalStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::Checkable: return "checkable";
        case CheckStatus::NotCheckable: return "not-checkable";
        case CheckStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(VerdictMethod m) noexcept {
    switch (m) {
        case VerdictMethod::Exhaustive: return "exhaustive";
        case VerdictMethod::Randomized: return "randomized";
        case VerdictMethod::LocalAlgebra: return "local-algebra";
    }
    return "?";
}

namespace {

// Coordinates of (b_i * g) in the basis of M, for every g and i. M's basis is
// in reduced echelon form, so coordinates are the entries at the pivots.
std::vector<std::vector<Vec>> translate_coords(const IdealSubspace& m, Side side) {
    const GroupAlgebra& alg = *m.alg();
    const std::size_t n = alg.dim(), d = m.dim();
    const auto& pivots = m.space().pivots();
    std::vector<std::vector<Vec>> out(n, std::vector<Vec>(d, Vec(d)));
    Vec t(n);
    for (std::size_t g = 0; g < n; ++g) {
        const auto& perm = alg.translate(g, side);
        for (std::size_t i = 0; i < d; ++i) {
            auto row = m.space().basis().row(i);
            for (std::size_t h = 0; h < n; ++h) t[perm[h]] = row[h];
            for (std::size_t j = 0; j < d; ++j) out[g][i][j] = t[pivots[j]];
        }
    }
    return out;
}

AlgebraElement from_coords(const IdealSubspace& m, const Vec& c) {
    return {m.alg(), m.space().combine(c)};
}

std::optional<Vec> exhaustive_binary(const IdealSubspace& m, Side side) {
    const std::size_t n = m.alg()->dim(), d = m.dim();
    const auto coords = translate_coords(m, side);
    std::vector<std::vector<std::uint64_t>> masks(d, std::vector<std::uint64_t>(n, 0));
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                if (coords[g][i][j]) masks[i][g] |= std::uint64_t{1} << j;
            }
        }
    }
    std::vector<std::uint64_t> rows(n, 0);
    std::uint64_t c = 0;
    std::vector<std::uint64_t> basis(64);
    const std::uint64_t steps = (std::uint64_t{1} << d) - 1;
    for (std::uint64_t step = 1; step <= steps; ++step) {
        const unsigned flip = static_cast<unsigned>(std::countr_zero(step));
        c ^= std::uint64_t{1} << flip;
        for (std::size_t g = 0; g < n; ++g) rows[g] ^= masks[flip][g];
        // rank of {rows[g]} via an xor basis indexed by leading bit
        std::fill(basis.begin(), basis.begin() + d, 0);
        std::size_t rank = 0;
        for (std::size_t g = 0; g < n && rank < d; ++g) {
            std::uint64_t x = rows[g];
            while (x) {
                const unsigned top = 63 - std::countl_zero(x);
                if (!basis[top]) {
                    basis[top] = x;
                    ++rank;
                    break;
                }
                x ^= basis[top];
            }
        }
        if (rank == d) {
            Vec out(d);
            for (std::size_t j = 0; j < d; ++j) out[j] = (c >> j) & 1;
            return out;
        }
    }
    return std::nullopt;
}

std::optional<Vec> exhaustive_qary(const IdealSubspace& m, Side side) {
    const Field& f = m.alg()->f();
    const std::size_t n = m.alg()->dim(), d = m.dim();
    const auto coords = translate_coords(m, side);
    Vec c(d, 0);
    Vec row(d);
    for (std::size_t lead = 0; lead < d; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        for (;;) {
            EchelonBuilder builder(m.alg()->field(), d);
            for (std::size_t g = 0; g < n && builder.rank() < d; ++g) {
                std::fill(row.begin(), row.end(), 0);
                for (std::size_t i = lead; i < d; ++i) {
                    if (!c[i]) continue;
                    const Elem* mr = f.mul_row(c[i]);
                    for (std::size_t j = 0; j < d; ++j) row[j] = f.add(row[j], mr[coords[g][i][j]]);
                }
                builder.add(row);
            }
            if (builder.rank() == d) return c;
            std::size_t i = lead + 1;
            while (i < d && c[i] == f.q() - 1) c[i++] = 0;
            if (i == d) break;
            ++c[i];
        }
    }
    return std::nullopt;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

std::string subgroup_text(const Group& g, const std::vector<std::size_t>& h) {
    std::string s = "{";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + g.label(h[i]);
    return s + "}";
}

PrincipalityVerdict principal(const AlgebraElement& w, VerdictMethod method) {
    PrincipalityVerdict v;
    v.status = PrincipalStatus::Principal;
    v.witness = w;
    v.method = method;
    return v;
}

}  // namespace

std::size_t top_dimension(const IdealSubspace& m, Side side, const std::vector<std::size_t>& h) {
    const GroupAlgebra& alg = *m.alg();
    const Field& f = alg.f();
    const std::size_t n = alg.dim();
    EchelonBuilder builder(alg.field(), n);
    Vec t(n);
    for (std::size_t r = 0; r < m.dim(); ++r) {
        auto row = m.space().basis().row(r);
        for (auto x : h) {
            if (x == 0) continue;
            const auto& perm = alg.translate(x, side);
            for (std::size_t i = 0; i < n; ++i) t[perm[i]] = row[i];
            for (std::size_t i = 0; i < n; ++i) t[i] = f.sub(t[i], row[i]);
            builder.add(t);
            if (builder.rank() + 1 >= m.dim()) return m.dim() - builder.rank();
        }
    }
    return m.dim() - builder.rank();
}

PrincipalityVerdict principality_test(const IdealSubspace& m, Side side,
                                      const PrincipalityOptions& opts) {
    if (!m.is_ideal(side)) {
        throw Error(ErrorKind::SideMismatch,
                    std::string("subspace is not a ") + to_string(side) + " ideal");
    }
    const AlgebraPtr& alg = m.alg();
    const Group& g = alg->group();
    const std::size_t d = m.dim();
    if (d == 0) {
        auto v = principal(AlgebraElement::zero(alg), VerdictMethod::Exhaustive);
        v.detail = "zero ideal";
        return v;
    }

    if (opts.local_algebra && alg->is_local()) {
        std::vector<std::size_t> all(g.order());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        const std::size_t top = top_dimension(m, side, all);
        PrincipalityVerdict v;
        v.method = VerdictMethod::LocalAlgebra;
        v.detail = "dim M/MJ = " + std::to_string(top);
        if (top > 1) {
            v.status = PrincipalStatus::NotPrincipal;
            return v;
        }
        // Any element outside MJ generates M.
        for (std::size_t r = 0; r < d; ++r) {
            AlgebraElement w = m.basis_element(r);
            if (principal_dim(w, side, d) == d) {
                v.status = PrincipalStatus::Principal;
                v.witness = w;
                return v;
            }
        }
        throw Error(ErrorKind::VerificationFailed, "no basis element generates a local ideal");
    }

    const unsigned p = alg->f().p();
    if (opts.restriction_bound && g.order() % p == 0) {
        for (const auto& h : alg->p_subgroups()) {
            const std::size_t index = g.order() / h.size();
            if (d <= index) break;  // the bound cannot fire for this or smaller H
            const std::size_t top = top_dimension(m, side, h);
            if (top > index) {
                PrincipalityVerdict v;
                v.status = PrincipalStatus::NotPrincipal;
                v.method = VerdictMethod::LocalAlgebra;
                v.detail = "dim M/M·I_H = " + std::to_string(top) + " > |G:H| = " +
                           std::to_string(index) + " for H = " + subgroup_text(g, h);
                return v;
            }
        }
    }

    const unsigned q = alg->f().q();
    if (saturating_pow(q, d) <= opts.exhaustive_budget) {
        auto c = q == 2 ? exhaustive_binary(m, side) : exhaustive_qary(m, side);
        PrincipalityVerdict v;
        v.method = VerdictMethod::Exhaustive;
        v.trials_used = enumeration_size(q, d);
        if (c) {
            v.status = PrincipalStatus::Principal;
            v.witness = from_coords(m, *c);
            if (principal_dim(*v.witness, side) != d) {
                throw Error(ErrorKind::VerificationFailed, "exhaustive witness does not generate");
            }
        } else {
            v.status = PrincipalStatus::NotPrincipal;
            v.detail = "no generator among " + std::to_string(v.trials_used) + " elements";
        }
        return v;
    }

    PrincipalityVerdict v;
    v.method = VerdictMethod::Randomized;
    v.seed = opts.seed;
    Vec c(d);
    for (unsigned t = 0; t < opts.random_trials; ++t) {
        auto rng = trial_rng(opts.seed, t);
        for (auto& x : c) x = static_cast<Elem>(rng() % q);
        AlgebraElement w = from_coords(m, c);
        v.trials_used = t + 1;
        if (principal_dim(w, side, d) == d) {
            v.status = PrincipalStatus::Principal;
            v.witness = w;
            return v;
        }
    }
    v.detail = "no generator in " + std::to_string(v.trials_used) + " random trials";
    return v;
}

CheckabilityVerdict checkable_test(const IdealSubspace& c, const PrincipalityOptions& opts) {
    if (!c.is_right()) throw Error(ErrorKind::NotARightIdeal, "code is not a right ideal");
    const IdealSubspace dual = dual_ideal(c);
    CheckabilityVerdict out;
    out.via = principality_test(dual, Side::Right, opts);
    switch (out.via.status) {
        case PrincipalStatus::Principal: {
            AlgebraElement v = hat(*out.via.witness);
            if (!verify_check_element(v, c.space())) {
                throw Error(ErrorKind::VerificationFailed, "ann_r(hat(w)) differs from the code");
            }
            out.status = CheckStatus::Checkable;
            out.check_element = std::move(v);
            break;
        }
        case PrincipalStatus::NotPrincipal: out.status = CheckStatus::NotCheckable; break;
        case PrincipalStatus::Unknown: out.status = CheckStatus::Unknown; break;
    }
    return out;
}

bool verify_check_element(const AlgebraElement& v, const Subspace& code) {
    if (code.ambient_dim() != v.alg()->dim() || !same_field(code.field(), v.alg()->field())) {
        return false;
    }
    return annihilator(v, Side::Right).space() == code;
}

bool classify_code_checkable(const Group& g, const Field& k) {
    const unsigned p = k.p();
    if (g.order() % p != 0) return true;
    const auto report = is_p_nilpotent_cyclic_sylow(g, p);
    return report.p_nilpotent && report.cyclic_sylow;
}

RadicalPowerReport reed_muller_experiment(unsigned p, unsigned m, const PrincipalityOptions& opts) {
    if (m < 2) throw Error(ErrorKind::ScaleExceeded, "rank m must be at least 2");
    if (saturating_pow(p, m) > 81) {
        throw Error(ErrorKind::ScaleExceeded, "p^m must be at most 81");
    }
    auto alg = GroupAlgebra::create(elem_abelian(p, m), Field::create(p, 1));
    RadicalPowerReport report;
    report.p = p;
    report.m = m;
    report.top = m * (p - 1);
    const IdealSubspace j = augmentation_ideal(alg);
    IdealSubspace power = IdealSubspace::full(alg);
    for (unsigned r = 0; r <= report.top + 1; ++r) {
        if (r > 0) power = r == 1 ? j : ideal_product(power, j);
        RadicalPowerRow row;
        row.r = r;
        row.dim = power.dim();
        row.principal = principality_test(power, Side::Right, opts);
        row.checkable = checkable_test(power, opts);
        report.rows.push_back(std::move(row));
    }
    report.principal_claim = true;
    report.checkable_claim = true;
    for (const auto& row : report.rows) {
        const bool expect_principal = row.r == 0 || row.r >= report.top;
        const bool is_principal = row.principal.status == PrincipalStatus::Principal;
        if (is_principal != expect_principal) report.principal_claim = false;
        if (row.r == report.top && row.dim != 1) report.principal_claim = false;
        if (row.r == report.top + 1 && row.dim != 0) report.principal_claim = false;
        if (row.dim > 0) {
            const bool expect_checkable = row.r <= 1;
            const bool is_checkable = row.checkable.status == CheckStatus::Checkable;
            if (is_checkable != expect_checkable) report.checkable_claim = false;
        }
    }
    return report;
}

}  // namespace gcode
