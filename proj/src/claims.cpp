#include "gcode/claims.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "gcode/error.hpp"
#include "gcode/presentation.hpp"
#include "gcode/random.hpp"
#include "gcode/search.hpp"

namespace gcode {

namespace {

constexpr std::string_view kElementU =
    "1 + a^6*c + a*d^4 + a^3 + a^7*b*d^4 + a^7*c*d^4 + a^7*b*c + a^7*b*c*d^4 + d + a^6*d + "
    "a*c*b*d + a^7*d^5";
constexpr std::string_view kElementV =
    "1 + 2*b + a^3*b^2 + 2*a^3 + 2*a^3*b^3 + 2*c^2*b^3 + c^2*a*b^3";

using Clock = std::chrono::steady_clock;

// Runs body(result) and stamps the elapsed time; exceptions become failures.
ClaimResult timed(int criterion, std::string name, const std::function<void(ClaimResult&)>& body) {
    ClaimResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    const auto start = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

struct CodeParams {
    std::size_t n = 0, k = 0;
    DistanceResult d;
    bool distance_run = false;
};

CodeParams dual_of_principal(const AlgebraElement& v, const ClaimOptions& opts) {
    CodeParams out;
    const IdealSubspace c = dual_ideal(principal_ideal(v, Side::Right));
    out.n = v.alg()->dim();
    out.k = c.dim();
    if (enumeration_size(v.alg()->f().q(), out.k) <= opts.distance_budget) {
        DistanceOptions d;
        d.budget = opts.distance_budget;
        d.threads = opts.threads;
        out.d = min_distance(c.space(), d);
        out.distance_run = true;
    }
    return out;
}

std::string params_text(const CodeParams& c) {
    std::string s = "[" + std::to_string(c.n) + "," + std::to_string(c.k);
    if (c.distance_run && c.d.d) {
        s += "," + std::to_string(*c.d.d) + "] (" + to_string(c.d.method) + ", " +
             std::to_string(c.d.enumerated) + " words)";
    } else {
        s += "] (distance not enumerated: exceeds budget)";
    }
    return s;
}

bool matches(const CodeParams& c, std::size_t n, std::size_t k, std::size_t d) {
    return c.n == n && c.k == k && c.distance_run && c.d.d == d &&
           c.d.method == DistanceMethod::Exhausted;
}

AlgebraElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng) {
    Vec c(alg->dim());
    for (auto& x : c) x = static_cast<Elem>(rng() % alg->f().q());
    return {alg, std::move(c)};
}

AlgebraElement power(const AlgebraElement& a, std::uint64_t e) {
    AlgebraElement result = AlgebraElement::one(a.alg());
    AlgebraElement base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool group_invariants_hold(const Group& g, std::string& why) {
    const std::size_t n = g.order();
    std::vector<char> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < n; ++b) {
            if (seen[g.mul(a, b)]++) {
                why = "row " + std::to_string(a) + " repeats an entry";
                return false;
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < n; ++b) {
            if (seen[g.mul(b, a)]++) {
                why = "column " + std::to_string(a) + " repeats an entry";
                return false;
            }
        }
        if (g.mul(a, 0) != a || g.mul(0, a) != a) {
            why = "element 0 is not the identity";
            return false;
        }
        if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) {
            why = "bad inverse of " + g.label(a);
            return false;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab = g.mul(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
                    why = "not associative";
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

const std::vector<CatalogEntry>& classification_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {"c6", 2, true},      {"c6", 3, true},  {"c12", 2, true}, {"c12", 3, true},
        {"klein4", 2, false}, {"d8", 2, false}, {"q8", 2, false}, {"s3", 2, true},
        {"s3", 3, false},     {"s4", 2, false}, {"s4", 3, false}, {"a4", 2, false},
        {"a4", 3, true},      {"d24", 2, false}, {"d24", 3, false}, {"g48", 2, false},
        {"g48", 3, true},
    };
    return catalog;
}

AlgebraElement idempotent_power(const AlgebraElement& a) {
    const GroupAlgebra& alg = *a.alg();
    const std::uint64_t q = alg.f().q(), p = alg.f().p();
    AlgebraElement e = a;
    std::uint64_t qi = 1;
    for (std::size_t i = 1; i <= alg.dim(); ++i) {
        qi *= q;
        if (qi > (std::uint64_t{1} << 62)) break;  // exponents beyond this repeat earlier factors
        e = power(e, qi - 1);
    }
    std::uint64_t pc = 1;
    while (pc < alg.dim()) pc *= p;
    return power(e, pc);
}

std::vector<ClaimResult> check_binary_code(const ClaimOptions& opts) {
    std::vector<ClaimResult> out;
    out.push_back(timed(1, "binary group code from the order-64 presentation", [&](ClaimResult& r) {
        auto g = todd_coxeter(parse_presentation(kPresentationG64), 1'000'000, "g64");
        auto alg = GroupAlgebra::create(g, Field::create(2, 1));
        const AlgebraElement u = parse_element(alg, kElementU);
        r.detail = "|G| = " + std::to_string(g->order()) + ", wt(u) = " +
                   std::to_string(u.weight()) + ", dual of uKG ";
        const CodeParams c = dual_of_principal(u, opts);
        r.detail += params_text(c) + "; expected [64,32,12]";
        r.pass = matches(c, 64, 32, 12);
    }));
    if (opts.completed_g64) {
        out.push_back(timed(0, "same u with relation d^2 = a^6 b added", [&](ClaimResult& r) {
            r.gating = false;
            auto g = todd_coxeter(parse_presentation(kPresentationG64Completed), 1'000'000, "g64c");
            auto alg = GroupAlgebra::create(g, Field::create(2, 1));
            const AlgebraElement u = parse_element(alg, kElementU);
            const CodeParams c = dual_of_principal(u, opts);
            r.detail = "|G| = " + std::to_string(g->order()) + ", wt(u) = " +
                       std::to_string(u.weight()) + ", dual of uKG " + params_text(c);
            r.pass = matches(c, 64, 32, 12);
        }));
    }
    return out;
}

std::vector<ClaimResult> check_ternary_code(const ClaimOptions& opts) {
    return {timed(2, "ternary group code from the order-48 presentation", [&](ClaimResult& r) {
        auto g = todd_coxeter(parse_presentation(kPresentationG48), 1'000'000, "g48");
        auto alg = GroupAlgebra::create(g, Field::create(3, 1));
        const AlgebraElement v = parse_element(alg, kElementV);
        const CodeParams c = dual_of_principal(v, opts);
        r.detail = "|G| = " + std::to_string(g->order()) + ", wt(v) = " +
                   std::to_string(v.weight()) + ", dual of vKG " + params_text(c) +
                   "; expected [48,15,18]";
        r.pass = matches(c, 48, 15, 18);
    })};
}

std::vector<ClaimResult> check_klein_pair(const ClaimOptions& opts) {
    return {timed(3, "K*sigma not checkable, J checkable in F2[C2xC2]", [&](ClaimResult& r) {
        auto alg = GroupAlgebra::create(elem_abelian(2, 2), Field::create(2, 1));
        const IdealSubspace ks = principal_ideal(AlgebraElement::sigma(alg), Side::Right);
        PrincipalityOptions exhaustive = opts.principality;
        exhaustive.local_algebra = false;
        exhaustive.restriction_bound = false;
        const CheckabilityVerdict a = checkable_test(ks, exhaustive);
        const CheckabilityVerdict a_local = checkable_test(ks, opts.principality);
        const IdealSubspace j = augmentation_ideal(alg);
        const CheckabilityVerdict b = checkable_test(j, opts.principality);
        r.detail = std::string("K*sigma: ") + to_string(a.status) + " via " +
                   to_string(a.via.method) + " (" + a.via.detail + "), local path " +
                   to_string(a_local.status) + "; J: " + to_string(b.status);
        if (b.check_element) r.detail += " with v = " + format_element(*b.check_element);
        r.pass = a.status == CheckStatus::NotCheckable && a.via.method == VerdictMethod::Exhaustive &&
                 a.via.trials_used == 7 && a_local.status == CheckStatus::NotCheckable &&
                 b.status == CheckStatus::Checkable && ks.space() == dual_ideal(j).space();
    })};
}

std::vector<ClaimResult> check_radical_powers(const ClaimOptions& opts) {
    return {timed(4, "radical powers of F_p[elementary abelian]", [&](ClaimResult& r) {
        r.pass = true;
        for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
            const RadicalPowerReport rep = reed_muller_experiment(p, m, opts.principality);
            std::string principal, checkable;
            for (const auto& row : rep.rows) {
                if (row.principal.status == PrincipalStatus::Principal) {
                    principal += " J^" + std::to_string(row.r);
                }
                if (row.checkable.status == CheckStatus::Checkable && row.dim > 0) {
                    checkable += " J^" + std::to_string(row.r);
                }
            }
            if (!r.detail.empty()) r.detail += "; ";
            r.detail += "(" + std::to_string(p) + "," + std::to_string(m) + ") principal:" +
                        principal + ", checkable nonzero:" + checkable;
            r.pass = r.pass && rep.principal_claim && rep.checkable_claim;
        }
    })};
}

std::vector<ClaimResult> check_classification(const ClaimOptions& opts) {
    return {timed(5, "code-checkable classification over the catalog", [&](ClaimResult& r) {
        r.pass = true;
        std::size_t sampled = 0, witnesses = 0;
        for (const auto& entry : classification_catalog()) {
            auto g = preset_group(entry.preset);
            auto alg = GroupAlgebra::create(g, Field::create(entry.p, 1));
            const std::string tag = std::string(entry.preset) + "/p=" + std::to_string(entry.p);
            const bool predicate = classify_code_checkable(*g, alg->f());
            if (predicate != entry.code_checkable) {
                r.pass = false;
                r.detail += tag + " predicate disagrees with table; ";
                continue;
            }
            if (predicate) {
                for (unsigned i = 0; i < opts.cases; ++i) {
                    const IdealSubspace c = random_right_ideal(alg, opts.seed, i);
                    const CheckabilityVerdict v = checkable_test(c, opts.principality);
                    ++sampled;
                    if (v.status != CheckStatus::Checkable) {
                        r.pass = false;
                        r.detail += tag + " random ideal #" + std::to_string(i) + " " +
                                    to_string(v.status) + "; ";
                        break;
                    }
                }
            } else {
                WitnessOptions w;
                w.seed = opts.seed;
                w.principality = opts.principality;
                const auto found = non_checkable_witness_search(alg, w);
                if (!found) {
                    r.pass = false;
                    r.detail += tag + " no non-checkable witness; ";
                } else {
                    ++witnesses;
                }
            }
        }
        r.detail += std::to_string(classification_catalog().size()) + " (group, p) cases, " +
                    std::to_string(sampled) + " sampled ideals checkable, " +
                    std::to_string(witnesses) + " exact witnesses";
    })};
}

std::vector<ClaimResult> check_annihilators(const ClaimOptions& opts) {
    return {timed(6, "annihilators agree with brute force", [&](ClaimResult& r) {
        const std::vector<std::pair<const char*, const char*>> algebras = {
            {"c2", "GF(2)"},  {"c3", "GF(2)"},     {"c4", "GF(2)"},  {"c5", "GF(2)"},
            {"c6", "GF(2)"},  {"c7", "GF(2)"},     {"c8", "GF(2)"},  {"c12", "GF(2)"},
            {"klein4", "GF(2)"}, {"d8", "GF(2)"},  {"q8", "GF(2)"},  {"s3", "GF(2)"},
            {"a4", "GF(2)"},  {"d12", "GF(2)"},    {"c2", "GF(3)"},  {"c3", "GF(3)"},
            {"c4", "GF(3)"},  {"c5", "GF(3)"},     {"c6", "GF(3)"},  {"c7", "GF(3)"},
            {"s3", "GF(3)"},  {"klein4", "GF(3)"}, {"c3", "GF(4)"},  {"s3", "GF(4)"},
        };
        std::size_t checked = 0;
        r.pass = true;
        for (auto [preset, field] : algebras) {
            auto alg = GroupAlgebra::create(preset_group(preset), Field::parse(field));
            const std::size_t n = alg->dim();
            const unsigned q = alg->f().q();
            for (unsigned i = 0; i < 50; ++i) {
                auto rng = trial_rng(opts.seed, i);
                const AlgebraElement v = random_element(alg, rng);
                const IdealSubspace ann = annihilator(v, Side::Right);
                // brute force: every a with v*a = 0
                Vec a(n, 0);
                std::uint64_t zeros = 0;
                bool contained = true;
                for (;;) {
                    if ((v * AlgebraElement(alg, a)).is_zero()) {
                        ++zeros;
                        if (!ann.space().contains(a)) contained = false;
                    }
                    std::size_t j = 0;
                    while (j < n && a[j] == q - 1) a[j++] = 0;
                    if (j == n) break;
                    ++a[j];
                }
                std::uint64_t expected = 1;
                for (std::size_t j = 0; j < ann.dim(); ++j) expected *= q;
                ++checked;
                if (!contained || zeros != expected) {
                    r.pass = false;
                    r.detail += std::string(preset) + " over " + field + " case " +
                                std::to_string(i) + " disagrees; ";
                }
            }
        }
        r.detail += std::to_string(algebras.size()) + " algebras, " + std::to_string(checked) +
                    " elements";
    })};
}

std::vector<ClaimResult> check_properties(const ClaimOptions& opts) {
    return {timed(7, "algebraic property suites", [&](ClaimResult& r) {
        const std::vector<std::pair<const char*, const char*>> algebras = {
            {"s3", "GF(2)"}, {"s3", "GF(3)"}, {"d8", "GF(2)"}, {"s3", "GF(4)"}, {"c6", "GF(3)"},
            {"a4", "GF(2)"},
        };
        std::size_t failures = 0, idempotents = 0;
        auto fail = [&](const std::string& what) {
            if (failures++ < 5) r.detail += what + "; ";
        };
        for (auto [preset, field] : algebras) {
            auto alg = GroupAlgebra::create(preset_group(preset), Field::parse(field));
            const std::string tag = std::string(preset) + "/" + field;
            const std::size_t n = alg->dim();
            for (unsigned i = 0; i < opts.cases; ++i) {
                auto rng = trial_rng(opts.seed ^ 0x9e3779b97f4a7c15ull, i);
                const IdealSubspace c = random_right_ideal(alg, opts.seed, i);
                const IdealSubspace left = annihilator(c, Side::Left);
                if (!(annihilator(left, Side::Right).space() == c.space())) {
                    fail(tag + " double annihilator #" + std::to_string(i));
                }
                if (!macwilliams_dual_check(c)) fail(tag + " dual vs hat(ann_l) #" + std::to_string(i));
                if (c.dim() + dual_ideal(c).dim() != n) fail(tag + " dimension sum #" + std::to_string(i));
                const AlgebraElement a = random_element(alg, rng), b = random_element(alg, rng);
                if (!(hat(a * b) == hat(b) * hat(a))) fail(tag + " hat antiautomorphism #" + std::to_string(i));
                const AlgebraElement e = idempotent_power(random_element(alg, rng));
                if (!(e * e == e)) {
                    fail(tag + " idempotent power #" + std::to_string(i));
                } else {
                    ++idempotents;
                    const CheckabilityVerdict v =
                        checkable_test(principal_ideal(e, Side::Right), opts.principality);
                    if (v.status != CheckStatus::Checkable) fail(tag + " eKG not checkable #" + std::to_string(i));
                }
            }
            SearchOptions so;
            so.trials = opts.cases;
            so.seed = opts.seed;
            so.distance.threads = opts.threads;
            for (const auto& rec : random_checkable_search(alg, so).records) {
                const AlgebraElement v = parse_element(alg, rec.generator);
                const IdealSubspace code = dual_ideal(principal_ideal(v, Side::Right));
                if (code.dim() != rec.k || !verify_check_element(hat(v), code.space())) {
                    fail(tag + " search record " + rec.generator);
                }
            }
        }
        r.pass = failures == 0;
        r.detail += std::to_string(algebras.size()) + " algebras x " + std::to_string(opts.cases) +
                    " cases, " + std::to_string(idempotents) + " idempotents, " +
                    std::to_string(failures) + " failures";
    })};
}

std::vector<ClaimResult> check_presentations(const ClaimOptions&) {
    std::vector<ClaimResult> out;
    out.push_back(timed(8, "coset enumeration and group invariants", [&](ClaimResult& r) {
        r.pass = true;
        const std::vector<std::tuple<const char*, std::string_view, std::size_t>> pres = {
            {"d24", kPresentationD24, 24}, {"g64", kPresentationG64, 64}, {"g48", kPresentationG48, 48}};
        for (auto [name, text, expected] : pres) {
            auto g = todd_coxeter(parse_presentation(text), 1'000'000, name);
            std::string why;
            const bool ok = g->order() == expected && group_invariants_hold(*g, why);
            r.detail += std::string(name) + " order " + std::to_string(g->order()) + " (expected " +
                        std::to_string(expected) + (why.empty() ? "" : ", " + why) + "); ";
            r.pass = r.pass && ok;
        }
        std::size_t presets = 0;
        for (const auto& name : preset_names()) {
            auto g = preset_group(name);
            std::string why;
            if (!group_invariants_hold(*g, why)) {
                r.pass = false;
                r.detail += name + ": " + why + "; ";
            }
            ++presets;
        }
        r.detail += std::to_string(presets) + " presets satisfy the group axioms";
    }));
    out.push_back(timed(0, "order-64 presentation with d^2 = a^6 b added", [&](ClaimResult& r) {
        r.gating = false;
        auto g = todd_coxeter(parse_presentation(kPresentationG64Completed), 1'000'000, "g64c");
        std::string why;
        r.pass = g->order() == 64 && group_invariants_hold(*g, why);
        r.detail = "order " + std::to_string(g->order()) + (why.empty() ? "" : ", " + why);
    }));
    return out;
}

std::vector<ClaimResult> check_golay(const ClaimOptions& opts) {
    return {timed(9, "self-dual [24,12,8] principal ideal in F2[D24]", [&](ClaimResult& r) {
        r.gating = false;
        const auto found = golay_search(opts.seed, opts.golay_trials);
        if (!found) {
            r.pass = true;
            r.detail = "none found within " + std::to_string(opts.golay_trials) +
                       " trials (reported, not failed)";
            return;
        }
        const auto& w = found->weights;
        r.pass = found->self_dual && found->record.k == 12 && w.size() > 8 && w[8] == 759;
        r.detail = "v = " + format_element(found->generator) + " after " +
                   std::to_string(found->trials_used) + " trials, A_8 = " + std::to_string(w[8]) +
                   ", A_12 = " + std::to_string(w[12]) + ", A_16 = " + std::to_string(w[16]);
    })};
}

std::vector<ClaimResult> run_claims(const std::string& scope, const ClaimOptions& opts) {
    using Check = std::vector<ClaimResult> (*)(const ClaimOptions&);
    std::vector<Check> checks;
    if (scope == "all" || scope == "acceptance") {
        checks = {check_binary_code,   check_ternary_code, check_klein_pair,
                  check_radical_powers, check_classification, check_annihilators,
                  check_properties,    check_presentations, check_golay};
    } else if (scope == "remark29") {
        checks = {check_binary_code, check_ternary_code};
    } else if (scope == "ex211") {
        checks = {check_klein_pair};
    } else if (scope == "reed_muller") {
        checks = {check_radical_powers};
    } else if (scope == "classification") {
        checks = {check_classification};
    } else if (scope == "golay") {
        checks = {check_golay};
    } else {
        throw Error(ErrorKind::ParseError, "unknown scope '" + scope + "'");
    }
    std::vector<ClaimResult> out;
    for (Check c : checks) {
        for (auto& r : c(opts)) out.push_back(std::move(r));
    }
    return out;
}

std::string format_claim(const ClaimResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    std::string out = r.criterion == 0 ? (r.pass ? "INFO" : "INFO-FAIL") : (r.pass ? "PASS" : "FAIL");
    if (r.criterion) out += " [" + std::to_string(r.criterion) + "]";
    out += " " + r.name;
    if (!r.gating && r.criterion) out += " (non-gating)";
    out += " (" + std::string(secs) + "): " + r.detail;
    return out;
}

}  // namespace gcode
