#include <doctest.h>

#include "gcode/checkability.hpp"
#include "gcode/claims.hpp"
#include "gcode/code.hpp"
#include "gcode/search.hpp"
#include "helpers.hpp"

using namespace gcode;
using testing::error_kind_of;
using testing::random_element;

namespace {

AlgebraPtr make(const std::string& group, const std::string& field) {
    return GroupAlgebra::create(preset_group(group), Field::parse(field));
}

PrincipalityOptions exhaustive_only() {
    PrincipalityOptions o;
    o.local_algebra = false;
    o.restriction_bound = false;
    o.exhaustive_budget = std::uint64_t{1} << 24;
    return o;
}

std::vector<std::size_t> all_elements(const Group& g) {
    std::vector<std::size_t> out(g.order());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

}  // namespace

TEST_SUITE("checkability") {

TEST_CASE("Klein four group in characteristic two") {
    auto alg = make("klein4", "GF(2)");
    auto j = augmentation_ideal(alg);
    auto ks = principal_ideal(AlgebraElement::sigma(alg), Side::Right);
    CHECK(ks.dim() == 1);
    CHECK(dual_ideal(ks) == j);

    CHECK(top_dimension(j, Side::Right, all_elements(alg->group())) == 2);
    auto pj = principality_test(j, Side::Right);
    CHECK(pj.status == PrincipalStatus::NotPrincipal);
    CHECK(pj.method == VerdictMethod::LocalAlgebra);
    auto pe = principality_test(j, Side::Right, exhaustive_only());
    CHECK(pe.status == PrincipalStatus::NotPrincipal);
    CHECK(pe.method == VerdictMethod::Exhaustive);
    CHECK(pe.trials_used == 7);

    auto cj = checkable_test(j);
    CHECK(cj.status == CheckStatus::Checkable);
    REQUIRE(cj.check_element);
    CHECK(verify_check_element(*cj.check_element, j.space()));
    CHECK(annihilator(*cj.check_element, Side::Right) == j);

    CHECK(checkable_test(ks).status == CheckStatus::NotCheckable);
}

TEST_CASE("zero and full ideals") {
    auto alg = make("s3", "GF(2)");
    auto z = principality_test(IdealSubspace::zero(alg), Side::Right);
    CHECK(z.status == PrincipalStatus::Principal);
    REQUIRE(z.witness);
    CHECK(z.witness->is_zero());
    auto full = checkable_test(IdealSubspace::full(alg));
    CHECK(full.status == CheckStatus::Checkable);
    CHECK(checkable_test(IdealSubspace::zero(alg)).status == CheckStatus::Checkable);
}

TEST_CASE("principal ideals are recognised with a generating witness") {
    std::mt19937_64 rng(3);
    for (auto [g, f] : {std::pair{"s3", "GF(3)"}, {"d8", "GF(2)"}, {"a4", "GF(2)"}, {"klein4", "GF(2)"}}) {
        auto alg = make(g, f);
        for (int t = 0; t < 15; ++t) {
            auto m = principal_ideal(random_element(rng, alg), Side::Right);
            auto v = principality_test(m, Side::Right);
            CHECK(v.status == PrincipalStatus::Principal);
            REQUIRE(v.witness);
            CHECK(principal_ideal(*v.witness, Side::Right) == m);
        }
    }
}

TEST_CASE("fast certificates agree with exhaustive search") {
    // The local and restriction shortcuts must never contradict the exact path.
    for (auto [g, f] : {std::pair{"a4", "GF(2)"}, {"d8", "GF(2)"}, {"s3", "GF(3)"}, {"klein4", "GF(2)"}}) {
        auto alg = make(g, f);
        for (std::uint64_t t = 0; t < 40; ++t) {
            auto m = random_right_ideal(alg, 99, t);
            auto fast = principality_test(m, Side::Right);
            auto exact = principality_test(m, Side::Right, exhaustive_only());
            CAPTURE(g);
            CAPTURE(t);
            REQUIRE(exact.status != PrincipalStatus::Unknown);
            if (fast.status != PrincipalStatus::Unknown) CHECK(fast.status == exact.status);
        }
    }
}

TEST_CASE("the randomized path never claims a negative") {
    PrincipalityOptions o;
    o.local_algebra = false;
    o.restriction_bound = false;
    o.exhaustive_budget = 0;
    o.random_trials = 20;
    auto alg = make("klein4", "GF(2)");
    auto v = principality_test(augmentation_ideal(alg), Side::Right, o);
    CHECK(v.status == PrincipalStatus::Unknown);
    CHECK(v.method == VerdictMethod::Randomized);
    CHECK(v.trials_used == 20);

    std::mt19937_64 rng(9);
    auto alg2 = make("s3", "GF(3)");
    for (int t = 0; t < 10; ++t) {
        auto m = principal_ideal(random_element(rng, alg2), Side::Right);
        auto r = principality_test(m, Side::Right, o);
        CHECK(r.status != PrincipalStatus::NotPrincipal);
    }
}

TEST_CASE("randomized verdicts are reproducible from the seed") {
    PrincipalityOptions o;
    o.local_algebra = false;
    o.restriction_bound = false;
    o.exhaustive_budget = 0;
    auto alg = make("s4", "GF(3)");
    auto m = principal_ideal(parse_element(alg, "1 + 2*" + alg->group().label(1)), Side::Right);
    auto a = principality_test(m, Side::Right, o);
    auto b = principality_test(m, Side::Right, o);
    CHECK(a.status == b.status);
    CHECK(a.trials_used == b.trials_used);
    REQUIRE(a.witness);
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("side must match") {
    auto alg = make("s3", "GF(2)");
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto left = principal_ideal(random_element(rng, alg), Side::Left);
        if (left.is_right()) continue;
        CHECK(error_kind_of([&] { principality_test(left, Side::Right); }) == ErrorKind::SideMismatch);
        return;
    }
    FAIL("no one-sided left ideal found");
}

TEST_CASE("classification predicate") {
    for (const auto& e : classification_catalog()) {
        CAPTURE(e.preset);
        CAPTURE(e.p);
        CHECK(classify_code_checkable(*preset_group(e.preset), *Field::create(e.p, 1)) == e.code_checkable);
    }
    // semisimple case
    CHECK(classify_code_checkable(*preset_group("s4"), *Field::create(5, 1)));
    CHECK(classify_code_checkable(*preset_group("klein4"), *Field::create(3, 1)));
}

TEST_CASE("every right ideal is checkable in a semisimple algebra") {
    auto alg = make("s3", "GF(5)");
    for (std::uint64_t t = 0; t < 10; ++t) {
        auto c = random_right_ideal(alg, 4, t);
        CHECK(checkable_test(c).status == CheckStatus::Checkable);
    }
}

TEST_CASE("radical powers of small elementary abelian algebras") {
    for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
        auto rep = reed_muller_experiment(p, m);
        CAPTURE(p);
        CAPTURE(m);
        CHECK(rep.top == m * (p - 1));
        CHECK(rep.rows.size() == rep.top + 2);
        CHECK(rep.principal_claim);
        CHECK(rep.checkable_claim);
    }
    CHECK(error_kind_of([] { reed_muller_experiment(2, 1); }) == ErrorKind::ScaleExceeded);
    CHECK(error_kind_of([] { reed_muller_experiment(5, 3); }) == ErrorKind::ScaleExceeded);
}

TEST_CASE("idempotent powers") {
    std::mt19937_64 rng(15);
    auto alg = make("s3", "GF(4)");
    for (int t = 0; t < 10; ++t) {
        auto e = idempotent_power(random_element(rng, alg));
        CHECK(e * e == e);
        // idempotents generate principal ideals whose duals are principal
        CHECK(checkable_test(principal_ideal(e, Side::Right)).status == CheckStatus::Checkable);
    }
}

}
