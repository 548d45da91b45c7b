#include <doctest.h>

#include <set>
#include <sstream>

#include "gcode/claims.hpp"
#include "gcode/group.hpp"
#include "gcode/presentation.hpp"
#include "helpers.hpp"

using namespace gcode;
using testing::error_kind_of;

namespace {

// Normal p-complement oracle: the subgroup generated by all p'-elements has
// order |G|/|G|_p exactly when G is p-nilpotent.
bool oracle_p_nilpotent(const Group& g, unsigned p) {
    std::vector<std::size_t> pprime;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (g.elem_order(x) % p != 0) pprime.push_back(x);
    }
    return subgroup_closure(g, pprime).size() == g.order() / p_part(g.order(), p);
}

// Cyclic Sylow oracle: some element has order |G|_p, counted by repeated multiplication.
bool oracle_cyclic_sylow(const Group& g, unsigned p) {
    const std::size_t target = p_part(g.order(), p);
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::size_t k = 1, y = x;
        while (y != 0) {
            y = g.mul(y, x);
            ++k;
        }
        if (k == target) return true;
    }
    return false;
}

void check_axioms(const Group& g) {
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a) {
        CHECK(g.mul(0, a) == a);
        CHECK(g.mul(a, 0) == a);
        CHECK(g.mul(a, g.inv(a)) == 0);
    }
    std::mt19937_64 rng(n);
    for (int t = 0; t < 500; ++t) {
        const std::size_t a = rng() % n, b = rng() % n, c = rng() % n;
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("preset orders") {
    const std::vector<std::pair<std::string, std::size_t>> expect = {
        {"c2", 2},   {"c4", 4},   {"c6", 6},   {"c12", 12}, {"klein4", 4}, {"d8", 8},
        {"q8", 8},   {"d24", 24}, {"s3", 6},   {"s4", 24},  {"a4", 12},   {"g48", 48},
        {"g64c", 64}, {"g64", 256}};
    for (const auto& [name, order] : expect) {
        CAPTURE(name);
        auto g = preset_group(name);
        CHECK(g->order() == order);
        check_axioms(*g);
    }
    CHECK(preset_group("ea(3,2)")->order() == 9);
    CHECK(preset_group("product(c2,s3)")->order() == 12);
    CHECK(preset_group("cyclic(5)")->order() == 5);
    CHECK(preset_names().size() >= 14);
}

TEST_CASE("elementary abelian groups have exponent p") {
    auto g = elem_abelian(3, 3);
    CHECK(g->order() == 27);
    for (std::size_t x = 1; x < g->order(); ++x) CHECK(g->elem_order(x) == 3);
    CHECK(is_p_group(*g, 3));
    CHECK_FALSE(is_p_group(*g, 2));
}

TEST_CASE("p-nilpotency and cyclic Sylow match brute-force oracles") {
    for (const auto& name : {"c6", "c12", "klein4", "d8", "q8", "d24", "s3", "s4", "a4", "g48"}) {
        auto g = preset_group(name);
        for (unsigned p : {2u, 3u, 5u}) {
            CAPTURE(name);
            CAPTURE(p);
            auto r = is_p_nilpotent_cyclic_sylow(*g, p);
            CHECK(r.p_nilpotent == oracle_p_nilpotent(*g, p));
            CHECK(r.cyclic_sylow == oracle_cyclic_sylow(*g, p));
        }
    }
}

TEST_CASE("frozen catalog agrees with the oracle predicate") {
    for (const auto& e : classification_catalog()) {
        CAPTURE(e.preset);
        CAPTURE(e.p);
        auto g = preset_group(e.preset);
        REQUIRE(g->order() % e.p == 0);
        const bool oracle = oracle_p_nilpotent(*g, e.p) && oracle_cyclic_sylow(*g, e.p);
        CHECK(oracle == e.code_checkable);
    }
}

TEST_CASE("subgroup utilities") {
    auto g = preset_group("s4");
    for (const auto& h : cyclic_subgroups(*g)) {
        CHECK(g->order() % h.size() == 0);
        CHECK(subgroup_closure(*g, h) == h);
    }
    // a transposition has normal closure all of S4
    std::size_t t = 0;
    for (std::size_t x = 1; x < g->order(); ++x) {
        if (g->elem_order(x) == 2 && subgroup_closure(*g, {x}).size() == 2 &&
            normal_closure(*g, {x}).size() == 24) {
            t = x;
            break;
        }
    }
    CHECK(t != 0);
    auto ps = small_p_subgroups(*g, 2);
    REQUIRE_FALSE(ps.empty());
    CHECK(ps.front().size() == 8);
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].size() >= ps[i].size());
}

TEST_CASE("invalid tables are rejected") {
    // a non-associative loop table of order 5
    std::vector<std::uint32_t> bad = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                      3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK(error_kind_of([&] {
              Group::from_table("bad", 5, bad, {"1", "a", "b", "c", "d"}, {1}, {"a"});
          }) == ErrorKind::InvalidGroup);
    CHECK(error_kind_of([] {
              Group::from_table("bad", 2, {0, 1, 1, 1}, {"1", "a"}, {1}, {"a"});
          }) == ErrorKind::InvalidGroup);
    CHECK(error_kind_of([] { preset_group("nosuch"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { cyclic(1000); }) == ErrorKind::OrderCapExceeded);
    CHECK(error_kind_of([] { dihedral(7); }) == ErrorKind::InvalidGroup);
}

TEST_CASE("group text form") {
    std::stringstream ss;
    write_group(ss, *preset_group("s3"));
    const std::string s = ss.str();
    CHECK(s.rfind("order 6", 0) == 0);
    CHECK(s.find("labels") != std::string::npos);
    CHECK(s.find("generators") != std::string::npos);
}

}

TEST_SUITE("presentation") {

TEST_CASE("coset enumeration orders") {
    CHECK(todd_coxeter(parse_presentation(kPresentationD24))->order() == 24);
    CHECK(todd_coxeter(parse_presentation(kPresentationG48))->order() == 48);
    CHECK(todd_coxeter(parse_presentation(kPresentationQ8))->order() == 8);
    CHECK(todd_coxeter(parse_presentation(kPresentationG64))->order() == 256);
    CHECK(todd_coxeter(parse_presentation(kPresentationG64Completed))->order() == 64);
    CHECK(todd_coxeter(parse_presentation("<a | a^7=1>"))->order() == 7);
    CHECK(todd_coxeter(parse_presentation("<a,b | a^2=b^2=1, ab=ba>"))->order() == 4);
}

TEST_CASE("enumerated groups satisfy their relators") {
    for (auto text : {kPresentationD24, kPresentationG48, kPresentationG64Completed}) {
        auto pres = parse_presentation(text);
        auto g = todd_coxeter(pres);
        for (const auto& w : pres.relators) CHECK(g->evaluate(w) == 0);
        check_axioms(*g);
    }
}

TEST_CASE("presentations round trip through text") {
    auto pres = parse_presentation(kPresentationG48);
    auto again = parse_presentation(format_presentation(pres));
    CHECK(again.gen_names == pres.gen_names);
    CHECK(again.relators == pres.relators);
}

TEST_CASE("malformed presentations") {
    CHECK(error_kind_of([] { parse_presentation("<a,b | a^2=c^2>"); }) == ErrorKind::UnknownGenerator);
    CHECK(error_kind_of([] { parse_presentation("<a | a^2"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { parse_presentation("<a,a | a^2>"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { parse_presentation("<a | a^0>"); }) == ErrorKind::ParseError);
    try {
        parse_presentation("<a | a^x>");
        FAIL("expected ParseError");
    } catch (const gcode::ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("infinite groups exhaust the coset budget") {
    CHECK(error_kind_of([] { todd_coxeter(parse_presentation("<a,b | a^2=1>"), 1000); }) ==
          ErrorKind::CosetBudgetExceeded);
}

}
