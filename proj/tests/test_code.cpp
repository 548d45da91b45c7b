#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gcode/code.hpp"
#include "helpers.hpp"

using namespace gcode;
using testing::error_kind_of;
using testing::random_element;
using testing::random_matrix;

namespace {

AlgebraPtr make(const std::string& group, const std::string& field) {
    return GroupAlgebra::create(preset_group(group), Field::parse(field));
}

// Weight distribution by full message-space enumeration.
std::vector<std::uint64_t> naive_weights(const Subspace& c) {
    const Field& f = *c.field();
    std::vector<std::uint64_t> a(c.ambient_dim() + 1, 0);
    Vec msg(c.dim(), 0);
    while (true) {
        const Vec w = c.combine(msg);
        a[std::count_if(w.begin(), w.end(), [](Elem e) { return e != 0; })]++;
        std::size_t i = 0;
        while (i < msg.size() && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == msg.size()) break;
    }
    return a;
}

DistanceOptions with(unsigned threads, std::optional<std::size_t> early_stop = std::nullopt,
                     std::uint64_t budget = std::uint64_t{1} << 33) {
    DistanceOptions o;
    o.threads = threads;
    o.early_stop = early_stop;
    o.budget = budget;
    return o;
}

}  // namespace

TEST_SUITE("code") {

TEST_CASE("Gray-code distance equals the naive oracle") {
    std::mt19937_64 rng(31);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::parse("GF(" + std::to_string(q) + ")");
        const std::size_t max_k = q == 2 ? 12 : (q == 3 ? 7 : 6);
        for (int t = 0; t < 25; ++t) {
            const std::size_t n = 4 + rng() % 20;
            const std::size_t k = 1 + rng() % std::min(max_k, n);
            Subspace c = Subspace::row_space(random_matrix(rng, f, k, n));
            if (c.dim() == 0) continue;
            CAPTURE(q);
            CAPTURE(n);
            CAPTURE(c.dim());
            DistanceResult r = min_distance(c);
            CHECK(r.method == DistanceMethod::Exhausted);
            CHECK(r.d == naive_min_distance(c));
        }
    }
}

TEST_CASE("binary paths across word widths") {
    std::mt19937_64 rng(17);
    auto f = Field::create(2, 1);
    for (std::size_t n : {30u, 64u, 65u, 130u, 190u, 256u, 300u, 512u}) {
        Subspace c = Subspace::row_space(random_matrix(rng, f, 10, n));
        CAPTURE(n);
        CHECK(min_distance(c).d == naive_min_distance(c));
    }
}

TEST_CASE("known codes") {
    auto f2 = Field::create(2, 1);
    // repetition code of length 9
    Subspace rep = Subspace::span_of(f2, 9, {Vec(9, 1)});
    CHECK(min_distance(rep).d == 9u);
    // Hamming [7,4,3]
    Matrix h = Matrix::from_rows(f2, 7, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
    Subspace ham = nullspace(h);
    CHECK(ham.dim() == 4);
    CHECK(min_distance(ham).d == 3u);
    auto w = weight_distribution(ham);
    CHECK(w == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    // a weight-one word is found and reported exactly
    Subspace e1 = Subspace::span_of(f2, 5, {{1, 0, 0, 0, 0}, {1, 1, 1, 0, 0}});
    auto r = min_distance(e1);
    CHECK(r.d == 1u);
    CHECK(r.method == DistanceMethod::Exhausted);
    CHECK_FALSE(min_distance(Subspace::zero(f2, 5)).d);
}

TEST_CASE("weight distributions sum to q^k and match enumeration") {
    std::mt19937_64 rng(41);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::parse("GF(" + std::to_string(q) + ")");
        for (int t = 0; t < 10; ++t) {
            Subspace c = Subspace::row_space(random_matrix(rng, f, 1 + rng() % 5, 6 + rng() % 10));
            auto w = weight_distribution(c);
            std::uint64_t total = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
            std::uint64_t expect = 1;
            for (std::size_t i = 0; i < c.dim(); ++i) expect *= q;
            CHECK(total == expect);
            CHECK(w == naive_weights(c));
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    std::mt19937_64 rng(5);
    auto f = Field::parse("GF(3)");
    for (int t = 0; t < 5; ++t) {
        Subspace c = Subspace::row_space(random_matrix(rng, f, 9, 30));
        DistanceResult base = min_distance(c, with(1));
        for (unsigned th : {2u, 3u, 8u}) {
            DistanceResult r = min_distance(c, with(th));
            CHECK(r.d == base.d);
            CHECK(r.enumerated == base.enumerated);
            DistanceOptions es = with(th, *base.d + 2);
            DistanceOptions es1 = with(1, *base.d + 2);
            CHECK(min_distance(c, es).d == min_distance(c, es1).d);
        }
        CHECK(weight_distribution(c, 1ull << 33, 1) == weight_distribution(c, 1ull << 33, 4));
    }
}

TEST_CASE("early stop and budgets") {
    std::mt19937_64 rng(6);
    auto f = Field::create(2, 1);
    Subspace c = Subspace::row_space(random_matrix(rng, f, 16, 40));
    const std::size_t d = *min_distance(c).d;
    DistanceResult r = min_distance(c, with(0, 40));
    REQUIRE(r.d);
    CHECK(*r.d >= d);
    CHECK(r.method == DistanceMethod::Bounded);
    DistanceResult tight = min_distance(c, with(0, d - 1));
    CHECK(tight.d == d);
    CHECK(tight.method == DistanceMethod::Exhausted);
    CHECK(error_kind_of([&] { min_distance(c, with(0, std::nullopt, 1000)); }) == ErrorKind::BudgetExceeded);
    CHECK(error_kind_of([&] { weight_distribution(c, 1000); }) == ErrorKind::BudgetExceeded);
    CHECK(enumeration_size(2, 10) == 1023);
    CHECK(enumeration_size(3, 4) == 40);
    CHECK(enumeration_size(2, 200) == UINT64_MAX);
}

TEST_CASE("distance is invariant under coordinate permutations") {
    std::mt19937_64 rng(13);
    auto f = Field::parse("GF(3)");
    for (int t = 0; t < 10; ++t) {
        Matrix m = random_matrix(rng, f, 5, 12);
        std::vector<std::size_t> perm(12);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix pm(f, 5, 12);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 12; ++c) pm(r, perm[c]) = m(r, c);
        Subspace a = Subspace::row_space(m), b = Subspace::row_space(pm);
        if (a.dim() == 0) continue;
        CHECK(min_distance(a).d == min_distance(b).d);
        // Singleton bound
        CHECK(*min_distance(a).d + a.dim() <= 13);
    }
}

TEST_CASE("group-code duals") {
    std::mt19937_64 rng(23);
    for (auto [g, fs] : {std::pair{"s3", "GF(3)"}, {"s3", "GF(2)"}, {"d8", "GF(2)"}, {"c6", "GF(4)"}}) {
        auto alg = make(g, fs);
        for (int t = 0; t < 100; ++t) {
            auto v = random_element(rng, alg);
            auto c = principal_ideal(v, Side::Right);
            auto d = dual_ideal(c);
            CHECK(d.is_right());
            CHECK(c.dim() + d.dim() == alg->dim());
            CHECK(dual_ideal(d) == c);
            CHECK(macwilliams_dual_check(c));
            CHECK(d.space() == orthogonal(c.space()));
        }
    }
    auto alg = make("s3", "GF(2)");
    auto not_ideal = IdealSubspace::from_subspace(
        alg, Subspace::span_of(alg->field(), 6, {{1, 0, 0, 0, 0, 0}}));
    CHECK_FALSE(not_ideal.is_right());
    CHECK(error_kind_of([&] { macwilliams_dual_check(not_ideal); }) == ErrorKind::NotARightIdeal);
}

TEST_CASE("code parameters and file round trip") {
    auto alg = make("s3", "GF(3)");
    auto c = CodeSubspace(augmentation_ideal(alg));
    CHECK(c.params() == "[6,5]");
    c.compute_distance();
    CHECK(c.params() == "[6,5,2]");
    CHECK(dual_code(c).k() == 1);

    std::stringstream ss;
    write_code(ss, c.ideal());
    const std::string text = ss.str();
    CHECK(text.rfind("group=s3 field=GF(3) side=two-sided", 0) == 0);
    IdealSubspace back = read_code(ss);
    CHECK(back.space() == c.space());
    CHECK(back.alg()->group().id() == "s3");
}

}
