#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gcode/linalg.hpp"
#include "helpers.hpp"

using namespace gcode;
using testing::random_matrix;
using testing::random_vec;

namespace {

// Every vector of GF(q)^n, for brute-force oracles on tiny spaces.
std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
    std::vector<Vec> out;
    Vec v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == f.q()) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref of a known GF(3) matrix") {
    auto f = Field::create(3, 1);
    auto m = Matrix::from_rows(f, 3, {{1, 2, 0}, {2, 1, 0}, {0, 1, 1}});
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced.row_vec(0) == Vec{1, 0, 1});
    CHECK(r.reduced.row_vec(1) == Vec{0, 1, 1});
    CHECK(r.reduced.row_vec(2) == Vec{0, 0, 0});
}

TEST_CASE("rank, nullspace and orthogonal complement agree with brute force") {
    std::mt19937_64 rng(7);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::parse("GF(" + std::to_string(q) + ")");
        for (int t = 0; t < 30; ++t) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
            Matrix m = random_matrix(rng, f, rows, cols);
            Subspace ns = nullspace(m);
            CHECK(ns.dim() + rank(m) == cols);
            std::size_t count = 0;
            for (const auto& x : all_vectors(*f, cols)) {
                const Vec y = m.apply(x);
                const bool zero = std::all_of(y.begin(), y.end(), [](Elem e) { return e == 0; });
                CHECK(ns.contains(x) == zero);
                count += zero;
            }
            std::size_t expect = 1;
            for (std::size_t i = 0; i < ns.dim(); ++i) expect *= q;
            CHECK(count == expect);

            Subspace s = Subspace::row_space(m);
            Subspace perp = orthogonal(s);
            CHECK(s.dim() + perp.dim() == cols);
            CHECK(orthogonal(perp) == s);
            for (std::size_t i = 0; i < perp.dim(); ++i) {
                for (std::size_t j = 0; j < s.dim(); ++j) {
                    CHECK(dot(*f, perp.basis().row_vec(i), s.basis().row_vec(j)) == 0);
                }
            }
        }
    }
}

TEST_CASE("sum and intersection match the membership oracle") {
    std::mt19937_64 rng(11);
    auto f = Field::parse("GF(3)");
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng() % 3;
        Subspace a = Subspace::row_space(random_matrix(rng, f, 1 + rng() % 3, n));
        Subspace b = Subspace::row_space(random_matrix(rng, f, 1 + rng() % 3, n));
        Subspace s = subspace_sum(a, b);
        Subspace i = subspace_intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        for (const auto& x : all_vectors(*f, n)) {
            CHECK(i.contains(x) == (a.contains(x) && b.contains(x)));
        }
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        CHECK(subspace_contains(a, i));
        CHECK(subspace_equals(subspace_intersect(a, a), a));
    }
}

TEST_CASE("row spaces are canonical") {
    std::mt19937_64 rng(3);
    auto f = Field::parse("GF(4)");
    for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, f, 3, 6);
        // an invertible row mix spans the same space
        Matrix mix = Matrix::from_rows(f, 3, {{1, 2, 0}, {0, 1, 3}, {0, 0, 2}});
        CHECK(Subspace::row_space(mix * m) == Subspace::row_space(m));
    }
}

TEST_CASE("EchelonBuilder tracks rank incrementally") {
    std::mt19937_64 rng(5);
    auto f = Field::parse("GF(5)");
    for (int t = 0; t < 30; ++t) {
        EchelonBuilder b(f, 6);
        std::vector<Vec> vs;
        for (int i = 0; i < 8; ++i) {
            Vec v = random_vec(rng, *f, 6);
            if (i % 3 == 2 && !vs.empty()) v = vs.back();  // forced repeat
            const std::size_t before = b.rank();
            const bool indep = b.add(v);
            vs.push_back(v);
            CHECK(b.rank() == before + (indep ? 1 : 0));
            CHECK(b.rank() == rank(Matrix::from_rows(f, 6, vs)));
        }
        CHECK(b.finish() == Subspace::span_of(f, 6, vs));
    }
}

TEST_CASE("matrix text round trip") {
    std::mt19937_64 rng(9);
    auto f = Field::parse("GF(9)");
    Matrix m = random_matrix(rng, f, 4, 7);
    std::stringstream ss;
    write_matrix(ss, m);
    CHECK(read_matrix(ss, f) == m);
}

TEST_CASE("shape errors") {
    auto f = Field::parse("GF(2)");
    Matrix a(f, 2, 3), b(f, 2, 3);
    CHECK(testing::error_kind_of([&] { (void)(a * b); }) == ErrorKind::AmbientMismatch);
    Subspace s = Subspace::full(f, 3), t = Subspace::full(f, 4);
    CHECK(testing::error_kind_of([&] { subspace_sum(s, t); }) == ErrorKind::AmbientMismatch);
}

}
