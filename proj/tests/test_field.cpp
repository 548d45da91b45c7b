#include <doctest.h>

#include "gcode/field.hpp"
#include "helpers.hpp"

using namespace gcode;
using testing::error_kind_of;

TEST_SUITE("field") {

TEST_CASE("GF(4) enumerates as 0, 1, x, x+1") {
    auto f = Field::parse("GF(4)");
    CHECK(f->q() == 4);
    CHECK(f->format(2) == "x");
    CHECK(f->format(3) == "x+1");
    CHECK(f->mul(2, 2) == 3);  // x^2 = x + 1
    CHECK(f->mul(2, 3) == 1);
    CHECK(f->add(2, 3) == 1);
    CHECK(f->inv(2) == 3);
}

TEST_CASE("prime field arithmetic is modular") {
    auto f = Field::create(7, 1);
    CHECK(f->add(5, 4) == 2);
    CHECK(f->sub(2, 5) == 4);
    CHECK(f->mul(3, 5) == 1);
    CHECK(f->inv(3) == 5);
    CHECK(f->neg(0) == 0);
    CHECK(f->pow(3, 6) == 1);
    CHECK(f->spec() == "GF(7)");
}

TEST_CASE("field axioms hold for every supported small size") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 125u, 128u, 243u, 256u}) {
        CAPTURE(q);
        auto f = Field::parse("GF(" + std::to_string(q) + ")");
        REQUIRE(f->q() == q);
        std::mt19937_64 rng(q);
        for (int t = 0; t < 300; ++t) {
            const Elem a = rng() % q, b = rng() % q, c = rng() % q;
            CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->sub(a, b), b) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
        }
        for (unsigned a = 1; a < q; ++a) CHECK(f->mul(static_cast<Elem>(a), f->inv(static_cast<Elem>(a))) == 1);
        // the multiplicative group has order q - 1
        for (unsigned a = 1; a < q; ++a) CHECK(f->pow(static_cast<Elem>(a), q - 1) == 1);
    }
}

TEST_CASE("explicit moduli and spec round trip") {
    auto f = Field::parse("GF(8)[1,1,0,1]");
    CHECK(f->modulus() == std::vector<unsigned>{1, 1, 0, 1});
    auto g = Field::parse(f->spec());
    CHECK(*f == *g);
    CHECK(*Field::parse("GF(2^3)") == *f);
    auto other = Field::parse("GF(8)[1,0,1,1]");
    CHECK_FALSE(*other == *f);
    CHECK(Field::parse("GF(9)")->modulus() == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("irreducibility by trial division") {
    CHECK(is_irreducible({1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // (x+1)^2
    CHECK(is_irreducible({1, 0, 1}, 3));
    CHECK_FALSE(is_irreducible({2, 0, 1}, 3));  // x^2 - 1
    CHECK(is_irreducible({1, 1, 0, 0, 1}, 2));
    CHECK_FALSE(is_irreducible({1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2
}

TEST_CASE("invalid fields are rejected with the right error") {
    CHECK(error_kind_of([] { Field::parse("GF(6)"); }) == ErrorKind::NonPrime);
    CHECK(error_kind_of([] { Field::create(4, 1); }) == ErrorKind::NonPrime);
    CHECK(error_kind_of([] { Field::parse("GF(4)[1,0,1]"); }) == ErrorKind::ReducibleModulus);
    CHECK(error_kind_of([] { Field::parse("GF(512)"); }) == ErrorKind::UnsupportedSize);
    CHECK(error_kind_of([] { Field::parse("F(4)"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { Field::create(2, 1)->inv(0); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("field elements refuse mixed fields") {
    auto f = Field::parse("GF(4)");
    auto g = Field::parse("GF(4)");
    auto h = Field::parse("GF(8)");
    FieldElement x(f, 2), y(g, 3);
    CHECK((x * y).value() == 1);  // equal fields from separate parses interoperate
    FieldElement z(h, 2);
    CHECK(error_kind_of([&] { (void)(x + z); }) == ErrorKind::FieldMismatch);
    CHECK(error_kind_of([&] { FieldElement(f, 4); }) == ErrorKind::FieldMismatch);
    CHECK(error_kind_of([&] { (void)(x / FieldElement::zero(f)); }) == ErrorKind::DivisionByZero);
    CHECK(enumerate(f).size() == 4);
    CHECK(fe_arith(x, y, ArithKind::Mul) == x * y);
}

}
