#include <doctest.h>

#include <random>

#include "cthopf/scalar.hpp"

using namespace cthopf;

namespace {

Scalar rnd_rational(std::mt19937_64& rng) {
    // numerators/denominators up to 10^4
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 10000);
    return Scalar::of_rational(mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    Field q = Field::rational();
    Scalar half = Scalar::parse("1/2", q);
    Scalar third = Scalar::parse("1/3", q);
    CHECK((half + third).str() == "5/6");
    CHECK(Scalar::parse("2/4", q).str() == "1/2");
    CHECK(Scalar::parse("1/-2", q).str() == "-1/2");  // canonical: positive denominator
    CHECK(Scalar::parse("0/7", q).str() == "0");
    CHECK((-half).str() == "-1/2");
    CHECK(half.inverse().str() == "2");
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
    Field f5 = Field::prime(5);
    CHECK(Scalar::of_int(2, f5).inverse().str() == "3");  // 2·3 ≡ 1 mod 5
    CHECK((Scalar::of_int(4, f5) + Scalar::of_int(3, f5)).str() == "2");
    CHECK((Scalar::of_int(-1, f5)).str() == "4");
    CHECK(Scalar::parse("12", f5).str() == "2");
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK(is_prime_u64(2147483647ull));
    CHECK_FALSE(is_prime_u64(2147483649ull));
}

TEST_CASE("field tags never mix") {
    Scalar a = Scalar::one(Field::rational());
    Scalar b = Scalar::one(Field::prime(7));
    CHECK_THROWS_AS((void)(a + b), FieldMismatch);
    CHECK_THROWS_AS((void)(a * b), FieldMismatch);
    CHECK(a != b);
}

TEST_CASE("field axioms hold exactly on random rationals") {
    std::mt19937_64 rng(0xC0FFEE);
    Field q = Field::rational();
    for (int it = 0; it < 200; ++it) {
        Scalar a = rnd_rational(rng), b = rnd_rational(rng), c = rnd_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar::zero(q) == a);
        CHECK(a * Scalar::one(q) == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(q));
    }
}

TEST_CASE("field axioms hold exactly on GF(10007)") {
    std::mt19937_64 rng(0xBEEF);
    Field f = Field::prime(10007);
    std::uniform_int_distribution<long> d(0, 10006);
    for (int it = 0; it < 200; ++it) {
        Scalar a = Scalar::of_int(d(rng), f), b = Scalar::of_int(d(rng), f), c = Scalar::of_int(d(rng), f);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
        CHECK(a + (-a) == Scalar::zero(f));
    }
}
