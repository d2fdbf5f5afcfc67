#include <doctest.h>

#include "cthopf/group.hpp"

using namespace cthopf;

TEST_CASE("builtin groups have the right shape") {
    FiniteGroup z2 = builtin_group("Z2");
    CHECK(z2.order == 2);
    CHECK(z2.mul(1, 1) == 0);

    FiniteGroup s3 = builtin_group("S3");
    CHECK(s3.order == 6);
    bool nonabelian = false;
    std::uint32_t wa = 0, wb = 0;
    for (std::uint32_t a = 0; a < 6 && !nonabelian; ++a)
        for (std::uint32_t b = 0; b < 6; ++b)
            if (s3.mul(a, b) != s3.mul(b, a)) {
                nonabelian = true;
                wa = a;
                wb = b;
                break;
            }
    CHECK(nonabelian);
    CHECK(s3.mul(wa, wb) != s3.mul(wb, wa));

    FiniteGroup v4 = builtin_group("Z2xZ2");
    CHECK(v4.order == 4);
    for (std::uint32_t a = 0; a < 4; ++a) CHECK(v4.inv(a) == a);
}

TEST_CASE("corrupted tables are rejected") {
    // repeated row entry
    CHECK_THROWS_AS(group_from_table(2, {0, 0, 1, 0}), std::invalid_argument);
    // Latin square but not associative (and no identity row consistency)
    CHECK_THROWS_AS(group_from_table(3, {0, 1, 2, 1, 2, 0, 2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(builtin_group("Z5?"), std::invalid_argument);
}

TEST_CASE("automorphism enumeration matches the known counts") {
    CHECK(enumerate_automorphisms(builtin_group("Z2")).size() == 1);
    CHECK(enumerate_automorphisms(builtin_group("Z3")).size() == 2);
    CHECK(enumerate_automorphisms(builtin_group("Z4")).size() == 2);
    CHECK(enumerate_automorphisms(builtin_group("Z2xZ2")).size() == 6);
    CHECK(enumerate_automorphisms(builtin_group("S3")).size() == 6);
}

TEST_CASE("automorphism lists are closed under composition and inverse") {
    for (const char* name : {"Z3", "Z4", "Z2xZ2", "S3"}) {
        FiniteGroup g = builtin_group(name);
        auto auts = enumerate_automorphisms(g);
        auto find = [&](const GroupAutomorphism& f) {
            for (const auto& a : auts)
                if (a.image == f.image) return true;
            return false;
        };
        for (const auto& a : auts) {
            CHECK(find(invert(g, a)));
            for (const auto& b : auts) CHECK(find(compose(g, a, b)));
        }
    }
}

TEST_CASE("automorphism cap rejects big groups") {
    FiniteGroup s3 = builtin_group("S3");
    CHECK_THROWS_AS(enumerate_automorphisms(s3, 4), std::invalid_argument);
}

TEST_CASE("Z3 inversion automorphism acts as expected") {
    FiniteGroup z3 = builtin_group("Z3");
    auto auts = enumerate_automorphisms(z3);
    REQUIRE(auts.size() == 2);
    const GroupAutomorphism& tau = auts[1];  // identity sorts first
    CHECK(tau.image[0] == 0);
    CHECK(tau.image[1] == 2);
    CHECK(tau.image[2] == 1);
}
