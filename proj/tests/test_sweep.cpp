#include <doctest.h>

#include <algorithm>

#include "cthopf/group.hpp"
#include "cthopf/turaev.hpp"

using namespace cthopf;

namespace {
const Field Q = Field::rational();
}

TEST_CASE("first_failure returns the lowest failing index in both modes") {
    auto ok = [](std::size_t i) { return i % 97 != 41 || i < 500; };
    auto s = sweep::first_failure(100000, ok, sweep::Mode::Serial);
    auto p = sweep::first_failure(100000, ok, sweep::Mode::Parallel);
    REQUIRE(s.has_value());
    REQUIRE(p.has_value());
    CHECK(*s == *p);
    CHECK_FALSE(sweep::first_failure(1000, [](std::size_t) { return true; }, sweep::Mode::Parallel));
}

TEST_CASE("sample_indices is deterministic, sorted, and exact in size") {
    auto a = sweep::sample_indices(46656, 9331, 42);
    auto b = sweep::sample_indices(46656, 9331, 42);
    CHECK(a == b);
    CHECK(a.size() == 9331);
    CHECK(std::is_sorted(a.begin(), a.end()));
    auto c = sweep::sample_indices(46656, 9331, 43);
    CHECK(a != c);
    CHECK(sweep::sample_indices(10, 20, 1).size() == 10);
}

TEST_CASE("serial and parallel runs emit byte-identical reports") {
    FiniteGroup z3 = builtin_group("Z3");
    FiniteDimHopfAlgebra h = group_algebra(z3);
    auto auts = enumerate_automorphisms(z3);
    std::vector<GPair> labels;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            labels.push_back(
                make_gpair(h, automorphism_matrix(z3, auts[a], Q), automorphism_matrix(z3, auts[b], Q)));

    TuraevCheckOptions ser, par;
    ser.mode = sweep::Mode::Serial;
    par.mode = sweep::Mode::Parallel;
    TuraevFamily fam1(h), fam2(h);
    CHECK(verify_turaev_axioms(fam1, labels, ser).jsonl() == verify_turaev_axioms(fam2, labels, par).jsonl());

    // the same with a failure witness in play: corrupted antipode on Z4
    FiniteDimHopfAlgebra h4 = group_algebra(builtin_group("Z4"));
    h4.antipode = LinMap::identity(4, Q);
    h4 = finalize_hopf(std::move(h4));
    CHECK(verify_hopf_axioms(h4, sweep::Mode::Serial).jsonl() ==
          verify_hopf_axioms(h4, sweep::Mode::Parallel).jsonl());
}
